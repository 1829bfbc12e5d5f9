#include <numeric>

#include "excpoly/exceptional.hpp"

namespace excpoly::exceptional {

namespace {

bool is_prime(unsigned d) {
  if (d < 2) return false;
  for (unsigned i = 2; i * i <= d; ++i)
    if (d % i == 0) return false;
  return true;
}

void require_prime_degree(const FamilySpec& spec) {
  if (!is_prime(spec.d) || spec.d == spec.field->characteristic())
    throw DomainError("the criterion needs a prime degree d different from the characteristic");
}

// Some zeta + 1/zeta with zeta a primitive d-th root of unity lies in the
// field of order Q = p^m. Such zeta lie in GF(p^(2m)).
bool has_zeta_plus_inverse(unsigned p, unsigned m, unsigned d) {
  const std::uint64_t big = ff::ipow(p, 2 * m) - 1;
  if (big % d != 0) return false;
  const FieldPtr L = ff::make_field(p, 2 * m);
  const std::uint64_t Q = ff::ipow(p, m);
  const Index root = L->pow(L->generator(), big / d);
  Index z = root;
  for (unsigned i = 1; i < d; ++i, z = L->mul(z, root)) {
    // d is prime, so every nontrivial power is primitive.
    const Index s = L->add(z, L->inv(z));
    if (L->pow(s, Q) == s) return true;
  }
  return false;
}

}  // namespace

bool exceptionality_verdict(const FamilySpec& spec, const FieldPtr& base) {
  spec.validate();
  const unsigned p = base->characteristic();
  const unsigned m = base->degree();
  if (spec.field->characteristic() != p || m % spec.field->degree() != 0)
    throw MismatchError(spec.field->name() + " does not embed in " + base->name());
  const std::uint64_t Q = base->order();

  switch (spec.kind) {
    case families::FamilyKind::power:
      require_prime_degree(spec);
      return std::gcd<std::uint64_t>(spec.d, Q - 1) == 1;
    case families::FamilyKind::dickson:
      require_prime_degree(spec);
      if (spec.alpha->is_zero()) throw DomainError("Dickson criterion needs alpha nonzero");
      if (2 * m > 32) throw DomainError("Dickson criterion supports base degree up to 16");
      return !has_zeta_plus_inverse(p, m, spec.d);
    case families::FamilyKind::char2_new:
    case families::FamilyKind::char2_additive_twist: {
      const unsigned e = families::log2_exact(spec.q);
      return e % 2 == 1 && std::gcd(e, m) == 1;
    }
    case families::FamilyKind::char3_twist: {
      const unsigned e = *ff::exact_log(3, spec.q);
      if (e % 2 == 0 || std::gcd(e, m) != 1) return false;
      // Order of alpha in k*/(k*)^(2n) equals the order of alpha^((Q-1)/g), g = gcd(2n, Q-1).
      const std::uint64_t g = std::gcd<std::uint64_t>(2 * spec.n, Q - 1);
      const Index a = ff::embed(spec.field, base).apply(spec.alpha->index());
      return base->multiplicative_order(base->pow(a, (Q - 1) / g)) % 2 == 0;
    }
  }
  throw InternalError("unknown family kind");
}

}  // namespace excpoly::exceptional
