#include "excpoly/families.hpp"

namespace excpoly::families {

using poly::BigInt;

namespace {

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Index reduce_mod_p(const ff::Field& F, const BigInt& v) {
  const BigInt p = F.characteristic();
  BigInt r = v % p;
  if (r < 0) r += p;
  return F.from_int(r.convert_to<long long>());
}

unsigned log3_exact(std::uint64_t q) {
  auto k = ff::exact_log(3, q);
  if (!k) throw DomainError("q must be a power of 3");
  return *k;
}

}  // namespace

UniPoly dickson(unsigned d, const FieldElem& alpha) {
  if (d < 1) throw DomainError("Dickson degree must be positive");
  const FieldPtr& k = alpha.field();
  const ff::Field& F = *k;
  std::vector<Index> c(d + 1, 0);
  const Index minus_alpha = F.neg(alpha.index());
  Index mp = 1;  // (-alpha)^i
  for (unsigned i = 0; 2 * i <= d; ++i) {
    // d/(d-i) * C(d-i, i), an integer
    const BigInt coeff = BigInt(d) * binomial(d - i, i) / (d - i);
    c[d - 2 * i] = F.mul(reduce_mod_p(F, coeff), mp);
    mp = F.mul(mp, minus_alpha);
  }
  return {k, std::move(c)};
}

UniPoly dickson_recurrence(unsigned d, const FieldElem& alpha) {
  const FieldPtr& k = alpha.field();
  UniPoly prev = UniPoly::constant(k, k->from_int(2));
  if (d == 0) return prev;
  const UniPoly x = UniPoly::x(k);
  UniPoly cur = x;
  const UniPoly a = UniPoly::constant(k, alpha.index());
  for (unsigned i = 2; i <= d; ++i) {
    UniPoly next = x * cur - a * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

UniPoly family_iv(std::uint64_t q, unsigned n, const FieldElem& alpha) {
  const unsigned e = log2_exact(q);
  const FieldPtr& k = alpha.field();
  if (k->characteristic() != 2) throw DomainError("family (iv) lives in characteristic 2");
  if (q <= 2 || e % 2 == 0) throw DomainError("family (iv) requires q = 2^e > 2 with e odd");
  if (n == 0 || (q + 1) % n != 0) throw DomainError("n must divide q+1");
  if (alpha.is_zero()) throw DomainError("alpha must be nonzero");
  const UniPoly ax = UniPoly::monomial(k, alpha.index(), n);
  UniPoly inner(k);
  for (unsigned i = 0; i < e; ++i) inner += poly::pow(ax, (std::uint64_t{1} << i) - 1);
  return poly::pow(inner, (q + 1) / n).shift(1);
}

UniPoly family_v(std::uint64_t q, unsigned n, const FieldElem& alpha) {
  const unsigned e = log3_exact(q);
  const FieldPtr& k = alpha.field();
  if (k->characteristic() != 3) throw DomainError("family (v) lives in characteristic 3");
  if (q <= 3 || e % 2 == 0) throw DomainError("family (v) requires q = 3^e > 3 with e odd");
  if (n == 0 || ((q + 1) / 4) % n != 0) throw DomainError("n must divide (q+1)/4");
  if (alpha.is_zero()) throw DomainError("alpha must be nonzero");
  const ff::Field& F = *k;
  const UniPoly a = UniPoly::monomial(k, 1, 2 * n) - UniPoly::constant(k, alpha.index());
  const UniPoly inner =
      poly::pow(a, (q - 1) / 2) + UniPoly::constant(k, F.pow(alpha.index(), (q - 1) / 2));
  const UniPoly num =
      (poly::pow(a, (q + 1) / (4 * n)) * poly::pow(inner, (q + 1) / (2 * n))).shift(1);
  return poly::exact_div(num, UniPoly::monomial(k, 1, q + 1));
}

std::string kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::power: return "power";
    case FamilyKind::dickson: return "dickson";
    case FamilyKind::char2_new: return "char2_new";
    case FamilyKind::char2_additive_twist: return "char2_additive_twist";
    case FamilyKind::char3_twist: return "char3_twist";
  }
  throw InternalError("unknown family kind");
}

FamilyKind parse_kind(const std::string& name) {
  std::string s = name;
  for (auto& ch : s)
    if (ch == '-') ch = '_';
  for (auto k : {FamilyKind::power, FamilyKind::dickson, FamilyKind::char2_new,
                 FamilyKind::char2_additive_twist, FamilyKind::char3_twist})
    if (kind_name(k) == s) return k;
  throw DomainError("unknown family kind: " + name);
}

void FamilySpec::validate() const {
  if (!field) throw DomainError("family spec without a field");
  if (alpha && !ff::same_field(alpha->field(), field))
    throw DomainError("alpha does not lie in the spec field");
  auto need_alpha = [&] {
    if (!alpha) throw DomainError(kind_name(kind) + " requires alpha");
  };
  switch (kind) {
    case FamilyKind::power:
      if (d < 1) throw DomainError("power map degree must be positive");
      return;
    case FamilyKind::dickson:
      need_alpha();
      if (d < 1) throw DomainError("Dickson degree must be positive");
      return;
    case FamilyKind::char2_new: {
      need_alpha();
      const unsigned e = log2_exact(q);
      if (e < 2) throw DomainError("char2_new requires q > 2");
      if (field->characteristic() != 2) throw DomainError("char2_new requires characteristic 2");
      if (alpha->index() <= 1) throw DomainError("char2_new requires alpha outside F_2");
      return;
    }
    case FamilyKind::char2_additive_twist: {
      need_alpha();
      const unsigned e = log2_exact(q);
      if (field->characteristic() != 2) throw DomainError("family (iv) requires characteristic 2");
      if (q <= 2 || e % 2 == 0) throw DomainError("family (iv) requires e odd");
      if (n == 0 || (q + 1) % n != 0) throw DomainError("n must divide q+1");
      if (alpha->is_zero()) throw DomainError("alpha must be nonzero");
      return;
    }
    case FamilyKind::char3_twist: {
      need_alpha();
      const unsigned e = log3_exact(q);
      if (field->characteristic() != 3) throw DomainError("family (v) requires characteristic 3");
      if (q <= 3 || e % 2 == 0) throw DomainError("family (v) requires e odd");
      if (n == 0 || ((q + 1) / 4) % n != 0) throw DomainError("n must divide (q+1)/4");
      if (alpha->is_zero()) throw DomainError("alpha must be nonzero");
      return;
    }
  }
}

UniPoly FamilySpec::build() const {
  validate();
  switch (kind) {
    case FamilyKind::power: return UniPoly::monomial(field, 1, d);
    case FamilyKind::dickson: return dickson(d, *alpha);
    case FamilyKind::char2_new: return f_closed(q, *alpha);
    case FamilyKind::char2_additive_twist: return family_iv(q, n, *alpha);
    case FamilyKind::char3_twist: return family_v(q, n, *alpha);
  }
  throw InternalError("unknown family kind");
}

std::uint64_t FamilySpec::degree() const {
  switch (kind) {
    case FamilyKind::power:
    case FamilyKind::dickson: return d;
    default: return q * (q - 1) / 2;
  }
}

}  // namespace excpoly::families
