#include <numeric>

#include "excpoly/families.hpp"

namespace excpoly::families {

namespace {

void require_new_family(std::uint64_t q, const FieldElem& a) {
  const unsigned e = log2_exact(q);
  if (e < 2) throw DomainError("the new family requires q > 2");
  if (a.field()->characteristic() != 2) throw DomainError("the new family lives in characteristic 2");
  if (a.index() <= 1) throw DomainError("parameter must not lie in F_2");
}

}  // namespace

UniPoly f_closed(std::uint64_t q, const FieldElem& alpha) {
  require_new_family(q, alpha);
  const FieldPtr& k = alpha.field();
  const Index a = alpha.index();
  const ff::Field& F = *k;
  const RatFunc x = RatFunc::var(k);
  const RatFunc t(trace_poly(q, k));
  const RatFunc ta = t + RatFunc::constant(k, a);           // T(X) + alpha
  const Index a2a = F.add(F.sqr(a), a);                     // alpha^2 + alpha
  const RatFunc inner = apply_trace(q, x.scale(a2a) / ta.square());
  const RatFunc second = t + (ta * inner).scale(F.inv(F.add(a, 1)));
  const RatFunc f = (ta / x).pow(static_cast<long>(q)) * second;
  if (!f.is_polynomial()) throw InternalError("closed form is not a polynomial");
  return f.num();
}

UniPoly f_product(std::uint64_t q, const FieldElem& a) {
  require_new_family(q, a);
  const unsigned e = log2_exact(q);
  const FieldPtr& k = a.field();
  const unsigned m = k->degree();
  const FieldPtr amb = ff::make_field(2, std::lcm(e, m));
  const ff::Field& L = *amb;
  const auto from_k = ff::embed(k, amb);
  const auto from_fq = ff::embed(ff::make_field(2, e), amb);
  const Index aa = from_k.apply(a.index());

  UniPoly prod = trace_poly(q, amb) + UniPoly::constant(amb, L.add(aa, 1));
  for (Index z0 = 2; z0 < q; ++z0) {
    const Index z = from_fq.apply(z0);
    std::vector<Index> c(q / 2 + 1, 0);
    Index zp = z;  // zeta^(2^i)
    for (unsigned i = 0; i < e; ++i) {
      c[std::size_t{1} << i] = L.div(L.add(zp, z), L.add(zp, 1));
      zp = L.sqr(zp);
    }
    c[0] = L.add(c[0], L.add(L.mul(z, aa), 1));
    prod *= UniPoly(amb, std::move(c));
  }
  return prod.pullback(from_k);
}

FieldElem beta_for(const FieldElem& alpha) {
  const ff::Field& F = *alpha.field();
  if (F.characteristic() != 2) throw DomainError("beta is defined in characteristic 2");
  return {alpha.field(), F.sqrt2(F.add(alpha.index(), F.sqr(alpha.index())))};
}

}  // namespace excpoly::families
