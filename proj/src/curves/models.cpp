#include <numeric>

#include "excpoly/curves.hpp"
#include "excpoly/families.hpp"

namespace excpoly::curves {

std::uint64_t CurveModel::q() const {
  return std::visit([](const auto& k) { return k.q; }, kind);
}

CurveModel artin_schreier_model(std::uint64_t q, const FieldElem& alpha, const FieldElem& beta) {
  const unsigned e = families::log2_exact(q);
  if (e < 2) throw DomainError("the curve needs q > 2");
  ff::require_same(alpha.field(), beta.field());
  const FieldPtr& k = alpha.field();
  if (k->characteristic() != 2) throw DomainError("the curve lives in characteristic 2");
  if (alpha.is_zero() || beta.is_zero()) throw DomainError("alpha and beta must be nonzero");
  const ff::Field& F = *k;

  const UniPoly base = UniPoly::monomial(k, 1, q - 1) + UniPoly::constant(k, 1);
  const UniPoly D = poly::pow(base, q / 2);
  UniPoly N(k);
  Index bp = beta.index();
  for (std::uint64_t p2 = 1; p2 < q; p2 *= 2, bp = F.sqr(bp))
    N += poly::pow(base, q / 2 - p2).scale(bp);

  const BiPoly v = BiPoly::x(k);
  const BiPoly lhs = v.pow(q) + v;
  const UniPoly rhs = UniPoly::x(k).scale(F.add(alpha.index(), beta.index())) * D + N.shift(q);
  BiPoly eq = lhs * BiPoly::in_y(D) + BiPoly::in_y(rhs);
  return {ArtinSchreier{q, alpha, beta}, std::move(eq), k};
}

CurveModel plane_model(std::uint64_t q, const FieldElem& c) {
  const unsigned e = families::log2_exact(q);
  if (e < 2) throw DomainError("the plane model needs q > 2");
  const FieldPtr& k = c.field();
  if (k->characteristic() != 2) throw DomainError("the plane model lives in characteristic 2");
  if (c.index() <= 1) throw DomainError("c in F_2 gives a singular curve");
  BiPoly f(k);
  f.add_term(q + 1, 0, 1);
  f.add_term(0, q + 1, 1);
  for (std::uint64_t p2 = 1; p2 < q; p2 *= 2) f.add_term(p2, p2, 1);
  f.add_term(0, 0, c.index());
  return {Plane{q, c}, std::move(f), k};
}

Index plane_eval_homogeneous(const ff::Field& L, std::uint64_t q, Index c, Index y, Index z,
                             Index w) {
  Index r = L.add(L.pow(y, q + 1), L.pow(z, q + 1));
  const Index yz = L.mul(y, z);
  Index yzp = yz;  // (yz)^(2^i)
  for (std::uint64_t p2 = 1; p2 < q; p2 *= 2, yzp = L.sqr(yzp))
    r = L.add(r, L.mul(yzp, L.pow(w, q + 1 - 2 * p2)));
  return L.add(r, L.mul(c, L.pow(w, q + 1)));
}

SmoothnessReport smoothness_check(std::uint64_t q, const FieldElem& c) {
  const unsigned e = families::log2_exact(q);
  if (e < 2) throw DomainError("the plane model needs q > 2");
  const FieldPtr& k = c.field();
  if (k->characteristic() != 2) throw DomainError("the plane model lives in characteristic 2");
  SmoothnessReport rep;
  rep.field = ff::make_field(2, std::lcm(2 * e, k->degree()));
  const ff::Field& L = *rep.field;
  const Index cc = ff::embed(k, rep.field).apply(c.index());
  const auto from_q2 = ff::embed(ff::make_field(2, 2 * e), rep.field);

  // Affine: F_Y = Y^q + Z and F_Z = Z^q + Y vanish together only at
  // (y, y^q) with y in GF(q^2).
  for (Index i = 0; i < q * q; ++i) {
    const Index y = from_q2.apply(i);
    const Index z = L.pow(y, q);
    ++rep.candidates;
    if (L.add(L.pow(y, q), z) != 0 || L.add(L.pow(z, q), y) != 0)
      throw InternalError("partial derivatives do not vanish at a candidate");
    if (plane_eval_homogeneous(L, q, cc, y, z, 1) == 0) rep.singular.push_back({y, z, 1});
  }
  // At infinity: [y : 1 : 0] with y^(q+1) = 1. There F_Y = y^q, F_Z = 1 and
  // F_W = (yz)^(q/2).
  const Index root = L.pow(L.generator(), (L.order() - 1) / (q + 1));
  Index y = 1;
  for (std::uint64_t i = 0; i <= q; ++i, y = L.mul(y, root)) {
    ++rep.candidates;
    const bool all_zero = L.pow(y, q) == 0 && L.pow(y, q / 2) == 0;
    if (plane_eval_homogeneous(L, q, cc, y, 1, 0) == 0 && all_zero) rep.singular.push_back({y, 1, 0});
  }
  rep.smooth = rep.singular.empty();
  return rep;
}

}  // namespace excpoly::curves
