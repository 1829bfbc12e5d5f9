#include "excpoly/families.hpp"

namespace excpoly::families {

UniPoly CanonicalForm::reassemble(std::uint64_t q) const {
  const FieldPtr& k = alpha.field();
  const UniPoly lin(k, {gamma.index(), zeta.index()});
  return f_closed(q, alpha).compose(lin).scale(eta.index()) + UniPoly::constant(k, delta.index());
}

CanonicalForm canonicalize(const UniPoly& f, std::uint64_t q) {
  const unsigned e = log2_exact(q);
  if (e < 2) throw DomainError("canonicalization requires q > 2");
  const FieldPtr& k = f.field();
  const ff::Field& F = *k;
  if (F.characteristic() != 2) throw DomainError("canonicalization requires characteristic 2");
  const std::uint64_t deg = q * (q - 1) / 2;
  if (f.degree() != static_cast<long>(deg)) throw NotInFamilyError("degree is not q(q-1)/2");

  const std::uint64_t m = (q * q - 2 * q) / 2;
  const auto& c = f.coeffs();
  const Index c1 = c[m + 1], c2 = c[m + 2];
  if (c1 == 0 || c2 == 0) throw NotInFamilyError("leading pattern of the family is missing");

  const Index zeta = F.div(c2, c1);
  const Index eta = F.div(c1, F.pow(zeta, m + 1));
  auto unscale = [&](std::uint64_t i) { return F.mul(eta, F.pow(zeta, i)); };

  const Index alpha = F.div(c[m - q / 2 + 1], unscale(m - q / 2 + 1));
  if (alpha <= 1) throw NotInFamilyError("recovered alpha lies in F_2");
  const Index t = F.div(c[m], unscale(m));  // T(gamma)
  Index top = c[m - q / 2];
  if (q == 4) top = F.sub(top, F.mul(F.mul(eta, F.add(alpha, 1)), F.sqr(zeta)));
  const Index s = F.div(top, unscale(m - q / 2));  // alpha gamma + gamma^q
  // T(gamma)^2 + T(gamma) = gamma^q + gamma, so s + t^2 + t = (alpha + 1) gamma.
  const Index gamma = F.div(F.add(s, F.add(F.sqr(t), t)), F.add(alpha, 1));

  const FieldElem a(k, alpha);
  const Index delta = F.sub(c[0], F.mul(eta, f_closed(q, a).eval(gamma)));
  CanonicalForm out{a, FieldElem(k, zeta), FieldElem(k, gamma), FieldElem(k, eta),
                    FieldElem(k, delta)};
  if (!(out.reassemble(q) == f)) throw NotInFamilyError("reassembly does not reproduce the input");
  return out;
}

}  // namespace excpoly::families
