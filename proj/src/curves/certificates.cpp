#include <numeric>

#include "excpoly/curves.hpp"
#include "excpoly/families.hpp"

namespace excpoly::curves {

using poly::FFElem;
using poly::FunctionField;
using poly::RatFunc;
using poly::RationalValue;

namespace {

FFElem frob(FFElem x, std::uint64_t q) {
  for (std::uint64_t p2 = 1; p2 < q; p2 *= 2) x = x.square();
  return x;
}

FFElem trace_ff(std::uint64_t q, const FFElem& x) {
  FFElem r = x, p = x;
  for (std::uint64_t p2 = 2; p2 < q; p2 *= 2) {
    p = p.square();
    r += p;
  }
  return r;
}

RatFunc rconst(const FieldPtr& k, Index c) { return RatFunc::constant(k, c); }

// Y^(q+1) + Z^(q+1) + T(YZ) + c in (X, Y) = (Y, Z).
BiPoly plane_equation(const FieldPtr& L, std::uint64_t q, Index c) {
  BiPoly f(L);
  f.add_term(q + 1, 0, 1);
  f.add_term(0, q + 1, 1);
  for (std::uint64_t p2 = 1; p2 < q; p2 *= 2) f.add_term(p2, p2, 1);
  f.add_term(0, 0, c);
  return f;
}

// substitute(eq, x, y) == lambda * eq for some constant lambda.
bool preserved_up_to_constant(const BiPoly& eq, const BiPoly& x, const BiPoly& y) {
  const BiPoly s = poly::substitute(eq, x, y);
  const auto& [key, c0] = *eq.terms().begin();
  const Index lam = eq.field()->div(s.coeff(key.first, key.second), c0);
  return lam != 0 && s == eq.scale(lam);
}

// Images of the basis X^j of GF(q) inside L.
std::vector<Index> fq_basis(const FieldPtr& L, unsigned e) {
  const auto emb = ff::embed(ff::make_field(2, e), L);
  std::vector<Index> out;
  for (unsigned j = 0; j < e; ++j) out.push_back(emb.apply(Index{1} << j));
  return out;
}

bool proj_equal(const ff::Field& L, const std::array<Index, 3>& a, const std::array<Index, 3>& b) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (L.mul(a[i], b[j]) != L.mul(a[j], b[i])) return false;
  return true;
}

}  // namespace

bool verify_product_identity(std::uint64_t q, ProductMutation mutation) {
  const unsigned e = families::log2_exact(q);
  if (e < 2 || e > 5) throw DomainError("product identity is checked for q in {4, 8, 16, 32}");
  const FieldPtr L = ff::make_field(2, 2 * e);
  const Index step = L->pow(L->generator(), q - 1);  // order q + 1
  BiPoly prod = BiPoly::constant(L, 1);
  Index w = 1;
  for (std::uint64_t k = 0; k <= q; ++k, w = L->mul(w, step)) {
    BiPoly lin(L);
    lin.add_term(1, 0, w);
    lin.add_term(0, 0, 1);
    lin.add_term(0, 1, L->inv(w));
    prod *= lin;
  }
  const BiPoly rhs = plane_equation(L, q, mutation == ProductMutation::drop_constant ? 0 : 1);
  return prod == rhs;
}

bool verify_b_action(std::uint64_t q, const FieldElem& alpha, const FieldElem& beta,
                     BActionMutation mutation) {
  const CurveModel model = artin_schreier_model(q, alpha, beta);
  const unsigned e = families::log2_exact(q);
  const FieldPtr& k = model.field;
  const FieldPtr L = ff::make_field(2, std::lcm(e, k->degree()));
  const BiPoly eq = model.equation.map(ff::embed(k, L));
  const Index gamma = L->pow(L->generator(), (L->order() - 1) / (q - 1));
  const Index g2 = L->sqr(gamma);
  const BiPoly X = BiPoly::x(L), Y = BiPoly::y(L);

  const Index w_scale = mutation == BActionMutation::w_scaled_by_gamma ? gamma : g2;
  if (!preserved_up_to_constant(eq, X.scale(g2), Y.scale(w_scale))) return false;
  for (Index d : fq_basis(L, e))
    if (!preserved_up_to_constant(eq, X + BiPoly::constant(L, d), Y)) return false;
  return true;
}

QuotientReport verify_quotient_relations(std::uint64_t q, const FieldElem& alpha,
                                         const FieldElem& beta) {
  const unsigned e = families::log2_exact(q);
  if (e < 2) throw DomainError("the curve needs q > 2");
  ff::require_same(alpha.field(), beta.field());
  if (alpha.is_zero() || beta.is_zero()) throw DomainError("alpha and beta must be nonzero");
  const FieldPtr& k = alpha.field();
  const ff::Field& F = *k;
  const Index a = alpha.index(), b = beta.index();
  const Index c0 = F.add(F.add(F.sqr(a), a), F.sqr(b));
  QuotientReport rep;

  // The quotient by the torus: y^q = y / t + (a + b) / t + T(b / (t + 1)).
  const RatFunc t = RatFunc::var(k);
  const RatFunc one = rconst(k, 1);
  std::vector<RatFunc> rel(q, RatFunc(k));
  rel[0] = rconst(k, F.add(a, b)) / t + families::apply_trace(q, rconst(k, b) / (t + one));
  rel[1] = one / t;
  const auto E = FunctionField::make(k, rel);
  const FFElem y = E->gen();
  const FFElem z = y.square() + y + E->base(rconst(k, b) / (t + one));
  const FFElem tt = E->base(t);
  const FFElem quad = tt * tt * frob(z, q) + tt * (trace_ff(q, z) + E->constant(a)) + z +
                      E->constant(c0);
  rep.quadratic = quad.is_zero();

  // Q(t, z) with (X, Y) = (t, z).
  BiPoly Q(k);
  Q.add_term(2, q, 1);
  for (std::uint64_t p2 = 1; p2 < q; p2 *= 2) Q.add_term(1, p2, 1);
  Q.add_term(1, 0, a);
  Q.add_term(0, 1, 1);
  Q.add_term(0, 0, c0);
  BiPoly cz = BiPoly::y(k);
  cz.add_term(0, 0, c0);
  const BiPoly zq = BiPoly::monomial(k, 1, 0, q);
  const RationalValue nu{cz, BiPoly::monomial(k, 1, 1, q), 2};
  const BiPoly lhs = poly::substitute(Q, nu, RationalValue::polynomial(BiPoly::y(k)));
  rep.involution = lhs == cz * zq * Q;

  // nu(nu(t)) = t for each admissible constant z.
  rep.involutive = true;
  for (Index zv = 1; zv < F.order(); ++zv) {
    const Index num = F.add(zv, c0);
    if (num == 0) continue;
    const RatFunc nz = rconst(k, num) / (t.scale(F.pow(zv, q)));
    if (nz.compose(nz) != t) rep.involutive = false;
  }

  if (F.sqr(b) == F.add(a, F.sqr(a))) {
    const RatFunc zv = RatFunc::var(k);
    rep.kummer = (zv + rconst(k, c0)) / zv.pow(static_cast<long>(q)) ==
                 one / zv.pow(static_cast<long>(q - 1));
  }
  return rep;
}

bool Sl2Certificate::ok() const {
  return !steps.empty() &&
         std::all_of(steps.begin(), steps.end(), [](const CertificateStep& s) { return s.ok; });
}

Sl2Certificate verify_sl2_certificate(std::uint64_t q, const FieldElem& alpha) {
  return verify_sl2_certificate(q, alpha, families::beta_for(alpha), false);
}

Sl2Certificate verify_sl2_certificate(std::uint64_t q, const FieldElem& alpha,
                                      const FieldElem& beta, bool control) {
  const unsigned e = families::log2_exact(q);
  if (e < 2) throw DomainError("the certificate needs q > 2");
  ff::require_same(alpha.field(), beta.field());
  if (alpha.index() <= 1) throw DomainError("alpha must lie outside F_2");
  if (beta.is_zero()) throw DomainError("beta must be nonzero");
  if (beta * beta != alpha + alpha * alpha && !control)
    throw DomainError("the certificate needs beta^2 = alpha + alpha^2");

  const FieldPtr& k = alpha.field();
  const FieldPtr Lp = ff::make_field(2, std::lcm(2 * e, k->degree()));
  const ff::Field& L = *Lp;
  const auto emb = ff::embed(k, Lp);
  const Index a = emb.apply(alpha.index()), b = emb.apply(beta.index());
  const Index gamma = L.pow(L.generator(), (L.order() - 1) / (q + 1));
  const Index igamma = L.inv(gamma);
  const Index delta = L.add(gamma, igamma);
  const Index idelta = L.inv(delta);

  Sl2Certificate cert{q, alpha, beta, {}};

  // E = L(w)[v] / (v^q = v + RHS(w)).
  const RatFunc w = RatFunc::var(Lp);
  const RatFunc one = rconst(Lp, 1);
  const RatFunc wq1 = w.pow(static_cast<long>(q - 1));
  std::vector<RatFunc> rel(q, RatFunc(Lp));
  rel[0] = rconst(Lp, L.add(a, b)) * w +
           w.pow(static_cast<long>(q)) * families::apply_trace(q, rconst(Lp, b) / (one + wq1));
  rel[1] = one;
  const auto E = FunctionField::make(Lp, rel);
  const FFElem v = E->gen();
  const FFElem one_e = E->one();
  const FFElem what = E->base(w.inv());
  const FFElem vhat = v.square() * what + v + E->base(rconst(Lp, b) * w / (one + wq1));

  auto relation_ii = [&](const FFElem& vh, const FFElem& wh) {
    return frob(vh, q) * wh == trace_ff(q, vh * wh) + frob(wh, q) * vh + E->constant(a);
  };
  auto y_of = [&](const FFElem& vh, const FFElem& wh) {
    return (vh.scale(gamma) + wh.scale(igamma) + one_e).scale(idelta);
  };
  auto z_of = [&](const FFElem& vh, const FFElem& wh) {
    return (vh.scale(igamma) + wh.scale(gamma) + one_e).scale(idelta);
  };
  const FFElem y = y_of(vhat, what), z = z_of(vhat, what);

  // (1) coordinate identities.
  {
    const FFElem tvw = trace_ff(q, vhat * what);
    const bool i1 = tvw == v * E->base(w.inv() + w.pow(static_cast<long>(q)).inv()) +
                               E->base(rconst(Lp, L.add(a, b)) / wq1);
    const bool i2 = relation_ii(vhat, what);
    const bool i3 = what == (z.scale(gamma) + one_e + y.scale(igamma)).scale(idelta);
    const FFElem s = (vhat + what).scale(idelta);
    const bool i4 = y * z == s.square() + s + vhat * what + E->constant(L.sqr(idelta));
    cert.steps.push_back({1, "coordinate identities", i1 && i2 && i3 && i4});
  }

  // (2) the plane equation.
  const Index c = L.add(a, 1);
  cert.steps.push_back({2, "plane equation",
                        frob(y, q) * y + frob(z, q) * z == trace_ff(q, y * z) + E->constant(c)});

  // (3) automorphisms.
  {
    bool ok = true;
    const BiPoly F = plane_equation(Lp, q, c);
    const BiPoly X = BiPoly::x(Lp), Y = BiPoly::y(Lp);
    ok = ok && F.swap_xy() == F;
    ok = ok && relation_ii(what, vhat) && y_of(what, vhat) == z && z_of(what, vhat) == y;
    const Index d2 = L.inv(L.sqr(delta));
    Index eta = 1;
    for (std::uint64_t i = 0; i <= q && ok; ++i, eta = L.mul(eta, gamma)) {
      const Index ieta = L.inv(eta);
      ok = poly::substitute(F, X.scale(eta), Y.scale(ieta)) == F;
      const Index g2 = L.sqr(gamma);
      const FFElem wh2 =
          (E->constant(L.add(delta, L.add(L.mul(gamma, ieta), L.mul(eta, igamma)))) +
           what.scale(L.add(L.div(eta, g2), L.mul(g2, ieta))) + vhat.scale(L.add(eta, ieta)))
              .scale(d2);
      const Index ge = L.mul(gamma, eta);
      const Index g2e = L.mul(g2, eta);
      const FFElem vh2 = (E->constant(L.add(delta, L.add(ge, L.inv(ge)))) +
                          what.scale(L.add(eta, ieta)) + vhat.scale(L.add(g2e, L.inv(g2e))))
                             .scale(d2);
      ok = ok && y_of(vh2, wh2) == y.scale(eta) && z_of(vh2, wh2) == z.scale(ieta) &&
           relation_ii(vh2, wh2);
    }
    const CurveModel model = artin_schreier_model(q, alpha, beta);
    const BiPoly eq = model.equation.map(emb);
    for (Index xi : fq_basis(Lp, e)) ok = ok && poly::substitute(eq, X + BiPoly::constant(Lp, xi), Y) == eq;
    const Index zeta = L.pow(L.generator(), (L.order() - 1) / (q - 1));
    const Index izeta = L.inv(zeta);
    ok = ok && poly::substitute(eq, X.scale(izeta), Y.scale(izeta)) == eq.scale(izeta);
    cert.steps.push_back({3, "automorphisms preserve the equations", ok});
  }

  // (4) The zero locus of 1/w is the line Y = gamma^2 Z + gamma W. On it the
  // homogeneous plane equation is a (q+1)-th power of a linear form in W
  // (chart Z = 1), so the pole divisor of w is supported at a single point.
  {
    const Index g2 = L.sqr(gamma);
    const UniPoly Wv = UniPoly::x(Lp);
    const UniPoly ylin = UniPoly::constant(Lp, g2) + Wv.scale(gamma);
    UniPoly P = poly::pow(ylin, q + 1) + UniPoly::constant(Lp, 1) +
                UniPoly::monomial(Lp, c, q + 1);
    UniPoly yp = ylin;
    for (std::uint64_t p2 = 1; p2 < q; p2 *= 2, yp = yp.square()) P += yp.shift(q + 1 - 2 * p2);
    bool ok = P.degree() == static_cast<long>(q + 1);
    if (ok) {
      const Index lc = P.lead();
      const Index r = L.div(P.coeff(q), lc);
      ok = P == poly::pow(Wv + UniPoly::constant(Lp, r), q + 1).scale(lc);
      const std::array<Index, 3> pt{L.add(g2, L.mul(gamma, r)), 1, r};
      ok = ok && plane_eval_homogeneous(L, q, c, pt[0], pt[1], pt[2]) == 0;
      Index eta = 1;
      for (std::uint64_t i = 0; i <= q && ok; ++i, eta = L.mul(eta, gamma)) {
        const std::array<Index, 3> moved{L.mul(eta, pt[0]), L.div(pt[1], eta), pt[2]};
        ok = proj_equal(L, moved, pt) == (eta == 1);
      }
    }
    cert.steps.push_back({4, "pole point moved by nu_eta", ok});
  }
  return cert;
}

}  // namespace excpoly::curves
