#include <doctest.h>

#include <random>

#include "excpoly/curves.hpp"
#include "excpoly/families.hpp"

using namespace excpoly;
using namespace excpoly::curves;
using ff::make_field;

namespace {

// Singular points over L of the homogenized plane curve, by checking F and
// all three partials at every point of P^2(L).
std::size_t brute_singular(std::uint64_t q, const FieldElem& c, const FieldPtr& Lp) {
  const ff::Field& L = *Lp;
  const Index cc = ff::embed(c.field(), Lp).apply(c.index());
  auto singular = [&](Index y, Index z, Index w) {
    if (plane_eval_homogeneous(L, q, cc, y, z, w) != 0) return false;
    const Index wq1 = L.pow(w, q - 1);
    if (L.add(L.pow(y, q), L.mul(z, wq1)) != 0) return false;
    if (L.add(L.pow(z, q), L.mul(y, wq1)) != 0) return false;
    Index fw = L.mul(cc, L.pow(w, q));
    Index yz = L.mul(y, z);
    for (std::uint64_t p2 = 1; p2 < q; p2 *= 2, yz = L.sqr(yz))
      fw = L.add(fw, L.mul(yz, L.pow(w, q - 2 * p2)));
    return fw == 0;
  };
  std::size_t n = 0;
  for (Index y = 0; y < L.order(); ++y)
    for (Index z = 0; z < L.order(); ++z) n += singular(y, z, 1);
  for (Index y = 0; y < L.order(); ++y) n += singular(y, 1, 0);
  n += singular(1, 0, 0);
  return n;
}

// Affine solutions of v^q + v = RHS(w) with w^(q-1) != 1 over GF(2^n).
std::uint64_t brute_as(std::uint64_t q, const FieldElem& alpha, const FieldElem& beta, unsigned n) {
  const FieldPtr Lp = make_field(2, n);
  const ff::Field& L = *Lp;
  const auto emb = ff::embed(alpha.field(), Lp);
  const Index a = emb.apply(alpha.index()), b = emb.apply(beta.index());
  std::uint64_t count = 0;
  for (Index w = 0; w < L.order(); ++w) {
    const Index wq1 = L.pow(w, q - 1);
    if (wq1 == 1) continue;
    Index t = 0, x = L.div(b, L.add(1, wq1));
    for (std::uint64_t p2 = 1; p2 < q; p2 *= 2, x = L.sqr(x)) t = L.add(t, x);
    const Index rhs = L.add(L.mul(L.add(a, b), w), L.mul(L.pow(w, q), t));
    for (Index v = 0; v < L.order(); ++v) count += L.add(L.pow(v, q), v) == rhs;
  }
  return count;
}

}  // namespace

TEST_CASE("plane model shape") {
  auto k = make_field(2, 4);
  const CurveModel m = plane_model(4, FieldElem(k, 7));
  CHECK(m.equation.size() == 5);  // Y^5, Z^5, Y^2 Z^2, YZ, c
  CHECK(m.equation.total_degree() == 5);
  CHECK(m.q() == 4);
  CHECK_THROWS_AS(plane_model(4, FieldElem(k, 1)), DomainError);
  CHECK_THROWS_AS(plane_model(4, FieldElem(k, 0)), DomainError);
  const std::uint64_t q = 8;
  CHECK(q * (q - 1) / 2 == (q + 1 - 1) * (q + 1 - 2) / 2);
}

TEST_CASE("smoothness") {
  auto k4 = make_field(2, 2);
  for (Index c = 0; c < 4; ++c) {
    const auto rep = smoothness_check(8, FieldElem(k4, c));
    CHECK(rep.smooth == (c > 1));
    CHECK(rep.singular.size() == brute_singular(8, FieldElem(k4, c), rep.field));
  }
  auto k16 = make_field(2, 4);
  for (Index c = 0; c < 16; ++c) {
    const auto rep = smoothness_check(4, FieldElem(k16, c));
    CHECK(rep.smooth == (c > 1));
    CHECK(rep.singular.size() == brute_singular(4, FieldElem(k16, c), rep.field));
  }
}

TEST_CASE("plane counters agree") {
  auto k4 = make_field(2, 2);
  for (Index c = 2; c < 4; ++c) {
    const CurveModel m = plane_model(4, FieldElem(k4, c));
    for (unsigned e = 1; e <= 5; ++e) {
      const auto brute = count_plane_brute(m, e);
      CHECK(count_plane_gcd(m, e) == brute);
      CHECK(count_plane_fibered(m, e, 1) == brute);
      CHECK(count_plane_fibered(m, e, 3) == brute);
      CHECK_FALSE(weil_check(6, ff::ipow(4, e), brute).violates);
    }
  }
  auto k16 = make_field(2, 4);
  for (Index c : {2, 7, 13}) {
    const CurveModel m = plane_model(4, FieldElem(k16, c));
    for (unsigned e = 1; e <= 3; ++e) {
      const auto brute = count_plane_brute(m, e);
      CHECK(count_plane_gcd(m, e) == brute);
      CHECK(count_plane_fibered(m, e, 2) == brute);
    }
  }
  const CurveModel m8 = plane_model(8, FieldElem(k4, 2));
  for (unsigned e = 1; e <= 6; ++e) {
    const auto gcd = count_plane_gcd(m8, e);
    CHECK(count_plane_fibered(m8, e) == gcd);
    CHECK_FALSE(weil_check(28, ff::ipow(4, e), gcd).violates);
  }
  CHECK_THROWS_AS(count_plane_brute(plane_model(4, FieldElem(k16, 2)), 4), GuardError);
  CHECK_THROWS_AS(count_plane_fibered(plane_model(4, FieldElem(k16, 2)), 7), GuardError);
}

TEST_CASE("points at infinity") {
  auto k4 = make_field(2, 2);
  const CurveModel m = plane_model(4, FieldElem(k4, 2));
  for (unsigned e = 1; e <= 8; ++e) {
    auto L = make_field(2, 2 * e);
    std::uint64_t n = 0;
    for (Index y = 1; y < L->order(); ++y) n += L->pow(y, 5) == 1;
    CHECK(plane_points_at_infinity(m, e) == n);
    CHECK((n == 5) == (e % 2 == 0));
  }
}

TEST_CASE("Artin-Schreier affine count") {
  auto k4 = make_field(2, 2);
  for (Index a = 1; a < 4; ++a)
    for (Index b = 1; b < 4; ++b) {
      const FieldElem alpha(k4, a), beta(k4, b);
      const CurveModel m = artin_schreier_model(4, alpha, beta);
      for (unsigned e = 1; e <= 3; ++e)
        CHECK(count_artin_schreier_affine(m, e) == brute_as(4, alpha, beta, 2 * e));
    }
  auto k2 = make_field(2, 1);
  const CurveModel m8 = artin_schreier_model(8, FieldElem(k2, 1), FieldElem(k2, 1));
  CHECK(count_artin_schreier_affine(m8, 3) == brute_as(8, FieldElem(k2, 1), FieldElem(k2, 1), 3));
  CHECK_THROWS_AS(count_artin_schreier_affine(m8, 2), DomainError);
  CHECK_THROWS_AS(count_artin_schreier_affine(plane_model(8, FieldElem(k4, 2)), 1), DomainError);
}

TEST_CASE("zeta from counts") {
  // y^2 + y = x^3 over GF(2): 3 points, L = 1 + 2T^2.
  const auto z = zeta_from_counts(2, 2, {3});
  REQUIRE(z.L.size() == 3);
  CHECK(z.L[0] == 1);
  CHECK(z.L[1] == 0);
  CHECK(z.L[2] == 2);
  CHECK(z.p_rank == 0);
  CHECK(z.genus == 1);
  CHECK(z.radii_ok);
  // y^2 + xy = x^3 + 1 over GF(2): 4 points, L = 1 + T + 2T^2, ordinary.
  const auto o = zeta_from_counts(2, 2, {4});
  CHECK(o.L[1] == 1);
  CHECK(o.p_rank == 1);
  CHECK(o.L_at_1 == 4);
  CHECK_THROWS_AS(zeta_from_counts(2, 2, {3, 4}), InternalError);
}

TEST_CASE("zeta of the plane curve, q = 4") {
  auto k16 = make_field(2, 4);
  const CurveModel m = plane_model(4, FieldElem(k16, 6));
  const ZetaData z = zeta(m, 6, 4);
  CHECK(z.genus == 6);
  CHECK(z.p_rank == 6);
  CHECK(z.functional_equation);
  CHECK(z.counts_reproduced);
  CHECK_MESSAGE(z.radii_ok, z.max_radius_error);
  CHECK(z.L_at_1 > 0);
  CHECK(z.L.size() == 13);
  CHECK(z.L[12] == BigInt(1) << 24);
  for (unsigned e = 1; e <= 3; ++e) CHECK(z.counts[e - 1] == count_plane_brute(m, e));
  // Frozen after the brute-force counts above agreed: L = (1 + 3T + 16T^2)^6.
  std::vector<BigInt> expect{1};
  for (int i = 0; i < 6; ++i) {
    std::vector<BigInt> next(expect.size() + 2, 0);
    for (std::size_t j = 0; j < expect.size(); ++j) {
      next[j] += expect[j];
      next[j + 1] += 3 * expect[j];
      next[j + 2] += 16 * expect[j];
    }
    expect = next;
  }
  CHECK(z.L == expect);
}

TEST_CASE("weil_check") {
  auto c = weil_check(28, 4, 252);
  CHECK(c.violates);
  CHECK(c.bound_floor == 117);
  c = weil_check(28, 16, 252);
  CHECK(c.violates);
  CHECK(c.bound_floor == 241);
  CHECK_FALSE(weil_check(0, 4, 5).violates);
  CHECK_FALSE(weil_check(28, 64, 252).violates);
  CHECK(weil_check(28, 64, 252).bound_floor == 513);
  CHECK(weil_check(496, 4, 16368).bound_floor == 1989);
  // Boundary: (N - s - 1)^2 == 4 g^2 s is not a violation.
  CHECK_FALSE(weil_check(1, 4, 9).violates);
  CHECK(weil_check(1, 4, 10).violates);
}

TEST_CASE("Weil contradiction reports") {
  const auto r8 = weil_contradiction_report(8);
  CHECK(r8.genus == 28);
  CHECK(r8.places == 252);
  REQUIRE(r8.cases.size() == 2);
  CHECK(r8.cases[0].e_prime == 1);
  REQUIRE(r8.cases[0].candidates.size() == 1);
  CHECK(r8.cases[0].candidates[0].s == 4);
  CHECK(r8.cases[0].candidates[0].check.bound_floor == 117);
  CHECK(r8.cases[1].e_prime == 3);
  REQUIRE(r8.cases[1].candidates.size() == 2);
  CHECK(r8.cases[1].candidates[0].s == 8);
  CHECK(r8.cases[1].candidates[0].check.violates);
  CHECK(r8.cases[1].candidates[1].s == 64);
  CHECK_FALSE(r8.cases[1].candidates[1].check.violates);
  CHECK(r8.all_cases_violated);

  const auto r32 = weil_contradiction_report(32);
  CHECK(r32.genus == 496);
  CHECK(r32.places == 16368);
  REQUIRE(r32.cases.size() == 2);
  CHECK(r32.cases[0].candidates[0].check.bound_floor == 1989);
  CHECK(r32.all_cases_violated);
  CHECK_THROWS_AS(weil_contradiction_report(16), DomainError);
}

TEST_CASE("product identity") {
  for (std::uint64_t q : {4, 8, 16, 32}) {
    CHECK(verify_product_identity(q));
    CHECK_FALSE(verify_product_identity(q, ProductMutation::drop_constant));
  }
  CHECK_THROWS_AS(verify_product_identity(64), DomainError);
}

TEST_CASE("B action") {
  auto k4 = make_field(2, 2);
  const FieldElem a(k4, 2);
  CHECK(verify_b_action(8, a, families::beta_for(a)));
  CHECK(verify_b_action(8, a, FieldElem(k4, 1)));
  CHECK_FALSE(verify_b_action(8, a, FieldElem(k4, 1), BActionMutation::w_scaled_by_gamma));
  CHECK_THROWS_AS(verify_b_action(8, a, FieldElem(k4, 0)), DomainError);

  std::mt19937_64 rng(11);
  auto k64 = make_field(2, 6);
  for (int i = 0; i < 10; ++i) {
    const FieldElem x(k64, 1 + rng() % 63), y(k64, 1 + rng() % 63);
    CHECK(verify_b_action(4, x, y));
    CHECK_FALSE(verify_b_action(4, x, y, BActionMutation::w_scaled_by_gamma));
  }
}

TEST_CASE("quotient relations") {
  std::mt19937_64 rng(5);
  auto k64 = make_field(2, 6);
  for (int i = 0; i < 10; ++i) {
    const FieldElem a(k64, 1 + rng() % 63), b(k64, 1 + rng() % 63);
    const auto rep = verify_quotient_relations(8, a, b);
    CHECK(rep.quadratic);
    CHECK(rep.involution);
    CHECK(rep.involutive);
    CHECK(rep.kummer.has_value() == (b * b == a + a * a));
  }
  for (Index x = 2; x < 64; x += 13) {
    const FieldElem a(k64, x);
    const auto rep = verify_quotient_relations(8, a, families::beta_for(a));
    REQUIRE(rep.kummer.has_value());
    CHECK(*rep.kummer);
    CHECK(rep.ok());
  }
}

TEST_CASE("SL2 certificate") {
  auto k16 = make_field(2, 4);
  for (Index x : {2, 7}) {
    const auto cert = verify_sl2_certificate(4, FieldElem(k16, x));
    CHECK(cert.steps.size() == 4);
    CHECK(cert.ok());
  }
  auto k4 = make_field(2, 2);
  const FieldElem a(k4, 2);
  const auto cert8 = verify_sl2_certificate(8, a);
  for (const auto& s : cert8.steps) CHECK_MESSAGE(s.ok, s.name);

  // Over GF(4) the only beta is 1, so the control runs with alpha in GF(8).
  auto k8 = make_field(2, 3);
  const FieldElem a8(k8, 3);
  CHECK(verify_sl2_certificate(8, a8).ok());
  const FieldElem broken = families::beta_for(a8) + FieldElem::one(k8);
  CHECK_THROWS_AS(verify_sl2_certificate(8, a8, broken), DomainError);
  const auto ctl = verify_sl2_certificate(8, a8, broken, true);
  REQUIRE(ctl.steps.size() == 4);
  CHECK_FALSE(ctl.steps[1].ok);
  CHECK_FALSE(ctl.ok());
  CHECK_THROWS_AS(verify_sl2_certificate(4, FieldElem(k16, 1)), DomainError);
}
