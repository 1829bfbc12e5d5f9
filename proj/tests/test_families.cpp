#include <doctest.h>

#include <random>

#include "excpoly/families.hpp"

using namespace excpoly;
using namespace excpoly::families;
using ff::make_field;
using poly::pow;

namespace {

// h = X^q f = (T+a)^q T + (T+a)/(a+1) * sum_i (X(a^2+a))^(2^i) (T+a)^(q-2^(i+1)),
// expanded with plain polynomial arithmetic, then divided by X^q.
UniPoly closed_form_oracle(std::uint64_t q, const FieldElem& alpha) {
  const FieldPtr& k = alpha.field();
  const ff::Field& F = *k;
  const Index a = alpha.index();
  const UniPoly t = trace_poly(q, k);
  const UniPoly ta = t + UniPoly::constant(k, a);
  UniPoly sum(k);
  const Index a2a = F.add(F.sqr(a), a);
  for (std::uint64_t p2 = 1; p2 < q; p2 *= 2) {
    const UniPoly xa = UniPoly::monomial(k, F.pow(a2a, p2), p2);
    sum += xa * pow(ta, q - 2 * p2);
  }
  const UniPoly h = pow(ta, q) * t + (ta * sum).scale(F.inv(F.add(a, 1)));
  auto [quo, r] = poly::divmod(h, UniPoly::monomial(k, 1, q));
  REQUIRE(r.is_zero());
  return quo;
}

bool only_even_terms(const UniPoly& f) {
  for (std::size_t i = 1; i < f.coeffs().size(); i += 2)
    if (f.coeffs()[i] != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("trace polynomial") {
  auto f2 = make_field(2, 1);
  CHECK(trace_poly(4, f2) == UniPoly(f2, {0, 1, 1}));
  CHECK(trace_poly(8, f2) == UniPoly(f2, {0, 1, 1, 0, 1}));
  for (std::uint64_t q : {4u, 8u, 16u, 32u}) {
    const UniPoly t = trace_poly(q, f2);
    CHECK(t.square() + t == UniPoly::monomial(f2, 1, q) + UniPoly::x(f2));
  }
  CHECK_THROWS_AS(trace_poly(6, f2), DomainError);
}

TEST_CASE("closed form matches the expanded numerator and the product form") {
  std::vector<std::pair<std::uint64_t, FieldPtr>> grid;
  for (std::uint64_t q : {4u, 8u, 16u}) grid.emplace_back(q, make_field(2, 4));
  grid.emplace_back(8, make_field(2, 6));
  for (const auto& [q, k] : grid) {
    for (Index a = 2; a < k->order(); ++a) {
      const FieldElem alpha(k, a);
      const UniPoly f = f_closed(q, alpha);
      REQUIRE(f == closed_form_oracle(q, alpha));
      REQUIRE(f_product(q, alpha + FieldElem::one(k)) == f);
    }
  }
}

TEST_CASE("structure facts") {
  for (std::uint64_t q : {4u, 8u, 16u}) {
    auto k = make_field(2, 4);
    for (Index a = 2; a < 16; ++a) {
      const FieldElem alpha(k, a);
      const UniPoly f = f_closed(q, alpha);
      CHECK(f.degree() == static_cast<long>(q * (q - 1) / 2));
      CHECK(f.is_monic());
      CHECK_FALSE(f.derivative().is_zero());
      const UniPoly ta = trace_poly(q, k) + UniPoly::constant(k, a);
      auto [b, r] = poly::divmod(f, ta);
      CHECK(r.is_zero());
      CHECK(only_even_terms(b));
      const bool in_fq = k->pow(a, q) == a;
      const bool x2_divides = f.coeff(0) == 0 && f.coeff(1) == 0;
      const bool x3_divides = x2_divides && f.coeff(2) == 0;
      CHECK(x2_divides == in_fq);
      CHECK_FALSE(x3_divides);
      if (!in_fq) CHECK(f.coeff(0) != 0);
      // Product form: f_product(a) / (T + a + 1) is a square.
      const UniPoly fp = f_product(q, alpha);
      const UniPoly lead = trace_poly(q, k) + UniPoly::constant(k, k->add(a, 1));
      CHECK(only_even_terms(poly::exact_div(fp, lead)));
    }
  }
  auto f4 = make_field(2, 2);
  CHECK(f_closed(4, FieldElem(f4, 2)).degree() == 6);
  CHECK(f_closed(8, FieldElem(f4, 2)).degree() == 28);
  CHECK_THROWS_AS(f_closed(8, FieldElem(f4, 1)), DomainError);
  CHECK_THROWS_AS(f_product(8, FieldElem(f4, 0)), DomainError);
  CHECK_THROWS_AS(f_closed(2, FieldElem(f4, 2)), DomainError);
}

TEST_CASE("beta") {
  auto k = make_field(2, 4);
  for (Index a = 2; a < 16; ++a) {
    const FieldElem alpha(k, a);
    const FieldElem b = beta_for(alpha);
    CHECK(b * b == alpha + alpha * alpha);
  }
}

TEST_CASE("Dickson polynomials") {
  auto f2 = make_field(2, 3);
  const FieldElem a(f2, 5);
  CHECK(dickson(2, a) == UniPoly::monomial(f2, 1, 2));
  CHECK(dickson(3, a) == UniPoly(f2, {0, 5, 0, 1}));
  for (auto k : {make_field(2, 3), make_field(3, 2)}) {
    for (Index ai = 0; ai < k->order(); ai += 3) {
      const FieldElem al(k, ai);
      for (unsigned d = 1; d <= 40; ++d) REQUIRE(dickson(d, al) == dickson_recurrence(d, al));
    }
  }
  CHECK(dickson(3, a).compose(dickson(5, a)).degree() == 15);
  // Large degrees need more than 128-bit intermediates.
  const FieldElem one3(make_field(3, 1), 1);
  CHECK(dickson(500, one3) == dickson_recurrence(500, one3));

  std::mt19937_64 rng(12);
  for (auto k : {make_field(2, 8), make_field(3, 4)}) {
    const ff::Field& F = *k;
    for (int s = 0; s < 200; ++s) {
      const Index y = 1 + rng() % (F.order() - 1);
      const Index al = rng() % F.order();
      const unsigned d = 1 + rng() % 11;
      const Index ay = F.div(al, y);
      const Index lhs = dickson(d, FieldElem(k, al)).eval(F.add(y, ay));
      CHECK(lhs == F.add(F.pow(y, d), F.pow(ay, d)));
    }
  }
}

TEST_CASE("twisted families") {
  auto f4 = make_field(2, 2);
  const FieldElem one(f4, 1);
  const UniPoly expect = pow(UniPoly(f4, {1, 1, 0, 1}), 9).shift(1);
  CHECK(family_iv(8, 1, one) == expect);
  CHECK(family_iv(8, 1, one).degree() == 28);
  CHECK(family_iv(8, 9, FieldElem(f4, 2)).degree() == 28);
  CHECK_THROWS_AS(family_iv(8, 2, one), DomainError);
  CHECK_THROWS_AS(family_iv(4, 1, one), DomainError);

  auto f9 = make_field(3, 2);
  const FieldElem a9(f9, 4);
  const UniPoly v = family_v(27, 1, a9);
  CHECK(v.degree() == 351);
  CHECK(v.is_monic());
  CHECK(family_v(27, 7, a9).degree() == 351);
  CHECK_THROWS_AS(family_v(27, 2, a9), DomainError);
  CHECK_THROWS_AS(family_v(9, 1, a9), DomainError);
  CHECK_FALSE(v.derivative().is_zero());
}

TEST_CASE("family specs") {
  auto f4 = make_field(2, 2);
  FamilySpec s{FamilyKind::char2_new, f4, 8, FieldElem(f4, 2), 0, 0};
  CHECK(s.build().degree() == 28);
  CHECK(s.degree() == 28);
  s.alpha = FieldElem(f4, 1);
  CHECK_THROWS_AS(s.validate(), DomainError);
  CHECK(parse_kind("char2-new") == FamilyKind::char2_new);
  CHECK(parse_kind("char3_twist") == FamilyKind::char3_twist);
  CHECK_THROWS_AS(parse_kind("nope"), DomainError);
}

TEST_CASE("canonicalization") {
  auto f4 = make_field(2, 2);
  const FieldElem a(f4, 3);
  auto cf = canonicalize(f_closed(8, a), 8);
  CHECK(cf.alpha == a);
  CHECK(cf.zeta.is_one());
  CHECK(cf.gamma.is_zero());
  CHECK(cf.eta.is_one());
  CHECK(cf.delta.is_zero());

  // 1 + f(X + c) recovers gamma = c, delta = 1.
  for (Index c = 0; c < 4; ++c) {
    const UniPoly g = f_closed(8, a).compose(UniPoly(f4, {c, 1})) + UniPoly::constant(f4, 1);
    auto r = canonicalize(g, 8);
    CHECK(r.gamma.index() == c);
    CHECK(r.delta.is_one());
  }

  std::mt19937_64 rng(13);
  for (auto [q, k] : std::vector<std::pair<std::uint64_t, FieldPtr>>{
           {8, make_field(2, 2)}, {8, make_field(2, 4)}, {4, make_field(2, 4)}, {4, make_field(2, 2)}}) {
    for (int s = 0; s < 100; ++s) {
      const FieldElem al(k, 2 + rng() % (k->order() - 2));
      const FieldElem z(k, 1 + rng() % (k->order() - 1));
      const FieldElem g(k, rng() % k->order());
      const FieldElem et(k, 1 + rng() % (k->order() - 1));
      const FieldElem de(k, rng() % k->order());
      const CanonicalForm in{al, z, g, et, de};
      const auto out = canonicalize(in.reassemble(q), q);
      REQUIRE(out.alpha == al);
      REQUIRE(out.zeta == z);
      REQUIRE(out.gamma == g);
      REQUIRE(out.eta == et);
      REQUIRE(out.delta == de);
    }
  }
  CHECK_THROWS_AS(canonicalize(UniPoly::monomial(f4, 1, 28), 8), NotInFamilyError);
  // Perturbing a low coefficient breaks reassembly.
  UniPoly bad = f_closed(8, a) + UniPoly::monomial(f4, 1, 5);
  CHECK_THROWS_AS(canonicalize(bad, 8), NotInFamilyError);
}
