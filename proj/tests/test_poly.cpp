#include <doctest.h>

#include <random>

#include "excpoly/bipoly.hpp"
#include "excpoly/poly.hpp"
#include "excpoly/ratfunc.hpp"

using namespace excpoly;
using namespace excpoly::poly;
using ff::make_field;

namespace {

UniPoly P(const FieldPtr& f, std::vector<Index> c) { return {f, std::move(c)}; }

UniPoly random_poly(const FieldPtr& f, std::size_t max_deg, std::mt19937_64& rng) {
  std::vector<Index> c(rng() % (max_deg + 1) + 1);
  for (auto& x : c) x = rng() % f->order();
  return {f, std::move(c)};
}

// Independent irreducibility oracle: f of degree n is irreducible iff
// gcd(f, X^(Q^i) - X) = 1 for 1 <= i <= n/2, with X^(Q^i) by square-and-multiply.
bool ben_or(const UniPoly& f) {
  const auto n = f.degree();
  if (n < 1) return false;
  const UniPoly x = UniPoly::x(f.field());
  UniPoly h = x;
  for (long i = 1; 2 * i <= n; ++i) {
    h = pow_mod(h, BigInt(f.f().order()), f);
    if (gcd(f, h - x).degree() > 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("univariate arithmetic") {
  auto f2 = make_field(2, 1);
  CHECK(gcd(P(f2, {1, 0, 1}), P(f2, {1, 1})) == P(f2, {1, 1}));
  auto [q, r] = divmod(P(f2, {0, 0, 0, 1}), P(f2, {0, 0, 1}));
  CHECK(q == P(f2, {0, 1}));
  CHECK(r.is_zero());
  CHECK_THROWS_AS(divmod(P(f2, {1}), UniPoly(f2)), ZeroDivisionError);
  CHECK_THROWS_AS(P(f2, {1}) + P(make_field(2, 2), {1}), MismatchError);
  CHECK(P(f2, {0, 0, 0}).degree() == -1);

  auto f8 = make_field(2, 3);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 1000; ++t) {
    const UniPoly a = random_poly(f8, 12, rng), b = random_poly(f8, 8, rng);
    if (b.is_zero()) continue;
    auto [qq, rr] = divmod(a * b + a, b);
    REQUIRE(rr == rem(a, b));
    REQUIRE(qq * b + rr == a * b + a);
    REQUIRE(rr.degree() < b.degree());
  }
}

TEST_CASE("evaluation and composition") {
  auto f2 = make_field(2, 1);
  const UniPoly t8 = P(f2, {0, 1, 1, 0, 1});
  CHECK(t8.eval(1) == 1);
  auto f27 = make_field(3, 3);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 200; ++t) {
    const UniPoly a = random_poly(f27, 10, rng), b = random_poly(f27, 10, rng);
    const Index x = rng() % 27;
    CHECK(a.eval(0) == a.coeff(0));
    CHECK((a + b).eval(x) == f27->add(a.eval(x), b.eval(x)));
    CHECK((a * b).eval(x) == f27->mul(a.eval(x), b.eval(x)));
    CHECK(a.compose(b).eval(x) == a.eval(b.eval(x)));
    CHECK(a.compose(UniPoly::x(f27)) == a);
  }
  CHECK(P(f2, {0, 0, 1}).compose(P(f2, {1, 1})) == P(f2, {1, 0, 1}));

  // Evaluation at points of an extension.
  auto f4 = make_field(2, 2), f16 = make_field(2, 4);
  auto emb = ff::embed(f4, f16);
  const UniPoly g = P(f4, {2, 3, 1});
  for (Index x = 0; x < 16; ++x)
    CHECK(g.eval(emb, ff::FieldElem(f16, x)).index() == g.map(emb).eval(x));
  CHECK(g.map(emb).pullback(emb) == g);
}

TEST_CASE("factorization examples") {
  auto f2 = make_field(2, 1);
  auto fac = factor(P(f2, {0, 1, 0, 0, 1}), 5);
  REQUIRE(fac.factors.size() == 3);
  CHECK(fac.factors[0].poly == P(f2, {0, 1}));
  CHECK(fac.factors[1].poly == P(f2, {1, 1}));
  CHECK(fac.factors[2].poly == P(f2, {1, 1, 1}));
  // X^2+X+1 is the only irreducible quadratic over GF(2).
  int irreducible_quadratics = 0;
  for (Index a = 0; a < 2; ++a)
    for (Index b = 0; b < 2; ++b) {
      const UniPoly q = P(f2, {b, a, 1});
      bool root = q.eval(0) == 0 || q.eval(1) == 0;
      irreducible_quadratics += !root;
      CHECK(is_irreducible(q) == !root);
    }
  CHECK(irreducible_quadratics == 1);

  const UniPoly x8 = P(f2, {0, 1, 0, 0, 0, 0, 0, 0, 1});
  CHECK(factor_shape(x8) == std::vector<unsigned>{1, 1, 3, 3});
  const UniPoly irr = P(f2, {1, 1, 0, 1});
  auto fi = factor(irr, 0);
  REQUIRE(fi.factors.size() == 1);
  CHECK(fi.factors[0].multiplicity == 1);
  CHECK(fi.factors[0].poly == irr);
  CHECK_THROWS_AS(factor(UniPoly(f2), 0), ZeroDivisionError);
}

TEST_CASE("factorization reassembles") {
  std::mt19937_64 rng(9);
  for (auto [p, e] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {2, 3}, {3, 3}}) {
    auto f = make_field(p, e);
    for (int t = 0; t < 500 / 3 + 1; ++t) {
      UniPoly a = random_poly(f, 40, rng);
      if (a.is_zero()) continue;
      if (t % 4 == 0) a = a * a * random_poly(f, 3, rng);  // force repeated factors
      if (a.is_zero()) continue;
      auto fac = factor(a, t);
      REQUIRE(fac.reassemble(f) == a);
      long total = 0;
      for (const auto& fc : fac.factors) {
        CHECK(fc.poly.is_monic());
        CHECK(ben_or(fc.poly));
        total += fc.poly.degree() * fc.multiplicity;
      }
      CHECK(total == a.degree());
      // Deterministic in the seed.
      auto again = factor(a, t);
      CHECK(again.factors.size() == fac.factors.size());
    }
  }
}

TEST_CASE("roots") {
  auto f2 = make_field(2, 1);
  CHECK(roots(P(f2, {0, 1, 1})) == std::vector<Index>{0, 1});
  CHECK(roots(P(f2, {1, 1, 1})).empty());
  auto f8 = make_field(2, 3);
  const UniPoly t8 = P(f8, {1, 1, 1, 0, 1});
  CHECK(roots(t8).size() == 4);
  std::mt19937_64 rng(4);
  for (auto [p, e] : std::vector<std::pair<unsigned, unsigned>>{{2, 6}, {2, 12}, {3, 5}}) {
    auto f = make_field(p, e);
    for (int t = 0; t < 6; ++t) {
      // A product of linear factors and noise.
      UniPoly a = random_poly(f, 6, rng);
      if (a.is_zero()) continue;
      for (int k = 0; k < 4; ++k) a = a * P(f, {rng() % f->order(), 1});
      std::vector<Index> brute;
      for (Index x = 0; x < f->order(); ++x) {
        UniPoly rest = a;
        while (rest.eval(x) == 0) {
          brute.push_back(x);
          rest = exact_div(rest, P(f, {f->neg(x), 1}));
        }
      }
      CHECK(roots(a, t) == brute);
    }
  }
  // Roots in an extension through an embedding.
  auto f16 = make_field(2, 4);
  auto emb = ff::embed(f2, f16);
  const auto r = roots(P(f2, {1, 1, 0, 0, 1}), emb);
  CHECK(r.size() == 4);
  for (Index x : r) CHECK(f16->multiplicative_order(x) == 15);
}

TEST_CASE("fibers partition the field") {
  std::mt19937_64 rng(5);
  for (auto [p, e] : std::vector<std::pair<unsigned, unsigned>>{{2, 4}, {2, 10}, {3, 4}}) {
    auto f = make_field(p, e);
    const UniPoly a = random_poly(f, 7, rng) + UniPoly::monomial(f, 1, 9);
    std::size_t total = 0;
    for (Index t = 0; t < f->order(); ++t) total += count_distinct_roots(a - UniPoly::constant(f, t));
    CHECK(total == f->order());
  }
}

TEST_CASE("squarefree decomposition and shape") {
  auto f3 = make_field(3, 1);
  const UniPoly x = UniPoly::x(f3);
  const UniPoly a = P(f3, {1, 1});
  const UniPoly b = P(f3, {1, 0, 1});  // irreducible over GF(3)
  const UniPoly g = pow(a, 3) * pow(b, 2) * x;
  auto parts = squarefree_decomposition(g);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].multiplicity == 1);
  CHECK(parts[0].poly == x);
  CHECK(parts[1].multiplicity == 2);
  CHECK(parts[1].poly == b);
  CHECK(parts[2].multiplicity == 3);
  CHECK(parts[2].poly == a);
  CHECK(factor_shape(g) == std::vector<unsigned>{1, 1, 2});
  CHECK_FALSE(is_squarefree(g));
  CHECK(is_squarefree(a * b));
}

TEST_CASE("bivariate polynomials") {
  auto f2 = make_field(2, 1);
  const BiPoly X = BiPoly::x(f2), Y = BiPoly::y(f2);
  CHECK((X + Y).square() == X * X + Y * Y);
  CHECK((X + Y).pow(2) == X * X + Y * Y);
  const UniPoly t = UniPoly::x(f2);
  CHECK(substitute(X * X + Y * Y, t, t).is_zero());

  auto f8 = make_field(2, 3);
  std::mt19937_64 rng(6);
  auto rnd = [&]() {
    BiPoly a(f8);
    for (int k = 0; k < 6; ++k) a.add_term(rng() % 5, rng() % 5, rng() % 8);
    return a;
  };
  for (int k = 0; k < 50; ++k) {
    const BiPoly a = rnd(), b = rnd();
    CHECK(a * b == b * a);
    const Index u = rng() % 8, v = rng() % 8;
    CHECK(a.eval(u, v) == a.at_x(u).eval(v));
    CHECK(a.eval(u, v) == a.at_y(v).eval(u));
    CHECK((a * b).eval(u, v) == f8->mul(a.eval(u, v), b.eval(u, v)));
    const BiPoly s = substitute(a, b, BiPoly::x(f8) + BiPoly::y(f8));
    CHECK(s.eval(u, v) == a.eval(b.eval(u, v), f8->add(u, v)));
  }

  // Rational substitution: den^k * A(num/den, Y) evaluated pointwise.
  const BiPoly X8 = BiPoly::x(f8), Y8 = BiPoly::y(f8);
  const BiPoly A = X8 * X8 * Y8 + X8 + BiPoly::constant(f8, 3);
  RationalValue xv{Y8 + BiPoly::constant(f8, 1), X8, 2};
  const BiPoly cleared = substitute(A, xv, RationalValue::polynomial(Y8));
  for (Index u = 1; u < 8; ++u)
    for (Index v = 0; v < 8; ++v) {
      const Index val = f8->div(f8->add(v, 1), u);
      CHECK(cleared.eval(u, v) == f8->mul(f8->mul(u, u), A.eval(val, v)));
    }
  RationalValue short_power{Y8, X8, 1};
  CHECK_THROWS_AS(substitute(A, short_power, RationalValue::polynomial(Y8)), DomainError);
}

TEST_CASE("rational functions") {
  auto f3 = make_field(3, 2);
  const RatFunc r(P(f3, {2, 0, 1}), P(f3, {2, 1}));  // (X^2 - 1)/(X - 1)
  CHECK(r.num() == P(f3, {1, 1}));
  CHECK(r.is_polynomial());
  CHECK_THROWS_AS(RatFunc(P(f3, {1}), UniPoly(f3)), ZeroDivisionError);
  std::mt19937_64 rng(8);
  auto rnd = [&]() {
    UniPoly d = random_poly(f3, 4, rng);
    if (d.is_zero()) d = UniPoly::constant(f3, 1);
    return RatFunc(random_poly(f3, 5, rng), d);
  };
  for (int k = 0; k < 100; ++k) {
    const RatFunc a = rnd(), b = rnd(), c = rnd();
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK(a - a == RatFunc(f3));
    if (!a.is_zero()) CHECK(a * a.inv() == RatFunc::constant(f3, 1));
    CHECK(a.pow(3) == a * a * a);
    const Index x = rng() % 9;
    auto av = a.eval(x), bv = b.eval(x);
    auto sv = (a + b).eval(x);
    if (av && bv && sv) CHECK(*sv == f3->add(*av, *bv));
  }
  auto f4 = make_field(2, 2);
  const RatFunc w = RatFunc::var(f4);
  const RatFunc s = (w + RatFunc::constant(f4, 1)).inv();
  CHECK(s.square() == s * s);
  CHECK(s.compose(w.inv()) == w / (w + RatFunc::constant(f4, 1)));
}

TEST_CASE("function fields") {
  auto f4 = make_field(2, 2);
  const RatFunc w = RatFunc::var(f4);
  // v^3 = v + w
  auto E = FunctionField::make(f4, {w, RatFunc::constant(f4, 1), RatFunc(f4)});
  const FFElem v = E->gen();
  CHECK(v.pow(3) == v + E->base(w));
  CHECK(v.square() == v * v);
  std::mt19937_64 rng(10);
  auto rnd = [&]() {
    std::vector<RatFunc> c;
    for (int i = 0; i < 3; ++i) {
      UniPoly d = random_poly(f4, 2, rng);
      if (d.is_zero()) d = UniPoly::constant(f4, 1);
      c.emplace_back(random_poly(f4, 2, rng), d);
    }
    return FFElem(E, c);
  };
  for (int k = 0; k < 20; ++k) {
    const FFElem a = rnd(), b = rnd(), c = rnd();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a.pow(4) == a.square().square());
  }
}
