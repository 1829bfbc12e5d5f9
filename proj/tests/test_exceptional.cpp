#include <doctest.h>

#include <map>
#include <random>

#include "excpoly/exceptional.hpp"

using namespace excpoly;
using namespace excpoly::exceptional;
using families::FamilyKind;
using ff::FieldElem;
using ff::make_field;

namespace {

// Least collision pair by plain enumeration with a std::map.
std::optional<std::pair<Index, Index>> brute_witness(const UniPoly& f) {
  std::map<Index, Index> first;
  std::optional<std::pair<Index, Index>> best;
  for (Index x = 0; x < f.f().order(); ++x) {
    auto [it, fresh] = first.emplace(f.eval(x), x);
    if (!fresh) {
      std::pair<Index, Index> cand{it->second, x};
      if (!best || cand < *best) best = cand;
    }
  }
  return best;
}

FamilySpec new_family(std::uint64_t q, const FieldElem& a) {
  return {FamilyKind::char2_new, a.field(), q, a, 0, 0};
}

}  // namespace

TEST_CASE("is_permutation basics") {
  for (unsigned m = 1; m <= 8; ++m) {
    auto k = make_field(2, m);
    CHECK(is_permutation(UniPoly::monomial(k, 1, 2)).bijective);
  }
  auto f4 = make_field(2, 2);
  const UniPoly cube = UniPoly::monomial(f4, 1, 3);
  auto r = is_permutation(cube);
  CHECK_FALSE(r.bijective);
  REQUIRE(r.witness);
  CHECK(*r.witness == *brute_witness(cube));
  CHECK(cube.eval(r.witness->first) == cube.eval(r.witness->second));

  CHECK(is_permutation(families::f_closed(8, FieldElem(f4, 2))).bijective);
  CHECK(is_permutation(families::f_closed(8, FieldElem(f4, 3))).bijective);

  // Witnesses agree with brute force for random polynomials.
  std::mt19937_64 rng(21);
  for (int s = 0; s < 30; ++s) {
    auto k = make_field(s % 2 ? 3 : 2, 2 + s % 3);
    std::vector<Index> c(1 + rng() % 7);
    for (auto& x : c) x = rng() % k->order();
    const UniPoly f(k, c);
    auto res = is_permutation(f);
    auto bw = brute_witness(f);
    CHECK(res.bijective == !bw.has_value());
    if (bw) CHECK(*res.witness == *bw);
  }
}

TEST_CASE("threads do not change the result") {
  auto k = make_field(2, 12);
  std::mt19937_64 rng(5);
  for (int s = 0; s < 5; ++s) {
    std::vector<Index> c(6);
    for (auto& x : c) x = rng() % k->order();
    const UniPoly f(k, c);
    auto a = is_permutation(f, {kDefaultSizeGuard, 1});
    auto b = is_permutation(f, {kDefaultSizeGuard, 4});
    CHECK(a.bijective == b.bijective);
    CHECK(a.witness == b.witness);
  }
  CHECK(is_permutation(UniPoly::monomial(k, 1, 4), {kDefaultSizeGuard, 3}).bijective);
}

TEST_CASE("size guard") {
  auto f4 = make_field(2, 2);
  const UniPoly x = UniPoly::x(f4);
  auto big = make_field(2, 28);
  CHECK_THROWS_AS(is_permutation(x, ff::embed(f4, big)), GuardError);
  CHECK_THROWS_AS(is_permutation(UniPoly::x(make_field(2, 10)), {512, 1}), GuardError);
  const FamilySpec s = new_family(8, FieldElem(f4, 2));
  CHECK_THROWS_AS(tower_scan(s, f4, {14}), GuardError);
}

TEST_CASE("exceptionality verdicts") {
  auto f4 = make_field(2, 2), f8 = make_field(2, 3), f16 = make_field(2, 4);
  CHECK(exceptionality_verdict(new_family(8, FieldElem(f4, 2)), f4));
  CHECK_FALSE(exceptionality_verdict(new_family(8, FieldElem(f8, 2)), f8));
  CHECK_FALSE(exceptionality_verdict(new_family(8, FieldElem(f4, 2)), make_field(2, 6)));
  for (auto k : {f4, f8, f16, make_field(2, 5)})
    CHECK_FALSE(exceptionality_verdict(new_family(4, FieldElem(k, 2)), k));
  CHECK_THROWS_AS(exceptionality_verdict(new_family(8, FieldElem(f4, 2)), f8), MismatchError);

  // X^d: no d-th roots of unity besides 1.
  FamilySpec pw{FamilyKind::power, f4, 0, std::nullopt, 5, 0};
  CHECK(exceptionality_verdict(pw, f4));
  CHECK_FALSE(exceptionality_verdict(pw, f16));
  pw.d = 4;
  CHECK_THROWS_AS(exceptionality_verdict(pw, f4), DomainError);

  // Characteristic 3: alpha's class in k*/(k*)^(2n) must have even order.
  auto f3 = make_field(3, 1);
  FamilySpec v{FamilyKind::char3_twist, f3, 27, FieldElem(f3, 2), 0, 1};
  CHECK(exceptionality_verdict(v, f3));  // -1 is a non-square in GF(3)
  v.alpha = FieldElem(f3, 1);
  CHECK_FALSE(exceptionality_verdict(v, f3));
  v.alpha = FieldElem(f3, 2);
  CHECK_FALSE(exceptionality_verdict(v, make_field(3, 2)));  // -1 is a square in GF(9)
  CHECK_FALSE(exceptionality_verdict(v, make_field(3, 3)));  // GF(27) meets F_27
}

TEST_CASE("tower scan for the new family") {
  auto f4 = make_field(2, 2);
  for (Index a : {Index{2}, Index{3}}) {
    const FamilySpec s = new_family(8, FieldElem(f4, a));
    auto rep = tower_scan(s, f4, {1, 2, 3, 4, 5});
    REQUIRE(rep.rows.size() == 5);
    for (const auto& row : rep.rows) {
      const bool verdict = exceptionality_verdict(s, make_field(2, 2 * row.j));
      CHECK(verdict == (row.j != 3));
      if (verdict) CHECK(row.bijective);
    }
    // GF(64) contains F_8: not bijective, with a checked witness.
    const auto& r3 = rep.rows[2];
    CHECK_FALSE(r3.bijective);
    REQUIRE(r3.witness);
    auto f64 = make_field(2, 6);
    const UniPoly g = s.build().map(ff::embed(f4, f64));
    CHECK(r3.witness->first != r3.witness->second);
    CHECK(g.eval(r3.witness->first) == g.eval(r3.witness->second));
  }
}

TEST_CASE("Dickson and twisted verdicts against bijectivity") {
  // Dickson d = 5, alpha = 1 over GF(4^j).
  auto f4 = make_field(2, 2);
  const FamilySpec d5{FamilyKind::dickson, f4, 0, FieldElem(f4, 1), 5, 0};
  auto rep = tower_scan(d5, f4, {1, 2, 3});
  for (const auto& row : rep.rows)
    CHECK(row.bijective == exceptionality_verdict(d5, make_field(2, 2 * row.j)));

  for (unsigned m = 1; m <= 6; ++m) {
    auto k = make_field(2, m);
    for (unsigned d : {3u, 5u, 7u, 11u, 13u})
      for (Index a = 1; a < k->order(); a += 1 + k->order() / 5) {
        const FamilySpec s{FamilyKind::dickson, k, 0, FieldElem(k, a), d, 0};
        CHECK(is_permutation(s.build()).bijective == exceptionality_verdict(s, k));
      }
    for (unsigned n : {1u, 3u, 9u})
      for (Index a = 1; a < k->order(); a += 1 + k->order() / 4) {
        const FamilySpec s{FamilyKind::char2_additive_twist, k, 8, FieldElem(k, a), 0, n};
        if (exceptionality_verdict(s, k)) CHECK(is_permutation(s.build()).bijective);
      }
  }
}

TEST_CASE("bijectivity is invariant under linear equivalence") {
  std::mt19937_64 rng(77);
  auto f4 = make_field(2, 2);
  auto f16 = make_field(2, 4), f64 = make_field(2, 6);
  const UniPoly f = families::f_closed(8, FieldElem(f4, 2));
  for (auto K : {f4, f16, f64}) {
    const UniPoly g = ff::same_field(K, f4) ? f : f.map(ff::embed(f4, K));
    const bool base = is_permutation(g).bijective;
    for (int s = 0; s < 4; ++s) {
      const UniPoly l1(K, {rng() % K->order(), 1 + rng() % (K->order() - 1)});
      const UniPoly l2(K, {rng() % K->order(), 1 + rng() % (K->order() - 1)});
      CHECK(is_permutation(l1.compose(g.compose(l2))).bijective == base);
    }
  }
}

TEST_CASE("characteristic-3 twisted family is bijective when the verdict holds") {
  int exercised = 0;
  for (unsigned m : {1u, 2u, 4u, 5u}) {
    auto k = make_field(3, m);
    for (unsigned n : {1u, 7u})
      for (Index a = 1; a < k->order(); a += 1 + k->order() / 6) {
        const FamilySpec s{FamilyKind::char3_twist, k, 27, FieldElem(k, a), 0, n};
        if (!exceptionality_verdict(s, k)) continue;
        ++exercised;
        CHECK(is_permutation(s.build()).bijective);
      }
  }
  CHECK(exercised > 0);
}
