#pragma once

// Dense univariate polynomials over a finite field and their factorization.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <utility>
#include <vector>

#include "excpoly/ff.hpp"

namespace excpoly::poly {

using ff::Field;
using ff::FieldElem;
using ff::FieldPtr;
using ff::Index;
using BigInt = boost::multiprecision::cpp_int;

class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(FieldPtr field);
  UniPoly(FieldPtr field, std::vector<Index> coeffs);

  static UniPoly constant(FieldPtr field, Index c);
  /// c * X^n
  static UniPoly monomial(FieldPtr field, Index c, std::size_t n);
  static UniPoly x(FieldPtr field) { return monomial(std::move(field), 1, 1); }

  const FieldPtr& field() const noexcept { return field_; }
  const Field& f() const noexcept { return *field_; }
  const std::vector<Index>& coeffs() const noexcept { return c_; }
  /// Degree, or -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  Index coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  Index lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const noexcept { return lead() == 1; }

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  UniPoly scale(Index c) const;
  /// X^n * f
  UniPoly shift(std::size_t n) const;
  UniPoly monic() const;
  UniPoly derivative() const;
  UniPoly square() const;

  Index eval(Index x) const;
  FieldElem eval(const FieldElem& x) const;
  /// Evaluate at a point of an extension field.
  FieldElem eval(const ff::Embedding& emb, const FieldElem& x) const;
  /// f(g(X)).
  UniPoly compose(const UniPoly& g) const;
  /// Push coefficients through an embedding.
  UniPoly map(const ff::Embedding& emb) const;
  /// Pull coefficients back through an embedding; throws if some coefficient
  /// is not in the image.
  UniPoly pullback(const ff::Embedding& emb) const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.c_ == b.c_ && ff::same_field(a.field_, b.field_);
  }

 private:
  void trim();
  FieldPtr field_;
  std::vector<Index> c_;
};

std::pair<UniPoly, UniPoly> divmod(const UniPoly& f, const UniPoly& g);
UniPoly rem(const UniPoly& f, const UniPoly& g);
/// Quotient asserting a zero remainder.
UniPoly exact_div(const UniPoly& f, const UniPoly& g);
/// Monic gcd (zero when both inputs are zero).
UniPoly gcd(const UniPoly& f, const UniPoly& g);
UniPoly pow(const UniPoly& f, std::uint64_t n);
UniPoly mulmod(const UniPoly& a, const UniPoly& b, const UniPoly& m);
UniPoly pow_mod(const UniPoly& f, const BigInt& n, const UniPoly& m);
/// X^(p^k) mod m by repeated p-th powering.
UniPoly frobenius_power(const UniPoly& m, unsigned k);
/// Coefficientwise p-th root of a polynomial in X^p.
UniPoly pth_root(const UniPoly& f);

struct Factor {
  UniPoly poly;
  unsigned multiplicity;
};

struct Factorization {
  Index unit = 0;
  std::vector<Factor> factors;  // monic, irreducible, sorted by (degree, coeffs)
  UniPoly reassemble(const FieldPtr& field) const;
};

/// Squarefree decomposition: monic pairwise coprime squarefree parts with
/// multiplicities (unit dropped).
std::vector<Factor> squarefree_decomposition(const UniPoly& f);
/// Distinct-degree factorization of a monic squarefree polynomial: for each d,
/// the product of all irreducible factors of degree d.
std::vector<std::pair<UniPoly, unsigned>> distinct_degree(const UniPoly& f);
/// Splits a monic squarefree product of degree-d irreducibles.
std::vector<UniPoly> equal_degree(const UniPoly& f, unsigned d, std::uint64_t seed);
Factorization factor(const UniPoly& f, std::uint64_t seed);
bool is_irreducible(const UniPoly& f);
bool is_squarefree(const UniPoly& f);
/// Sorted degrees of the distinct irreducible factors (the radical's shape).
std::vector<unsigned> factor_shape(const UniPoly& f);

/// Roots (with multiplicity, ascending index) of f in the target of emb.
std::vector<Index> roots(const UniPoly& f, const ff::Embedding& emb, std::uint64_t seed = 0);
/// Roots in the coefficient field itself.
std::vector<Index> roots(const UniPoly& f, std::uint64_t seed = 0);
/// Number of distinct roots in the coefficient field: deg gcd(f, X^Q - X).
std::size_t count_distinct_roots(const UniPoly& f);

}  // namespace excpoly::poly
