#pragma once

// Sparse bivariate polynomials over a finite field.

#include <map>
#include <utility>

#include "excpoly/poly.hpp"

namespace excpoly::poly {

class BiPoly {
 public:
  /// Exponents (i, j) of the monomial X^i Y^j.
  using Key = std::pair<unsigned, unsigned>;

  BiPoly() = default;
  explicit BiPoly(FieldPtr field);

  static BiPoly constant(FieldPtr field, Index c);
  static BiPoly monomial(FieldPtr field, Index c, unsigned i, unsigned j);
  static BiPoly x(FieldPtr field) { return monomial(std::move(field), 1, 1, 0); }
  static BiPoly y(FieldPtr field) { return monomial(std::move(field), 1, 0, 1); }
  /// Embeds a univariate polynomial as a polynomial in X (resp. Y).
  static BiPoly in_x(const UniPoly& f);
  static BiPoly in_y(const UniPoly& f);

  const FieldPtr& field() const noexcept { return field_; }
  const std::map<Key, Index>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Index coeff(unsigned i, unsigned j) const;
  /// Total degree, -1 for zero.
  long total_degree() const;
  long degree_x() const;
  long degree_y() const;

  /// Adds c X^i Y^j in place.
  void add_term(unsigned i, unsigned j, Index c);

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o) { return *this = *this + o; }
  BiPoly& operator-=(const BiPoly& o) { return *this = *this - o; }
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
  BiPoly scale(Index c) const;
  BiPoly square() const;
  BiPoly pow(std::uint64_t n) const;
  /// Swaps the roles of X and Y.
  BiPoly swap_xy() const;

  Index eval(Index x, Index y) const;
  /// The univariate polynomial in Y obtained by fixing X = x.
  UniPoly at_x(Index x) const;
  /// The univariate polynomial in X obtained by fixing Y = y.
  UniPoly at_y(Index y) const;
  BiPoly map(const ff::Embedding& emb) const;

  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    return a.terms_ == b.terms_ && ff::same_field(a.field_, b.field_);
  }

 private:
  FieldPtr field_;
  std::map<Key, Index> terms_;
};

/// Polynomial substitution A(x_val, y_val).
BiPoly substitute(const BiPoly& a, const BiPoly& x_val, const BiPoly& y_val);
UniPoly substitute(const BiPoly& a, const UniPoly& x_val, const UniPoly& y_val);

/// A declared rational value num/den with the power of den to be cleared.
struct RationalValue {
  BiPoly num;
  BiPoly den;
  unsigned clear_power = 0;

  static RationalValue polynomial(const BiPoly& p);
};

/// den_x^px * den_y^py * A(num_x/den_x, num_y/den_y), where px, py are the
/// declared clearing powers. Throws DomainError when A's degree in a variable
/// exceeds its declared power.
BiPoly substitute(const BiPoly& a, const RationalValue& x_val, const RationalValue& y_val);

}  // namespace excpoly::poly
