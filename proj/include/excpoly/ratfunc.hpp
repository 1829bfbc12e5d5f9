#pragma once

// Rational functions K(w) and simple algebraic extensions K(w)[v]/(R(v)).

#include <memory>
#include <optional>
#include <vector>

#include "excpoly/poly.hpp"

namespace excpoly::poly {

/// num/den with gcd(num, den) = 1 and den monic.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(FieldPtr field);
  explicit RatFunc(UniPoly num);
  RatFunc(UniPoly num, UniPoly den);

  static RatFunc constant(FieldPtr field, Index c);
  /// The variable w.
  static RatFunc var(FieldPtr field);

  const FieldPtr& field() const noexcept { return num_.field(); }
  const UniPoly& num() const noexcept { return num_; }
  const UniPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.degree() == 0; }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc scale(Index c) const;
  RatFunc inv() const;
  RatFunc square() const;
  RatFunc pow(long n) const;
  /// f(g) for a rational function g.
  RatFunc compose(const RatFunc& g) const;

  /// Value at w = x, or nullopt at a pole.
  std::optional<Index> eval(Index x) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void normalize();
  UniPoly num_;
  UniPoly den_;
};

class FunctionField;
using FunctionFieldPtr = std::shared_ptr<const FunctionField>;

/// An element sum c_i v^i, i < n, of K(w)[v]/(v^n - sum r_i v^i).
class FFElem {
 public:
  FFElem() = default;
  FFElem(FunctionFieldPtr ff, std::vector<RatFunc> coeffs);

  const FunctionFieldPtr& parent() const noexcept { return ff_; }
  const std::vector<RatFunc>& coeffs() const noexcept { return c_; }
  bool is_zero() const;

  FFElem operator+(const FFElem& o) const;
  FFElem operator-(const FFElem& o) const;
  FFElem operator*(const FFElem& o) const;
  FFElem operator-() const;
  FFElem& operator+=(const FFElem& o) { return *this = *this + o; }
  FFElem& operator*=(const FFElem& o) { return *this = *this * o; }
  FFElem scale(const RatFunc& c) const;
  FFElem scale(Index c) const;
  FFElem square() const;
  FFElem pow(std::uint64_t n) const;

  friend bool operator==(const FFElem& a, const FFElem& b) { return a.c_ == b.c_; }

 private:
  FunctionFieldPtr ff_;
  std::vector<RatFunc> c_;
};

class FunctionField : public std::enable_shared_from_this<FunctionField> {
 public:
  /// v^n = sum relation[i] v^i with n = relation.size().
  static FunctionFieldPtr make(FieldPtr constants, std::vector<RatFunc> relation);

  const FieldPtr& constants() const noexcept { return k_; }
  unsigned degree() const noexcept { return static_cast<unsigned>(rel_.size()); }
  const std::vector<RatFunc>& relation() const noexcept { return rel_; }

  FFElem zero() const;
  FFElem one() const;
  /// The generator v.
  FFElem gen() const;
  /// The image of a base-field element.
  FFElem base(const RatFunc& r) const;
  FFElem constant(Index c) const;
  /// The base variable w.
  FFElem base_var() const;
  /// Reduces an arbitrary-length coefficient vector modulo the relation.
  FFElem reduce(std::vector<RatFunc> coeffs) const;

 private:
  FunctionField(FieldPtr k, std::vector<RatFunc> rel) : k_(std::move(k)), rel_(std::move(rel)) {}
  FieldPtr k_;
  std::vector<RatFunc> rel_;
};

}  // namespace excpoly::poly
