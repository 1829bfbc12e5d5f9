#pragma once

// Exact arithmetic in GF(p^e) for p in {2, 3} and 1 <= e <= 32.
//
// Elements are addressed by their codec index: the coefficient vector
// (c_0, ..., c_{e-1}) of the residue class modulo the field's modulus maps to
// sum c_i * p^i. All arithmetic is performed directly on indices; the
// coefficient view is available through Field::coeffs().

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "excpoly/error.hpp"

namespace excpoly::ff {

using Index = std::uint64_t;
using Wide = unsigned __int128;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  /// Fields up to this order get log/exp tables.
  static constexpr Index kTableLimit = Index{1} << 20;

  /// Validates the modulus (monic, irreducible, primitive) and builds tables.
  Field(unsigned p, std::vector<int> modulus, bool conway);

  /// True iff `modulus` is monic of degree 1..32 over F_p, irreducible, and
  /// has a root generating the multiplicative group.
  static bool is_primitive_modulus(unsigned p, const std::vector<int>& modulus);

  unsigned characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return e_; }
  Index order() const noexcept { return order_; }
  const std::vector<int>& modulus() const noexcept { return modulus_; }
  bool is_conway() const noexcept { return conway_; }
  std::string name() const;

  bool contains(Index a) const noexcept { return a < order_; }
  Index zero() const noexcept { return 0; }
  Index one() const noexcept { return 1; }
  /// The class of X; a primitive element because the modulus is primitive.
  Index generator() const noexcept { return generator_; }

  Index add(Index a, Index b) const {
    if (p_ == 2) return a ^ b;
    return add3(a, b);
  }
  Index sub(Index a, Index b) const;
  Index neg(Index a) const;
  Index mul(Index a, Index b) const {
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) return exp_[log_[a] + log_[b]];
    return slow_mul(a, b);
  }
  Index sqr(Index a) const { return mul(a, a); }
  Index inv(Index a) const;
  Index div(Index a, Index b) const { return mul(a, inv(b)); }
  Index pow(Index a, Wide n) const;
  /// a^(p^k).
  Index frobenius(Index a, unsigned k = 1) const;
  /// Square root in characteristic 2 (the unique preimage under squaring).
  Index sqrt2(Index a) const;

  /// Image of an integer in the prime subfield.
  Index from_int(long long n) const;
  std::vector<int> coeffs(Index a) const;
  Index from_coeffs(std::span<const int> c) const;

  /// True iff a lies in the subfield GF(p^d), d | e.
  bool in_subfield(Index a, unsigned d) const;
  std::uint64_t multiplicative_order(Index a) const;
  /// Distinct primes dividing p^e - 1.
  const std::vector<std::uint64_t>& group_order_primes() const noexcept {
    return order_primes_;
  }
  /// Absolute trace Tr_{GF(p^e)/GF(p)} as an integer residue.
  int absolute_trace(Index a) const;

  bool has_tables() const noexcept { return !log_.empty(); }
  /// Discrete log with respect to generator(); requires tables and a != 0.
  std::uint64_t log(Index a) const;
  Index exp(std::uint64_t k) const;

  bool same_as(const Field& other) const noexcept {
    return p_ == other.p_ && modulus_ == other.modulus_;
  }

 private:
  struct Probe {};
  Field(Probe, unsigned p, std::vector<int> modulus);
  bool irreducible_and_primitive() const;

  Index slow_mul(Index a, Index b) const;
  Index add3(Index a, Index b) const;
  Index slow_add3(Index a, Index b) const;
  void build_tables();

  unsigned p_;
  unsigned e_;
  Index order_;
  std::vector<int> modulus_;
  bool conway_;
  Index generator_ = 0;
  std::uint64_t mod_low_bits_ = 0;  // p == 2: modulus without the leading term
  std::vector<std::uint64_t> fold_;  // p == 2: (h * X^(e + 8k)) mod m at [256k + h]
  std::uint64_t trace_mask_ = 0;     // p == 2: basis elements of trace 1
  std::vector<std::uint64_t> order_primes_;
  std::vector<std::uint32_t> exp_;   // size 2*(order-1)
  std::vector<std::uint32_t> log_;   // size order
  std::vector<std::int64_t> zech_;   // p == 3: log(1 + g^k), -1 when zero
  std::vector<Index> pow3_;          // p == 3: 3^i
  std::vector<std::int8_t> trace_of_basis_;
};

/// The canonical field GF(p^e): Conway modulus when tabulated, otherwise the
/// least-index monic primitive polynomial. Results are cached and shared.
FieldPtr make_field(unsigned p, unsigned e);
/// A field with an explicit modulus (checked irreducible and primitive).
FieldPtr make_field(unsigned p, std::vector<int> modulus);
/// Conway polynomial for (p, e) if tabulated.
std::optional<std::vector<int>> conway_polynomial(unsigned p, unsigned e);

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept;
void require_same(const FieldPtr& a, const FieldPtr& b);

/// An element together with its field.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(FieldPtr field, Index index);

  static FieldElem zero(FieldPtr f) { return {std::move(f), 0}; }
  static FieldElem one(FieldPtr f) { return {std::move(f), 1}; }
  static FieldElem from_int(const FieldPtr& f, long long n) {
    return {f, f->from_int(n)};
  }

  const FieldPtr& field() const noexcept { return field_; }
  Index index() const noexcept { return index_; }
  std::vector<int> coeffs() const { return field_->coeffs(index_); }
  bool is_zero() const noexcept { return index_ == 0; }
  bool is_one() const noexcept { return index_ == 1; }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const { return {field_, field_->neg(index_)}; }
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
  FieldElem inv() const { return {field_, field_->inv(index_)}; }
  FieldElem pow(Wide n) const { return {field_, field_->pow(index_, n)}; }
  FieldElem frobenius(unsigned k = 1) const {
    return {field_, field_->frobenius(index_, k)};
  }

  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.index_ == b.index_ && same_field(a.field_, b.field_);
  }

 private:
  FieldPtr field_;
  Index index_ = 0;
};

/// A field homomorphism GF(p^a) -> GF(p^b), a | b, fixed by the image of the
/// source generator.
class Embedding {
 public:
  Embedding(FieldPtr source, FieldPtr target, Index generator_image);

  const FieldPtr& source() const noexcept { return source_; }
  const FieldPtr& target() const noexcept { return target_; }
  Index generator_image() const noexcept { return gen_image_; }

  Index apply(Index a) const;
  FieldElem operator()(const FieldElem& a) const;
  /// Inverse image, if x lies in the image.
  std::optional<Index> preimage(Index x) const;

 private:
  FieldPtr source_;
  FieldPtr target_;
  Index gen_image_;
  std::vector<Index> basis_images_;  // image of X^i, i < a
  // Row operations E with E * M = [I; 0], M the b x a matrix of basis images.
  std::vector<std::vector<int>> reducer_;
};

/// Embedding whose generator image is the least-index root of the source
/// modulus in the target.
Embedding embed(const FieldPtr& sub, const FieldPtr& sup);

/// Tr_{GF(Q)/GF(q)}(x) = x + x^q + ... + x^(q^(m-1)) where Q = |field|.
Index rel_trace(const Field& field, std::uint64_t sub_order, Index x);
FieldElem rel_trace(std::uint64_t sub_order, const FieldElem& x);

/// Integer p^k, throwing on overflow of 64 bits.
std::uint64_t ipow(std::uint64_t p, unsigned k);
/// log_p(q) if q is a positive power of p, otherwise nullopt.
std::optional<unsigned> exact_log(std::uint64_t p, std::uint64_t q);
/// Distinct prime factors by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace excpoly::ff
