#pragma once

// The exceptional polynomial families: power maps, Dickson polynomials, the
// characteristic-2 family of degree q(q-1)/2 in closed and product form, the
// two twisted families, and parameter recovery for the new family.

#include <optional>
#include <string>

#include "excpoly/poly.hpp"
#include "excpoly/ratfunc.hpp"

namespace excpoly::families {

using ff::FieldElem;
using ff::FieldPtr;
using ff::Index;
using poly::RatFunc;
using poly::UniPoly;

/// T(X) = X^(q/2) + X^(q/4) + ... + X over `field` (characteristic 2).
UniPoly trace_poly(std::uint64_t q, const FieldPtr& field);
/// T applied to a polynomial / rational function: sum of r^(2^i), i < e.
UniPoly apply_trace(std::uint64_t q, const UniPoly& r);
RatFunc apply_trace(std::uint64_t q, const RatFunc& r);
/// T applied to a field element.
Index apply_trace(std::uint64_t q, const ff::Field& field, Index x);

/// Closed form f_alpha(X) for q = 2^e > 2 and alpha not in F_2, expanded from
/// the rational expression; throws InternalError if it fails to be a polynomial.
UniPoly f_closed(std::uint64_t q, const FieldElem& alpha);
/// Product form in the parameter a (a not in F_2), computed in the compositum
/// of a's field with F_q and pulled back to a's field.
UniPoly f_product(std::uint64_t q, const FieldElem& a);
/// The unique beta with beta^2 = alpha + alpha^2 (characteristic 2).
FieldElem beta_for(const FieldElem& alpha);

/// D_d(X, alpha) from the binomial formula.
UniPoly dickson(unsigned d, const FieldElem& alpha);
/// D_d(X, alpha) from D_0 = 2, D_1 = X, D_i = X D_{i-1} - alpha D_{i-2}.
UniPoly dickson_recurrence(unsigned d, const FieldElem& alpha);
/// X (sum_{i<e} (alpha X^n)^(2^i - 1))^((q+1)/n); q = 2^e, e odd, n | q+1.
UniPoly family_iv(std::uint64_t q, unsigned n, const FieldElem& alpha);
/// The characteristic-3 twisted family; q = 3^e, e odd, n | (q+1)/4.
UniPoly family_v(std::uint64_t q, unsigned n, const FieldElem& alpha);

enum class FamilyKind { power, dickson, char2_new, char2_additive_twist, char3_twist };

std::string kind_name(FamilyKind kind);
/// Accepts the snake_case names and their dash-separated spellings.
FamilyKind parse_kind(const std::string& name);

struct FamilySpec {
  FamilyKind kind = FamilyKind::power;
  /// Field of definition (alpha's field when alpha is present).
  FieldPtr field;
  std::uint64_t q = 0;
  std::optional<FieldElem> alpha;
  unsigned d = 0;
  unsigned n = 0;

  /// Throws DomainError when the parameters fall outside the family.
  void validate() const;
  UniPoly build() const;
  /// Degree of the polynomial build() returns.
  std::uint64_t degree() const;
};

/// f = delta + eta * f_alpha(zeta X + gamma).
struct CanonicalForm {
  FieldElem alpha;
  FieldElem zeta;
  FieldElem gamma;
  FieldElem eta;
  FieldElem delta;

  UniPoly reassemble(std::uint64_t q) const;
};

/// Recovers (alpha, zeta, gamma, eta, delta) from the coefficients of f;
/// throws NotInFamilyError when the reassembled polynomial differs from f.
CanonicalForm canonicalize(const UniPoly& f, std::uint64_t q);

/// q = 2^e with e >= 1; returns e or throws DomainError.
unsigned log2_exact(std::uint64_t q);

}  // namespace excpoly::families
