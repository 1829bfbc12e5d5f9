#pragma once

// The Artin-Schreier curve v^q + v = (a+b) w + w^q T(b / (1 + w^(q-1))), the
// smooth plane model Y^(q+1) + Z^(q+1) = T(YZ) + c, point counts, zeta
// functions, Weil-bound arithmetic, and exact automorphism certificates.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "excpoly/bipoly.hpp"
#include "excpoly/ratfunc.hpp"

namespace excpoly::curves {

using ff::FieldElem;
using ff::FieldPtr;
using ff::Index;
using poly::BigInt;
using poly::BiPoly;
using poly::UniPoly;

struct ArtinSchreier {
  std::uint64_t q;
  FieldElem alpha;
  FieldElem beta;
};

struct Plane {
  std::uint64_t q;
  FieldElem c;
};

struct CurveModel {
  std::variant<ArtinSchreier, Plane> kind;
  /// ArtinSchreier: (v^q + v + (a+b) w) D(w) + w^q N(w) in (X, Y) = (v, w),
  /// where T(b / (1 + w^(q-1))) = N / D. Plane: F(Y, Z) in (X, Y) = (Y, Z).
  BiPoly equation;
  FieldPtr field;

  std::uint64_t q() const;
};

/// Throws DomainError when alpha or beta is zero.
CurveModel artin_schreier_model(std::uint64_t q, const FieldElem& alpha, const FieldElem& beta);
/// Throws DomainError when c lies in F_2.
CurveModel plane_model(std::uint64_t q, const FieldElem& c);
/// Degree-(q+1) homogenization of the plane equation, as a function of a
/// third coordinate W: the sum over monomials Y^i Z^j W^(q+1-i-j).
Index plane_eval_homogeneous(const ff::Field& L, std::uint64_t q, Index c, Index y, Index z,
                             Index w);

struct ProjPoint {
  Index y, z, w;  // in the field of the report
};

struct SmoothnessReport {
  bool smooth = true;
  FieldPtr field;  // GF(q^2) joined with c's field
  std::vector<ProjPoint> singular;
  std::size_t candidates = 0;
};

/// Singular points of the projective plane curve, for any c (including F_2).
SmoothnessReport smoothness_check(std::uint64_t q, const FieldElem& c);

inline constexpr std::uint64_t kBruteGuard = std::uint64_t{1} << 12;
inline constexpr std::uint64_t kGcdGuard = std::uint64_t{1} << 12;
inline constexpr std::uint64_t kFiberGuard = std::uint64_t{1} << 24;

/// Projective points of the plane model over the degree-m extension of c's
/// field, by enumerating all (y, z) pairs. |extension| <= 2^12.
std::uint64_t count_plane_brute(const CurveModel& model, unsigned m);
/// Same count via deg gcd(F(Y, z), Y^Q - Y) for each z. |extension| <= 2^12.
std::uint64_t count_plane_gcd(const CurveModel& model, unsigned m);
/// Same count by fibering over u = yz: for each u the admissible values of
/// y^(q+1) are the roots of s^2 + (T(u) + c) s + u^(q+1). |extension| <= 2^24.
std::uint64_t count_plane_fibered(const CurveModel& model, unsigned m, unsigned threads = 1);
/// Points at infinity: #{y : y^(q+1) = 1} in the degree-m extension.
std::uint64_t plane_points_at_infinity(const CurveModel& model, unsigned m);
/// Affine non-pole points (w^(q-1) != 1) of the Artin-Schreier model over the
/// degree-m extension, which must contain F_q. |extension| <= 2^24.
std::uint64_t count_artin_schreier_affine(const CurveModel& model, unsigned m);
/// Dispatches to the fibered plane counter or the Artin-Schreier counter.
std::uint64_t count_points(const CurveModel& model, unsigned m, unsigned threads = 1);

struct ZetaData {
  unsigned g = 0;
  std::uint64_t base = 0;  // q_s
  std::vector<std::uint64_t> counts;
  std::vector<BigInt> L;  // a_0 .. a_2g
  unsigned genus = 0;
  unsigned p_rank = 0;
  bool functional_equation = false;
  bool counts_reproduced = false;
  double max_radius_error = 0;
  bool radii_ok = false;
  BigInt L_at_1;
};

/// L-polynomial from counts N_1..N_g over GF(base); throws InternalError when
/// the counts admit no integral L-polynomial.
ZetaData zeta_from_counts(std::uint64_t base, unsigned p, const std::vector<std::uint64_t>& counts);
/// Counts N_1..N_g of the plane model with the fibered counter, then
/// zeta_from_counts.
ZetaData zeta(const CurveModel& model, unsigned g, unsigned threads = 1);

struct WeilCheck {
  bool violates = false;
  std::uint64_t bound_floor = 0;  // s + 1 + floor(2 g sqrt(s))
};

/// Compares N with s + 1 + 2 g sqrt(s) in integer arithmetic.
WeilCheck weil_check(std::uint64_t g, std::uint64_t s, std::uint64_t claimed);

struct WeilCandidate {
  std::uint64_t s;
  std::string reason;
  WeilCheck check;
};

struct WeilCase {
  unsigned e_prime;
  std::vector<WeilCandidate> candidates;
  bool violated = false;  // some candidate violates
};

struct WeilReport {
  std::uint64_t q;
  unsigned e;
  std::uint64_t genus;
  std::uint64_t places;  // |SL_2(q)| / 2
  std::vector<WeilCase> cases;
  bool all_cases_violated = false;
};

/// The place-count contradiction over F_2 for q = 8 or 32.
WeilReport weil_contradiction_report(std::uint64_t q);

enum class ProductMutation { none, drop_constant };
/// prod_{w^(q+1)=1} (w Y + 1 + Z/w) == Y^(q+1) + Z^(q+1) + T(YZ) + 1 over GF(q^2).
bool verify_product_identity(std::uint64_t q, ProductMutation mutation = ProductMutation::none);

enum class BActionMutation { none, w_scaled_by_gamma };
/// The diagonal generator and e unipotent generators of B preserve the
/// Artin-Schreier equation up to a constant.
bool verify_b_action(std::uint64_t q, const FieldElem& alpha, const FieldElem& beta,
                     BActionMutation mutation = BActionMutation::none);

struct QuotientReport {
  bool quadratic = false;    // t^2 z^q + t (T(z) + a) + z + a^2 + a + b^2 = 0
  bool involution = false;   // the involution preserves the quadratic
  bool involutive = false;   // applied twice gives t
  std::optional<bool> kummer;  // t * nu(t) = 1 / z^(q-1), when b^2 = a + a^2
  bool ok() const { return quadratic && involution && involutive && kummer.value_or(true); }
};

QuotientReport verify_quotient_relations(std::uint64_t q, const FieldElem& alpha,
                                         const FieldElem& beta);

struct CertificateStep {
  int id;
  std::string name;
  bool ok;
};

struct Sl2Certificate {
  std::uint64_t q;
  FieldElem alpha;
  FieldElem beta;
  std::vector<CertificateStep> steps;
  bool ok() const;
};

/// Runs the four certificate steps with beta = sqrt(alpha + alpha^2).
Sl2Certificate verify_sl2_certificate(std::uint64_t q, const FieldElem& alpha);
/// Same with an explicit beta. Throws DomainError when beta^2 != alpha + alpha^2
/// unless `control` is set, in which case the steps run and report failures.
Sl2Certificate verify_sl2_certificate(std::uint64_t q, const FieldElem& alpha,
                                      const FieldElem& beta, bool control = false);

}  // namespace excpoly::curves
