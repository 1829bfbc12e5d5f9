#pragma once

// Bijectivity of polynomial maps over finite fields and the arithmetic
// exceptionality criteria for the known families.

#include <optional>
#include <utility>
#include <vector>

#include "excpoly/families.hpp"

namespace excpoly::exceptional {

using families::FamilySpec;
using ff::FieldPtr;
using ff::Index;
using poly::UniPoly;

inline constexpr std::uint64_t kDefaultSizeGuard = std::uint64_t{1} << 26;

struct PermOptions {
  std::uint64_t size_guard = kDefaultSizeGuard;
  unsigned threads = 1;
};

struct PermResult {
  bool bijective = true;
  /// Lexicographically least (x1, x2) with x1 < x2 and f(x1) = f(x2).
  std::optional<std::pair<Index, Index>> witness;
};

/// Exhaustive bijectivity test of f (coefficients in emb.source()) on
/// emb.target(). Throws GuardError when the target exceeds the size guard.
PermResult is_permutation(const UniPoly& f, const ff::Embedding& emb, const PermOptions& opt = {});
/// Same, on f's own coefficient field.
PermResult is_permutation(const UniPoly& f, const PermOptions& opt = {});

/// Whether the family's exceptionality condition holds over `base`.
/// The spec's field must embed in `base`; throws MismatchError otherwise.
bool exceptionality_verdict(const FamilySpec& spec, const FieldPtr& base);

struct PermRow {
  unsigned j = 0;
  bool bijective = true;
  std::optional<std::pair<Index, Index>> witness;
};

struct PermReport {
  FamilySpec spec;
  FieldPtr base;
  std::vector<PermRow> rows;
};

/// is_permutation of spec.build() over GF(|base|^j) for each j in `degrees`.
PermReport tower_scan(const FamilySpec& spec, const FieldPtr& base,
                      const std::vector<unsigned>& degrees, const PermOptions& opt = {});

}  // namespace excpoly::exceptional
