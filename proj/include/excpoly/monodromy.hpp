#pragma once

// The PGL_2(q) semilinear action on Frobenius pairs of GF(q^2) \ GF(q), exact
// cycle-type distributions of its Frobenius cosets, and empirical fiber shapes
// of f(X) - t for comparison.

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <variant>
#include <vector>

#include "excpoly/poly.hpp"

namespace excpoly::monodromy {

using ff::FieldPtr;
using ff::Index;
using poly::UniPoly;
using Rational = boost::multiprecision::cpp_rational;
using Partition = std::vector<unsigned>;  // ascending

/// A linear fractional map x -> (a x + b) / (c x + d) over GF(q), normalized
/// so that c = 1, or c = 0 and d = 1. Entries are indices in GF(q^2).
struct Mobius {
  Index a, b, c, d;
};

class PermAction {
 public:
  /// q in {4, 8, 16, 32}.
  explicit PermAction(std::uint64_t q);

  std::uint64_t q() const noexcept { return q_; }
  unsigned e() const noexcept { return e_; }
  /// GF(q^2), where all coordinates live.
  const FieldPtr& field() const noexcept { return big_; }
  /// Number of pairs {x, x^q}: q(q-1)/2.
  std::size_t domain_size() const noexcept { return reps_.size(); }
  /// Least-index element of each pair.
  const std::vector<Index>& representatives() const noexcept { return reps_; }
  /// All q^3 - q elements of PGL_2(q).
  const std::vector<Mobius>& linear_group() const noexcept { return group_; }
  /// The elements x -> x + 1, x -> g x (g generating GF(q)*), x -> 1/x.
  const std::vector<Mobius>& generators() const noexcept { return gens_; }

  /// Pair id of the point x in GF(q^2) \ GF(q).
  std::size_t pair_of(Index x) const { return pair_id_[x]; }
  /// Image permutation of x -> m(x^(2^j)) on pair ids.
  std::vector<std::size_t> permutation(const Mobius& m, unsigned j) const;

  /// Orbit size of pair 0 under the generators.
  std::size_t orbit_size() const;
  /// Number of linear elements fixing pair 0.
  std::size_t stabilizer_order() const;

 private:
  Index apply(const Mobius& m, Index x) const;

  std::uint64_t q_;
  unsigned e_;
  FieldPtr big_;
  std::vector<Index> reps_;
  std::vector<std::size_t> pair_id_;
  std::vector<Mobius> group_;
  std::vector<Mobius> gens_;
};

/// Exact distribution over partitions. `degree` is the common sum of the
/// parts, or 0 when entries disagree (possible for ramified fibers).
struct CycleDist {
  std::size_t degree = 0;
  std::map<Partition, Rational> entries;

  Rational total() const;
  /// Builds from integer counts.
  static CycleDist from_counts(const std::map<Partition, std::uint64_t>& counts);
};

/// Cycle types of the coset PGL_2(q) * phi^j on pairs, phi: x -> x^2 applied
/// before the linear map. 0 <= j < e.
CycleDist coset_cycle_types(std::uint64_t q, unsigned j, unsigned threads = 1);
CycleDist coset_cycle_types(const PermAction& act, unsigned j, unsigned threads = 1);

struct Exhaustive {};
struct Sampled {
  std::uint64_t n;
  std::uint64_t seed;
};
using SampleMode = std::variant<Exhaustive, Sampled>;

inline constexpr std::uint64_t kExhaustiveGuard = std::uint64_t{1} << 20;

struct FiberStats {
  /// Radical shapes of every examined fiber.
  CycleDist all;
  /// Shapes of the squarefree fibers only.
  CycleDist unramified;
  /// Examined t with f - t not squarefree, ascending.
  std::vector<Index> ramified;
  std::uint64_t fibers = 0;
};

/// Factorization shapes of f(X) - t for t in the target of `emb`, with f
/// defined over its source. Exhaustive mode needs |base| <= 2^20; sampled mode
/// draws n distinct t and needs n <= |base|.
FiberStats chebotarev_sample(const UniPoly& f, const ff::Embedding& emb, const SampleMode& mode,
                             unsigned threads = 1);

/// Total variation distance 1/2 sum |a - b|; throws DomainError on a degree
/// mismatch.
Rational dist_compare(const CycleDist& a, const CycleDist& b);

/// Cycle type of a permutation, ascending.
Partition cycle_type(const std::vector<std::size_t>& perm);

}  // namespace excpoly::monodromy
