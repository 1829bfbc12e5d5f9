#pragma once

// Batch front end: subcommands, the named checks they run, reports, and the
// content-addressed result cache.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "excpoly/io.hpp"

namespace excpoly::cli {

using json = nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";

enum class Status { pass, fail, recorded };
std::string status_name(Status s);

struct Check {
  std::string name;
  Status status = Status::recorded;
  json data;
  double wall_ms = 0;
};

/// Runs `body`, recording its wall-clock time. The body returns pass/fail via
/// its status and fills `data`.
Check timed(std::string name, const std::function<Status(json&)>& body);

struct Report {
  json config;
  std::vector<Check> checks;

  bool ok() const;
  json to_json() const;
};

// Individual checks. Each is self-contained and deterministic given its
// arguments.
namespace checks {

/// f_closed(q, a) == f_product(q, a + 1) for every a in k \ F_2.
Check form_equality(std::uint64_t q, const ff::FieldPtr& k);
/// Monic, degree q(q-1)/2, (T + a) | f, quotient in k[X^2], X^2 | f iff a in F_q.
Check structure_facts(std::uint64_t q, const ff::FieldPtr& k);
/// The product identity and its dropped-constant control.
Check product_identity(std::uint64_t q);
/// smooth iff c not in F_2, for every c in k.
Check smoothness_grid(std::uint64_t q, const ff::FieldPtr& k);
/// Genus q(q-1)/2, functional equation, count reproduction, radii, p-rank = genus, L(1) > 0.
Check zeta(std::uint64_t q, const ff::FieldElem& c, unsigned threads);
/// All four certificate steps pass.
Check sl2_certificate(std::uint64_t q, const ff::FieldElem& alpha);
/// With beta replaced by beta + 1 step 2 fails.
Check sl2_control(std::uint64_t q, const ff::FieldElem& alpha);
/// verify_b_action (and its control) on n seeded (alpha, beta) in k*.
Check b_action_grid(std::uint64_t q, const ff::FieldPtr& k, unsigned n, std::uint64_t seed);
/// verify_quotient_relations on n seeded (alpha, beta), half with beta^2 = alpha + alpha^2.
Check quotient_grid(std::uint64_t q, const ff::FieldPtr& k, unsigned n, std::uint64_t seed);
/// f_closed(q, alpha) over GF(|k|^j): bijective wherever the exceptionality
/// verdict holds; other rows are recorded. `expect_non_bijective` rows fail if
/// bijective.
Check permutation_grid(std::uint64_t q, const ff::FieldElem& alpha, const std::vector<unsigned>& degrees,
                       const std::vector<unsigned>& expect_non_bijective, unsigned threads);
/// Dickson (prime d) verdict <=> bijective; family (iv) verdict => bijective, over GF(2^m).
Check classical_verdicts(unsigned max_m);
/// D_d(y + a/y, a) = y^d + (a/y)^d for d <= max_d, `samples` seeded points each.
Check dickson_identity(unsigned max_d, unsigned samples, std::uint64_t seed);
/// Round trip of n seeded linear compositions of f_closed(q, .) over k.
Check canonicalization(std::uint64_t q, const ff::FieldPtr& k, unsigned n, std::uint64_t seed);
/// Fiber shapes of f_closed(q, alpha) - t over base = GF(2^n): inclusion in
/// the Frobenius coset (n mod e), one finite branch point (exhaustive only),
/// and total variation distance, which fails above `tv_max` when given.
Check monodromy(std::uint64_t q, const ff::FieldElem& alpha, const ff::FieldPtr& base,
                const monodromy::SampleMode& mode, std::optional<double> tv_max, unsigned threads);
/// The place-count contradiction: every case violated.
Check weil(std::uint64_t q);

}  // namespace checks

struct RunConfig {
  std::string subcommand;
  std::uint64_t q = 0;
  std::string family;
  std::string field;  // descriptor "p=2,e=3"
  std::string base;
  std::optional<ff::Index> alpha_index;
  std::optional<ff::Index> beta_index;
  std::optional<ff::Index> c_index;
  unsigned d = 0;
  unsigned n = 0;
  std::vector<unsigned> degrees;
  std::uint64_t samples = 0;  // 0: exhaustive
  std::optional<std::uint64_t> seed;
  unsigned grid = 10;
  bool no_zeta = false;
  unsigned threads = 1;
  std::string out;
  std::string csv;
  std::string cache_dir;
  bool no_cache = false;

  /// Canonical echo: every field except output paths and cache settings.
  json to_json() const;
};

/// Parses "p=2,e=3" or "p=2,e=3,modulus=1:1:0:1".
ff::FieldPtr parse_field(const std::string& descriptor);

/// Executes the configured subcommand. Throws GuardError and DomainError.
Report execute(const RunConfig& cfg);

/// Cache entries: <dir>/<sha256(key)>.json holding the report text and its
/// checksum.
class Cache {
 public:
  explicit Cache(std::string dir) : dir_(std::move(dir)) {}
  static std::string key(const json& config);
  /// The stored report, or nullopt on a miss or checksum mismatch (warned).
  std::optional<std::string> load(const std::string& key) const;
  void store(const std::string& key, const std::string& report) const;

 private:
  std::string dir_;
};

std::string sha256_hex(const std::string& data);

/// Exit codes: 0 all checks pass, 1 some check fails, 2 usage or invalid
/// arguments, 3 guard violation.
int run(int argc, char** argv);

}  // namespace excpoly::cli
