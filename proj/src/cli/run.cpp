#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "excpoly/cli.hpp"

namespace excpoly::cli {

using ff::FieldElem;
using ff::FieldPtr;
using ff::Index;

namespace {

template <class T>
json opt_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

FieldElem element(const FieldPtr& f, const std::optional<Index>& idx, const std::string& flag) {
  if (!idx) throw DomainError("missing --" + flag);
  return {f, *idx};
}

FieldPtr require_field(const std::string& descriptor, const std::string& flag) {
  if (descriptor.empty()) throw DomainError("missing --" + flag + " (fields are never implicit)");
  return parse_field(descriptor);
}

std::uint64_t require_seed(const RunConfig& cfg) {
  if (!cfg.seed) throw DomainError(cfg.subcommand + " is randomized and needs --seed");
  return *cfg.seed;
}

families::FamilySpec make_spec(const RunConfig& cfg) {
  families::FamilySpec s;
  s.kind = families::parse_kind(cfg.family.empty() ? "char2_new" : cfg.family);
  s.field = require_field(cfg.field, "field");
  s.q = cfg.q;
  if (cfg.alpha_index) s.alpha = FieldElem(s.field, *cfg.alpha_index);
  s.d = cfg.d;
  s.n = cfg.n;
  s.validate();
  return s;
}

bool is_small_power_of_two(std::uint64_t q) { return q == 4 || q == 8 || q == 16 || q == 32; }

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::trunc);
  out << text;
  if (!out) throw Error("cannot write " + path);
}

std::string default_cache_dir() {
  if (const char* env = std::getenv("EXCPOLY_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::string(xdg) + "/excpoly";
  if (const char* home = std::getenv("HOME"); home && *home) return std::string(home) + "/.cache/excpoly";
  return ".excpoly-cache";
}

Report suite(const RunConfig& cfg) {
  Report r;
  const std::uint64_t q = cfg.q;
  const std::uint64_t seed = require_seed(cfg);
  const unsigned th = cfg.threads;
  const FieldPtr g4 = ff::make_field(2, 2), g8 = ff::make_field(2, 3), g16 = ff::make_field(2, 4),
                 g64 = ff::make_field(2, 6);
  families::log2_exact(q);
  auto& c = r.checks;
  c.push_back(checks::form_equality(q, g16));
  c.push_back(checks::structure_facts(q, g16));
  if (q == 8) {
    c.push_back(checks::form_equality(q, g64));
    c.push_back(checks::structure_facts(q, g64));
  }
  if (is_small_power_of_two(q)) c.push_back(checks::product_identity(q));
  c.push_back(checks::smoothness_grid(q, g16));
  if (q == 4 && !cfg.no_zeta) c.push_back(checks::zeta(q, FieldElem(g16, 7), th));
  if (q == 4) {
    c.push_back(checks::sl2_certificate(q, FieldElem(g16, 2)));
    c.push_back(checks::sl2_control(q, FieldElem(g16, 2)));
  } else if (q == 8) {
    c.push_back(checks::sl2_certificate(q, FieldElem(g4, 2)));
    c.push_back(checks::sl2_control(q, FieldElem(g8, 3)));
  }
  c.push_back(checks::b_action_grid(q, g64, cfg.grid, seed));
  c.push_back(checks::quotient_grid(q, g64, cfg.grid, seed));
  if (q == 8) c.push_back(checks::permutation_grid(q, FieldElem(g4, 2), {1, 2, 3, 4, 5}, {3}, th));
  else c.push_back(checks::permutation_grid(q, FieldElem(g16, 2), {1, 2}, {}, th));
  c.push_back(checks::classical_verdicts(6));
  c.push_back(checks::dickson_identity(11, 200, seed));
  c.push_back(checks::canonicalization(q, g4, 100, seed));
  c.push_back(checks::canonicalization(q, g16, 100, seed));
  if (is_small_power_of_two(q) && q <= 16)
    for (unsigned n : {4u, 8u})
      c.push_back(checks::monodromy(q, FieldElem(g4, 2), ff::make_field(2, n), monodromy::Exhaustive{},
                                    std::nullopt, th));
  if (q == 8 || q == 32) c.push_back(checks::weil(q));
  return r;
}

}  // namespace

json RunConfig::to_json() const {
  return {{"subcommand", subcommand},
          {"q", q},
          {"family", family},
          {"field", field},
          {"base", base},
          {"alpha_index", opt_json(alpha_index)},
          {"beta_index", opt_json(beta_index)},
          {"c_index", opt_json(c_index)},
          {"d", d},
          {"n", n},
          {"degrees", degrees},
          {"samples", samples},
          {"seed", opt_json(seed)},
          {"grid", grid},
          {"no_zeta", no_zeta},
          {"threads", threads}};
}

FieldPtr parse_field(const std::string& descriptor) {
  json j = json::object();
  std::stringstream ss(descriptor);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw DomainError("bad field descriptor: " + descriptor);
    const std::string k = part.substr(0, eq), v = part.substr(eq + 1);
    try {
      if (k == "p" || k == "e") {
        j[k] = std::stoul(v);
      } else if (k == "modulus") {
        std::vector<int> m;
        std::stringstream ms(v);
        std::string c;
        while (std::getline(ms, c, ':')) m.push_back(std::stoi(c));
        j["modulus"] = m;
      } else {
        throw DomainError("unknown field descriptor key: " + k);
      }
    } catch (const std::logic_error&) {
      throw DomainError("bad field descriptor: " + descriptor);
    }
  }
  return io::field_from_json(j);
}

Report execute(const RunConfig& cfg) {
  Report r;
  const std::string& sub = cfg.subcommand;
  const unsigned th = cfg.threads;
  if (sub == "gen") {
    const auto spec = make_spec(cfg);
    r.checks.push_back(timed("gen", [&](json& d) {
      const auto f = spec.build();
      d = {{"spec", io::to_json(spec)}, {"polynomial", io::to_json(f)}, {"degree", f.degree()}};
      return f.degree() == static_cast<long>(spec.degree()) ? Status::pass : Status::fail;
    }));
  } else if (sub == "check-perm") {
    const auto spec = make_spec(cfg);
    const FieldPtr base = cfg.base.empty() ? spec.field : parse_field(cfg.base);
    if (cfg.degrees.empty()) throw DomainError("check-perm needs --degrees");
    r.checks.push_back(timed("check_perm", [&](json& d) {
      exceptional::PermOptions opt;
      opt.threads = th;
      const auto rep = exceptional::tower_scan(spec, base, cfg.degrees, opt);
      Status overall = Status::recorded;
      json rows = json::array();
      for (const auto& row : rep.rows) {
        json v = nullptr;
        Status s = Status::recorded;
        try {
          const auto ext = ff::make_field(base->characteristic(), base->degree() * row.j);
          const bool exc = exceptional::exceptionality_verdict(spec, ext);
          v = exc;
          if (exc) s = row.bijective ? Status::pass : Status::fail;
        } catch (const DomainError&) {
          // No finite criterion for this parameter choice: recorded only.
        }
        if (s == Status::fail || (s == Status::pass && overall == Status::recorded)) overall = s;
        rows.push_back({{"j", row.j}, {"bijective", row.bijective}, {"verdict", v}, {"status", status_name(s)}});
      }
      d = {{"report", io::to_json(rep)}, {"rows", rows}};
      if (!cfg.csv.empty()) write_text(cfg.csv, io::to_csv(rep));
      return overall;
    }));
  } else if (sub == "check-identities") {
    const FieldPtr k = require_field(cfg.field, "field");
    const std::uint64_t seed = require_seed(cfg);
    r.checks.push_back(checks::form_equality(cfg.q, k));
    r.checks.push_back(checks::structure_facts(cfg.q, k));
    if (is_small_power_of_two(cfg.q)) r.checks.push_back(checks::product_identity(cfg.q));
    r.checks.push_back(checks::dickson_identity(11, 200, seed));
    r.checks.push_back(checks::canonicalization(cfg.q, k, 100, seed));
  } else if (sub == "zeta") {
    const unsigned e = families::log2_exact(cfg.q);
    const FieldPtr k = cfg.field.empty() ? ff::make_field(2, 2 * e) : parse_field(cfg.field);
    const FieldElem c = element(k, cfg.c_index, "c-index");
    r.checks.push_back(timed("smoothness", [&](json& d) {
      const auto rep = curves::smoothness_check(cfg.q, c);
      d = io::to_json(rep);
      return rep.smooth ? Status::pass : Status::fail;
    }));
    r.checks.push_back(checks::zeta(cfg.q, c, th));
  } else if (sub == "chebotarev") {
    const FieldPtr k = require_field(cfg.field, "field");
    const FieldElem a = element(k, cfg.alpha_index, "alpha-index");
    const FieldPtr base = require_field(cfg.base, "base");
    monodromy::SampleMode mode = monodromy::Exhaustive{};
    if (cfg.samples > 0) mode = monodromy::Sampled{cfg.samples, require_seed(cfg)};
    r.checks.push_back(checks::monodromy(cfg.q, a, base, mode, std::nullopt, th));
    if (!cfg.csv.empty())
      write_text(cfg.csv, io::to_csv(io::cycle_dist_from_json(r.checks.back().data.at("empirical"))));
  } else if (sub == "weil") {
    r.checks.push_back(checks::weil(cfg.q));
  } else if (sub == "certify") {
    const FieldPtr k = require_field(cfg.field, "field");
    const FieldElem a = element(k, cfg.alpha_index, "alpha-index");
    const std::uint64_t seed = require_seed(cfg);
    if (cfg.beta_index) {
      const FieldElem b(k, *cfg.beta_index);
      r.checks.push_back(timed("sl2_certificate", [&](json& d) {
        const auto cert = curves::verify_sl2_certificate(cfg.q, a, b, true);
        d = io::to_json(cert);
        return cert.ok() ? Status::pass : Status::fail;
      }));
    } else {
      r.checks.push_back(checks::sl2_certificate(cfg.q, a));
      if (!(families::beta_for(a) + FieldElem::one(k)).is_zero())
        r.checks.push_back(checks::sl2_control(cfg.q, a));
    }
    if (is_small_power_of_two(cfg.q)) r.checks.push_back(checks::product_identity(cfg.q));
    r.checks.push_back(checks::b_action_grid(cfg.q, k, cfg.grid, seed));
    r.checks.push_back(checks::quotient_grid(cfg.q, k, cfg.grid, seed));
  } else if (sub == "verify-all") {
    r = suite(cfg);
  } else {
    throw DomainError("unknown subcommand " + sub);
  }
  r.config = cfg.to_json();
  return r;
}

int run(int argc, char** argv) {
  CLI::App app{"Exceptional polynomials: constructions, permutation tests, curves, monodromy"};
  app.require_subcommand(1, 1);
  RunConfig cfg;
  Index alpha = 0, beta = 0, c = 0;
  std::uint64_t seed = 0;
  std::vector<CLI::Option*> alpha_opts, beta_opts, c_opts, seed_opts;

  auto common = [&](CLI::App* s) {
    s->add_option("--out", cfg.out, "report path (stdout when omitted)");
    s->add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1u, 256u));
    s->add_option("--cache-dir", cfg.cache_dir, "cache directory");
    s->add_flag("--no-cache", cfg.no_cache, "bypass the result cache");
  };
  auto q_opt = [&](CLI::App* s, bool required) {
    auto* o = s->add_option("--q", cfg.q, "q = 2^e");
    if (required) o->required();
  };
  auto family_opts = [&](CLI::App* s) {
    s->add_option("--family", cfg.family, "power, dickson, char2-new, char2-additive-twist, char3-twist");
    q_opt(s, false);
    alpha_opts.push_back(s->add_option("--alpha-index", alpha, "alpha as an index in --field"));
    s->add_option("--field", cfg.field, "field descriptor p=2,e=3[,modulus=1:1:0:1]")->required();
    s->add_option("--d", cfg.d, "degree (power, dickson)");
    s->add_option("--n", cfg.n, "twist parameter n");
  };

  auto* gen = app.add_subcommand("gen", "build a family member");
  family_opts(gen);
  common(gen);

  auto* perm = app.add_subcommand("check-perm", "bijectivity over a tower of extensions");
  family_opts(perm);
  perm->add_option("--base", cfg.base, "base field descriptor (default: --field)");
  perm->add_option("--degrees", cfg.degrees, "extension degrees over the base")->required()->delimiter(',');
  perm->add_option("--csv", cfg.csv, "also write the grid as CSV");
  common(perm);

  auto* ident = app.add_subcommand("check-identities", "form equality, structure, product and Dickson identities");
  q_opt(ident, true);
  ident->add_option("--field", cfg.field, "field of the alpha grid")->required();
  seed_opts.push_back(ident->add_option("--seed", seed, "random seed"));
  common(ident);

  auto* zeta = app.add_subcommand("zeta", "L-polynomial of the plane model");
  q_opt(zeta, true);
  c_opts.push_back(zeta->add_option("--c-index", c, "c as an index in --field")->required());
  zeta->add_option("--field", cfg.field, "field of c (default GF(q^2))");
  common(zeta);

  auto* cheb = app.add_subcommand("chebotarev", "fiber shapes against the Frobenius coset");
  q_opt(cheb, true);
  alpha_opts.push_back(cheb->add_option("--alpha-index", alpha, "alpha as an index in --field")->required());
  cheb->add_option("--field", cfg.field, "field of alpha")->required();
  cheb->add_option("--base", cfg.base, "base field descriptor")->required();
  cheb->add_option("--samples", cfg.samples, "distinct sampled fibers (0: exhaustive)");
  seed_opts.push_back(cheb->add_option("--seed", seed, "random seed"));
  cheb->add_option("--csv", cfg.csv, "also write the shape table as CSV");
  common(cheb);

  auto* weil = app.add_subcommand("weil", "place-count contradiction");
  q_opt(weil, true);
  common(weil);

  auto* cert = app.add_subcommand("certify", "SL2 certificate, B action and quotient relations");
  q_opt(cert, true);
  alpha_opts.push_back(cert->add_option("--alpha-index", alpha, "alpha as an index in --field")->required());
  beta_opts.push_back(cert->add_option("--beta-index", beta, "explicit beta (default sqrt(alpha + alpha^2))"));
  cert->add_option("--field", cfg.field, "field of alpha")->required();
  cert->add_option("--grid", cfg.grid, "random grid size");
  seed_opts.push_back(cert->add_option("--seed", seed, "random seed"));
  common(cert);

  auto* all = app.add_subcommand("verify-all", "every check for one q");
  q_opt(all, true);
  seed_opts.push_back(all->add_option("--seed", seed, "random seed"));
  all->add_option("--grid", cfg.grid, "random grid size");
  all->add_flag("--no-zeta", cfg.no_zeta, "skip the zeta computation");
  common(all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 2;
  }
  auto given = [](const std::vector<CLI::Option*>& opts) {
    for (auto* o : opts)
      if (o->count()) return true;
    return false;
  };
  cfg.subcommand = app.get_subcommands().front()->get_name();
  if (given(alpha_opts)) cfg.alpha_index = alpha;
  if (given(beta_opts)) cfg.beta_index = beta;
  if (given(c_opts)) cfg.c_index = c;
  if (given(seed_opts)) cfg.seed = seed;

  const json config = cfg.to_json();
  const bool use_cache = !cfg.no_cache && cfg.csv.empty();
  const Cache cache(cfg.cache_dir.empty() ? default_cache_dir() : cfg.cache_dir);
  const std::string key = Cache::key(config);
  try {
    if (use_cache) {
      if (auto hit = cache.load(key)) {
        write_text(cfg.out, *hit);
        return json::parse(*hit).value("ok", false) ? 0 : 1;
      }
    }
    const Report rep = execute(cfg);
    const std::string text = rep.to_json().dump(2) + "\n";
    write_text(cfg.out, text);
    if (use_cache) {
      try {
        cache.store(key, text);
      } catch (const std::exception& ex) {
        std::cerr << "warning: " << ex.what() << "\n";
      }
    }
    return rep.ok() ? 0 : 1;
  } catch (const GuardError& ex) {
    Report rep;
    rep.config = config;
    rep.checks.push_back({"error", Status::fail, {{"error", "guard"}, {"guard", ex.guard()}, {"message", ex.what()}}, 0});
    write_text(cfg.out, rep.to_json().dump(2) + "\n");
    std::cerr << "guard violation (" << ex.guard() << "): " << ex.what() << "\n";
    return 3;
  } catch (const Error& ex) {
    Report rep;
    rep.config = config;
    rep.checks.push_back({"error", Status::fail, {{"error", "invalid"}, {"message", ex.what()}}, 0});
    write_text(cfg.out, rep.to_json().dump(2) + "\n");
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
}

}  // namespace excpoly::cli
