#include <algorithm>
#include <chrono>
#include <random>

#include "excpoly/cli.hpp"

namespace excpoly::cli {

using ff::FieldElem;
using ff::FieldPtr;
using ff::Index;
using poly::UniPoly;

std::string status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::recorded: return "recorded";
  }
  return "?";
}

Check timed(std::string name, const std::function<Status(json&)>& body) {
  Check c;
  c.name = std::move(name);
  c.data = json::object();
  const auto t0 = std::chrono::steady_clock::now();
  c.status = body(c.data);
  c.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

bool Report::ok() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const Check& c) { return c.status == Status::fail; });
}

json Report::to_json() const {
  json cs = json::array();
  for (const auto& c : checks)
    cs.push_back({{"name", c.name}, {"status", status_name(c.status)}, {"data", c.data},
                  {"wall_ms", c.wall_ms}});
  return {{"tool", "excpoly"}, {"version", kToolVersion}, {"config", config}, {"checks", cs},
          {"ok", ok()}};
}

namespace checks {

namespace {

Status verdict(bool ok) { return ok ? Status::pass : Status::fail; }

bool only_even_terms(const UniPoly& f) {
  for (std::size_t i = 1; i < f.coeffs().size(); i += 2)
    if (f.coeffs()[i] != 0) return false;
  return true;
}

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

double to_double(const monodromy::Rational& r) { return static_cast<double>(r); }

std::string fraction(const monodromy::Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace

Check form_equality(std::uint64_t q, const FieldPtr& k) {
  return timed("form_equality", [&](json& d) {
    json bad = json::array();
    for (Index a = 2; a < k->order(); ++a) {
      const FieldElem alpha(k, a);
      if (families::f_closed(q, alpha) != families::f_product(q, alpha + FieldElem::one(k)))
        bad.push_back(a);
    }
    d = {{"q", q}, {"field", io::to_json(*k)}, {"alphas", k->order() - 2}, {"mismatches", bad}};
    return verdict(bad.empty());
  });
}

Check structure_facts(std::uint64_t q, const FieldPtr& k) {
  return timed("structure_facts", [&](json& d) {
    json bad = json::array();
    for (Index a = 2; a < k->order(); ++a) {
      const UniPoly f = families::f_closed(q, FieldElem(k, a));
      bool ok = f.is_monic() && f.degree() == static_cast<long>(q * (q - 1) / 2);
      const UniPoly ta = families::trace_poly(q, k) + UniPoly::constant(k, a);
      auto [quo, r] = poly::divmod(f, ta);
      ok = ok && r.is_zero() && only_even_terms(quo);
      const bool in_fq = k->pow(a, q) == a;
      const bool x2 = f.coeff(0) == 0 && f.coeff(1) == 0;
      const bool x3 = x2 && f.coeff(2) == 0;
      ok = ok && x2 == in_fq && !x3;
      if (!ok) bad.push_back(a);
    }
    d = {{"q", q}, {"field", io::to_json(*k)}, {"failures", bad}};
    return verdict(bad.empty());
  });
}

Check product_identity(std::uint64_t q) {
  return timed("product_identity", [&](json& d) {
    const bool holds = curves::verify_product_identity(q);
    const bool control = curves::verify_product_identity(q, curves::ProductMutation::drop_constant);
    d = {{"q", q}, {"identity", holds}, {"mutation_detected", !control}};
    return verdict(holds && !control);
  });
}

Check smoothness_grid(std::uint64_t q, const FieldPtr& k) {
  return timed("smoothness", [&](json& d) {
    json rows = json::array();
    bool ok = true;
    for (Index c = 0; c < k->order(); ++c) {
      const auto rep = curves::smoothness_check(q, FieldElem(k, c));
      ok = ok && rep.smooth == (c > 1);
      rows.push_back({{"c", c}, {"smooth", rep.smooth}, {"singular", rep.singular.size()}});
    }
    d = {{"q", q}, {"field", io::to_json(*k)}, {"rows", rows}};
    return verdict(ok);
  });
}

Check zeta(std::uint64_t q, const FieldElem& c, unsigned threads) {
  return timed("zeta", [&](json& d) {
    const unsigned g = static_cast<unsigned>(q * (q - 1) / 2);
    const auto z = curves::zeta(curves::plane_model(q, c), g, threads);
    d = io::to_json(z);
    d["q"] = q;
    d["c"] = c.index();
    d["max_radius_error"] = z.max_radius_error;
    return verdict(z.genus == g && z.L.size() == 2 * g + 1 && z.functional_equation &&
                   z.counts_reproduced && z.radii_ok && z.p_rank == g && z.L_at_1 > 0);
  });
}

Check sl2_certificate(std::uint64_t q, const FieldElem& alpha) {
  return timed("sl2_certificate", [&](json& d) {
    const auto cert = curves::verify_sl2_certificate(q, alpha);
    d = io::to_json(cert);
    return verdict(cert.ok());
  });
}

Check sl2_control(std::uint64_t q, const FieldElem& alpha) {
  return timed("sl2_control", [&](json& d) {
    const FieldElem broken = families::beta_for(alpha) + FieldElem::one(alpha.field());
    if (broken.is_zero()) throw DomainError("beta + 1 = 0: pick alpha with alpha + alpha^2 != 1");
    const auto cert = curves::verify_sl2_certificate(q, alpha, broken, true);
    d = io::to_json(cert);
    d["check"] = "sl2_control";
    return verdict(cert.steps.size() == 4 && !cert.steps[1].ok);
  });
}

Check b_action_grid(std::uint64_t q, const FieldPtr& k, unsigned n, std::uint64_t seed) {
  return timed("b_action", [&](json& d) {
    std::mt19937_64 rng(seed);
    json rows = json::array();
    bool ok = true;
    for (unsigned i = 0; i < n; ++i) {
      const FieldElem a(k, 1 + rng() % (k->order() - 1)), b(k, 1 + rng() % (k->order() - 1));
      const bool holds = curves::verify_b_action(q, a, b);
      const bool control = curves::verify_b_action(q, a, b, curves::BActionMutation::w_scaled_by_gamma);
      ok = ok && holds && !control;
      rows.push_back({{"alpha", a.index()}, {"beta", b.index()}, {"holds", holds}, {"mutation_detected", !control}});
    }
    d = {{"q", q}, {"field", io::to_json(*k)}, {"seed", seed}, {"rows", rows}};
    return verdict(ok);
  });
}

Check quotient_grid(std::uint64_t q, const FieldPtr& k, unsigned n, std::uint64_t seed) {
  return timed("quotient_relations", [&](json& d) {
    if (k->order() <= 2) throw DomainError("quotient grid needs a field larger than F_2");
    std::mt19937_64 rng(seed);
    json rows = json::array();
    bool ok = true;
    unsigned kummer_checked = 0;
    for (unsigned i = 0; i < n; ++i) {
      const FieldElem a(k, 2 + rng() % (k->order() - 2));
      const FieldElem b = i % 2 == 0 ? families::beta_for(a) : FieldElem(k, 1 + rng() % (k->order() - 1));
      const auto rep = curves::verify_quotient_relations(q, a, b);
      const bool related = b * b == a + a * a;
      ok = ok && rep.ok() && rep.kummer.has_value() == related;
      kummer_checked += rep.kummer.has_value();
      json row = io::to_json(rep);
      row["alpha"] = a.index();
      row["beta"] = b.index();
      rows.push_back(row);
    }
    d = {{"q", q}, {"field", io::to_json(*k)}, {"seed", seed}, {"rows", rows},
         {"kummer_checked", kummer_checked}};
    return verdict(ok && kummer_checked > 0);
  });
}

Check permutation_grid(std::uint64_t q, const FieldElem& alpha, const std::vector<unsigned>& degrees,
                       const std::vector<unsigned>& expect_non_bijective, unsigned threads) {
  return timed("permutation_grid", [&](json& d) {
    const families::FamilySpec spec{families::FamilyKind::char2_new, alpha.field(), q, alpha, 0, 0};
    exceptional::PermOptions opt;
    opt.threads = threads;
    const auto rep = exceptional::tower_scan(spec, alpha.field(), degrees, opt);
    bool ok = true;
    json rows = json::array();
    for (const auto& row : rep.rows) {
      const auto base = ff::make_field(2, alpha.field()->degree() * row.j);
      const bool exc = exceptional::exceptionality_verdict(spec, base);
      const bool expect_nb = std::find(expect_non_bijective.begin(), expect_non_bijective.end(), row.j) !=
                             expect_non_bijective.end();
      Status s = Status::recorded;
      if (exc) s = verdict(row.bijective);
      if (expect_nb) s = verdict(!row.bijective && !exc);
      ok = ok && s != Status::fail;
      json r{{"j", row.j}, {"bijective", row.bijective}, {"verdict", exc}, {"status", status_name(s)}};
      if (row.witness) r["witness"] = {row.witness->first, row.witness->second};
      rows.push_back(r);
    }
    d = {{"report", io::to_json(rep)}, {"rows", rows}};
    return verdict(ok);
  });
}

Check classical_verdicts(unsigned max_m) {
  return timed("classical_verdicts", [&](json& d) {
    std::uint64_t dickson_cases = 0, iv_cases = 0, iv_exceptional = 0;
    json bad = json::array();
    for (unsigned m = 1; m <= max_m; ++m) {
      const FieldPtr k = ff::make_field(2, m);
      for (unsigned deg = 3; deg <= 13; ++deg) {
        if (!is_prime(deg)) continue;
        for (Index a = 1; a < k->order(); ++a) {
          const families::FamilySpec spec{families::FamilyKind::dickson, k, 0, FieldElem(k, a), deg, 0};
          const bool v = exceptional::exceptionality_verdict(spec, k);
          const bool b = exceptional::is_permutation(spec.build()).bijective;
          ++dickson_cases;
          if (v != b) bad.push_back({{"kind", "dickson"}, {"m", m}, {"d", deg}, {"alpha", a}});
        }
      }
      for (unsigned n : {1u, 3u, 9u}) {
        for (Index a = 1; a < k->order(); ++a) {
          const families::FamilySpec spec{families::FamilyKind::char2_additive_twist, k, 8, FieldElem(k, a), 0, n};
          const bool v = exceptional::exceptionality_verdict(spec, k);
          ++iv_cases;
          if (!v) continue;
          ++iv_exceptional;
          if (!exceptional::is_permutation(spec.build()).bijective)
            bad.push_back({{"kind", "char2_additive_twist"}, {"m", m}, {"n", n}, {"alpha", a}});
        }
      }
    }
    d = {{"max_m", max_m}, {"dickson_cases", dickson_cases}, {"iv_cases", iv_cases},
         {"iv_exceptional", iv_exceptional}, {"failures", bad}};
    return verdict(bad.empty());
  });
}

Check dickson_identity(unsigned max_d, unsigned samples, std::uint64_t seed) {
  return timed("dickson_identity", [&](json& d) {
    std::mt19937_64 rng(seed);
    std::uint64_t checked = 0;
    json bad = json::array();
    for (auto [p, e] : {std::pair{2u, 8u}, std::pair{3u, 4u}}) {
      const FieldPtr k = ff::make_field(p, e);
      const ff::Field& F = *k;
      for (unsigned deg = 1; deg <= max_d; ++deg) {
        for (unsigned s = 0; s < samples; ++s) {
          const Index a = 1 + rng() % (F.order() - 1);
          const Index y = 1 + rng() % (F.order() - 1);
          const UniPoly D = families::dickson(deg, FieldElem(k, a));
          const Index ay = F.div(a, y);
          const Index lhs = D.eval(F.add(y, ay));
          const Index rhs = F.add(F.pow(y, deg), F.pow(ay, deg));
          ++checked;
          if (lhs != rhs) bad.push_back({{"p", p}, {"d", deg}, {"alpha", a}, {"y", y}});
        }
      }
    }
    d = {{"max_d", max_d}, {"samples_per_d", samples}, {"seed", seed}, {"checked", checked},
         {"failures", bad}};
    return verdict(bad.empty());
  });
}

Check canonicalization(std::uint64_t q, const FieldPtr& k, unsigned n, std::uint64_t seed) {
  return timed("canonicalization", [&](json& d) {
    std::mt19937_64 rng(seed);
    unsigned failures = 0;
    for (unsigned s = 0; s < n; ++s) {
      const FieldElem al(k, 2 + rng() % (k->order() - 2));
      const FieldElem z(k, 1 + rng() % (k->order() - 1));
      const FieldElem g(k, rng() % k->order());
      const FieldElem et(k, 1 + rng() % (k->order() - 1));
      const FieldElem de(k, rng() % k->order());
      const families::CanonicalForm in{al, z, g, et, de};
      const auto out = families::canonicalize(in.reassemble(q), q);
      if (!(out.alpha == al && out.zeta == z && out.gamma == g && out.eta == et && out.delta == de))
        ++failures;
    }
    d = {{"q", q}, {"field", io::to_json(*k)}, {"seed", seed}, {"trials", n}, {"failures", failures}};
    return verdict(failures == 0);
  });
}

Check monodromy(std::uint64_t q, const FieldElem& alpha, const FieldPtr& L,
                const monodromy::SampleMode& mode, std::optional<double> tv_max, unsigned threads) {
  return timed("monodromy", [&](json& d) {
    const unsigned n = L->degree();
    const auto emb = ff::embed(alpha.field(), L);
    const UniPoly f = families::f_closed(q, alpha);
    const auto stats = monodromy::chebotarev_sample(f, emb, mode, threads);
    const unsigned e = families::log2_exact(q);
    const unsigned j = n % e;
    const auto coset = monodromy::coset_cycle_types(q, j, threads);

    json missing = json::array();
    for (const auto& [p, _] : stats.unramified.entries)
      if (!coset.entries.count(p)) missing.push_back(p);
    const bool exhaustive = std::holds_alternative<monodromy::Exhaustive>(mode);
    const bool one_branch = !exhaustive || stats.ramified.size() == 1;
    d = {{"q", q},
         {"alpha", alpha.index()},
         {"base", io::to_json(*L)},
         {"coset", j},
         {"exhaustive", exhaustive},
         {"fibers", stats.fibers},
         {"ramified", stats.ramified},
         {"shapes", stats.unramified.entries.size()},
         {"coset_shapes", coset.entries.size()},
         {"missing", missing},
         {"empirical", io::to_json(stats.unramified)},
         {"expected", io::to_json(coset)}};
    bool ok = missing.empty() && one_branch;
    if (!stats.unramified.entries.empty()) {
      const auto tv = monodromy::dist_compare(stats.unramified, coset);
      d["tv"] = fraction(tv);
      d["tv_value"] = to_double(tv);
      if (tv_max) ok = ok && to_double(tv) <= *tv_max;
    }
    return verdict(ok);
  });
}

Check weil(std::uint64_t q) {
  return timed("weil_contradiction", [&](json& d) {
    const auto r = curves::weil_contradiction_report(q);
    d = io::to_json(r);
    return verdict(r.all_cases_violated);
  });
}

}  // namespace checks

}  // namespace excpoly::cli
