#include "excpoly/io.hpp"

#include <sstream>

namespace excpoly::io {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw DomainError("malformed JSON: " + what);
}

std::string partition_string(const monodromy::Partition& p, char sep) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(p[i]);
  }
  return s;
}

std::string fraction(const monodromy::Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace

json to_json(const ff::Field& f) {
  return {{"p", f.characteristic()}, {"e", f.degree()}, {"modulus", f.modulus()}};
}

ff::FieldPtr field_from_json(const json& j) {
  try {
    require(j.is_object() && j.contains("p") && j.contains("e"), "field needs p and e");
    const unsigned p = j.at("p").get<unsigned>();
    const unsigned e = j.at("e").get<unsigned>();
    if (!j.contains("modulus")) return ff::make_field(p, e);
    auto m = j.at("modulus").get<std::vector<int>>();
    require(m.size() == e + 1, "modulus length must be e + 1");
    return ff::make_field(p, std::move(m));
  } catch (const json::exception& ex) {
    throw DomainError(std::string("malformed field descriptor: ") + ex.what());
  }
}

json to_json(const poly::UniPoly& f) { return {{"field", to_json(f.f())}, {"coeffs", f.coeffs()}}; }

poly::UniPoly unipoly_from_json(const json& j) {
  require(j.is_object() && j.contains("field") && j.contains("coeffs"), "polynomial");
  auto field = field_from_json(j.at("field"));
  auto c = j.at("coeffs").get<std::vector<ff::Index>>();
  for (auto x : c) require(field->contains(x), "coefficient index out of range");
  return {field, std::move(c)};
}

json to_json(const poly::BiPoly& f) {
  json terms = json::array();
  for (const auto& [k, c] : f.terms()) terms.push_back({k.first, k.second, c});
  return {{"field", to_json(*f.field())}, {"terms", terms}};
}

json to_json(const families::FamilySpec& s) {
  json j{{"kind", families::kind_name(s.kind)}, {"field", to_json(*s.field)}};
  if (s.q) j["q"] = s.q;
  if (s.alpha) j["alpha"] = {{"field", to_json(*s.alpha->field())}, {"index", s.alpha->index()}};
  if (s.d) j["d"] = s.d;
  if (s.n) j["n"] = s.n;
  return j;
}

families::FamilySpec family_spec_from_json(const json& j) {
  require(j.is_object() && j.contains("kind"), "family spec needs kind");
  families::FamilySpec s;
  s.kind = families::parse_kind(j.at("kind").get<std::string>());
  s.q = j.value("q", std::uint64_t{0});
  s.d = j.value("d", 0u);
  s.n = j.value("n", 0u);
  if (j.contains("alpha")) {
    const auto& a = j.at("alpha");
    auto f = field_from_json(a.at("field"));
    const auto idx = a.at("index").get<ff::Index>();
    require(f->contains(idx), "alpha index out of range");
    s.alpha = ff::FieldElem(f, idx);
    s.field = f;
  }
  if (j.contains("field")) s.field = field_from_json(j.at("field"));
  require(s.field != nullptr, "family spec needs a field");
  s.validate();
  return s;
}

json to_json(const exceptional::PermReport& r) {
  json rows = json::array(), wit = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"j", row.j}, {"bijective", row.bijective}});
    if (row.witness) wit.push_back({{"j", row.j}, {"x1", row.witness->first}, {"x2", row.witness->second}});
  }
  return {{"spec", to_json(r.spec)}, {"base", to_json(*r.base)}, {"rows", rows}, {"witnesses", wit}};
}

std::string to_csv(const exceptional::PermReport& r) {
  std::ostringstream out;
  out << "j,bijective,x1,x2\n";
  for (const auto& row : r.rows) {
    out << row.j << ',' << (row.bijective ? "true" : "false") << ',';
    if (row.witness) out << row.witness->first << ',' << row.witness->second;
    else out << ',';
    out << '\n';
  }
  return out.str();
}

json to_json(const monodromy::CycleDist& d) {
  json entries = json::array();
  for (const auto& [p, w] : d.entries) entries.push_back({{"type", p}, {"weight", fraction(w)}});
  return {{"degree", d.degree}, {"entries", entries}};
}

monodromy::CycleDist cycle_dist_from_json(const json& j) {
  require(j.is_object() && j.contains("entries"), "cycle distribution");
  monodromy::CycleDist d;
  d.degree = j.value("degree", std::size_t{0});
  for (const auto& e : j.at("entries")) {
    auto p = e.at("type").get<monodromy::Partition>();
    const auto w = e.at("weight").get<std::string>();
    const auto slash = w.find('/');
    require(slash != std::string::npos, "weight must be a fraction");
    d.entries[p] = monodromy::Rational(boost::multiprecision::cpp_int(w.substr(0, slash)),
                                       boost::multiprecision::cpp_int(w.substr(slash + 1)));
  }
  return d;
}

std::string to_csv(const monodromy::CycleDist& d) {
  std::ostringstream out;
  out << "type,weight\n";
  for (const auto& [p, w] : d.entries) out << partition_string(p, ' ') << ',' << fraction(w) << '\n';
  return out.str();
}

json big_to_json(const poly::BigInt& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(n);
  return n.str();
}

json to_json(const curves::ZetaData& z) {
  json L = json::array();
  for (const auto& a : z.L) L.push_back(big_to_json(a));
  return {{"g", z.g},
          {"base", z.base},
          {"counts", z.counts},
          {"L", L},
          {"genus", z.genus},
          {"p_rank", z.p_rank},
          {"functional_equation", z.functional_equation},
          {"counts_reproduced", z.counts_reproduced},
          {"radii_ok", z.radii_ok},
          {"L_at_1", big_to_json(z.L_at_1)}};
}

json to_json(const curves::WeilReport& r) {
  json cases = json::array();
  for (const auto& c : r.cases) {
    json cands = json::array();
    for (const auto& k : c.candidates)
      cands.push_back({{"s", k.s},
                       {"reason", k.reason},
                       {"bound_floor", k.check.bound_floor},
                       {"violates", k.check.violates}});
    cases.push_back({{"e_prime", c.e_prime}, {"candidates", cands}, {"violated", c.violated}});
  }
  return {{"q", r.q},           {"e", r.e},         {"genus", r.genus},
          {"places", r.places}, {"cases", cases}, {"all_cases_violated", r.all_cases_violated}};
}

json to_json(const curves::SmoothnessReport& r) {
  json pts = json::array();
  for (const auto& p : r.singular) pts.push_back({p.y, p.z, p.w});
  return {{"smooth", r.smooth},
          {"field", to_json(*r.field)},
          {"candidates", r.candidates},
          {"singular", pts}};
}

json to_json(const curves::QuotientReport& r) {
  json j{{"quadratic", r.quadratic}, {"involution", r.involution}, {"involutive", r.involutive}};
  if (r.kummer) j["kummer"] = *r.kummer;
  return j;
}

json to_json(const curves::Sl2Certificate& c) {
  json steps = json::array();
  for (const auto& s : c.steps) steps.push_back({{"id", s.id}, {"name", s.name}, {"ok", s.ok}});
  return {{"check", "sl2_certificate"},
          {"q", c.q},
          {"alpha", c.alpha.index()},
          {"beta", c.beta.index()},
          {"field", to_json(*c.alpha.field())},
          {"steps", steps}};
}

}  // namespace excpoly::io
