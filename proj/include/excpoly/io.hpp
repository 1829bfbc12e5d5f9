#pragma once

// JSON (and a little CSV) wire formats for the library's value types.

#include <json.hpp>
#include <string>

#include "excpoly/bipoly.hpp"
#include "excpoly/curves.hpp"
#include "excpoly/exceptional.hpp"
#include "excpoly/families.hpp"
#include "excpoly/monodromy.hpp"

namespace excpoly::io {

using json = nlohmann::json;

/// {"p":2,"e":3,"modulus":[1,1,0,1]}
json to_json(const ff::Field& f);
/// Accepts a descriptor with or without "modulus"; without one the canonical
/// field is used. Throws DomainError on malformed input.
ff::FieldPtr field_from_json(const json& j);

/// {"field":{...},"coeffs":[...]}
json to_json(const poly::UniPoly& f);
poly::UniPoly unipoly_from_json(const json& j);
/// {"field":{...},"terms":[[i,j,c],...]}
json to_json(const poly::BiPoly& f);

/// {"kind":"char2_new","q":8,"alpha":{"field":{...},"index":6}, ...}
json to_json(const families::FamilySpec& s);
families::FamilySpec family_spec_from_json(const json& j);

/// {"spec":..., "base":..., "rows":[{"j":1,"bijective":true},...], "witnesses":[...]}
json to_json(const exceptional::PermReport& r);
/// j,bijective,x1,x2
std::string to_csv(const exceptional::PermReport& r);

/// {"degree":28,"entries":[{"type":[...],"weight":"3/56"},...]}
json to_json(const monodromy::CycleDist& d);
monodromy::CycleDist cycle_dist_from_json(const json& j);
/// type,weight (parts joined with spaces).
std::string to_csv(const monodromy::CycleDist& d);

/// Integers that fit in int64 are numbers, larger ones decimal strings.
json big_to_json(const poly::BigInt& n);

/// {"g":6,"base":16,"counts":[...],"L":[1,a1,...],"p_rank":6, ...}
json to_json(const curves::ZetaData& z);
json to_json(const curves::WeilReport& r);
json to_json(const curves::SmoothnessReport& r);
json to_json(const curves::QuotientReport& r);
/// {"check":"sl2_certificate","q":8,"alpha":6,"steps":[{"id":1,"ok":true},...]}
json to_json(const curves::Sl2Certificate& c);

}  // namespace excpoly::io
