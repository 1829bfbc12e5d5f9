#include <boost/multiprecision/cpp_int.hpp>

#include "excpoly/curves.hpp"
#include "excpoly/families.hpp"

namespace excpoly::curves {

WeilCheck weil_check(std::uint64_t g, std::uint64_t s, std::uint64_t claimed) {
  const BigInt rhs = BigInt(4) * g * g * s;
  WeilCheck c;
  c.bound_floor = static_cast<std::uint64_t>(BigInt(s) + 1 + boost::multiprecision::sqrt(rhs));
  if (claimed > s + 1) {
    const BigInt d = BigInt(claimed) - s - 1;
    c.violates = d * d > rhs;
  }
  return c;
}

WeilReport weil_contradiction_report(std::uint64_t q) {
  if (q != 8 && q != 32) throw DomainError("the Weil report covers q = 8 and q = 32");
  WeilReport r;
  r.q = q;
  r.e = families::log2_exact(q);
  r.genus = q * (q - 1) / 2;
  r.places = q * (q * q - 1) / 2;
  r.all_cases_violated = true;
  for (unsigned ep = 1; ep <= r.e; ++ep) {
    if (r.e % ep != 0) continue;
    WeilCase c{ep, {}, false};
    auto add = [&](std::uint64_t s, std::string reason) {
      c.candidates.push_back({s, std::move(reason), weil_check(r.genus, s, r.places)});
      c.violated = c.violated || c.candidates.back().check.violates;
    };
    if (ep < r.e) {
      add(ff::ipow(2, 2 * ep), "places rational over the quadratic extension of GF(2^e')");
    } else {
      add(ff::ipow(2, r.e), "|H/W| = e: places rational over GF(2^e)");
      add(ff::ipow(2, 2 * r.e), "quadratic extension of GF(2^e), as for e' < e");
    }
    r.all_cases_violated = r.all_cases_violated && c.violated;
    r.cases.push_back(std::move(c));
  }
  return r;
}

}  // namespace excpoly::curves
