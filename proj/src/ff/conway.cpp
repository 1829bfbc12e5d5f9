#include "excpoly/ff.hpp"

namespace excpoly::ff {

namespace {

struct ConwayEntry {
  unsigned p;
  unsigned e;
  const char* coeffs;  // low degree first
};

constexpr ConwayEntry kConway[] = {
    {2, 1, "11"},
    {2, 2, "111"},
    {2, 3, "1101"},
    {2, 4, "11001"},
    {2, 5, "101001"},
    {2, 6, "1101101"},
    {2, 7, "11000001"},
    {2, 8, "101110001"},
    {2, 9, "1000100001"},
    {2, 10, "11110110001"},
    {2, 11, "101000000001"},
    {2, 12, "1101011100001"},
    {2, 13, "11011000000001"},
    {2, 14, "100101010000001"},
    {2, 15, "1010110000000001"},
    {2, 16, "10110100000000001"},
    {3, 1, "11"},
    {3, 2, "221"},
    {3, 3, "1201"},
    {3, 4, "20021"},
    {3, 5, "120001"},
    {3, 6, "2210201"},
    {3, 7, "10200001"},
    {3, 8, "222012001"},
    {3, 9, "1122000001"},
    {3, 10, "21002220001"},
    {3, 11, "102000000001"},
    {3, 12, "2010111000001"},
    {3, 13, "12000000000001"},
    {3, 14, "201201211200001"},
    {3, 15, "1120010020000001"},
    {3, 16, "21222022000000001"},
};

}  // namespace

std::optional<std::vector<int>> conway_polynomial(unsigned p, unsigned e) {
  for (const auto& entry : kConway) {
    if (entry.p == p && entry.e == e) {
      std::vector<int> m;
      for (const char* s = entry.coeffs; *s; ++s) m.push_back(*s - '0');
      return m;
    }
  }
  return std::nullopt;
}

}  // namespace excpoly::ff
