#include <algorithm>
#include <numeric>
#include <thread>

#include "excpoly/monodromy.hpp"

namespace excpoly::monodromy {

Partition cycle_type(const std::vector<std::size_t>& perm) {
  std::vector<char> seen(perm.size(), 0);
  Partition out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    unsigned len = 0;
    for (std::size_t k = i; !seen[k]; k = perm[k]) {
      seen[k] = 1;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational CycleDist::total() const {
  Rational s = 0;
  for (const auto& [_, w] : entries) s += w;
  return s;
}

CycleDist CycleDist::from_counts(const std::map<Partition, std::uint64_t>& counts) {
  CycleDist d;
  std::uint64_t n = 0;
  for (const auto& [_, c] : counts) n += c;
  bool first = true;
  for (const auto& [part, c] : counts) {
    if (c == 0) continue;
    const std::size_t sum = std::accumulate(part.begin(), part.end(), std::size_t{0});
    if (first) d.degree = sum;
    else if (d.degree != sum) d.degree = 0;
    first = false;
    d.entries[part] = Rational(c, n);
  }
  return d;
}

CycleDist coset_cycle_types(const PermAction& act, unsigned j, unsigned threads) {
  if (j >= act.e()) throw DomainError("coset index must lie in [0, e)");
  const auto& group = act.linear_group();
  threads = std::max(1u, threads);
  std::vector<std::map<Partition, std::uint64_t>> part(threads);
  auto work = [&](unsigned t) {
    const std::size_t lo = group.size() * t / threads, hi = group.size() * (t + 1) / threads;
    for (std::size_t i = lo; i < hi; ++i) ++part[t][cycle_type(act.permutation(group[i], j))];
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (unsigned t = 1; t < threads; ++t)
    for (const auto& [k, c] : part[t]) part[0][k] += c;
  return CycleDist::from_counts(part[0]);
}

CycleDist coset_cycle_types(std::uint64_t q, unsigned j, unsigned threads) {
  return coset_cycle_types(PermAction(q), j, threads);
}

Rational dist_compare(const CycleDist& a, const CycleDist& b) {
  if (a.degree != b.degree || a.degree == 0)
    throw DomainError("distributions over different degrees");
  Rational s = 0;
  auto ia = a.entries.begin();
  auto ib = b.entries.begin();
  while (ia != a.entries.end() || ib != b.entries.end()) {
    if (ib == b.entries.end() || (ia != a.entries.end() && ia->first < ib->first)) {
      s += ia++->second;
    } else if (ia == a.entries.end() || ib->first < ia->first) {
      s += ib++->second;
    } else {
      s += abs(ia->second - ib->second);
      ++ia;
      ++ib;
    }
  }
  return s / 2;
}

}  // namespace excpoly::monodromy
