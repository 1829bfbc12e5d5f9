#include <algorithm>
#include <random>
#include <thread>
#include <unordered_set>

#include "excpoly/monodromy.hpp"

namespace excpoly::monodromy {

namespace {

// n distinct values in [0, N), ascending (Floyd's algorithm).
std::vector<Index> draw_distinct(std::uint64_t n, std::uint64_t N, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::unordered_set<Index> chosen;
  for (std::uint64_t j = N - n; j < N; ++j) {
    const Index t = rng() % (j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<Index> out(chosen.begin(), chosen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

FiberStats chebotarev_sample(const UniPoly& f, const ff::Embedding& emb, const SampleMode& mode,
                             unsigned threads) {
  if (!ff::same_field(f.field(), emb.source()))
    throw MismatchError("polynomial is not defined over the embedding source");
  if (f.degree() < 1) throw DomainError("fiber shapes need a nonconstant polynomial");
  const FieldPtr& base = emb.target();
  const std::uint64_t N = base->order();

  std::vector<Index> ts;
  if (std::holds_alternative<Exhaustive>(mode)) {
    if (N > kExhaustiveGuard)
      throw GuardError("exhaustive_guard", base->name() + " is too large for exhaustive fibers");
    ts.resize(N);
    for (Index t = 0; t < N; ++t) ts[t] = t;
  } else {
    const auto& s = std::get<Sampled>(mode);
    if (s.n > N)
      throw DomainError("cannot draw " + std::to_string(s.n) + " distinct fibers from " +
                        base->name());
    ts = draw_distinct(s.n, N, s.seed);
  }

  const UniPoly g = ff::same_field(f.field(), base) ? f : f.map(emb);
  threads = std::max(1u, threads);
  struct Part {
    std::map<Partition, std::uint64_t> all, unram;
    std::vector<Index> ramified;
  };
  std::vector<Part> parts(threads);
  auto work = [&](unsigned th) {
    const std::size_t lo = ts.size() * th / threads, hi = ts.size() * (th + 1) / threads;
    Part& p = parts[th];
    for (std::size_t i = lo; i < hi; ++i) {
      const UniPoly ft = g - UniPoly::constant(base, ts[i]);
      const auto shape = poly::factor_shape(ft);
      ++p.all[shape];
      if (poly::is_squarefree(ft)) ++p.unram[shape];
      else p.ramified.push_back(ts[i]);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  FiberStats out;
  for (unsigned t = 1; t < threads; ++t) {
    for (const auto& [k, c] : parts[t].all) parts[0].all[k] += c;
    for (const auto& [k, c] : parts[t].unram) parts[0].unram[k] += c;
    parts[0].ramified.insert(parts[0].ramified.end(), parts[t].ramified.begin(),
                             parts[t].ramified.end());
  }
  out.all = CycleDist::from_counts(parts[0].all);
  out.unramified = CycleDist::from_counts(parts[0].unram);
  out.ramified = std::move(parts[0].ramified);
  std::sort(out.ramified.begin(), out.ramified.end());
  out.fibers = ts.size();
  return out;
}

}  // namespace excpoly::monodromy
