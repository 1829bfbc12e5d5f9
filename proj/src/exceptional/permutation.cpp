#include <thread>

#include "excpoly/exceptional.hpp"

namespace excpoly::exceptional {

namespace {

class Bitmap {
 public:
  explicit Bitmap(std::uint64_t n) : w_((n + 63) / 64, 0) {}
  // Sets bit i; returns its previous value.
  bool test_set(std::uint64_t i) {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    const bool old = (w_[i >> 6] & m) != 0;
    w_[i >> 6] |= m;
    return old;
  }
  // ORs o into this; returns whether the two overlapped.
  bool merge(const Bitmap& o) {
    bool overlap = false;
    for (std::size_t i = 0; i < w_.size(); ++i) {
      overlap |= (w_[i] & o.w_[i]) != 0;
      w_[i] |= o.w_[i];
    }
    return overlap;
  }

 private:
  std::vector<std::uint64_t> w_;
};

std::pair<Index, Index> least_collision(const UniPoly& g, std::uint64_t n) {
  // Saturating 2-bit multiplicity counters per value.
  std::vector<std::uint8_t> cnt((n + 3) / 4, 0);
  auto get = [&](Index v) { return (cnt[v >> 2] >> (2 * (v & 3))) & 3; };
  for (Index x = 0; x < n; ++x) {
    const Index v = g.eval(x);
    const unsigned c = get(v);
    if (c < 2) cnt[v >> 2] = static_cast<std::uint8_t>(cnt[v >> 2] + (1u << (2 * (v & 3))));
  }
  for (Index x1 = 0; x1 < n; ++x1) {
    const Index v = g.eval(x1);
    if (get(v) < 2) continue;
    for (Index x2 = x1 + 1; x2 < n; ++x2)
      if (g.eval(x2) == v) return {x1, x2};
  }
  throw InternalError("collision reported but no witness found");
}

}  // namespace

PermResult is_permutation(const UniPoly& f, const ff::Embedding& emb, const PermOptions& opt) {
  if (!ff::same_field(f.field(), emb.source()))
    throw MismatchError("polynomial is not defined over the embedding source");
  const std::uint64_t n = emb.target()->order();
  if (n > opt.size_guard)
    throw GuardError("size_guard", "field of order " + std::to_string(n) +
                                       " exceeds the enumeration guard " +
                                       std::to_string(opt.size_guard));
  const UniPoly g = ff::same_field(emb.source(), emb.target()) ? f : f.map(emb);

  const unsigned threads = std::max(1u, std::min<unsigned>(opt.threads, n / 1024 + 1));
  std::vector<Bitmap> maps(threads, Bitmap(n));
  std::vector<char> clash(threads, 0);
  auto work = [&](unsigned t) {
    const Index lo = n * t / threads, hi = n * (t + 1) / threads;
    for (Index x = lo; x < hi; ++x)
      if (maps[t].test_set(g.eval(x))) {
        clash[t] = 1;
        return;
      }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  bool collided = false;
  for (unsigned t = 0; t < threads; ++t) collided |= clash[t] != 0;
  for (unsigned t = 1; t < threads && !collided; ++t) collided |= maps[0].merge(maps[t]);

  PermResult r;
  if (collided) {
    r.bijective = false;
    r.witness = least_collision(g, n);
  }
  return r;
}

PermResult is_permutation(const UniPoly& f, const PermOptions& opt) {
  return is_permutation(f, ff::embed(f.field(), f.field()), opt);
}

PermReport tower_scan(const FamilySpec& spec, const FieldPtr& base,
                      const std::vector<unsigned>& degrees, const PermOptions& opt) {
  const UniPoly f = spec.build();
  const ff::Embedding to_base = ff::embed(spec.field, base);
  const UniPoly fb = ff::same_field(spec.field, base) ? f : f.map(to_base);
  PermReport rep{spec, base, {}};
  for (unsigned j : degrees) {
    if (j == 0) throw DomainError("extension degree must be positive");
    const std::uint64_t order = ff::ipow(base->characteristic(), base->degree() * j);
    if (order > opt.size_guard)
      throw GuardError("size_guard", "GF(" + std::to_string(base->characteristic()) + "^" +
                                         std::to_string(base->degree() * j) +
                                         ") exceeds the enumeration guard");
    const FieldPtr ext = ff::make_field(base->characteristic(), base->degree() * j);
    auto res = is_permutation(fb, ff::embed(base, ext), opt);
    rep.rows.push_back({j, res.bijective, res.witness});
  }
  return rep;
}

}  // namespace excpoly::exceptional
