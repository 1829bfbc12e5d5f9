#include <numeric>
#include <thread>

#include "excpoly/curves.hpp"
#include "excpoly/families.hpp"

namespace excpoly::curves {

namespace {

struct Ext {
  FieldPtr L;
  ff::Embedding emb;
};

Ext extension(const FieldPtr& k, unsigned m, std::uint64_t guard) {
  if (m == 0) throw DomainError("extension degree must be positive");
  const unsigned n = k->degree() * m;
  if (n >= 64 || (std::uint64_t{1} << n) > guard)
    throw GuardError("count_guard", "GF(2^" + std::to_string(n) + ") exceeds the counting guard");
  FieldPtr L = ff::make_field(2, n);
  return {L, ff::embed(k, L)};
}

const Plane& as_plane(const CurveModel& model) {
  const auto* p = std::get_if<Plane>(&model.kind);
  if (!p) throw DomainError("operation needs the plane model");
  return *p;
}

// Parallel sum of body(x) over x in [lo, hi).
template <class Body>
std::uint64_t parallel_sum(std::uint64_t lo, std::uint64_t hi, unsigned threads, Body body) {
  threads = std::max(1u, threads);
  std::vector<std::uint64_t> part(threads, 0);
  auto work = [&](unsigned t) {
    const std::uint64_t a = lo + (hi - lo) * t / threads, b = lo + (hi - lo) * (t + 1) / threads;
    std::uint64_t s = 0;
    for (std::uint64_t x = a; x < b; ++x) s += body(x);
    part[t] = s;
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  return std::accumulate(part.begin(), part.end(), std::uint64_t{0});
}

// Solves x^2 + x = k in a field of characteristic 2 when Tr(k) = 0.
class AsSolver {
 public:
  explicit AsSolver(const ff::Field& L) : L_(L) {
    const unsigned n = L.degree();
    if (n % 2 == 1) return;
    Index theta = 1;
    while (L.absolute_trace(theta) != 1) ++theta;
    std::vector<Index> pw(n);
    pw[0] = theta;
    for (unsigned j = 1; j < n; ++j) pw[j] = L.sqr(pw[j - 1]);
    tau_.assign(n - 1, 0);
    Index acc = 0;
    for (unsigned i = n - 1; i-- > 0;) {
      acc = L.add(acc, pw[i + 1]);
      tau_[i] = acc;
    }
  }

  Index solve(Index k) const {
    const unsigned n = L_.degree();
    Index x = 0;
    if (n % 2 == 1) {
      // Half trace.
      Index p = k;
      for (unsigned i = 0; i <= (n - 1) / 2; ++i) {
        x = L_.add(x, p);
        p = L_.sqr(L_.sqr(p));
      }
      return x;
    }
    Index p = k;
    for (unsigned i = 0; i + 1 < n; ++i) {
      x = L_.add(x, L_.mul(p, tau_[i]));
      p = L_.sqr(p);
    }
    return x;
  }

 private:
  const ff::Field& L_;
  std::vector<Index> tau_;
};

Index trace_T(const ff::Field& L, std::uint64_t q, Index u) {
  return families::apply_trace(q, L, u);
}

}  // namespace

std::uint64_t plane_points_at_infinity(const CurveModel& model, unsigned m) {
  const Plane& p = as_plane(model);
  const std::uint64_t Q = ff::ipow(2, model.field->degree() * m);
  return std::gcd(p.q + 1, Q - 1);
}

std::uint64_t count_plane_brute(const CurveModel& model, unsigned m) {
  const Plane& p = as_plane(model);
  const Ext x = extension(model.field, m, kBruteGuard);
  const ff::Field& L = *x.L;
  const Index c = x.emb.apply(p.c.index());
  std::uint64_t n = 0;
  for (Index y = 0; y < L.order(); ++y)
    for (Index z = 0; z < L.order(); ++z) n += plane_eval_homogeneous(L, p.q, c, y, z, 1) == 0;
  for (Index y = 0; y < L.order(); ++y) n += plane_eval_homogeneous(L, p.q, c, y, 1, 0) == 0;
  n += plane_eval_homogeneous(L, p.q, c, 1, 0, 0) == 0;
  return n;
}

std::uint64_t count_plane_gcd(const CurveModel& model, unsigned m) {
  const Plane& p = as_plane(model);
  const Ext x = extension(model.field, m, kGcdGuard);
  const ff::Field& L = *x.L;
  const Index c = x.emb.apply(p.c.index());
  std::uint64_t n = 0;
  for (Index z = 0; z < L.order(); ++z) {
    std::vector<Index> g(p.q + 2, 0);
    g[p.q + 1] = 1;
    Index zp = z;
    for (std::uint64_t p2 = 1; p2 < p.q; p2 *= 2, zp = L.sqr(zp)) g[p2] = zp;
    g[0] = L.add(L.pow(z, p.q + 1), c);
    n += poly::count_distinct_roots(UniPoly(x.L, std::move(g)));
  }
  return n + plane_points_at_infinity(model, m);
}

std::uint64_t count_plane_fibered(const CurveModel& model, unsigned m, unsigned threads) {
  const Plane& p = as_plane(model);
  const Ext x = extension(model.field, m, kFiberGuard);
  const ff::Field& L = *x.L;
  const Index c = x.emb.apply(p.c.index());
  const std::uint64_t Q = L.order();
  const std::uint64_t d = std::gcd(p.q + 1, Q - 1);
  const std::uint64_t h = (Q - 1) / d;  // s is a (q+1)-th power iff s^h = 1
  const AsSolver solver(L);

  // y = 0 or z = 0: the other coordinate satisfies t^(q+1) = c.
  const std::uint64_t axis = L.pow(c, h) == 1 ? d : 0;
  const std::uint64_t rest = parallel_sum(1, Q, threads, [&](Index u) -> std::uint64_t {
    const Index b = L.add(trace_T(L, p.q, u), c);
    if (b == 0) return d;  // double root sqrt(u^(q+1)), a (q+1)-th power
    const Index a = L.pow(u, p.q + 1);
    const Index k = L.div(a, L.sqr(b));
    if (L.absolute_trace(k) != 0) return 0;
    // Roots b x0 and b (x0 + 1) multiply to a, so both or neither are powers.
    const Index s1 = L.mul(b, solver.solve(k));
    return L.pow(s1, h) == 1 ? 2 * d : 0;
  });
  return 2 * axis + rest + d;
}

std::uint64_t count_artin_schreier_affine(const CurveModel& model, unsigned m) {
  const auto* as = std::get_if<ArtinSchreier>(&model.kind);
  if (!as) throw DomainError("operation needs the Artin-Schreier model");
  const std::uint64_t q = as->q;
  const unsigned e = families::log2_exact(q);
  const Ext x = extension(model.field, m, kFiberGuard);
  const ff::Field& L = *x.L;
  if (L.degree() % e != 0) throw DomainError("the counting field must contain F_q");
  const Index ab = x.emb.apply(model.field->add(as->alpha.index(), as->beta.index()));
  const Index beta = x.emb.apply(as->beta.index());
  std::uint64_t good = 0;
  for (Index w = 0; w < L.order(); ++w) {
    const Index wq1 = L.pow(w, q - 1);
    if (wq1 == 1) continue;
    const Index inner = L.div(beta, L.add(1, wq1));
    const Index r = L.add(L.mul(ab, w), L.mul(L.pow(w, q), trace_T(L, q, inner)));
    good += ff::rel_trace(L, q, r) == 0;
  }
  return good * q;
}

std::uint64_t count_points(const CurveModel& model, unsigned m, unsigned threads) {
  if (std::holds_alternative<Plane>(model.kind)) return count_plane_fibered(model, m, threads);
  return count_artin_schreier_affine(model, m);
}

}  // namespace excpoly::curves
