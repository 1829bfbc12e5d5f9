#include <Eigen/Eigenvalues>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>

#include "excpoly/curves.hpp"

namespace excpoly::curves {

namespace {

BigInt big_pow(std::uint64_t b, unsigned n) {
  BigInt r = 1;
  for (unsigned i = 0; i < n; ++i) r *= b;
  return r;
}

// Power sums S_1..S_n of the reciprocal roots from L = 1 + a_1 T + ...
std::vector<BigInt> power_sums(const std::vector<BigInt>& a, unsigned n) {
  std::vector<BigInt> s(n + 1, 0);
  for (unsigned k = 1; k <= n; ++k) {
    BigInt acc = k < a.size() ? BigInt(-BigInt(k) * a[k]) : BigInt(0);
    for (unsigned i = 1; i < k; ++i)
      if (k - i < a.size()) acc -= s[i] * a[k - i];
    s[k] = acc;
  }
  return s;
}

using Rat = boost::multiprecision::cpp_rational;
using RatPoly = std::vector<Rat>;  // ascending coefficients

void trim(RatPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

RatPoly rat_rem(RatPoly f, const RatPoly& g) {
  while (f.size() >= g.size()) {
    const Rat c = f.back() / g.back();
    const std::size_t off = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) f[off + i] -= c * g[i];
    f.pop_back();
    trim(f);
  }
  return f;
}

RatPoly rat_div(RatPoly f, const RatPoly& g) {
  RatPoly q(f.size() - g.size() + 1, 0);
  while (f.size() >= g.size()) {
    const Rat c = f.back() / g.back();
    const std::size_t off = f.size() - g.size();
    q[off] = c;
    for (std::size_t i = 0; i < g.size(); ++i) f[off + i] -= c * g[i];
    f.pop_back();
  }
  return q;
}

// f / gcd(f, f'): the same roots, each simple. Repeated reciprocal roots are
// common here (large automorphism groups), and eigenvalues of a companion
// matrix lose accuracy at multiple roots.
RatPoly squarefree_part(const RatPoly& f) {
  RatPoly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<unsigned>(i));
  trim(d);
  RatPoly a = f, b = d;
  while (!b.empty()) {
    RatPoly r = rat_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return rat_div(f, a);
}

// Largest deviation of |root| / sqrt(base) from 1 over the roots of
// x^(2g) L(1/x).
double radius_error(const std::vector<BigInt>& a, std::uint64_t base) {
  using Mat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  RatPoly f(a.rbegin(), a.rend());
  trim(f);
  f = squarefree_part(f);
  const long n = static_cast<long>(f.size()) - 1;
  if (n <= 0) return 0;
  Mat comp = Mat::Zero(n, n);
  for (long i = 1; i < n; ++i) comp(i, i - 1) = 1;
  for (long i = 0; i < n; ++i) comp(i, n - 1) = -static_cast<long double>(f[i] / f[n]);
  Eigen::EigenSolver<Mat> solver(comp, false);
  const long double r = std::sqrt(static_cast<long double>(base));
  long double worst = 0;
  for (long i = 0; i < n; ++i) worst = std::max(worst, std::abs(std::abs(solver.eigenvalues()[i]) / r - 1));
  return static_cast<double>(worst);
}

}  // namespace

ZetaData zeta_from_counts(std::uint64_t base, unsigned p,
                          const std::vector<std::uint64_t>& counts) {
  if (base < 2) throw DomainError("zeta base must be a prime power");
  ZetaData z;
  z.base = base;
  z.counts = counts;
  z.g = static_cast<unsigned>(counts.size());
  const unsigned g = z.g;

  std::vector<BigInt> s(g + 1, 0);
  for (unsigned m = 1; m <= g; ++m) s[m] = big_pow(base, m) + 1 - BigInt(counts[m - 1]);

  std::vector<BigInt> a(2 * g + 1, 0);
  a[0] = 1;
  for (unsigned k = 1; k <= g; ++k) {
    BigInt acc = 0;
    for (unsigned i = 1; i <= k; ++i) acc -= s[i] * a[k - i];
    if (acc % k != 0)
      throw InternalError("point counts admit no integral L-polynomial (coefficient " +
                          std::to_string(k) + ")");
    a[k] = acc / k;
  }
  for (unsigned i = 0; i < g; ++i) a[2 * g - i] = big_pow(base, g - i) * a[i];
  z.L = a;

  bool fe = true;
  for (unsigned i = 0; i <= 2 * g; ++i)
    if (i > g && a[i] != big_pow(base, i - g) * a[2 * g - i]) fe = false;
  z.functional_equation = fe && a[2 * g] == big_pow(base, g);
  z.genus = z.functional_equation ? g : 0;

  const auto back = power_sums(a, g);
  z.counts_reproduced = true;
  for (unsigned m = 1; m <= g; ++m)
    if (big_pow(base, m) + 1 - back[m] != BigInt(counts[m - 1])) z.counts_reproduced = false;

  z.max_radius_error = radius_error(a, base);
  z.radii_ok = z.max_radius_error < 1e-6;

  z.p_rank = 0;
  for (unsigned k = 0; k <= 2 * g; ++k)
    if (a[k] % p != 0) z.p_rank = k;
  z.L_at_1 = 0;
  for (const auto& c : a) z.L_at_1 += c;
  return z;
}

ZetaData zeta(const CurveModel& model, unsigned g, unsigned threads) {
  if (!std::holds_alternative<Plane>(model.kind))
    throw DomainError("zeta needs the plane model");
  if (g == 0) throw DomainError("zeta needs g >= 1");
  std::vector<std::uint64_t> counts;
  for (unsigned m = 1; m <= g; ++m) counts.push_back(count_plane_fibered(model, m, threads));
  return zeta_from_counts(model.field->order(), 2, counts);
}

}  // namespace excpoly::curves
