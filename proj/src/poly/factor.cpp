#include <algorithm>
#include <random>

#include "excpoly/poly.hpp"

namespace excpoly::poly {

namespace {

bool poly_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(),
                                      b.coeffs().rbegin(), b.coeffs().rend());
}

// h -> h^Q mod f as a linear map: rows[i] = X^(iQ) mod f.
class FrobeniusMap {
 public:
  explicit FrobeniusMap(const UniPoly& f) : f_(f) {
    const auto n = static_cast<std::size_t>(f.degree());
    const UniPoly xq = frobenius_power(f, f.f().degree());
    rows_.reserve(n);
    UniPoly r = UniPoly::constant(f.field(), 1);
    for (std::size_t i = 0; i < n; ++i) {
      rows_.push_back(r.coeffs());
      rows_.back().resize(n, 0);
      r = mulmod(r, xq, f);
    }
  }

  UniPoly apply(const UniPoly& h) const {
    const Field& F = f_.f();
    const std::size_t n = rows_.size();
    std::vector<Index> out(n, 0);
    for (std::size_t i = 0; i < h.coeffs().size(); ++i) {
      const Index a = h.coeffs()[i];
      if (!a) continue;
      const auto& row = rows_[i];
      for (std::size_t j = 0; j < n; ++j) out[j] = F.add(out[j], F.mul(a, row[j]));
    }
    return {f_.field(), std::move(out)};
  }

 private:
  UniPoly f_;
  std::vector<std::vector<Index>> rows_;
};

UniPoly random_poly(const FieldPtr& field, std::size_t n, std::mt19937_64& rng) {
  std::vector<Index> v(n);
  for (auto& c : v) c = rng() % field->order();
  return {field, std::move(v)};
}

void edf(const UniPoly& f, unsigned d, std::mt19937_64& rng, std::vector<UniPoly>& out) {
  const auto n = static_cast<std::size_t>(f.degree());
  if (n == d) {
    out.push_back(f);
    return;
  }
  const Field& F = f.f();
  for (int attempt = 0; attempt < 4096; ++attempt) {
    const UniPoly h = random_poly(f.field(), n, rng);
    if (h.degree() < 1) continue;
    UniPoly s(f.field());
    if (F.characteristic() == 2) {
      UniPoly y = h;
      s = h;
      const unsigned steps = F.degree() * d;
      for (unsigned i = 1; i < steps; ++i) {
        y = rem(y.square(), f);
        s += y;
      }
    } else {
      BigInt qd = 1;
      for (unsigned i = 0; i < d; ++i) qd *= F.order();
      s = pow_mod(h, (qd - 1) / 2, f) - UniPoly::constant(f.field(), 1);
    }
    const UniPoly g = gcd(f, s);
    if (g.degree() > 0 && g.degree() < static_cast<long>(n)) {
      edf(g, d, rng, out);
      edf(exact_div(f, g), d, rng, out);
      return;
    }
  }
  throw InternalError("equal-degree splitting did not converge");
}

}  // namespace

std::vector<Factor> squarefree_decomposition(const UniPoly& f) {
  if (f.is_zero()) throw ZeroDivisionError("squarefree decomposition of zero");
  std::vector<Factor> out;
  if (f.degree() == 0) return out;
  const UniPoly fm = f.monic();
  UniPoly c = gcd(fm, fm.derivative());
  UniPoly w = exact_div(fm, c);
  unsigned i = 1;
  while (w.degree() > 0) {
    const UniPoly y = gcd(w, c);
    const UniPoly fac = exact_div(w, y);
    if (fac.degree() > 0) out.push_back({fac, i});
    w = y;
    c = exact_div(c, y);
    ++i;
  }
  if (c.degree() > 0) {
    const unsigned p = f.f().characteristic();
    for (auto& part : squarefree_decomposition(pth_root(c)))
      out.push_back({std::move(part.poly), part.multiplicity * p});
  }
  std::sort(out.begin(), out.end(),
            [](const Factor& a, const Factor& b) { return a.multiplicity < b.multiplicity; });
  return out;
}

std::vector<std::pair<UniPoly, unsigned>> distinct_degree(const UniPoly& f) {
  std::vector<std::pair<UniPoly, unsigned>> out;
  if (f.degree() <= 0) return out;
  const FrobeniusMap frob(f);
  const UniPoly x = rem(UniPoly::x(f.field()), f);
  UniPoly h = x;
  UniPoly rest = f;
  for (unsigned d = 1; 2 * d <= static_cast<unsigned>(rest.degree()); ++d) {
    h = frob.apply(h);
    const UniPoly g = gcd(rest, h - x);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      rest = exact_div(rest, g);
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest, static_cast<unsigned>(rest.degree()));
  return out;
}

std::vector<UniPoly> equal_degree(const UniPoly& f, unsigned d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<UniPoly> out;
  edf(f, d, rng, out);
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

UniPoly Factorization::reassemble(const FieldPtr& field) const {
  UniPoly r = UniPoly::constant(field, unit);
  for (const auto& fac : factors) r = r * pow(fac.poly, fac.multiplicity);
  return r;
}

Factorization factor(const UniPoly& f, std::uint64_t seed) {
  if (f.is_zero()) throw ZeroDivisionError("factorization of the zero polynomial");
  Factorization out;
  out.unit = f.lead();
  std::mt19937_64 rng(seed);
  for (const auto& part : squarefree_decomposition(f)) {
    for (const auto& [g, d] : distinct_degree(part.poly)) {
      std::vector<UniPoly> pieces;
      edf(g, d, rng, pieces);
      for (auto& piece : pieces) out.factors.push_back({std::move(piece), part.multiplicity});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const Factor& a, const Factor& b) { return poly_less(a.poly, b.poly); });
  return out;
}

bool is_irreducible(const UniPoly& f) {
  if (f.degree() < 1) return false;
  if (!is_squarefree(f)) return false;
  const auto ddf = distinct_degree(f.monic());
  return ddf.size() == 1 && ddf[0].first.degree() == static_cast<long>(ddf[0].second);
}

bool is_squarefree(const UniPoly& f) {
  if (f.is_zero()) return false;
  if (f.degree() == 0) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

std::vector<unsigned> factor_shape(const UniPoly& f) {
  UniPoly radical = UniPoly::constant(f.field(), 1);
  for (const auto& part : squarefree_decomposition(f)) radical = radical * part.poly;
  std::vector<unsigned> shape;
  for (const auto& [g, d] : distinct_degree(radical))
    for (long k = 0; k < g.degree() / static_cast<long>(d); ++k) shape.push_back(d);
  std::sort(shape.begin(), shape.end());
  return shape;
}

std::vector<Index> roots(const UniPoly& f, std::uint64_t seed) {
  if (f.is_zero()) throw ZeroDivisionError("roots of the zero polynomial");
  std::vector<Index> out;
  if (f.degree() <= 0) return out;
  const UniPoly fm = f.monic();
  const UniPoly xq = frobenius_power(fm, fm.f().degree());
  const UniPoly g = gcd(fm, xq - UniPoly::x(fm.field()));
  if (g.degree() <= 0) return out;
  const Field& F = f.f();
  for (const auto& lin : equal_degree(g, 1, seed)) {
    const Index r = F.neg(lin.coeff(0));
    UniPoly rest = fm;
    while (true) {
      auto [q, rm] = divmod(rest, lin);
      if (!rm.is_zero()) break;
      out.push_back(r);
      rest = std::move(q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Index> roots(const UniPoly& f, const ff::Embedding& emb, std::uint64_t seed) {
  return roots(f.map(emb), seed);
}

std::size_t count_distinct_roots(const UniPoly& f) {
  if (f.is_zero()) throw ZeroDivisionError("roots of the zero polynomial");
  if (f.degree() <= 0) return 0;
  const UniPoly fm = f.monic();
  const UniPoly xq = frobenius_power(fm, fm.f().degree());
  return static_cast<std::size_t>(gcd(fm, xq - UniPoly::x(fm.field())).degree());
}

}  // namespace excpoly::poly
