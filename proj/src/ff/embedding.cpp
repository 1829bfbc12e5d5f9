#include <algorithm>

#include "excpoly/ff.hpp"

namespace excpoly::ff {

namespace {

// Dense polynomials over a Field by index, low degree first. Enough to split
// a polynomial that factors into linear terms over the field.
using IPoly = std::vector<Index>;

void trim(IPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

IPoly rem(const Field& f, IPoly a, const IPoly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const Index lead_inv = f.inv(b.back());
  while (a.size() > db) {
    const Index c = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] = f.sub(a[shift + j], f.mul(c, b[j]));
    trim(a);
  }
  return a;
}

IPoly mulmod(const Field& f, const IPoly& a, const IPoly& b, const IPoly& m) {
  if (a.empty() || b.empty()) return {};
  IPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  return rem(f, std::move(r), m);
}

IPoly make_monic(const Field& f, IPoly a) {
  trim(a);
  if (a.empty()) return a;
  const Index li = f.inv(a.back());
  for (auto& c : a) c = f.mul(c, li);
  return a;
}

IPoly gcd(const Field& f, IPoly a, IPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    IPoly r = rem(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(f, std::move(a));
}

IPoly divide_exact(const Field& f, IPoly a, const IPoly& b) {
  const std::size_t db = b.size() - 1;
  IPoly q(a.size() - db, 0);
  const Index li = f.inv(b.back());
  for (std::size_t k = a.size(); k-- > db;) {
    const Index c = f.mul(a[k], li);
    q[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[k - db + j] = f.sub(a[k - db + j], f.mul(c, b[j]));
  }
  return q;
}

// Splitting polynomial for the seed d: Tr(d x) in characteristic 2,
// (x + d)^((Q-1)/2) - 1 otherwise, reduced modulo m.
IPoly splitter(const Field& f, Index d, const IPoly& m) {
  if (f.characteristic() == 2) {
    IPoly y = rem(f, {0, d}, m);
    IPoly t = y;
    for (unsigned i = 1; i < f.degree(); ++i) {
      y = mulmod(f, y, y, m);
      t.resize(std::max(t.size(), y.size()), 0);
      for (std::size_t j = 0; j < y.size(); ++j) t[j] = f.add(t[j], y[j]);
    }
    trim(t);
    return t;
  }
  IPoly base = rem(f, {d, 1}, m);
  IPoly r{1};
  std::uint64_t n = (f.order() - 1) / 2;
  while (n) {
    if (n & 1) r = mulmod(f, r, base, m);
    base = mulmod(f, base, base, m);
    n >>= 1;
  }
  r.resize(std::max<std::size_t>(r.size(), 1), 0);
  r[0] = f.sub(r[0], 1);
  trim(r);
  return r;
}

// All roots of a monic polynomial that splits into distinct linear factors.
void split_roots(const Field& f, const IPoly& m, std::vector<Index>& out) {
  if (m.size() == 2) {
    out.push_back(f.neg(m[0]));
    return;
  }
  // Seeds run over powers of the generator: the trace can vanish on every
  // low-index basis element, which makes small indices useless as seeds.
  Index d = 1;
  for (Index k = 1; k < f.order(); ++k, d = f.mul(d, f.generator())) {
    IPoly g = gcd(f, m, splitter(f, d, m));
    if (g.size() > 1 && g.size() < m.size()) {
      split_roots(f, g, out);
      split_roots(f, divide_exact(f, m, g), out);
      return;
    }
  }
  throw InternalError("failed to split polynomial into linear factors");
}

}  // namespace

Embedding::Embedding(FieldPtr source, FieldPtr target, Index generator_image)
    : source_(std::move(source)), target_(std::move(target)), gen_image_(generator_image) {
  const Field& s = *source_;
  const Field& t = *target_;
  if (s.characteristic() != t.characteristic())
    throw DomainError("embedding between fields of different characteristic");
  if (t.degree() % s.degree() != 0)
    throw DomainError("source degree does not divide target degree");
  const unsigned a = s.degree(), b = t.degree();
  const int p = static_cast<int>(s.characteristic());

  Index acc = 0;
  Index x = 1;
  for (unsigned i = 0; i <= a; ++i) {
    if (i < a) basis_images_.push_back(x);
    acc = t.add(acc, t.mul(t.from_int(s.modulus()[i]), x));
    x = t.mul(x, gen_image_);
  }
  if (acc != 0) throw DomainError("generator image is not a root of the source modulus");

  // Row-reduce [M | I], M the b x a matrix whose columns are basis images.
  std::vector<std::vector<int>> rows(b, std::vector<int>(a + b, 0));
  for (unsigned j = 0; j < a; ++j) {
    const auto c = t.coeffs(basis_images_[j]);
    for (unsigned i = 0; i < b; ++i) rows[i][j] = c[i];
  }
  for (unsigned i = 0; i < b; ++i) rows[i][a + i] = 1;
  unsigned r = 0;
  for (unsigned col = 0; col < a; ++col) {
    unsigned piv = r;
    while (piv < b && rows[piv][col] == 0) ++piv;
    if (piv == b) throw InternalError("embedding basis is not independent");
    std::swap(rows[r], rows[piv]);
    const int inv = rows[r][col] == 1 ? 1 : 2;  // p <= 3
    for (auto& v : rows[r]) v = v * inv % p;
    for (unsigned i = 0; i < b; ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const int c = rows[i][col];
      for (unsigned k = 0; k < a + b; ++k) rows[i][k] = ((rows[i][k] - c * rows[r][k]) % p + p) % p;
    }
    ++r;
  }
  reducer_.resize(b);
  for (unsigned i = 0; i < b; ++i) reducer_[i].assign(rows[i].begin() + a, rows[i].end());
}

Index Embedding::apply(Index a) const {
  const Field& t = *target_;
  const auto c = source_->coeffs(a);
  Index r = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 1) r = t.add(r, basis_images_[i]);
    else if (c[i] == 2) r = t.sub(r, basis_images_[i]);
  }
  return r;
}

FieldElem Embedding::operator()(const FieldElem& a) const {
  require_same(a.field(), source_);
  return {target_, apply(a.index())};
}

std::optional<Index> Embedding::preimage(Index x) const {
  const unsigned a = source_->degree(), b = target_->degree();
  const int p = static_cast<int>(source_->characteristic());
  const auto y = target_->coeffs(x);
  std::vector<int> c(a, 0);
  for (unsigned i = 0; i < b; ++i) {
    int z = 0;
    for (unsigned k = 0; k < b; ++k) z += reducer_[i][k] * y[k];
    z %= p;
    if (i < a) c[i] = z;
    else if (z != 0) return std::nullopt;
  }
  return source_->from_coeffs(c);
}

Embedding embed(const FieldPtr& sub, const FieldPtr& sup) {
  if (sub->characteristic() != sup->characteristic())
    throw DomainError("embedding between fields of different characteristic");
  if (sup->degree() % sub->degree() != 0)
    throw DomainError("source degree does not divide target degree");
  const Field& t = *sup;
  IPoly m;
  for (int c : sub->modulus()) m.push_back(t.from_int(c));
  std::vector<Index> roots;
  split_roots(t, m, roots);
  return Embedding(sub, sup, *std::min_element(roots.begin(), roots.end()));
}

}  // namespace excpoly::ff
