#include <algorithm>

#include "excpoly/poly.hpp"

namespace excpoly::poly {

UniPoly::UniPoly(FieldPtr field) : field_(std::move(field)) {
  if (!field_) throw DomainError("polynomial without a field");
}

UniPoly::UniPoly(FieldPtr field, std::vector<Index> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  if (!field_) throw DomainError("polynomial without a field");
  for (Index c : c_)
    if (!field_->contains(c)) throw DomainError("coefficient index out of range");
  trim();
}

UniPoly UniPoly::constant(FieldPtr field, Index c) { return {std::move(field), {c}}; }

UniPoly UniPoly::monomial(FieldPtr field, Index c, std::size_t n) {
  std::vector<Index> v(n + 1, 0);
  v[n] = c;
  return {std::move(field), std::move(v)};
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  ff::require_same(field_, o.field_);
  const Field& F = *field_;
  UniPoly r(field_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = F.add(coeff(i), o.coeff(i));
  r.trim();
  return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  ff::require_same(field_, o.field_);
  const Field& F = *field_;
  UniPoly r(field_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = F.sub(coeff(i), o.coeff(i));
  r.trim();
  return r;
}

UniPoly UniPoly::operator-() const {
  UniPoly r(*this);
  for (auto& c : r.c_) c = field_->neg(c);
  return r;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  ff::require_same(field_, o.field_);
  UniPoly r(field_);
  if (c_.empty() || o.c_.empty()) return r;
  const Field& F = *field_;
  r.c_.assign(c_.size() + o.c_.size() - 1, 0);
  if (F.characteristic() == 2) {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      const Index a = c_[i];
      if (!a) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] ^= F.mul(a, o.c_[j]);
    }
  } else {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      const Index a = c_[i];
      if (!a) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j)
        r.c_[i + j] = F.add(r.c_[i + j], F.mul(a, o.c_[j]));
    }
  }
  r.trim();
  return r;
}

UniPoly UniPoly::square() const {
  if (field_->characteristic() != 2) return *this * *this;
  UniPoly r(field_);
  if (c_.empty()) return r;
  r.c_.assign(2 * c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[2 * i] = field_->mul(c_[i], c_[i]);
  return r;
}

UniPoly UniPoly::scale(Index c) const {
  UniPoly r(field_);
  if (c == 0) return r;
  r.c_ = c_;
  for (auto& x : r.c_) x = field_->mul(x, c);
  return r;
}

UniPoly UniPoly::shift(std::size_t n) const {
  UniPoly r(field_);
  if (c_.empty()) return r;
  r.c_.assign(n, 0);
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) throw ZeroDivisionError("zero polynomial has no monic associate");
  return scale(field_->inv(c_.back()));
}

UniPoly UniPoly::derivative() const {
  UniPoly r(field_);
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    r.c_[i - 1] = field_->mul(c_[i], field_->from_int(static_cast<long long>(i)));
  r.trim();
  return r;
}

Index UniPoly::eval(Index x) const {
  const Field& F = *field_;
  Index acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = F.add(F.mul(acc, x), c_[i]);
  return acc;
}

FieldElem UniPoly::eval(const FieldElem& x) const {
  ff::require_same(field_, x.field());
  return {field_, eval(x.index())};
}

FieldElem UniPoly::eval(const ff::Embedding& emb, const FieldElem& x) const {
  ff::require_same(field_, emb.source());
  ff::require_same(emb.target(), x.field());
  const Field& F = *emb.target();
  Index acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = F.add(F.mul(acc, x.index()), emb.apply(c_[i]));
  return {emb.target(), acc};
}

UniPoly UniPoly::compose(const UniPoly& g) const {
  ff::require_same(field_, g.field_);
  UniPoly acc(field_);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * g + constant(field_, c_[i]);
  return acc;
}

UniPoly UniPoly::map(const ff::Embedding& emb) const {
  ff::require_same(field_, emb.source());
  std::vector<Index> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = emb.apply(c_[i]);
  return {emb.target(), std::move(v)};
}

UniPoly UniPoly::pullback(const ff::Embedding& emb) const {
  ff::require_same(field_, emb.target());
  std::vector<Index> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    auto pre = emb.preimage(c_[i]);
    if (!pre) throw DomainError("coefficient does not lie in the subfield");
    v[i] = *pre;
  }
  return {emb.source(), std::move(v)};
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& f, const UniPoly& g) {
  ff::require_same(f.field(), g.field());
  if (g.is_zero()) throw ZeroDivisionError("division by the zero polynomial");
  const Field& F = f.f();
  std::vector<Index> r = f.coeffs();
  const auto& b = g.coeffs();
  const std::size_t db = b.size() - 1;
  if (r.size() <= db) return {UniPoly(f.field()), f};
  std::vector<Index> q(r.size() - db, 0);
  const Index li = F.inv(b.back());
  for (std::size_t k = r.size(); k-- > db;) {
    const Index c = li == 1 ? r[k] : F.mul(r[k], li);
    q[k - db] = c;
    if (!c) continue;
    for (std::size_t j = 0; j < db; ++j) r[k - db + j] = F.sub(r[k - db + j], F.mul(c, b[j]));
    r[k] = 0;
  }
  r.resize(db);
  return {UniPoly(f.field(), std::move(q)), UniPoly(f.field(), std::move(r))};
}

UniPoly rem(const UniPoly& f, const UniPoly& g) {
  if (f.degree() < g.degree() && !g.is_zero()) return f;
  return divmod(f, g).second;
}

UniPoly exact_div(const UniPoly& f, const UniPoly& g) {
  auto [q, r] = divmod(f, g);
  if (!r.is_zero()) throw InternalError("polynomial division left a remainder");
  return q;
}

UniPoly gcd(const UniPoly& f, const UniPoly& g) {
  ff::require_same(f.field(), g.field());
  UniPoly a = f, b = g;
  while (!b.is_zero()) {
    UniPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

UniPoly pow(const UniPoly& f, std::uint64_t n) {
  UniPoly r = UniPoly::constant(f.field(), 1), b = f;
  while (n) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n) b = b.square();
  }
  return r;
}

UniPoly mulmod(const UniPoly& a, const UniPoly& b, const UniPoly& m) { return rem(a * b, m); }

UniPoly pow_mod(const UniPoly& f, const BigInt& n, const UniPoly& m) {
  if (n < 0) throw DomainError("negative exponent");
  UniPoly r = rem(UniPoly::constant(f.field(), 1), m), b = rem(f, m);
  const std::size_t bits = n == 0 ? 0 : boost::multiprecision::msb(n) + 1;
  for (std::size_t i = bits; i-- > 0;) {
    r = rem(r.square(), m);
    if (boost::multiprecision::bit_test(n, static_cast<unsigned>(i))) r = mulmod(r, b, m);
  }
  return r;
}

UniPoly frobenius_power(const UniPoly& m, unsigned k) {
  const unsigned p = m.f().characteristic();
  UniPoly x = rem(UniPoly::x(m.field()), m);
  for (unsigned i = 0; i < k; ++i) {
    if (p == 2) {
      x = rem(x.square(), m);
    } else {
      x = rem(x * rem(x.square(), m), m);
    }
  }
  return x;
}

UniPoly pth_root(const UniPoly& f) {
  const Field& F = f.f();
  const unsigned p = F.characteristic();
  std::vector<Index> v;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i % p != 0) {
      if (f.coeffs()[i] != 0) throw DomainError("polynomial is not a p-th power");
      continue;
    }
    v.push_back(F.frobenius(f.coeffs()[i], F.degree() - 1));
  }
  return {f.field(), std::move(v)};
}

}  // namespace excpoly::poly
