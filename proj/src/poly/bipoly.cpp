#include <algorithm>

#include "excpoly/bipoly.hpp"

namespace excpoly::poly {

BiPoly::BiPoly(FieldPtr field) : field_(std::move(field)) {
  if (!field_) throw DomainError("polynomial without a field");
}

BiPoly BiPoly::constant(FieldPtr field, Index c) { return monomial(std::move(field), c, 0, 0); }

BiPoly BiPoly::monomial(FieldPtr field, Index c, unsigned i, unsigned j) {
  BiPoly r(std::move(field));
  if (!r.field_->contains(c)) throw DomainError("coefficient index out of range");
  r.add_term(i, j, c);
  return r;
}

BiPoly BiPoly::in_x(const UniPoly& f) {
  BiPoly r(f.field());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i)
    r.add_term(static_cast<unsigned>(i), 0, f.coeffs()[i]);
  return r;
}

BiPoly BiPoly::in_y(const UniPoly& f) { return in_x(f).swap_xy(); }

Index BiPoly::coeff(unsigned i, unsigned j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? 0 : it->second;
}

long BiPoly::total_degree() const {
  long d = -1;
  for (const auto& [k, c] : terms_) d = std::max<long>(d, k.first + k.second);
  return d;
}

long BiPoly::degree_x() const {
  long d = -1;
  for (const auto& [k, c] : terms_) d = std::max<long>(d, k.first);
  return d;
}

long BiPoly::degree_y() const {
  long d = -1;
  for (const auto& [k, c] : terms_) d = std::max<long>(d, k.second);
  return d;
}

void BiPoly::add_term(unsigned i, unsigned j, Index c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (inserted) return;
  it->second = field_->add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  ff::require_same(field_, o.field_);
  BiPoly r(*this);
  for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
  return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
  ff::require_same(field_, o.field_);
  BiPoly r(*this);
  for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, field_->neg(c));
  return r;
}

BiPoly BiPoly::operator-() const {
  BiPoly r(*this);
  for (auto& [k, c] : r.terms_) c = field_->neg(c);
  return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  ff::require_same(field_, o.field_);
  BiPoly r(field_);
  const Field& F = *field_;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_)
      r.add_term(ka.first + kb.first, ka.second + kb.second, F.mul(ca, cb));
  return r;
}

BiPoly BiPoly::scale(Index c) const {
  BiPoly r(field_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& [k, v] : r.terms_) v = field_->mul(v, c);
  return r;
}

BiPoly BiPoly::square() const {
  if (field_->characteristic() != 2) return *this * *this;
  BiPoly r(field_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(Key{2 * k.first, 2 * k.second}, field_->mul(c, c));
  return r;
}

BiPoly BiPoly::pow(std::uint64_t n) const {
  BiPoly r = constant(field_, 1), b = *this;
  while (n) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n) b = b.square();
  }
  return r;
}

BiPoly BiPoly::swap_xy() const {
  BiPoly r(field_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(Key{k.second, k.first}, c);
  return r;
}

Index BiPoly::eval(Index x, Index y) const {
  const Field& F = *field_;
  Index acc = 0;
  for (const auto& [k, c] : terms_) acc = F.add(acc, F.mul(c, F.mul(F.pow(x, k.first), F.pow(y, k.second))));
  return acc;
}

UniPoly BiPoly::at_x(Index x) const {
  const Field& F = *field_;
  std::vector<Index> v(static_cast<std::size_t>(std::max<long>(degree_y() + 1, 0)), 0);
  for (const auto& [k, c] : terms_) v[k.second] = F.add(v[k.second], F.mul(c, F.pow(x, k.first)));
  return {field_, std::move(v)};
}

UniPoly BiPoly::at_y(Index y) const { return swap_xy().at_x(y); }

BiPoly BiPoly::map(const ff::Embedding& emb) const {
  ff::require_same(field_, emb.source());
  BiPoly r(emb.target());
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, emb.apply(c));
  return r;
}

namespace {

template <class P>
const P& power_of(std::vector<P>& cache, unsigned n) {
  while (cache.size() <= n) cache.push_back(cache.back() * cache[1]);
  return cache[n];
}

}  // namespace

BiPoly substitute(const BiPoly& a, const BiPoly& x_val, const BiPoly& y_val) {
  ff::require_same(a.field(), x_val.field());
  ff::require_same(a.field(), y_val.field());
  std::vector<BiPoly> xp{BiPoly::constant(a.field(), 1), x_val};
  std::vector<BiPoly> yp{BiPoly::constant(a.field(), 1), y_val};
  BiPoly r(a.field());
  for (const auto& [k, c] : a.terms())
    r += (power_of(xp, k.first) * power_of(yp, k.second)).scale(c);
  return r;
}

UniPoly substitute(const BiPoly& a, const UniPoly& x_val, const UniPoly& y_val) {
  ff::require_same(a.field(), x_val.field());
  ff::require_same(a.field(), y_val.field());
  std::vector<UniPoly> xp{UniPoly::constant(a.field(), 1), x_val};
  std::vector<UniPoly> yp{UniPoly::constant(a.field(), 1), y_val};
  UniPoly r(a.field());
  for (const auto& [k, c] : a.terms())
    r += (power_of(xp, k.first) * power_of(yp, k.second)).scale(c);
  return r;
}

RationalValue RationalValue::polynomial(const BiPoly& p) {
  return {p, BiPoly::constant(p.field(), 1), 0};
}

BiPoly substitute(const BiPoly& a, const RationalValue& x_val, const RationalValue& y_val) {
  const bool x_rational = !(x_val.den.size() == 1 && x_val.den.coeff(0, 0) == 1);
  const bool y_rational = !(y_val.den.size() == 1 && y_val.den.coeff(0, 0) == 1);
  const unsigned px = x_rational ? x_val.clear_power : static_cast<unsigned>(std::max(a.degree_x(), 0L));
  const unsigned py = y_rational ? y_val.clear_power : static_cast<unsigned>(std::max(a.degree_y(), 0L));
  if (a.degree_x() > static_cast<long>(px) || a.degree_y() > static_cast<long>(py))
    throw DomainError("denominator power not declared for rational substitution");
  const FieldPtr& f = a.field();
  std::vector<BiPoly> xn{BiPoly::constant(f, 1), x_val.num}, xd{BiPoly::constant(f, 1), x_val.den};
  std::vector<BiPoly> yn{BiPoly::constant(f, 1), y_val.num}, yd{BiPoly::constant(f, 1), y_val.den};
  BiPoly r(f);
  for (const auto& [k, c] : a.terms()) {
    BiPoly term = power_of(xn, k.first) * power_of(yn, k.second);
    if (x_rational) term *= power_of(xd, px - k.first);
    if (y_rational) term *= power_of(yd, py - k.second);
    r += term.scale(c);
  }
  return r;
}

}  // namespace excpoly::poly
