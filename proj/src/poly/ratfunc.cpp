#include "excpoly/ratfunc.hpp"

namespace excpoly::poly {

RatFunc::RatFunc(FieldPtr field) : num_(field), den_(UniPoly::constant(field, 1)) {}

RatFunc::RatFunc(UniPoly num) : num_(std::move(num)), den_(UniPoly::constant(num_.field(), 1)) {}

RatFunc::RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
  ff::require_same(num_.field(), den_.field());
  if (den_.is_zero()) throw ZeroDivisionError("rational function with zero denominator");
  normalize();
}

RatFunc RatFunc::constant(FieldPtr field, Index c) {
  return RatFunc(UniPoly::constant(std::move(field), c));
}

RatFunc RatFunc::var(FieldPtr field) { return RatFunc(UniPoly::x(std::move(field))); }

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = UniPoly::constant(num_.field(), 1);
    return;
  }
  if (den_.degree() > 0) {
    const UniPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  const Index l = den_.lead();
  if (l != 1) {
    const Index li = num_.f().inv(l);
    num_ = num_.scale(li);
    den_ = den_.scale(li);
  }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator-() const {
  RatFunc r(*this);
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return RatFunc(num_.field());
  // Cross-cancel before multiplying to keep intermediate degrees small.
  const UniPoly g1 = gcd(num_, o.den_);
  const UniPoly g2 = gcd(o.num_, den_);
  RatFunc r(num_.field());
  r.num_ = exact_div(num_, g1) * exact_div(o.num_, g2);
  r.den_ = exact_div(den_, g2) * exact_div(o.den_, g1);
  const Index l = r.den_.lead();
  if (l != 1) {
    const Index li = r.num_.f().inv(l);
    r.num_ = r.num_.scale(li);
    r.den_ = r.den_.scale(li);
  }
  return r;
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inv(); }

RatFunc RatFunc::scale(Index c) const {
  if (c == 0) return RatFunc(num_.field());
  RatFunc r(*this);
  r.num_ = r.num_.scale(c);
  return r;
}

RatFunc RatFunc::inv() const {
  if (is_zero()) throw ZeroDivisionError("inverse of the zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::square() const {
  if (num_.f().characteristic() != 2) return *this * *this;
  RatFunc r(num_.field());
  r.num_ = num_.square();
  r.den_ = den_.square();
  return r;
}

RatFunc RatFunc::pow(long n) const {
  if (n < 0) return inv().pow(-n);
  RatFunc r = constant(num_.field(), 1), b = *this;
  auto m = static_cast<unsigned long>(n);
  while (m) {
    if (m & 1) r = r * b;
    m >>= 1;
    if (m) b = b.square();
  }
  return r;
}

RatFunc RatFunc::compose(const RatFunc& g) const {
  auto horner = [&](const UniPoly& p) {
    RatFunc acc(num_.field());
    for (std::size_t i = p.coeffs().size(); i-- > 0;)
      acc = acc * g + constant(num_.field(), p.coeffs()[i]);
    return acc;
  };
  return horner(num_) / horner(den_);
}

std::optional<Index> RatFunc::eval(Index x) const {
  const Index d = den_.eval(x);
  if (d == 0) return std::nullopt;
  return num_.f().div(num_.eval(x), d);
}

FFElem::FFElem(FunctionFieldPtr ff, std::vector<RatFunc> coeffs)
    : ff_(std::move(ff)), c_(std::move(coeffs)) {
  if (c_.size() != ff_->degree()) throw InternalError("function field element has wrong length");
}

bool FFElem::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

FFElem FFElem::operator+(const FFElem& o) const {
  std::vector<RatFunc> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] + o.c_[i];
  return {ff_, std::move(r)};
}

FFElem FFElem::operator-(const FFElem& o) const {
  std::vector<RatFunc> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] - o.c_[i];
  return {ff_, std::move(r)};
}

FFElem FFElem::operator-() const {
  std::vector<RatFunc> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
  return {ff_, std::move(r)};
}

FFElem FFElem::operator*(const FFElem& o) const {
  const std::size_t n = c_.size();
  std::vector<RatFunc> r(2 * n - 1, RatFunc(ff_->constants()));
  for (std::size_t i = 0; i < n; ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (o.c_[j].is_zero()) continue;
      r[i + j] += c_[i] * o.c_[j];
    }
  }
  return ff_->reduce(std::move(r));
}

FFElem FFElem::scale(const RatFunc& c) const {
  std::vector<RatFunc> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * c;
  return {ff_, std::move(r)};
}

FFElem FFElem::scale(Index c) const {
  std::vector<RatFunc> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i].scale(c);
  return {ff_, std::move(r)};
}

FFElem FFElem::square() const {
  if (ff_->constants()->characteristic() != 2) return *this * *this;
  const std::size_t n = c_.size();
  std::vector<RatFunc> r(2 * n - 1, RatFunc(ff_->constants()));
  for (std::size_t i = 0; i < n; ++i) r[2 * i] = c_[i].square();
  return ff_->reduce(std::move(r));
}

FFElem FFElem::pow(std::uint64_t n) const {
  FFElem r = ff_->one(), b = *this;
  while (n) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n) b = b.square();
  }
  return r;
}

FunctionFieldPtr FunctionField::make(FieldPtr constants, std::vector<RatFunc> relation) {
  if (relation.empty()) throw DomainError("function field relation must have positive degree");
  for (const auto& r : relation) ff::require_same(constants, r.field());
  return FunctionFieldPtr(new FunctionField(std::move(constants), std::move(relation)));
}

FFElem FunctionField::zero() const {
  return {shared_from_this(), std::vector<RatFunc>(degree(), RatFunc(k_))};
}

FFElem FunctionField::one() const { return constant(1); }

FFElem FunctionField::constant(Index c) const { return base(RatFunc::constant(k_, c)); }

FFElem FunctionField::gen() const {
  std::vector<RatFunc> c{RatFunc(k_), RatFunc::constant(k_, 1)};
  return reduce(std::move(c));
}

FFElem FunctionField::base(const RatFunc& r) const {
  std::vector<RatFunc> c(degree(), RatFunc(k_));
  c[0] = r;
  return {shared_from_this(), std::move(c)};
}

FFElem FunctionField::base_var() const { return base(RatFunc::var(k_)); }

FFElem FunctionField::reduce(std::vector<RatFunc> c) const {
  const std::size_t n = degree();
  for (std::size_t k = c.size(); k-- > n;) {
    if (c[k].is_zero()) continue;
    const RatFunc top = c[k];
    for (std::size_t i = 0; i < n; ++i) {
      if (rel_[i].is_zero()) continue;
      c[k - n + i] += top * rel_[i];
    }
  }
  c.resize(n, RatFunc(k_));
  return {shared_from_this(), std::move(c)};
}

}  // namespace excpoly::poly
