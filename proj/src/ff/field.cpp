#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "excpoly/ff.hpp"

#if defined(__PCLMUL__)
#include <wmmintrin.h>
#endif

namespace excpoly::ff {

namespace {

inline std::uint64_t clmul32(std::uint64_t a, std::uint64_t b) {
#if defined(__PCLMUL__)
  __m128i r = _mm_clmulepi64_si128(_mm_cvtsi64_si128(static_cast<long long>(a)),
                                   _mm_cvtsi64_si128(static_cast<long long>(b)), 0);
  return static_cast<std::uint64_t>(_mm_cvtsi128_si64(r));
#else
  std::uint64_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
#endif
}

// Dense polynomials over F_p, low degree first; used only for modulus checks.
using FpPoly = std::vector<int>;

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int inv_mod(int a, int p) {
  for (int x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  throw InternalError("no inverse mod p");
}

FpPoly fp_rem(FpPoly a, const FpPoly& b, int p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const int lead_inv = inv_mod(b.back(), p);
  while (a.size() > db) {
    const int c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t j = 0; j <= db; ++j)
      a[shift + j] = ((a[shift + j] - c * b[j]) % p + p) % p;
    trim(a);
  }
  return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, int p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FpPoly r = fp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::mutex& prime_cache_mutex() {
  static std::mutex m;
  return m;
}

const std::vector<std::uint64_t>& cached_primes(std::uint64_t n) {
  static std::map<std::uint64_t, std::vector<std::uint64_t>> cache;
  std::lock_guard lock(prime_cache_mutex());
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, prime_factors(n)).first;
  return it->second;
}

void check_shape(unsigned p, const std::vector<int>& modulus);

std::vector<int> checked(unsigned p, std::vector<int> modulus) {
  check_shape(p, modulus);
  return modulus;
}

void check_shape(unsigned p, const std::vector<int>& modulus) {
  if (p != 2 && p != 3) throw DomainError("characteristic must be 2 or 3");
  if (modulus.size() < 2 || modulus.size() > 33)
    throw DomainError("modulus degree must be between 1 and 32");
  if (modulus.back() != 1) throw DomainError("modulus must be monic");
  for (int c : modulus)
    if (c < 0 || c >= static_cast<int>(p))
      throw DomainError("modulus coefficient out of range");
}

}  // namespace

std::uint64_t ipow(std::uint64_t p, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (r > UINT64_MAX / p) throw DomainError("integer power overflows 64 bits");
    r *= p;
  }
  return r;
}

std::optional<unsigned> exact_log(std::uint64_t p, std::uint64_t q) {
  if (q < p || p < 2) return std::nullopt;
  unsigned k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return std::nullopt;
  return k;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Field::Field(Probe, unsigned p, std::vector<int> modulus)
    : p_(p),
      e_(static_cast<unsigned>(modulus.size() - 1)),
      order_(ipow(p, static_cast<unsigned>(modulus.size() - 1))),
      modulus_(std::move(modulus)),
      conway_(false) {
  if (e_ == 1) {
    generator_ = static_cast<Index>((p_ - modulus_[0]) % p_);
  } else {
    generator_ = p_;
  }
  if (p_ == 2) {
    for (unsigned i = 0; i < e_; ++i)
      if (modulus_[i]) mod_low_bits_ |= std::uint64_t{1} << i;
    // fold_[256k + h] = h * X^(e + 8k) mod m, by bitwise reduction.
    auto reduce = [&](std::uint64_t lo, unsigned hi_bits_shift, std::uint64_t h) {
      // value = lo + h * X^(e + hi_bits_shift); h has at most 8 bits
      std::uint64_t acc = lo;
      for (unsigned bit = 0; bit < 8; ++bit) {
        if (!((h >> bit) & 1)) continue;
        // X^(e + shift + bit) mod m
        std::uint64_t t = mod_low_bits_;
        for (unsigned s = 0; s < hi_bits_shift + bit; ++s) {
          const bool carry = (t >> (e_ - 1)) & 1;
          t = (t << 1) & (order_ - 1);
          if (carry) t ^= mod_low_bits_;
        }
        acc ^= t;
      }
      return acc;
    };
    fold_.assign(4 * 256, 0);
    for (unsigned k = 0; k < 4; ++k)
      for (std::uint64_t h = 1; h < 256; ++h) fold_[256 * k + h] = reduce(0, 8 * k, h);
  } else {
    pow3_.resize(e_ + 1);
    pow3_[0] = 1;
    for (unsigned i = 1; i <= e_; ++i) pow3_[i] = pow3_[i - 1] * 3;
  }
  order_primes_ = cached_primes(order_ - 1);
}

Field::Field(unsigned p, std::vector<int> modulus, bool conway)
    : Field(Probe{}, p, checked(p, std::move(modulus))) {
  conway_ = conway;
  if (!irreducible_and_primitive())
    throw DomainError("modulus is not a primitive irreducible polynomial");
  if (order_ <= kTableLimit) build_tables();
  trace_of_basis_.resize(e_);
  for (unsigned i = 0; i < e_; ++i) {
    Index t = 0, y = e_ == 1 ? 1 : ipow(p_, i);
    for (unsigned j = 0; j < e_; ++j) {
      t = add(t, y);
      y = frobenius(y);
    }
    // The trace lies in the prime field, whose indices are its residues.
    trace_of_basis_[i] = static_cast<std::int8_t>(t);
    if (p_ == 2 && t) trace_mask_ |= std::uint64_t{1} << i;
  }
}

bool Field::irreducible_and_primitive() const {
  if (e_ > 1) {
    // gcd(X^(p^i) - X, m) = 1 for 1 <= i <= e/2.
    const FpPoly m(modulus_.begin(), modulus_.end());
    Index xp = generator_;
    for (unsigned i = 1; i <= e_ / 2; ++i) {
      xp = pow(xp, p_);
      FpPoly d = coeffs(xp);
      d.resize(std::max<std::size_t>(d.size(), 2), 0);
      d[1] = (d[1] + static_cast<int>(p_) - 1) % static_cast<int>(p_);
      FpPoly g = fp_gcd(m, d, static_cast<int>(p_));
      if (g.size() != 1) return false;
    }
  }
  if (generator_ == 0) return false;
  const std::uint64_t n = order_ - 1;
  for (std::uint64_t r : order_primes_)
    if (pow(generator_, n / r) == 1) return false;
  return pow(generator_, n) == 1;
}

bool Field::is_primitive_modulus(unsigned p, const std::vector<int>& modulus) {
  try {
    check_shape(p, modulus);
  } catch (const DomainError&) {
    return false;
  }
  return Field(Probe{}, p, modulus).irreducible_and_primitive();
}

void Field::build_tables() {
  const std::uint64_t n = order_ - 1;
  exp_.resize(2 * n);
  log_.assign(order_, 0);
  Index x = 1;
  for (std::uint64_t k = 0; k < n; ++k) {
    exp_[k] = static_cast<std::uint32_t>(x);
    exp_[k + n] = static_cast<std::uint32_t>(x);
    log_[x] = static_cast<std::uint32_t>(k);
    x = slow_mul(x, generator_);
  }
  if (p_ == 3) {
    zech_.resize(n);
    for (std::uint64_t k = 0; k < n; ++k) {
      const Index s = slow_add3(1, exp_[k]);
      zech_[k] = s == 0 ? -1 : static_cast<std::int64_t>(log_[s]);
    }
  }
}

std::string Field::name() const {
  std::ostringstream os;
  os << "GF(" << p_ << '^' << e_ << ')';
  return os.str();
}

Index Field::slow_add3(Index a, Index b) const {
  Index r = 0, pw = 1;
  while (a || b) {
    unsigned s = static_cast<unsigned>(a % 3 + b % 3);
    if (s >= 3) s -= 3;
    r += s * pw;
    a /= 3;
    b /= 3;
    pw *= 3;
  }
  return r;
}

Index Field::add3(Index a, Index b) const {
  if (a == 0) return b;
  if (b == 0) return a;
  if (zech_.empty()) return slow_add3(a, b);
  const std::uint64_t n = order_ - 1;
  const std::uint64_t la = log_[a], lb = log_[b];
  const std::uint64_t d = lb >= la ? lb - la : lb + n - la;
  const std::int64_t z = zech_[d];
  if (z < 0) return 0;
  return exp_[la + static_cast<std::uint64_t>(z)];
}

Index Field::neg(Index a) const {
  if (p_ == 2) return a;
  Index r = 0, pw = 1;
  while (a) {
    const unsigned d = static_cast<unsigned>(a % 3);
    r += ((3 - d) % 3) * pw;
    a /= 3;
    pw *= 3;
  }
  return r;
}

Index Field::sub(Index a, Index b) const {
  if (p_ == 2) return a ^ b;
  return add(a, neg(b));
}

Index Field::slow_mul(Index a, Index b) const {
  if (p_ == 2) {
    const std::uint64_t prod = clmul32(a, b);
    const std::uint64_t hi = prod >> e_;
    return (prod & (order_ - 1)) ^ fold_[hi & 255] ^ fold_[256 + ((hi >> 8) & 255)] ^
           fold_[512 + ((hi >> 16) & 255)] ^ fold_[768 + ((hi >> 24) & 255)];
  }
  int da[32] = {}, db[32] = {}, r[64] = {};
  for (unsigned i = 0; i < e_ && a; ++i, a /= 3) da[i] = static_cast<int>(a % 3);
  for (unsigned i = 0; i < e_ && b; ++i, b /= 3) db[i] = static_cast<int>(b % 3);
  for (unsigned i = 0; i < e_; ++i) {
    if (!da[i]) continue;
    for (unsigned j = 0; j < e_; ++j) r[i + j] += da[i] * db[j];
  }
  for (unsigned i = 2 * e_ - 1; i-- > e_;) {
    const int c = r[i] % 3;
    if (!c) continue;
    for (unsigned j = 0; j < e_; ++j) r[i - e_ + j] -= c * modulus_[j];
  }
  Index out = 0;
  for (unsigned i = e_; i-- > 0;) out = out * 3 + static_cast<Index>(((r[i] % 3) + 3) % 3);
  return out;
}

Index Field::inv(Index a) const {
  if (a == 0) throw ZeroDivisionError("inverse of zero");
  if (!log_.empty()) {
    const std::uint64_t la = log_[a];
    return exp_[la == 0 ? 0 : order_ - 1 - la];
  }
  return pow(a, order_ - 2);
}

Index Field::pow(Index a, Wide n) const {
  if (n == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t ord = order_ - 1;
  if (!log_.empty()) {
    const auto k = static_cast<std::uint64_t>((static_cast<Wide>(log_[a]) * (n % ord)) % ord);
    return exp_[k];
  }
  std::uint64_t m = static_cast<std::uint64_t>(n % ord);
  Index r = 1, b = a;
  while (m) {
    if (m & 1) r = slow_mul(r, b);
    b = slow_mul(b, b);
    m >>= 1;
  }
  return r;
}

Index Field::frobenius(Index a, unsigned k) const {
  k %= e_;
  if (k == 0 || a <= 1) return a;
  if (!log_.empty()) {
    const std::uint64_t ord = order_ - 1;
    const Wide pk = ipow(p_, k);
    return exp_[static_cast<std::uint64_t>((static_cast<Wide>(log_[a]) * pk) % ord)];
  }
  for (unsigned i = 0; i < k; ++i) a = p_ == 2 ? slow_mul(a, a) : slow_mul(a, slow_mul(a, a));
  return a;
}

Index Field::sqrt2(Index a) const {
  if (p_ != 2) throw DomainError("sqrt2 requires characteristic 2");
  return frobenius(a, e_ - 1);
}

Index Field::from_int(long long n) const {
  const long long p = p_;
  return static_cast<Index>(((n % p) + p) % p);
}

std::vector<int> Field::coeffs(Index a) const {
  if (a >= order_) throw DomainError("element index out of range");
  std::vector<int> c(e_, 0);
  for (unsigned i = 0; i < e_; ++i, a /= p_) c[i] = static_cast<int>(a % p_);
  return c;
}

Index Field::from_coeffs(std::span<const int> c) const {
  if (c.size() > e_) throw DomainError("too many coefficients for field degree");
  Index r = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] < 0 || c[i] >= static_cast<int>(p_)) throw DomainError("coefficient out of range");
    r = r * p_ + static_cast<Index>(c[i]);
  }
  return r;
}

bool Field::in_subfield(Index a, unsigned d) const {
  if (d == 0 || e_ % d != 0) throw DomainError("subfield degree must divide field degree");
  return frobenius(a, d) == a;
}

std::uint64_t Field::multiplicative_order(Index a) const {
  if (a == 0) throw ZeroDivisionError("zero has no multiplicative order");
  std::uint64_t n = order_ - 1;
  for (std::uint64_t r : order_primes_)
    while (n % r == 0 && pow(a, n / r) == 1) n /= r;
  return n;
}

int Field::absolute_trace(Index a) const {
  if (p_ == 2) return __builtin_popcountll(a & trace_mask_) & 1;
  int t = 0;
  for (unsigned i = 0; i < e_ && a; ++i, a /= 3) t += static_cast<int>(a % 3) * trace_of_basis_[i];
  return t % 3;
}

std::uint64_t Field::log(Index a) const {
  if (log_.empty()) throw DomainError("discrete log requires a tabulated field");
  if (a == 0) throw ZeroDivisionError("log of zero");
  return log_[a];
}

Index Field::exp(std::uint64_t k) const {
  k %= (order_ - 1);
  if (!exp_.empty()) return exp_[k];
  return pow(generator_, k);
}

namespace {

std::mutex& field_cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::pair<unsigned, unsigned>, FieldPtr>& field_cache() {
  static std::map<std::pair<unsigned, unsigned>, FieldPtr> cache;
  return cache;
}

std::vector<int> search_primitive(unsigned p, unsigned e) {
  const std::uint64_t limit = ipow(p, e);
  for (std::uint64_t low = 1; low < limit; ++low) {
    std::vector<int> m(e + 1, 0);
    std::uint64_t x = low;
    for (unsigned i = 0; i < e; ++i, x /= p) m[i] = static_cast<int>(x % p);
    m[e] = 1;
    if (m[0] == 0) continue;
    if (Field::is_primitive_modulus(p, m)) return m;
  }
  throw InternalError("no primitive polynomial found");
}

}  // namespace

FieldPtr make_field(unsigned p, unsigned e) {
  if (p != 2 && p != 3) throw DomainError("characteristic must be 2 or 3");
  if (e < 1 || e > 32) throw DomainError("extension degree must be between 1 and 32");
  {
    std::lock_guard lock(field_cache_mutex());
    auto it = field_cache().find({p, e});
    if (it != field_cache().end()) return it->second;
  }
  auto conway = conway_polynomial(p, e);
  FieldPtr f = conway ? std::make_shared<const Field>(p, *conway, true)
                      : std::make_shared<const Field>(p, search_primitive(p, e), false);
  std::lock_guard lock(field_cache_mutex());
  return field_cache().emplace(std::make_pair(p, e), f).first->second;
}

FieldPtr make_field(unsigned p, std::vector<int> modulus) {
  check_shape(p, modulus);
  const auto e = static_cast<unsigned>(modulus.size() - 1);
  FieldPtr canonical = make_field(p, e);
  if (canonical->modulus() == modulus) return canonical;
  return std::make_shared<const Field>(p, std::move(modulus), false);
}

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_as(*b);
}

void require_same(const FieldPtr& a, const FieldPtr& b) {
  if (!same_field(a, b)) throw MismatchError("operands belong to different fields");
}

FieldElem::FieldElem(FieldPtr field, Index index) : field_(std::move(field)), index_(index) {
  if (!field_) throw DomainError("element without a field");
  if (!field_->contains(index_)) throw DomainError("element index out of range");
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  require_same(field_, o.field_);
  return {field_, field_->add(index_, o.index_)};
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  require_same(field_, o.field_);
  return {field_, field_->sub(index_, o.index_)};
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  require_same(field_, o.field_);
  return {field_, field_->mul(index_, o.index_)};
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
  require_same(field_, o.field_);
  return {field_, field_->div(index_, o.index_)};
}

Index rel_trace(const Field& field, std::uint64_t sub_order, Index x) {
  const auto d = exact_log(field.characteristic(), sub_order);
  if (!d || field.degree() % *d != 0)
    throw DomainError("trace target is not a subfield order");
  const unsigned m = field.degree() / *d;
  Index t = 0;
  for (unsigned i = 0; i < m; ++i) {
    t = field.add(t, x);
    x = field.frobenius(x, *d);
  }
  return t;
}

FieldElem rel_trace(std::uint64_t sub_order, const FieldElem& x) {
  return {x.field(), rel_trace(*x.field(), sub_order, x.index())};
}

}  // namespace excpoly::ff
