#include "superjac/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace superjac {

namespace {

using Vec = std::vector<std::uint64_t>;

// Dense F_p[x] helpers, lowest degree first, no trailing zeros.
void trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) fail(ErrorCode::DivisionByZero, "element is not invertible");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

Vec poly_mul(const Vec& a, const Vec& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Vec r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

// a mod m, m nonzero.
Vec poly_rem(Vec a, const Vec& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lc_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t c = a.back() * lc_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) a[shift + j] = (a[shift + j] + (p - c) * m[j]) % p;
    trim(a);
  }
  return a;
}

Vec poly_gcd(Vec a, Vec b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = poly_rem(a, b, p);
    std::swap(a, b);
  }
  if (!a.empty()) {
    const std::uint64_t inv = inv_mod(a.back(), p);
    for (auto& c : a) c = c * inv % p;
  }
  return a;
}

// base^e mod m.
Vec poly_powmod(Vec base, std::uint64_t e, const Vec& m, std::uint64_t p) {
  Vec result{1};
  base = poly_rem(base, m, p);
  while (e) {
    if (e & 1) result = poly_rem(poly_mul(result, base, p), m, p);
    base = poly_rem(poly_mul(base, base, p), m, p);
    e >>= 1;
  }
  return result;
}

// Ben-Or irreducibility test.
bool is_irreducible(const Vec& f, std::uint64_t p) {
  const std::size_t k = f.size() - 1;
  Vec xp{0, 1};
  for (std::size_t i = 1; i <= k / 2; ++i) {
    xp = poly_powmod(xp, p, f, p);
    Vec diff = xp;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    if (poly_gcd(f, diff, p).size() > 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> least_irreducible(std::uint64_t p, unsigned k) {
  // Counter over (c_{k-1}, ..., c_0) with c_0 varying fastest.
  std::vector<std::uint64_t> digits(k, 0);
  while (true) {
    Vec f(digits.begin(), digits.end());
    f.push_back(1);
    if (f[0] != 0 && is_irreducible(f, p)) return {f.begin(), f.end()};
    std::size_t i = 0;
    while (i < k && ++digits[i] == p) digits[i++] = 0;
    if (i == k) break;
  }
  fail(ErrorCode::NoIrreducibleFound, "no irreducible polynomial found");
}

struct Registry {
  std::mutex mutex;
  std::map<std::pair<std::uint64_t, unsigned>, std::unique_ptr<detail::FieldData>> fields;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldCtx FieldCtx::make(std::uint64_t p, unsigned k) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
    fail(ErrorCode::NotPrime, std::to_string(p) + " is not a prime below 2^31");
  if (k == 0 || k > kMaxExtensionDegree)
    fail(ErrorCode::DegreeOverflow, "extension degree " + std::to_string(k) + " outside [1, " +
                                        std::to_string(kMaxExtensionDegree) + "]");
  auto& reg = registry();
  std::lock_guard lock(reg.mutex);
  auto& slot = reg.fields[{p, k}];
  if (!slot) {
    auto data = std::make_unique<detail::FieldData>();
    data->p = p;
    data->k = k;
    if (k > 1) data->modulus = least_irreducible(p, k);
    data->order = boost::multiprecision::pow(BigInt(p), k);
    slot = std::move(data);
  }
  return FieldCtx(slot.get());
}

FieldElement FieldCtx::zero() const { return FieldElement(data_); }

FieldElement FieldCtx::one() const {
  FieldElement e(data_);
  e.c_[0] = 1;
  return e;
}

FieldElement FieldCtx::from_int(std::int64_t value) const {
  FieldElement e(data_);
  const auto p = static_cast<std::int64_t>(data_->p);
  std::int64_t r = value % p;
  if (r < 0) r += p;
  e.c_[0] = static_cast<std::uint32_t>(r);
  return e;
}

FieldElement FieldCtx::from_coeffs(std::span<const std::uint64_t> coeffs) const {
  // Reduce a polynomial of any length modulo the defining polynomial.
  Vec v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) v.push_back(c % data_->p);
  if (data_->k > 1) {
    v = poly_rem(v, Vec(data_->modulus.begin(), data_->modulus.end()), data_->p);
  } else {
    trim(v);
    if (v.size() > 1) fail(ErrorCode::FieldMismatch, "prime field element given with more than one coefficient");
  }
  FieldElement e(data_);
  for (std::size_t i = 0; i < v.size(); ++i) e.c_[i] = static_cast<std::uint32_t>(v[i]);
  return e;
}

FieldElement FieldCtx::generator() const {
  if (data_->k == 1) return one();
  FieldElement e(data_);
  e.c_[1] = 1;
  return e;
}

FieldElement FieldCtx::random(std::mt19937_64& rng) const {
  FieldElement e(data_);
  std::uniform_int_distribution<std::uint64_t> dist(0, data_->p - 1);
  for (unsigned i = 0; i < data_->k; ++i) e.c_[i] = static_cast<std::uint32_t>(dist(rng));
  return e;
}

std::string FieldCtx::name() const {
  if (!data_) return "F_?";
  std::string s = "F_" + std::to_string(data_->p);
  if (data_->k > 1) s += "^" + std::to_string(data_->k);
  return s;
}

bool FieldElement::is_zero() const noexcept {
  for (unsigned i = 0; i < data_->k; ++i)
    if (c_[i]) return false;
  return true;
}

bool FieldElement::is_one() const noexcept { return c_[0] == 1 && is_prime_field_value(); }

bool FieldElement::is_prime_field_value() const noexcept {
  for (unsigned i = 1; i < data_->k; ++i)
    if (c_[i]) return false;
  return true;
}

void FieldElement::coerce_with(const FieldElement& o) {
  if (data_ == o.data_) return;
  if (!data_ || !o.data_) fail(ErrorCode::FieldMismatch, "operation on an uninitialised field element");
  if (data_->p != o.data_->p)
    fail(ErrorCode::FieldMismatch, "characteristics differ: " + field().name() + " vs " + o.field().name());
  if (data_->k == 1) {
    // Lift this prime-field value into the other's field.
    data_ = o.data_;
    return;
  }
  if (o.data_->k == 1) return;
  fail(ErrorCode::FieldMismatch, "fields differ: " + field().name() + " vs " + o.field().name());
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  const auto p = data_->p;
  for (unsigned i = 0; i < data_->k; ++i)
    if (r.c_[i]) r.c_[i] = static_cast<std::uint32_t>(p - r.c_[i]);
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  coerce_with(o);
  const auto p = data_->p;
  const unsigned n = o.data_->k;
  for (unsigned i = 0; i < n; ++i) {
    std::uint64_t s = std::uint64_t{c_[i]} + o.c_[i];
    if (s >= p) s -= p;
    c_[i] = static_cast<std::uint32_t>(s);
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  coerce_with(o);
  const auto p = data_->p;
  const unsigned n = o.data_->k;
  for (unsigned i = 0; i < n; ++i) {
    std::uint64_t s = std::uint64_t{c_[i]} + p - o.c_[i];
    if (s >= p) s -= p;
    c_[i] = static_cast<std::uint32_t>(s);
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  coerce_with(o);
  const auto p = data_->p;
  const unsigned k = data_->k;
  if (o.data_->k == 1 || k == 1) {
    // Scalar multiplication by a prime-field value. After coercion the
    // scalar is whichever operand has a single coefficient.
    const std::uint64_t s = (o.data_->k == 1) ? o.c_[0] : c_[0];
    const FieldElement v = (o.data_->k == 1) ? *this : o;
    FieldElement r(data_);
    for (unsigned i = 0; i < k; ++i) r.c_[i] = static_cast<std::uint32_t>(s * v.c_[i] % p);
    *this = r;
    return *this;
  }
  std::array<std::uint64_t, 2 * kMaxExtensionDegree> t{};
  for (unsigned i = 0; i < k; ++i) {
    if (!c_[i]) continue;
    const std::uint64_t a = c_[i];
    for (unsigned j = 0; j < k; ++j) t[i + j] = (t[i + j] + a * o.c_[j]) % p;
  }
  const auto& m = data_->modulus;
  for (unsigned i = 2 * k - 2; i >= k; --i) {
    const std::uint64_t c = t[i];
    if (!c) continue;
    const std::uint64_t neg = p - c;
    for (unsigned j = 0; j < k; ++j) t[i - k + j] = (t[i - k + j] + neg * m[j]) % p;
    t[i] = 0;
  }
  for (unsigned i = 0; i < k; ++i) c_[i] = static_cast<std::uint32_t>(t[i]);
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero in " + field().name());
  const auto p = data_->p;
  FieldElement r(data_);
  if (data_->k == 1) {
    r.c_[0] = static_cast<std::uint32_t>(inv_mod(c_[0], p));
    return r;
  }
  // Extended Euclid in F_p[x] against the modulus.
  Vec a(c_.begin(), c_.begin() + data_->k);
  trim(a);
  Vec b(data_->modulus.begin(), data_->modulus.end());
  Vec s0{1}, s1{};
  while (!b.empty()) {
    // (a, b) <- (b, a mod b), tracking the cofactor of the element.
    Vec q;
    Vec rem = a;
    const std::uint64_t lc_inv = inv_mod(b.back(), p);
    q.assign(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, 0);
    while (rem.size() >= b.size() && !rem.empty()) {
      const std::uint64_t c = rem.back() * lc_inv % p;
      const std::size_t shift = rem.size() - b.size();
      q[shift] = c;
      for (std::size_t j = 0; j < b.size(); ++j) rem[shift + j] = (rem[shift + j] + (p - c) * b[j]) % p;
      trim(rem);
    }
    trim(q);
    Vec qs = poly_mul(q, s1, p);
    Vec ns(std::max(s0.size(), qs.size()), 0);
    for (std::size_t i = 0; i < ns.size(); ++i) {
      const std::uint64_t x = i < s0.size() ? s0[i] : 0;
      const std::uint64_t y = i < qs.size() ? qs[i] : 0;
      ns[i] = (x + p - y) % p;
    }
    trim(ns);
    a = std::move(b);
    b = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(ns);
  }
  // a is a nonzero constant; s0 * elem == a.
  const std::uint64_t inv = inv_mod(a[0], p);
  for (std::size_t i = 0; i < s0.size(); ++i) r.c_[i] = static_cast<std::uint32_t>(s0[i] * inv % p);
  return r;
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  FieldElement result = field().one();
  FieldElement base = *this;
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

FieldElement FieldElement::pow(const BigInt& e) const {
  if (e < 0) return inverse().pow(BigInt(-e));
  FieldElement result = field().one();
  if (e == 0) return result;
  const auto bits = boost::multiprecision::msb(e);
  for (auto i = static_cast<std::int64_t>(bits); i >= 0; --i) {
    result *= result;
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) result *= *this;
  }
  return result;
}

bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
  if (a.data_ == b.data_) {
    if (!a.data_) return true;
    return std::equal(a.c_.begin(), a.c_.begin() + a.data_->k, b.c_.begin());
  }
  if (!a.data_ || !b.data_ || a.data_->p != b.data_->p) return false;
  if (a.data_->k == 1) return b.is_prime_field_value() && b.c_[0] == a.c_[0];
  if (b.data_->k == 1) return a.is_prime_field_value() && a.c_[0] == b.c_[0];
  return false;
}

std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) noexcept {
  const unsigned n = std::max(a.data_ ? a.data_->k : 0u, b.data_ ? b.data_->k : 0u);
  for (unsigned i = 0; i < n; ++i) {
    if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string FieldElement::to_string() const {
  if (!data_) return "<null>";
  if (data_->k == 1) return std::to_string(c_[0]);
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(data_->k) - 1; i >= 0; --i) {
    if (!c_[i]) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c_[i] != 1) os << c_[i];
    if (i >= 1) os << (i == 0 || c_[i] != 1 ? "*" : "") << "a";
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

FieldElement frobenius(const FieldElement& z, unsigned times) {
  FieldElement r = z;
  const auto p = z.field().characteristic();
  const unsigned k = z.field().degree();
  times %= k;
  for (unsigned i = 0; i < times; ++i) r = r.pow(p);
  return r;
}

FieldCtx compositum(const FieldCtx& a, const FieldCtx& b) {
  if (a.characteristic() != b.characteristic())
    fail(ErrorCode::FieldMismatch, "no compositum of " + a.name() + " and " + b.name());
  return FieldCtx::make(a.characteristic(), std::lcm(a.degree(), b.degree()));
}

bool lies_in(const FieldElement& z, const FieldCtx& sub) {
  const FieldCtx f = z.field();
  if (!f.contains(sub)) return false;
  return frobenius(z, sub.degree()) == z;
}

std::vector<FieldElement> enumerate_field(const FieldCtx& field, std::uint64_t bound) {
  if (field.order() > bound)
    fail(ErrorCode::ScanBoundExceeded,
         field.name() + " has more than " + std::to_string(bound) + " elements");
  const auto q = static_cast<std::uint64_t>(field.order());
  const auto p = field.characteristic();
  const unsigned k = field.degree();
  std::vector<FieldElement> out;
  out.reserve(q);
  std::vector<std::uint64_t> digits(k, 0);
  for (std::uint64_t idx = 0; idx < q; ++idx) {
    out.push_back(field.from_coeffs(digits));
    for (unsigned i = 0; i < k && ++digits[i] == p; ++i) digits[i] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace superjac
