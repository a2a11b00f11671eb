#include "superjac/poly.hpp"

#include <algorithm>
#include <sstream>

namespace superjac {

FieldCtx common_field(const FieldCtx& a, const FieldCtx& b) {
  if (!a.valid()) return b;
  if (!b.valid() || a == b) return a;
  if (a.characteristic() == b.characteristic()) {
    if (a.is_prime_field()) return b;
    if (b.is_prime_field()) return a;
  }
  fail(ErrorCode::FieldMismatch, "polynomials over " + a.name() + " and " + b.name());
}

UniPoly::UniPoly(FieldCtx field, std::vector<FieldElement> coeffs) : field_(field), c_(std::move(coeffs)) {
  for (auto& c : c_) {
    if (!(c.field() == field_)) {
      // Allow prime-field values; anything else must already match.
      FieldElement lifted = field_.zero() + c;
      if (!(lifted.field() == field_)) fail(ErrorCode::FieldMismatch, "coefficient outside " + field_.name());
      c = lifted;
    }
  }
  normalize();
}

UniPoly::UniPoly(FieldCtx field, std::initializer_list<std::int64_t> coeffs) : field_(field) {
  c_.reserve(coeffs.size());
  for (auto v : coeffs) c_.push_back(field.from_int(v));
  normalize();
}

void UniPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(const FieldElement& c) { return UniPoly(c.field(), {c}); }

UniPoly UniPoly::x(FieldCtx field) { return UniPoly(field, {field.zero(), field.one()}); }

UniPoly UniPoly::monomial(const FieldElement& c, int deg) {
  std::vector<FieldElement> v(static_cast<std::size_t>(deg) + 1, c.field().zero());
  v.back() = c;
  return UniPoly(c.field(), std::move(v));
}

UniPoly UniPoly::linear(const FieldElement& r) { return UniPoly(r.field(), {-r, r.field().one()}); }

UniPoly UniPoly::from_roots(FieldCtx field, const std::vector<FieldElement>& roots) {
  UniPoly r = constant(field.one());
  for (const auto& z : roots) r *= linear(z);
  return r;
}

FieldElement UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return field_.zero();
  return c_[static_cast<std::size_t>(i)];
}

FieldElement UniPoly::leading() const {
  if (c_.empty()) return field_.zero();
  return c_.back();
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  field_ = common_field(field_, o.field_);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), field_.zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  for (auto& c : c_) c = field_.zero() + c;
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  field_ = common_field(field_, o.field_);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), field_.zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  for (auto& c : c_) c = field_.zero() + c;
  normalize();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  field_ = common_field(field_, o.field_);
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<FieldElement> r(c_.size() + o.c_.size() - 1, field_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  normalize();
  return *this;
}

UniPoly& UniPoly::operator*=(const FieldElement& s) {
  field_ = common_field(field_, s.field());
  for (auto& c : c_) c = s * c;
  normalize();
  return *this;
}

bool operator==(const UniPoly& a, const UniPoly& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (!(a.c_[i] == b.c_[i])) return false;
  return true;
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return *this;
  return *this * c_.back().inverse();
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly(field_);
  std::vector<FieldElement> r;
  r.reserve(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * field_.from_int(static_cast<std::int64_t>(i % field_.characteristic())));
  return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::pow(std::uint64_t e) const {
  UniPoly result = constant(field_.one());
  UniPoly base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

FieldElement UniPoly::eval(const FieldElement& x) const {
  FieldCtx f = common_field(field_, x.field());
  FieldElement acc = f.zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::compose(const UniPoly& g) const {
  UniPoly acc(common_field(field_, g.field()));
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + constant(*it);
  return acc;
}

UniPoly UniPoly::embed(const FieldCtx& target, const FieldCtx& over) const {
  std::vector<FieldElement> r;
  r.reserve(c_.size());
  for (const auto& c : c_) r.push_back(superjac::embed(c, target, over));
  return UniPoly(target, std::move(r));
}

bool UniPoly::coeffs_in(const FieldCtx& sub, const FieldCtx& over) const {
  for (const auto& c : c_)
    if (!superjac::descend(c, sub, over)) return false;
  return true;
}

UniPoly UniPoly::descend(const FieldCtx& sub, const FieldCtx& over) const {
  std::vector<FieldElement> r;
  r.reserve(c_.size());
  for (const auto& c : c_) {
    auto d = superjac::descend(c, sub, over);
    if (!d) fail(ErrorCode::PreconditionFailed, "coefficient " + c.to_string() + " not in " + sub.name());
    r.push_back(*d);
  }
  return UniPoly(sub, std::move(r));
}

std::string UniPoly::to_string(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const auto& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool show_coeff = i == 0 || !c.is_one();
    if (show_coeff) {
      if (field_.is_prime_field() || c.is_prime_field_value())
        os << c.to_string();
      else
        os << "(" << c.to_string() << ")";
    }
    if (i > 0) {
      if (show_coeff) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) fail(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  const FieldCtx f = common_field(a.field(), b.field());
  if (a.degree() < b.degree()) return {UniPoly(f), a + UniPoly(f)};
  std::vector<FieldElement> rem = (a + UniPoly(f)).coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  const FieldElement lc_inv = bc.back().inverse();
  std::vector<FieldElement> q(static_cast<std::size_t>(a.degree() - db + 1), f.zero());
  for (int i = a.degree(); i >= db; --i) {
    const FieldElement c = rem[static_cast<std::size_t>(i)] * lc_inv;
    if (c.is_zero()) continue;
    const auto shift = static_cast<std::size_t>(i - db);
    q[shift] = c;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[shift + j] -= c * bc[j];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UniPoly(f, std::move(q)), UniPoly(f, std::move(rem))};
}

UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }
UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero())
    fail(ErrorCode::InexactDivision, "(" + b.to_string() + ") does not divide (" + a.to_string() + ")");
  return q;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

XgcdResult xgcd(const UniPoly& a, const UniPoly& b) {
  const FieldCtx f = common_field(a.field(), b.field());
  UniPoly r0 = a, r1 = b;
  UniPoly s0 = UniPoly::constant(f.one()), s1(f);
  UniPoly t0(f), t1 = UniPoly::constant(f.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const FieldElement inv = r0.leading().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

UniPoly pow_mod(const UniPoly& base, const BigInt& e, const UniPoly& mod) {
  UniPoly result = UniPoly::constant(mod.field().one()) % mod;
  if (e == 0) return result;
  UniPoly b = base % mod;
  const auto bits = boost::multiprecision::msb(e);
  for (auto i = static_cast<std::int64_t>(bits); i >= 0; --i) {
    result = (result * result) % mod;
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) result = (result * b) % mod;
  }
  return result;
}

int root_multiplicity(const UniPoly& a, const FieldElement& r) {
  if (a.is_zero()) fail(ErrorCode::ZeroPolynomial, "multiplicity in the zero polynomial");
  int k = 0;
  UniPoly cur = a;
  const UniPoly lin = UniPoly::linear(r);
  while (true) {
    auto [q, rem] = divmod(cur, lin);
    if (!rem.is_zero()) return k;
    ++k;
    cur = std::move(q);
  }
}

}  // namespace superjac
