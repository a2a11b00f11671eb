#include "superjac/bipoly.hpp"

#include <algorithm>
#include <sstream>

namespace superjac {

BiPoly BiPoly::from_y_coeffs(FieldCtx field, const std::vector<UniPoly>& cy) {
  BiPoly r(field);
  for (std::size_t j = 0; j < cy.size(); ++j) {
    r.field_ = common_field(r.field_, cy[j].field());
    for (int i = 0; i <= cy[j].degree(); ++i) r.set(i, static_cast<int>(j), cy[j].coeff(i));
  }
  return r;
}

BiPoly BiPoly::from_x_coeffs(FieldCtx field, const std::vector<UniPoly>& cx) {
  return from_y_coeffs(field, cx).swapped();
}

BiPoly BiPoly::term(const FieldElement& c, int i, int j) {
  BiPoly r(c.field());
  r.set(i, j, c);
  return r;
}

FieldElement BiPoly::coeff(int i, int j) const {
  auto it = t_.find({i, j});
  return it == t_.end() ? field_.zero() : it->second;
}

void BiPoly::set(int i, int j, const FieldElement& c) {
  if (i < 0 || j < 0) fail(ErrorCode::PreconditionFailed, "negative exponent");
  field_ = common_field(field_, c.field());
  if (c.is_zero())
    t_.erase({i, j});
  else
    t_[{i, j}] = field_.zero() + c;
}

int BiPoly::degree_x() const noexcept {
  int d = kZeroDegree;
  for (const auto& [k, c] : t_) d = std::max(d, k.first);
  return d;
}

int BiPoly::degree_y() const noexcept {
  int d = kZeroDegree;
  for (const auto& [k, c] : t_) d = std::max(d, k.second);
  return d;
}

int BiPoly::total_degree() const noexcept {
  int d = kZeroDegree;
  for (const auto& [k, c] : t_) d = std::max(d, k.first + k.second);
  return d;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [k, c] : r.t_) c = -c;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  field_ = common_field(field_, o.field_);
  for (const auto& [k, c] : o.t_) set(k.first, k.second, coeff(k.first, k.second) + c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  field_ = common_field(field_, o.field_);
  for (const auto& [k, c] : o.t_) set(k.first, k.second, coeff(k.first, k.second) - c);
  return *this;
}

BiPoly& BiPoly::operator*=(const FieldElement& s) {
  BiPoly r(common_field(field_, s.field()));
  for (const auto& [k, c] : t_) r.set(k.first, k.second, c * s);
  *this = std::move(r);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r(common_field(a.field_, b.field_));
  for (const auto& [ka, ca] : a.t_)
    for (const auto& [kb, cb] : b.t_) {
      const int i = ka.first + kb.first, j = ka.second + kb.second;
      r.set(i, j, r.coeff(i, j) + ca * cb);
    }
  return r;
}

bool operator==(const BiPoly& a, const BiPoly& b) {
  if (a.t_.size() != b.t_.size()) return false;
  auto it = b.t_.begin();
  for (const auto& [k, c] : a.t_) {
    if (k != it->first || !(c == it->second)) return false;
    ++it;
  }
  return true;
}

std::vector<UniPoly> BiPoly::coefficients_in_y() const {
  const int dy = degree_y();
  std::vector<std::vector<FieldElement>> rows(static_cast<std::size_t>(dy + 1));
  for (const auto& [k, c] : t_) {
    auto& row = rows[static_cast<std::size_t>(k.second)];
    if (static_cast<int>(row.size()) <= k.first) row.resize(static_cast<std::size_t>(k.first) + 1, field_.zero());
    row[static_cast<std::size_t>(k.first)] = c;
  }
  std::vector<UniPoly> out;
  out.reserve(rows.size());
  for (auto& row : rows) out.emplace_back(field_, std::move(row));
  return out;
}

std::vector<UniPoly> BiPoly::coefficients_in_x() const { return swapped().coefficients_in_y(); }

BiPoly BiPoly::swapped() const {
  BiPoly r(field_);
  for (const auto& [k, c] : t_) r.t_[{k.second, k.first}] = c;
  return r;
}

BiPoly BiPoly::dx() const {
  BiPoly r(field_);
  for (const auto& [k, c] : t_)
    if (k.first > 0) r.set(k.first - 1, k.second, c * field_.from_int(k.first));
  return r;
}

BiPoly BiPoly::dy() const {
  BiPoly r(field_);
  for (const auto& [k, c] : t_)
    if (k.second > 0) r.set(k.first, k.second - 1, c * field_.from_int(k.second));
  return r;
}

FieldElement BiPoly::eval(const FieldElement& x, const FieldElement& y) const {
  FieldCtx f = common_field(common_field(field_, x.field()), y.field());
  FieldElement acc = f.zero();
  for (const auto& [k, c] : t_) acc += c * x.pow(static_cast<std::uint64_t>(k.first)) * y.pow(static_cast<std::uint64_t>(k.second));
  return acc;
}

UniPoly BiPoly::eval_x(const FieldElement& x0) const {
  FieldCtx f = common_field(field_, x0.field());
  std::vector<FieldElement> out(static_cast<std::size_t>(std::max(degree_y(), 0)) + 1, f.zero());
  for (const auto& [k, c] : t_) out[static_cast<std::size_t>(k.second)] += c * x0.pow(static_cast<std::uint64_t>(k.first));
  return UniPoly(f, std::move(out));
}

UniPoly BiPoly::eval_y(const FieldElement& y0) const { return swapped().eval_x(y0); }

BiPoly BiPoly::embed(const FieldCtx& target, const FieldCtx& over) const {
  BiPoly r(target);
  for (const auto& [k, c] : t_) r.t_[k] = superjac::embed(c, target, over);
  return r;
}

std::string BiPoly::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [k, c] = *it;
    if (!first) os << " + ";
    first = false;
    const bool bare = k.first == 0 && k.second == 0;
    if (!c.is_one() || bare) {
      if (c.is_prime_field_value())
        os << c.to_string();
      else
        os << "(" << c.to_string() << ")";
      if (!bare) os << "*";
    }
    if (k.first > 0) os << "x" << (k.first > 1 ? "^" + std::to_string(k.first) : "");
    if (k.first > 0 && k.second > 0) os << "*";
    if (k.second > 0) os << "y" << (k.second > 1 ? "^" + std::to_string(k.second) : "");
  }
  return os.str();
}

}  // namespace superjac
