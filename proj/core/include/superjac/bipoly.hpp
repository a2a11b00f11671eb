#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "superjac/poly.hpp"

namespace superjac {

// Sparse polynomial in x and y. Keys are (x exponent, y exponent); zero
// coefficients are never stored.
class BiPoly {
 public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, FieldElement>;

  BiPoly() = default;
  explicit BiPoly(FieldCtx field) : field_(field) {}

  // sum_j cy[j](x) y^j.
  static BiPoly from_y_coeffs(FieldCtx field, const std::vector<UniPoly>& cy);
  // sum_i cx[i](y) x^i.
  static BiPoly from_x_coeffs(FieldCtx field, const std::vector<UniPoly>& cx);
  static BiPoly term(const FieldElement& c, int i, int j);

  FieldCtx field() const noexcept { return field_; }
  const Terms& terms() const noexcept { return t_; }
  bool is_zero() const noexcept { return t_.empty(); }
  FieldElement coeff(int i, int j) const;
  void set(int i, int j, const FieldElement& c);

  int degree_x() const noexcept;
  int degree_y() const noexcept;
  int total_degree() const noexcept;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const FieldElement& s);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const FieldElement& s) { return a *= s; }
  friend bool operator==(const BiPoly& a, const BiPoly& b);

  // Coefficient of y^j as a polynomial in x, j = 0..degree_y().
  std::vector<UniPoly> coefficients_in_y() const;
  // Coefficient of x^i as a polynomial in y, i = 0..degree_x().
  std::vector<UniPoly> coefficients_in_x() const;
  // x and y exchanged.
  BiPoly swapped() const;
  BiPoly dx() const;
  BiPoly dy() const;

  FieldElement eval(const FieldElement& x, const FieldElement& y) const;
  // Specialise x = x0, leaving a polynomial in y.
  UniPoly eval_x(const FieldElement& x0) const;
  // Specialise y = y0, leaving a polynomial in x.
  UniPoly eval_y(const FieldElement& y0) const;

  BiPoly embed(const FieldCtx& target, const FieldCtx& over = {}) const;
  std::string to_string() const;

 private:
  FieldCtx field_;
  Terms t_;
};

}  // namespace superjac
