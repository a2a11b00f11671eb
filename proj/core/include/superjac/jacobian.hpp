#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "superjac/basis.hpp"
#include "superjac/bipoly.hpp"
#include "superjac/curve.hpp"
#include "superjac/linalg.hpp"

namespace superjac {

// Sum of r <= g affine points minus r times infinity. Points are held in
// canonical order over the smallest field containing every coordinate and the
// curve field, so equal classes compare equal.
class ReducedDivisor {
 public:
  ReducedDivisor() = default;

  static ReducedDivisor identity(const SuperellipticCurve& c);
  // Points may live in different extensions of the curve field. Throws
  // NotOnCurve or NotReduced (more than g points).
  static ReducedDivisor make(const SuperellipticCurve& c, const std::vector<AffinePoint>& points);

  const SuperellipticCurve& curve() const noexcept { return curve_; }
  FieldCtx field() const noexcept { return field_; }
  const std::vector<AffinePoint>& points() const noexcept { return points_; }
  int degree() const noexcept { return static_cast<int>(points_.size()); }
  bool is_identity() const noexcept { return points_.empty(); }

  // prod (x - x_i) over the divisor's field.
  UniPoly support_poly() const;

  std::string to_string() const;

  friend bool operator==(const ReducedDivisor& a, const ReducedDivisor& b) {
    return a.curve_ == b.curve_ && a.field_ == b.field_ && a.points_ == b.points_;
  }

 private:
  SuperellipticCurve curve_;
  FieldCtx field_;
  std::vector<AffinePoint> points_;
};

struct WeightedPoint {
  AffinePoint point;
  int mult = 1;
};

// Collapse a multiset of points into distinct points with multiplicities,
// in canonical order. All points must share one field.
std::vector<WeightedPoint> group_points(const std::vector<AffinePoint>& points);

// Matrix whose columns are the first m + 1 monomials and whose rows are the
// Taylor coefficients of order 0..k-1 of each monomial at each point of
// multiplicity k. The local parameter is x - x0 when y0 != 0 and y otherwise.
// Every entry lives in `field`, which must contain all coordinates.
Matrix interpolation_rows(const SuperellipticCurve& c, const std::vector<WeightedPoint>& pts,
                          const FieldCtx& field);

// Cofactors c_j = (-1)^(1+j) det(A with column j removed), j = 1..m+1, of the
// m x (m+1) interpolation matrix. Throws RankDeficient when all vanish.
std::vector<FieldElement> interpolation_matrix(const SuperellipticCurve& c, const std::vector<WeightedPoint>& pts,
                                               const FieldCtx& field);

// sum_k c_k phi_k vanishing at the prescribed points to the prescribed order.
struct InterpolationCurve {
  std::vector<Monomial> monomials;
  std::vector<FieldElement> coeffs;  // last nonzero entry is 1
  BiPoly poly;
  // The cofactors vanished and the minimal-order kernel function was used.
  bool rank_deficient = false;
};

// Throws RankDeficient only when `allow_rank_deficient` is false.
InterpolationCurve interpolation_curve(const SuperellipticCurve& c, const std::vector<WeightedPoint>& pts,
                                       const FieldCtx& field, bool allow_rank_deficient = true);

// F(x) = Res_y(y^n - f(x), ic). Throws IdenticallyZero.
UniPoly intersect_x(const SuperellipticCurve& c, const InterpolationCurve& ic);

// Record of one interpolate-intersect-divide-lift step.
struct StepCertificate {
  int m = 0;
  FieldCtx working_field;
  InterpolationCurve ic;
  UniPoly F;        // resultant, monic
  UniPoly known;    // prod (x - x_i)^(k_i) over the inputs
  UniPoly residual; // monic F / known
  int restarts = 0; // working-field enlargements
};

struct PipelineOptions {
  unsigned ext_cap = kDefaultExtensionCap;
  std::uint64_t seed = 0x5eedULL;
  // Called with the certificate of every completed step.
  std::function<void(const SuperellipticCurve&, const StepCertificate&)> on_step;
};

// The divisor -(sum of the inputs) in reduced form. Errors are tagged with
// `stage`.
ReducedDivisor reduce_opposite(const SuperellipticCurve& c, const std::vector<AffinePoint>& points,
                               StepCertificate* cert = nullptr, const PipelineOptions& opt = {},
                               const char* stage = "reduce");

struct AddCertificate {
  UniPoly f1, f2;       // x-support of the two inputs
  StepCertificate chord; // through D1 + D2; residual is f3
  StepCertificate flip;  // through the chord output; residual is f4
  const UniPoly& f3() const { return chord.residual; }
  const UniPoly& f4() const { return flip.residual; }
};

ReducedDivisor invert(const ReducedDivisor& D, StepCertificate* cert = nullptr, const PipelineOptions& opt = {});
// Genericity failures inside the pipeline surface as NonGeneric naming the
// failing step.
ReducedDivisor add(const ReducedDivisor& D1, const ReducedDivisor& D2, AddCertificate* cert = nullptr,
                   const PipelineOptions& opt = {});
// add(D, D): repeated points enter with multiplicity, giving tangency rows.
ReducedDivisor double_divisor(const ReducedDivisor& D, AddCertificate* cert = nullptr,
                              const PipelineOptions& opt = {});
// The reduced representative of D's class, invert(invert(D)). ReducedDivisor
// only bounds the number of points, so D itself may be a non-minimal
// representative (three collinear points on a Picard curve, for instance).
ReducedDivisor normalize(const ReducedDivisor& D, const PipelineOptions& opt = {});
// n * D by double-and-add; n >= 0.
ReducedDivisor scalar_mul(const ReducedDivisor& D, const BigInt& n, const PipelineOptions& opt = {});

// True iff f3 and f4 of add(D1, D2) have coefficients in `sub`. Throws
// PreconditionFailed unless the supports of D1 and D2 are defined over `sub`.
bool field_of_definition_check(const ReducedDivisor& D1, const ReducedDivisor& D2, const FieldCtx& sub,
                               AddCertificate* cert = nullptr);

// Smallest subfield of z's field containing z (as a degree over F_p).
unsigned element_degree(const FieldElement& z);

}  // namespace superjac
