#include "superjac/jacobian.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "series.hpp"
#include "superjac/resultant.hpp"
#include "superjac/roots.hpp"

namespace superjac {

using detail::Series;
using detail::local_expansion;

namespace detail {

// Local expansion (X, Y) of the curve at P to `prec` terms.
std::pair<Series, Series> local_expansion(const UniPoly& f, int n, const AffinePoint& P, std::size_t prec) {
  const FieldCtx F = P.x.field();
  const Series t = Series::param(F, prec);
  if (!P.y.is_zero()) {
    // Parameter x - x0; solve Y^n = f(x0 + t) by Newton from Y = y0.
    const Series X = Series::constant(P.x, prec) + t;
    const Series target = Series::compose(f, X);
    const FieldElement n_el = F.from_int(n);
    Series Y = Series::constant(P.y, prec);
    for (std::size_t it = 0; it <= prec + 1; ++it) {
      Series next = Y - (Y.pow(static_cast<unsigned>(n)) - target) * (Y.pow(static_cast<unsigned>(n - 1)) * n_el).inverse();
      if (next == Y) break;
      Y = std::move(next);
    }
    return {X, Y};
  }
  // Ramified: parameter y; solve f(x0 + X) = s^n with X(0) = 0.
  const Series sn = t.pow(static_cast<unsigned>(n));
  const UniPoly fp = f.derivative();
  Series X(F, prec);
  for (std::size_t it = 0; it <= prec + 1; ++it) {
    const Series xs = Series::constant(P.x, prec) + X;
    Series next = X - (Series::compose(f, xs) - sn) * Series::compose(fp, xs).inverse();
    if (next == X) break;
    X = std::move(next);
  }
  return {Series::constant(P.x, prec) + X, t};
}

}  // namespace detail

namespace {

FieldElement to_field(const FieldElement& z, const FieldCtx& target, const FieldCtx& over) {
  return z.field() == target ? z : embed(z, target, over);
}

unsigned smallest_common_degree(const SuperellipticCurve& c, const std::vector<AffinePoint>& pts) {
  unsigned deg = c.field().degree();
  for (const auto& P : pts) deg = std::lcm(deg, std::lcm(P.x.field().degree(), P.y.field().degree()));
  return deg;
}

// Values of every monomial along the local expansion.
std::vector<Series> monomial_series(const std::vector<Monomial>& monos, const Series& X, const Series& Y) {
  int max_i = 0, max_j = 0;
  for (const auto& m : monos) {
    max_i = std::max(max_i, m.i);
    max_j = std::max(max_j, m.j);
  }
  std::vector<Series> xp{Series::constant(X.field().one(), X.prec())}, yp{xp[0]};
  for (int i = 1; i <= max_i; ++i) xp.push_back(xp.back() * X);
  for (int j = 1; j <= max_j; ++j) yp.push_back(yp.back() * Y);
  std::vector<Series> out;
  out.reserve(monos.size());
  for (const auto& m : monos) out.push_back(xp[static_cast<std::size_t>(m.i)] * yp[static_cast<std::size_t>(m.j)]);
  return out;
}

int total_mult(const std::vector<WeightedPoint>& pts) {
  int m = 0;
  for (const auto& w : pts) m += w.mult;
  return m;
}

// Order of vanishing of `h` at P, computed to at most `prec` terms.
std::size_t order_at(const UniPoly& f, int n, const BiPoly& h, const AffinePoint& P, std::size_t prec) {
  auto [X, Y] = local_expansion(f, n, P, prec);
  Series acc(P.x.field(), prec);
  for (const auto& [k, c] : h.terms()) acc += X.pow(static_cast<unsigned>(k.first)) * Y.pow(static_cast<unsigned>(k.second)) * c;
  return acc.valuation();
}

struct Attempt {
  std::optional<ReducedDivisor> result;
  unsigned need_degree = 0;  // nonzero: retry in a field of this degree
};

[[noreturn]] void rethrow_tagged(const Error& e, const std::string& stage) {
  throw Error(e.code(), e.what(), e.stage().empty() ? stage : stage + "/" + e.stage());
}

Attempt attempt_in(const SuperellipticCurve& c, const std::vector<AffinePoint>& raw, const FieldCtx& E,
                   StepCertificate& cert, const PipelineOptions& opt, const std::string& stage) {
  const FieldCtx K = c.field();
  std::vector<AffinePoint> pts;
  pts.reserve(raw.size());
  for (const auto& P : raw) {
    AffinePoint Q{to_field(P.x, E, K), to_field(P.y, E, K)};
    if (!point_on_curve(c, Q)) fail(ErrorCode::NotOnCurve, Q.to_string() + " is not on " + c.to_string(), stage);
    pts.push_back(Q);
  }
  const auto grouped = group_points(pts);
  const int m = total_mult(grouped);
  if (m > 2 * c.genus())
    fail(ErrorCode::PreconditionFailed, "total multiplicity " + std::to_string(m) + " exceeds 2g", stage);
  const UniPoly f = c.f_in(E);

  cert = StepCertificate{};
  cert.m = m;
  cert.working_field = E;
  try {
    cert.ic = interpolation_curve(c, grouped, E, true);
  } catch (const Error& e) {
    rethrow_tagged(e, stage + "/interpolate");
  }
  try {
    cert.F = intersect_x(c, cert.ic).monic();
  } catch (const Error& e) {
    rethrow_tagged(e, stage + "/intersect");
  }
  cert.known = UniPoly::constant(E.one());
  for (const auto& w : grouped) cert.known *= UniPoly::linear(w.point.x).pow(static_cast<std::uint64_t>(w.mult));
  try {
    cert.residual = exact_div(cert.F, cert.known).monic();
  } catch (const Error& e) {
    rethrow_tagged(e, stage + "/divide");
  }

  Attempt out;
  if (cert.residual.degree() <= 0) {
    out.result = ReducedDivisor::identity(c);
    return out;
  }
  auto extension_needed = [&](const UniPoly& poly) -> unsigned {
    unsigned l = 1;
    for (unsigned d : factor_degrees(poly)) l = std::lcm(l, d);
    return l;
  };
  const unsigned l1 = extension_needed(cert.residual);
  if (l1 > 1) {
    out.need_degree = E.degree() * l1;
    return out;
  }

  std::vector<AffinePoint> result;
  std::vector<FieldElement> xs = poly_roots(cert.residual, E, opt.seed);
  std::vector<std::pair<FieldElement, int>> x_mult;
  for (const auto& x0 : xs) {
    if (!x_mult.empty() && x_mult.back().first == x0)
      ++x_mult.back().second;
    else
      x_mult.emplace_back(x0, 1);
  }
  unsigned need = 1;
  std::vector<std::pair<FieldElement, std::vector<FieldElement>>> fibres;
  for (const auto& [x0, e] : x_mult) {
    std::vector<FieldElement> fib(static_cast<std::size_t>(c.n()) + 1, E.zero());
    fib[0] = -f.eval(x0);
    fib.back() = E.one();
    const UniPoly yfib(E, std::move(fib));
    const UniPoly hx = cert.ic.poly.eval_x(x0);
    const UniPoly G = hx.is_zero() ? yfib : gcd(hx, yfib);
    if (G.degree() <= 0)
      fail(ErrorCode::AmbiguousLift, "no point above x = " + x0.to_string(), stage + "/lift");
    need = std::lcm(need, extension_needed(G));
    if (need == 1) fibres.emplace_back(x0, distinct_roots(G, E, opt.seed));
  }
  if (need > 1) {
    out.need_degree = E.degree() * need;
    return out;
  }
  for (std::size_t k = 0; k < x_mult.size(); ++k) {
    const auto& [x0, e] = x_mult[k];
    const auto prec = static_cast<std::size_t>(root_multiplicity(cert.F, x0)) + 1;
    int found = 0;
    for (const auto& y0 : fibres[k].second) {
      const AffinePoint P{x0, y0};
      const int ord = static_cast<int>(order_at(f, c.n(), cert.ic.poly, P, prec));
      int in_mult = 0;
      for (const auto& w : grouped)
        if (w.point == P) in_mult = w.mult;
      const int extra = ord - in_mult;
      if (extra < 0)
        fail(ErrorCode::AmbiguousLift, "interpolation curve vanishes to order " + std::to_string(ord) + " < " +
                                           std::to_string(in_mult) + " at " + P.to_string(), stage + "/lift");
      for (int i = 0; i < extra; ++i) result.push_back(P);
      found += extra;
    }
    if (found != e)
      fail(ErrorCode::AmbiguousLift,
           "lifted " + std::to_string(found) + " points above x = " + x0.to_string() + ", expected " + std::to_string(e),
           stage + "/lift");
  }
  out.result = ReducedDivisor::make(c, result);
  return out;
}

}  // namespace

unsigned element_degree(const FieldElement& z) {
  const unsigned k = z.field().degree();
  for (unsigned t = 1; t < k; ++t)
    if (k % t == 0 && frobenius(z, t) == z) return t;
  return k;
}

ReducedDivisor ReducedDivisor::identity(const SuperellipticCurve& c) {
  ReducedDivisor D;
  D.curve_ = c;
  D.field_ = c.field();
  return D;
}

ReducedDivisor ReducedDivisor::make(const SuperellipticCurve& c, const std::vector<AffinePoint>& points) {
  if (static_cast<int>(points.size()) > c.genus())
    fail(ErrorCode::NotReduced,
         std::to_string(points.size()) + " points exceed the genus " + std::to_string(c.genus()), "divisor");
  const FieldCtx K = c.field();
  const FieldCtx W = FieldCtx::make(K.characteristic(), smallest_common_degree(c, points));
  unsigned s = K.degree();
  std::vector<AffinePoint> in_w;
  for (const auto& P : points) {
    AffinePoint Q{to_field(P.x, W, K), to_field(P.y, W, K)};
    if (!point_on_curve(c, Q)) fail(ErrorCode::NotOnCurve, Q.to_string() + " is not on " + c.to_string(), "divisor");
    s = std::lcm(s, std::lcm(element_degree(Q.x), element_degree(Q.y)));
    in_w.push_back(Q);
  }
  ReducedDivisor D;
  D.curve_ = c;
  D.field_ = FieldCtx::make(K.characteristic(), s);
  for (const auto& Q : in_w) D.points_.push_back({*descend(Q.x, D.field_, K), *descend(Q.y, D.field_, K)});
  std::sort(D.points_.begin(), D.points_.end());
  return D;
}

UniPoly ReducedDivisor::support_poly() const {
  UniPoly u = UniPoly::constant(field_.one());
  for (const auto& P : points_) u *= UniPoly::linear(P.x);
  return u;
}

std::string ReducedDivisor::to_string() const {
  if (points_.empty()) return "0";
  std::string s;
  for (const auto& P : points_) s += (s.empty() ? "" : " + ") + P.to_string();
  return s + " - " + std::to_string(points_.size()) + "*inf";
}

std::vector<WeightedPoint> group_points(const std::vector<AffinePoint>& points) {
  std::vector<AffinePoint> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  std::vector<WeightedPoint> out;
  for (const auto& P : sorted) {
    if (!out.empty() && out.back().point == P)
      ++out.back().mult;
    else
      out.push_back({P, 1});
  }
  return out;
}

Matrix interpolation_rows(const SuperellipticCurve& c, const std::vector<WeightedPoint>& pts, const FieldCtx& field) {
  const int m = total_mult(pts);
  const auto monos = adopted_basis(c, m + 1).monomials;
  const UniPoly f = c.f_in(field);
  Matrix rows;
  for (const auto& w : pts) {
    const AffinePoint P{to_field(w.point.x, field, c.field()), to_field(w.point.y, field, c.field())};
    const auto prec = static_cast<std::size_t>(w.mult);
    auto [X, Y] = local_expansion(f, c.n(), P, prec);
    const auto vals = monomial_series(monos, X, Y);
    for (std::size_t r = 0; r < prec; ++r) {
      std::vector<FieldElement> row;
      row.reserve(vals.size());
      for (const auto& s : vals) row.push_back(s[r]);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<FieldElement> interpolation_matrix(const SuperellipticCurve& c, const std::vector<WeightedPoint>& pts,
                                               const FieldCtx& field) {
  const Matrix A = interpolation_rows(c, pts, field);
  const std::size_t cols = static_cast<std::size_t>(total_mult(pts)) + 1;
  std::vector<FieldElement> cof;
  bool all_zero = true;
  for (std::size_t j = 0; j < cols; ++j) {
    Matrix minor;
    for (const auto& row : A) {
      std::vector<FieldElement> r;
      for (std::size_t k = 0; k < cols; ++k)
        if (k != j) r.push_back(row[k]);
      minor.push_back(std::move(r));
    }
    FieldElement d = determinant(std::move(minor), field);
    if (j % 2 == 1) d = -d;
    if (!d.is_zero()) all_zero = false;
    cof.push_back(d);
  }
  if (all_zero) fail(ErrorCode::RankDeficient, "every cofactor of the interpolation matrix vanishes", "interpolate");
  return cof;
}

InterpolationCurve interpolation_curve(const SuperellipticCurve& c, const std::vector<WeightedPoint>& pts,
                                       const FieldCtx& field, bool allow_rank_deficient) {
  const int m = total_mult(pts);
  InterpolationCurve ic;
  ic.monomials = adopted_basis(c, m + 1).monomials;
  // When A has full rank m its kernel is spanned by the cofactor vector, so
  // the normalised kernel vector is the normalised cofactor vector.
  const Matrix A = interpolation_rows(c, pts, field);
  std::vector<FieldElement> v;
  if (A.empty()) {
    v = {field.one()};
  } else {
    auto ker = kernel(A, field);
    ic.rank_deficient = ker.size() > 1;
    if (ic.rank_deficient && !allow_rank_deficient)
      fail(ErrorCode::RankDeficient, "interpolation matrix has rank below " + std::to_string(m), "interpolate");
    // Smallest free column first: the function of least pole order.
    v = std::move(ker.front());
  }
  std::size_t last = v.size();
  while (last > 0 && v[last - 1].is_zero()) --last;
  const FieldElement inv = v[last - 1].inverse();
  ic.poly = BiPoly(field);
  for (std::size_t k = 0; k < v.size(); ++k) {
    ic.coeffs.push_back(v[k] * inv);
    ic.poly.set(ic.monomials[k].i, ic.monomials[k].j, ic.coeffs.back());
  }
  return ic;
}

UniPoly intersect_x(const SuperellipticCurve& c, const InterpolationCurve& ic) {
  const FieldCtx E = ic.poly.field();
  BiPoly eq = c.equation();
  if (!(eq.field() == E)) eq = eq.embed(E);
  UniPoly F = resultant_y(eq, ic.poly);
  if (F.is_zero())
    fail(ErrorCode::IdenticallyZero, "interpolation curve shares a component with the curve", "intersect");
  return F;
}

ReducedDivisor reduce_opposite(const SuperellipticCurve& c, const std::vector<AffinePoint>& points,
                               StepCertificate* cert, const PipelineOptions& opt, const char* stage) {
  c.require_strict(stage);
  StepCertificate local;
  StepCertificate& cc = cert ? *cert : local;
  unsigned deg = smallest_common_degree(c, points);
  int restarts = 0;
  while (true) {
    if (deg > opt.ext_cap || deg > kMaxExtensionDegree)
      fail(ErrorCode::DegreeOverflow,
           "working field degree " + std::to_string(deg) + " exceeds the cap " + std::to_string(opt.ext_cap),
           std::string(stage) + "/lift");
    const FieldCtx E = FieldCtx::make(c.field().characteristic(), deg);
    Attempt a = attempt_in(c, points, E, cc, opt, stage);
    cc.restarts = restarts;
    if (a.result) {
      if (opt.on_step) opt.on_step(c, cc);
      return *a.result;
    }
    deg = a.need_degree;
    ++restarts;
  }
}

ReducedDivisor invert(const ReducedDivisor& D, StepCertificate* cert, const PipelineOptions& opt) {
  return reduce_opposite(D.curve(), D.points(), cert, opt, "invert");
}

ReducedDivisor add(const ReducedDivisor& D1, const ReducedDivisor& D2, AddCertificate* cert,
                   const PipelineOptions& opt) {
  if (!(D1.curve() == D2.curve())) fail(ErrorCode::PreconditionFailed, "divisors on different curves", "add");
  AddCertificate local;
  AddCertificate& cc = cert ? *cert : local;
  cc.f1 = D1.support_poly();
  cc.f2 = D2.support_poly();
  std::vector<AffinePoint> all = D1.points();
  all.insert(all.end(), D2.points().begin(), D2.points().end());
  try {
    const ReducedDivisor opposite = reduce_opposite(D1.curve(), all, &cc.chord, opt, "chord");
    return reduce_opposite(D1.curve(), opposite.points(), &cc.flip, opt, "flip");
  } catch (const Error& e) {
    if (!e.is_non_generic() || e.code() == ErrorCode::NonGeneric) throw;
    throw Error(ErrorCode::NonGeneric, std::string(error_code_name(e.code())) + ": " + e.what(), e.stage());
  }
}

ReducedDivisor double_divisor(const ReducedDivisor& D, AddCertificate* cert, const PipelineOptions& opt) {
  return add(D, D, cert, opt);
}

ReducedDivisor normalize(const ReducedDivisor& D, const PipelineOptions& opt) {
  return invert(invert(D, nullptr, opt), nullptr, opt);
}

ReducedDivisor scalar_mul(const ReducedDivisor& D, const BigInt& n, const PipelineOptions& opt) {
  if (n < 0) fail(ErrorCode::PreconditionFailed, "negative scalar", "mul");
  ReducedDivisor acc = ReducedDivisor::identity(D.curve());
  if (n == 0) return acc;
  const auto bits = boost::multiprecision::msb(n);
  for (auto i = static_cast<std::int64_t>(bits); i >= 0; --i) {
    acc = double_divisor(acc, nullptr, opt);
    if (boost::multiprecision::bit_test(n, static_cast<unsigned>(i))) acc = add(acc, D, nullptr, opt);
  }
  return acc;
}

bool field_of_definition_check(const ReducedDivisor& D1, const ReducedDivisor& D2, const FieldCtx& sub,
                               AddCertificate* cert) {
  auto over_sub = [&](const UniPoly& u) {
    for (const auto& c : u.coeffs())
      if (!lies_in(c, sub)) return false;
    return true;
  };
  if (!over_sub(D1.support_poly()) || !over_sub(D2.support_poly()))
    fail(ErrorCode::PreconditionFailed, "input supports are not defined over " + sub.name(), "field_of_definition");
  AddCertificate local;
  AddCertificate& cc = cert ? *cert : local;
  add(D1, D2, &cc);
  return over_sub(cc.f3()) && over_sub(cc.f4());
}

}  // namespace superjac
