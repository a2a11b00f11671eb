#pragma once

#include <vector>

#include "superjac/jacobian.hpp"

namespace superjac {

// Mumford pair (u, v) for y^2 = f(x): u monic, deg v < deg u, u | v^2 - f.
struct MumfordDivisor {
  UniPoly u, v;

  bool is_identity() const { return u.degree() == 0; }
  FieldCtx field() const { return common_field(u.field(), v.field()); }
  // Coefficients moved to the smallest field containing them and `base`.
  MumfordDivisor canonical(const FieldCtx& base) const;
  std::string to_string() const { return "(" + u.to_string() + ", " + v.to_string() + ")"; }
  friend bool operator==(const MumfordDivisor& a, const MumfordDivisor& b) { return a.u == b.u && a.v == b.v; }
};

MumfordDivisor mumford_identity(const SuperellipticCurve& c);
// Throws NotHyperelliptic, ConjugatePair (P and its involution image both
// present) or NotReduced (a ramification point repeated).
MumfordDivisor mumford_from_points(const ReducedDivisor& D);
// Roots of u over its splitting field, y = v(x).
ReducedDivisor points_from_mumford(const SuperellipticCurve& c, const MumfordDivisor& A,
                                   unsigned ext_cap = kDefaultExtensionCap);
bool is_valid_mumford(const SuperellipticCurve& c, const MumfordDivisor& A);

MumfordDivisor mumford_negate(const MumfordDivisor& A);
// Composition followed by reduction. Handles every case, including
// conjugate and ramified points.
MumfordDivisor cantor_add(const SuperellipticCurve& c, const MumfordDivisor& A, const MumfordDivisor& B);
MumfordDivisor cantor_scalar_mul(const SuperellipticCurve& c, const MumfordDivisor& A, const BigInt& n);

// Numerator of the zeta function, L(T) = sum a_i T^i.
struct LPolynomial {
  std::vector<BigInt> a;
  std::vector<std::uint64_t> counts;  // #X(F_{q^i}), i = 1..g
  BigInt at_one() const;
  int genus() const { return static_cast<int>(a.size() - 1) / 2; }
};

// Built from #X(F_{q^i}), i = 1..g, by Newton's identities. Checks the
// functional equation and, when q^(g+1) fits the scan bound, the predicted
// #X(F_{q^(g+1)}); either failure throws PreconditionFailed.
LPolynomial l_polynomial(const SuperellipticCurve& c, std::uint64_t scan_bound = kDefaultScanBound);
BigInt jacobian_order(const SuperellipticCurve& c, std::uint64_t scan_bound = kDefaultScanBound);

// Every Mumford pair over the curve field, in canonical order. Throws
// ScanBoundExceeded when q^g exceeds `bound`.
std::vector<MumfordDivisor> enumerate_jacobian(const SuperellipticCurve& c, std::uint64_t bound = 100000);

}  // namespace superjac
