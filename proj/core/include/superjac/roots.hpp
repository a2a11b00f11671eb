#pragma once

#include <cstdint>
#include <vector>

#include "superjac/poly.hpp"

namespace superjac {

inline constexpr std::uint64_t kDefaultRootSeed = 0x5eedULL;
// Fields at most this large are scanned element by element.
inline constexpr std::uint64_t kExhaustiveRootBound = 256;

// Roots of `a` lying in `field` (default: the coefficient field), with
// multiplicity, in canonical order. `field` must contain the coefficient
// field. The seed drives equal-degree splitting; the output does not depend
// on it.
std::vector<FieldElement> poly_roots(const UniPoly& a, const FieldCtx& field = {},
                                     std::uint64_t seed = kDefaultRootSeed);

// Same, without multiplicity.
std::vector<FieldElement> distinct_roots(const UniPoly& a, const FieldCtx& field = {},
                                         std::uint64_t seed = kDefaultRootSeed);

// Degrees of the distinct monic irreducible factors of `a` over its
// coefficient field, ascending, one entry per factor.
std::vector<unsigned> factor_degrees(const UniPoly& a);

bool is_irreducible(const UniPoly& a);

// Smallest extension of the coefficient field over which `a` splits into
// linear factors. Throws DegreeOverflow when the absolute degree over F_p
// would exceed `cap`.
FieldCtx splitting_field(const UniPoly& a, unsigned cap = kDefaultExtensionCap);

}  // namespace superjac
