#pragma once

#include <random>
#include <vector>

#include "superjac/jacobian.hpp"

namespace superjac {

// A uniformly drawn affine point over `field` (default: the curve field)
// with y != 0. Throws PreconditionFailed after too many misses.
AffinePoint random_point(const SuperellipticCurve& c, std::mt19937_64& rng, FieldCtx field = {});

// A Galois-stable divisor over the curve field with r distinct, unramified
// points: the x-support is a random squarefree monic polynomial of degree r
// and each Frobenius orbit carries a random compatible y. Points are
// generally defined over extensions. Draws that are not reduced are
// rejected.
ReducedDivisor random_divisor(const SuperellipticCurve& c, int r, std::mt19937_64& rng,
                              unsigned ext_cap = kDefaultExtensionCap);

// Same, with the support made of Frobenius orbits of the given sizes over
// the curve field. {1, 1} gives two rational points; {2} a conjugate pair.
ReducedDivisor random_divisor_with_orbits(const SuperellipticCurve& c, const std::vector<unsigned>& orbits,
                                          std::mt19937_64& rng);

// Uniform in [0, bound).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace superjac
