#pragma once

// Brute-force reference computations. They read instance data directly and
// use nothing from the main modules beyond rational vector arithmetic.

#include "latconv/composition.hpp"

namespace latconv {

/// Minimum over the points of A, -inf if some recession ray pairs negatively.
ExtReal oracle_support(const UpperSet& a, const Vec& zstar);

/// sup over grid x, y in G(x) (vertices, recession ladders) and descent
/// ladders of <x*, x> - phi_{F,z*}(y). Steps 0, 1, 2, 4, 8; strictly
/// increasing ladders count as +inf.
ExtReal oracle_conjugate_of_composition(const CompositionInstance& inst, const Vec& xstar, const Vec& zstar);

/// Lower convex envelope on the grid of a 1D or 2D function without rays.
ExtScalarFn oracle_envelope(const ExtScalarFn& rho);

/// Ladder steps used by the oracle.
inline constexpr long kOracleSteps[] = {0, 1, 2, 4, 8};

}  // namespace latconv
