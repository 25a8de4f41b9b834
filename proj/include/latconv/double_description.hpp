#pragma once

// Exact conversions between inequality and generator descriptions of
// polyhedral cones and polyhedra (double-description method).

#include <vector>

#include "latconv/rational.hpp"

namespace latconv {

/// Generators of a polyhedral cone: lin(lines) + cone(rays).
/// Outputs are primitive integer vectors in lexicographic order.
struct ConeGenerators {
  std::vector<Vec> lines;
  std::vector<Vec> rays;
};

/// Generators of {u in R^dim : <row, u> >= 0 for every row}.
ConeGenerators cone_from_inequalities(const std::vector<Vec>& rows, std::size_t dim);

/// One inequality <normal, z> >= level.
struct Inequality {
  Vec normal;
  Rational level;
};

/// Inequality description of co(points) + cone(rays); points must be nonempty.
/// Affine equalities come out as opposite pairs. An empty result means the
/// whole space.
std::vector<Inequality> polyhedron_inequalities(const std::vector<Vec>& points,
                                                const std::vector<Vec>& rays, std::size_t dim);

struct PolyhedronGenerators {
  bool empty = false;
  std::vector<Vec> points;
  std::vector<Vec> rays;  // lines appear as opposite pairs
};

/// Generator description of {z : <normal, z> >= level for all inequalities}.
PolyhedronGenerators polyhedron_generators(const std::vector<Inequality>& ineqs, std::size_t dim);

}  // namespace latconv
