#pragma once

// Seeded random composition instances: G(x) = C + A x with A < 0 entrywise,
// F(y) = D + M y with M > 0 entrywise, orthant cones, declared rays.

#include <cstdint>
#include <stdexcept>

#include "latconv/composition.hpp"

namespace latconv {

struct GeneratorOptions {
  std::size_t dim_x = 1, dim_y = 1, dim_z = 1;
  std::size_t grid_size = 3;  // points per X axis
  std::uint64_t seed = 42;
  bool nonconvex = false;     // perturb one value of F (negative control)
};

class GeneratorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

CompositionInstance generate_instance(const GeneratorOptions& opts);


/// Random polygons A inside B in the plane, read as plain polyhedra (origin
/// cone). Alternates between A = B cut by a halfplane and A = hull of
/// interior points of B.
std::pair<UpperSet, UpperSet> generate_nested_pair(std::uint64_t seed);

}  // namespace latconv
