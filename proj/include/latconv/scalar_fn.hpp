#pragma once

// Extended-real functions sampled on a finite grid, with optional affine
// extension along rays, and their discrete Legendre-Fenchel transforms.

#include <optional>
#include <vector>

#include "latconv/ext_real.hpp"
#include "latconv/rational.hpp"

namespace latconv {

/// rho(x + s d) = rho(x) + s * slope for grid x and s >= 0.
/// slope = -inf means rho drops to -inf along the ray.
struct ScalarRay {
  Vec direction;
  ExtReal slope;
};

class ExtScalarFn {
 public:
  ExtScalarFn(std::vector<Vec> grid, std::vector<ExtReal> values, std::vector<ScalarRay> rays = {});

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return grid_.size(); }
  const std::vector<Vec>& grid() const { return grid_; }
  const std::vector<ExtReal>& values() const { return values_; }
  const std::vector<ScalarRay>& rays() const { return rays_; }

  std::optional<std::size_t> index_of(const Vec& x) const;
  /// Value at a grid point; throws std::out_of_range off the grid.
  const ExtReal& at(const Vec& x) const;
  bool domain_empty() const;

 private:
  std::size_t dim_;
  std::vector<Vec> grid_;
  std::vector<ExtReal> values_;
  std::vector<ScalarRay> rays_;
};

ExtReal conjugate(const ExtScalarFn& rho, const Vec& xstar);
ExtReal biconjugate(const ExtScalarFn& rho, const std::vector<Vec>& dual_grid, const Vec& x);

/// Somewhere finite and nowhere -inf.
bool is_proper(const ExtScalarFn& rho);

struct FenchelMoreauGap {
  ExtReal gap;                    // max over the grid of rho - rho**
  std::optional<Vec> worst;       // grid point attaining a positive gap
};

FenchelMoreauGap fenchel_moreau(const ExtScalarFn& rho, const std::vector<Vec>& dual_grid);
ExtReal fenchel_moreau_gap(const ExtScalarFn& rho, const std::vector<Vec>& dual_grid);

/// Slopes of the non-vertical facets of the epigraph hull of the finite
/// grid values (and finite-slope rays). Together they make a dual grid on
/// which the biconjugate of a grid-convex function is exact.
std::vector<Vec> lower_hull_slopes(const ExtScalarFn& rho);

/// rho(m) <= (rho(a) + rho(b)) / 2 for all grid pairs whose midpoint m is on
/// the grid. Returns a violating (a, b) pair if any.
std::optional<std::pair<Vec, Vec>> midpoint_convexity_violation(const ExtScalarFn& rho);

}  // namespace latconv
