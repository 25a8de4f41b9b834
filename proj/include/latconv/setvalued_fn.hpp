#pragma once

// Set-valued functions sampled on a finite primal grid with values in the
// lattice of closed convex upper sets, optionally extended affinely along
// declared domain rays.

#include <cstdint>
#include <optional>
#include <vector>

#include "latconv/cones.hpp"
#include "latconv/scalar_fn.hpp"
#include "latconv/upper_sets.hpp"

namespace latconv {

/// R(x + s d) = R(x) + s * shift for grid x and s >= 0. Without a shift the
/// value becomes the whole space for s > 0 (unbounded descent).
struct DomainRay {
  Vec direction;
  std::optional<Vec> shift;
};

class SetValuedFn {
 public:
  SetValuedFn(std::vector<Vec> grid, std::vector<UpperSet> values, OrderCone ambient,
              std::optional<OrderCone> primal_cone = std::nullopt, std::vector<DomainRay> rays = {});

  std::size_t primal_dim() const { return primal_dim_; }
  std::size_t dim() const { return ambient_.dim(); }
  std::size_t size() const { return grid_.size(); }
  const std::vector<Vec>& grid() const { return grid_; }
  const std::vector<UpperSet>& values() const { return values_; }
  const OrderCone& ambient() const { return ambient_; }
  const std::optional<OrderCone>& primal_cone() const { return primal_cone_; }
  const std::vector<DomainRay>& rays() const { return rays_; }

  std::optional<std::size_t> index_of(const Vec& x) const;
  const UpperSet& at(const Vec& x) const;
  bool all_empty() const;
  bool all_full() const;

 private:
  std::size_t primal_dim_;
  std::vector<Vec> grid_;
  std::vector<UpperSet> values_;
  OrderCone ambient_;
  std::optional<OrderCone> primal_cone_;
  std::vector<DomainRay> rays_;
};

/// x -> support(R(x), z*), with ray slopes <z*, shift>.
ExtScalarFn scalarize(const SetValuedFn& r, const Vec& zstar);

/// Grid points x with z in R(x).
std::vector<Vec> inverse(const SetValuedFn& r, const Vec& z);

struct PairWitness {
  Vec first, second;
};

/// x1 <= x2 implies R(x1) subset of R(x2); needs a primal cone.
std::optional<PairWitness> decreasing_violation(const SetValuedFn& r);
bool is_decreasing(const SetValuedFn& r);

struct ConvexGraphReport {
  bool holds = true;
  bool vacuous = false;        // no grid pair has its midpoint on the grid
  std::size_t pairs_checked = 0;
  std::optional<PairWitness> grid_pair;   // x1, x2
  std::optional<PairWitness> value_pair;  // z1 in R(x1), z2 in R(x2), midpoint outside
  bool scalar_consistent = true;          // convex graph => convex scalarizations on probes
  std::optional<Vec> scalar_witness;      // probe direction where that failed
};

ConvexGraphReport check_convex_graph(const SetValuedFn& r, int samples, std::uint64_t seed,
                                     const std::vector<Vec>& probes);
bool is_convex_graph(const SetValuedFn& r, int samples, std::uint64_t seed);

struct ProperReport {
  bool proper = false;
  bool scalar_flag = false;         // some nonzero z* gives a proper scalarization
  std::optional<Vec> scalar_witness;
};

ProperReport check_proper(const SetValuedFn& r);
bool is_proper_sv(const SetValuedFn& r);

/// Base directions with proper scalarization.
std::vector<Vec> proper_direction_cone(const SetValuedFn& r, const ConeBase& base);

/// The halfspace {z : <z*, z> >= level}, level = -conjugate(scalarization).
struct ConjugateRadius {
  Vec xstar;
  Vec zstar;
  ExtReal level;
  UpperSet as_set(const OrderCone& ambient) const;
};

ConjugateRadius set_conjugate(const SetValuedFn& r, const Vec& xstar, const Vec& zstar);
/// Union over the modelled domain of R(x) + H(z*, -<x*, x>), built without scalarizing.
UpperSet set_conjugate_direct(const SetValuedFn& r, const Vec& xstar, const Vec& zstar);

UpperSet set_biconjugate(const SetValuedFn& r, const Vec& x, const std::vector<Vec>& dual_primal_grid,
                         const ConeBase& base);

struct FenchelMoreauPoint {
  Vec x;
  bool equal = true;
  SetComparison comparison;
};

struct SetFenchelMoreauReport {
  bool pass = true;
  std::vector<FenchelMoreauPoint> points;
};

SetFenchelMoreauReport sv_fenchel_moreau_check(const SetValuedFn& r, const std::vector<Vec>& dual_primal_grid,
                                               const ConeBase& base);

/// Dual grid from the hull slopes of every scalarization along the base
/// directions, plus `extra`.
std::vector<Vec> derived_dual_grid(const SetValuedFn& r, const ConeBase& base, const std::vector<Vec>& extra = {});

/// Base refined by the normalized inequality normals of every value.
ConeBase value_normal_base(const SetValuedFn& r, const ConeBase& base);

}  // namespace latconv
