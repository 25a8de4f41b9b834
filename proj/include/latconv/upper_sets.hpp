#pragma once

// Closed convex monotone polyhedral sets A = cl co(A + Z+), ordered by
// inclusion reversed. Support functions use the infimum convention and
// halfspaces are {z : <z*, z> >= r}.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "latconv/cones.hpp"
#include "latconv/double_description.hpp"
#include "latconv/ext_real.hpp"

namespace latconv {

struct Halfspace {
  Vec normal;
  Rational level;
};

class UpperSet {
 public:
  enum class Kind { Empty, Full, Proper };

  static UpperSet empty(const OrderCone& ambient);
  static UpperSet full(const OrderCone& ambient);
  /// co(points) + cone(ambient generators, extra_rays). Normalizes to Empty
  /// when there are no points and to Full when the recession cone is the
  /// whole space.
  static UpperSet make(const OrderCone& ambient, std::vector<Vec> points, std::vector<Vec> extra_rays = {});
  /// Point plus ambient cone.
  static UpperSet translate(const OrderCone& ambient, const Vec& point);
  /// Intersection of inequalities; the caller guarantees monotonicity.
  static UpperSet from_inequalities(const OrderCone& ambient, const std::vector<Inequality>& ineqs);
  static UpperSet halfspace(const OrderCone& ambient, const Halfspace& h);

  Kind kind() const { return kind_; }
  bool is_empty() const { return kind_ == Kind::Empty; }
  bool is_full() const { return kind_ == Kind::Full; }
  bool is_proper() const { return kind_ == Kind::Proper; }
  std::size_t dim() const { return ambient_.dim(); }
  const OrderCone& ambient() const { return ambient_; }
  const std::vector<Vec>& points() const { return points_; }
  const std::vector<Vec>& extra_rays() const { return extra_rays_; }
  /// Ambient generators followed by extra rays.
  std::vector<Vec> recession_rays() const;

  /// Inequality description; empty for Full, throws for Empty. Cached.
  const std::vector<Inequality>& hrep() const;

  /// Same set with redundant points and rays removed.
  UpperSet reduced() const;

 private:
  struct Cache;
  UpperSet(const OrderCone& ambient, Kind kind, std::vector<Vec> points, std::vector<Vec> rays);

  OrderCone ambient_;
  Kind kind_;
  std::vector<Vec> points_;
  std::vector<Vec> extra_rays_;
  std::shared_ptr<Cache> cache_;
};

bool same_ambient(const OrderCone& a, const OrderCone& b);

/// inf over A of <z*, z>, from the generator description.
ExtReal support(const UpperSet& a, const Vec& zstar);
/// Same value through linear programming duality on the inequality description.
ExtReal support_lp(const UpperSet& a, const Vec& zstar);

bool contains(const UpperSet& a, const Vec& z);

UpperSet minkowski_sum(const UpperSet& a, const UpperSet& b);
UpperSet lattice_inf(const std::vector<UpperSet>& sets);
UpperSet lattice_sup(const std::vector<UpperSet>& sets);

struct SetComparison {
  bool equal = true;
  std::optional<Vec> witness;  // probe where the supports differ
  ExtReal lhs, rhs;            // supports at the witness
};

/// Compares supports on probes and on the inequality normals of both sets.
SetComparison compare_sets(const UpperSet& a, const UpperSet& b, const std::vector<Vec>& probes);
bool set_equal(const UpperSet& a, const UpperSet& b, const std::vector<Vec>& probes);

/// a is a subset of b.
bool is_subset(const UpperSet& a, const UpperSet& b);

struct QuasiconcavityResult {
  bool complement_convex = true;      // exact
  bool indicator_quasiconcave = true; // along sampled segments
  bool agree = true;
  std::optional<std::pair<Vec, Vec>> witness;  // segment endpoints outside A crossing A
};

/// Convexity of B \ A against quasiconcavity of the indicator of A on B.
/// Both sets are read as plain convex polyhedra. Throws if A is not inside B.
QuasiconcavityResult indicator_quasiconcavity(const UpperSet& a, const UpperSet& b, int samples,
                                              std::uint64_t seed);
bool indicator_quasiconcavity_check(const UpperSet& a, const UpperSet& b, int samples, std::uint64_t seed);

}  // namespace latconv
