#pragma once

// Polyhedral ordering cones given by generators, their duals and compact bases.

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "latconv/double_description.hpp"
#include "latconv/rational.hpp"

namespace latconv {

class ConeError : public std::runtime_error {
 public:
  enum class Kind { DimensionMismatch, ZeroDimension, ZeroGenerator, NotPointed, TrivialCone };
  ConeError(Kind kind, const std::string& what, Vec witness = {})
      : std::runtime_error(what), kind_(kind), witness_(std::move(witness)) {}
  Kind kind() const { return kind_; }
  /// For NotPointed: a line contained in the cone.
  const Vec& witness() const { return witness_; }

 private:
  Kind kind_;
  Vec witness_;
};

/// cone(generators) in R^dim. No generators means the cone {0}.
class OrderCone {
 public:
  OrderCone(std::size_t dim, std::vector<Vec> generators);

  static OrderCone orthant(std::size_t dim);
  static OrderCone whole_space(std::size_t dim);
  static OrderCone origin(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::vector<Vec>& generators() const { return generators_; }

  /// Generators of the positive dual cone; lines as opposite pairs. Cached.
  const std::vector<Vec>& dual_generators() const;
  /// Canonical lines + extreme rays of this cone. Cached.
  const ConeGenerators& canonical() const;

  bool is_pointed() const { return canonical().lines.empty(); }

 private:
  struct Cache;
  std::size_t dim_;
  std::vector<Vec> generators_;
  std::shared_ptr<Cache> cache_;
};

OrderCone dual_cone(const OrderCone& cone);

/// Exact membership v in cone.
bool in_cone(const OrderCone& cone, const Vec& v);

/// a <= b in the preorder induced by cone.
inline bool cone_leq(const OrderCone& cone, const Vec& a, const Vec& b) { return in_cone(cone, sub(b, a)); }

/// Compact base {y* in cone_dual : <c, y*> = 1} of a pointed dual cone.
struct ConeBase {
  std::vector<Vec> directions;  // each satisfies <normalization, d> = 1
  Vec normalization;            // the functional c
};

/// Throws ConeError NotPointed (with a line witness) or TrivialCone.
ConeBase cone_base(const OrderCone& cone_dual);

/// Adds every nonzero member of cone_dual from `extra`, rescaled onto the base.
ConeBase refine_base(const ConeBase& base, const OrderCone& cone_dual, const std::vector<Vec>& extra);

/// Writes d = lambda * sum_j w_j directions_j with lambda > 0, w convex. False if impossible.
bool base_representation(const ConeBase& base, const Vec& d, Rational& lambda, Vec& weights);

/// A point x with <x*, x> > 0 for every nonzero x* in the dual of `cone`, if one exists.
std::optional<Vec> strict_positivity_witness(const OrderCone& cone);

}  // namespace latconv
