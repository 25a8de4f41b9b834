#include "latconv/cones.hpp"

#include <mutex>

#include "latconv/lp.hpp"

namespace latconv {

struct OrderCone::Cache {
  std::once_flag dual_once;
  std::vector<Vec> dual;
  std::once_flag canon_once;
  ConeGenerators canon;
};

namespace {

std::vector<Vec> with_line_pairs(const ConeGenerators& g) {
  std::vector<Vec> out = g.rays;
  for (const auto& l : g.lines) {
    out.push_back(l);
    out.push_back(negate(l));
  }
  return out;
}

}  // namespace

OrderCone::OrderCone(std::size_t dim, std::vector<Vec> generators)
    : dim_(dim), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  if (dim_ == 0) throw ConeError(ConeError::Kind::ZeroDimension, "cone of dimension zero");
  for (const auto& g : generators_) {
    if (g.size() != dim_) {
      throw ConeError(ConeError::Kind::DimensionMismatch,
                      "cone generator " + to_string(g) + " has dimension " + std::to_string(g.size()) +
                          ", expected " + std::to_string(dim_));
    }
    if (is_zero(g)) throw ConeError(ConeError::Kind::ZeroGenerator, "cone generator is zero");
  }
}

OrderCone OrderCone::orthant(std::size_t dim) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < dim; ++i) gens.push_back(unit(dim, i));
  return OrderCone(dim, gens);
}

OrderCone OrderCone::whole_space(std::size_t dim) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < dim; ++i) {
    gens.push_back(unit(dim, i));
    gens.push_back(negate(unit(dim, i)));
  }
  return OrderCone(dim, gens);
}

OrderCone OrderCone::origin(std::size_t dim) { return OrderCone(dim, {}); }

const std::vector<Vec>& OrderCone::dual_generators() const {
  std::call_once(cache_->dual_once, [this] {
    cache_->dual = with_line_pairs(cone_from_inequalities(generators_, dim_));
  });
  return cache_->dual;
}

const ConeGenerators& OrderCone::canonical() const {
  std::call_once(cache_->canon_once, [this] {
    cache_->canon = cone_from_inequalities(dual_generators(), dim_);
  });
  return cache_->canon;
}

OrderCone dual_cone(const OrderCone& cone) { return OrderCone(cone.dim(), cone.dual_generators()); }

bool in_cone(const OrderCone& cone, const Vec& v) {
  if (v.size() != cone.dim()) {
    throw ConeError(ConeError::Kind::DimensionMismatch, "in_cone: vector " + to_string(v) +
                                                            " does not match cone dimension " +
                                                            std::to_string(cone.dim()));
  }
  const auto& gens = cone.generators();
  if (gens.empty()) return is_zero(v);
  std::vector<Vec> rows(cone.dim(), zeros(gens.size()));
  for (std::size_t j = 0; j < gens.size(); ++j) {
    for (std::size_t i = 0; i < cone.dim(); ++i) rows[i][j] = gens[j][i];
  }
  return standard_feasible(rows, v);
}

ConeBase cone_base(const OrderCone& cone_dual) {
  const ConeGenerators& canon = cone_dual.canonical();
  if (!canon.lines.empty()) {
    throw ConeError(ConeError::Kind::NotPointed, "dual cone contains the line through " + to_string(canon.lines[0]),
                    canon.lines[0]);
  }
  if (canon.rays.empty()) throw ConeError(ConeError::Kind::TrivialCone, "dual cone is {0}");
  // Interior point of the predual cone: sum of its extreme rays.
  ConeGenerators predual = cone_from_inequalities(cone_dual.generators(), cone_dual.dim());
  Vec c = zeros(cone_dual.dim());
  for (const auto& r : predual.rays) c = add(c, r);
  ConeBase base;
  base.normalization = c;
  for (const auto& r : canon.rays) base.directions.push_back(scale(Rational(1) / dot(c, r), r));
  return base;
}

ConeBase refine_base(const ConeBase& base, const OrderCone& cone_dual, const std::vector<Vec>& extra) {
  ConeBase out = base;
  for (const auto& e : extra) {
    require_dim(e, base.normalization.size(), "base direction");
    if (is_zero(e) || !in_cone(cone_dual, e)) continue;
    Rational s = dot(base.normalization, e);
    if (s.sign() <= 0) continue;
    Vec d = scale(Rational(1) / s, e);
    bool dup = false;
    for (const auto& have : out.directions) dup = dup || have == d;
    if (!dup) out.directions.push_back(std::move(d));
  }
  return out;
}

bool base_representation(const ConeBase& base, const Vec& d, Rational& lambda, Vec& weights) {
  const std::size_t n = base.normalization.size();
  require_dim(d, n, "base_representation");
  if (base.directions.empty() || is_zero(d)) return false;
  std::vector<Vec> rows(n, zeros(base.directions.size()));
  for (std::size_t j = 0; j < base.directions.size(); ++j) {
    for (std::size_t i = 0; i < n; ++i) rows[i][j] = base.directions[j][i];
  }
  Vec mu;
  if (!standard_feasible(rows, d, &mu)) return false;
  lambda = 0;
  for (const auto& m : mu) lambda += m;
  if (lambda.sign() <= 0) return false;
  weights = scale(Rational(1) / lambda, mu);
  return true;
}

std::optional<Vec> strict_positivity_witness(const OrderCone& cone) {
  const auto& duals = cone.dual_generators();
  ConeGenerators dual_canon = cone_from_inequalities(cone.generators(), cone.dim());
  if (!dual_canon.lines.empty()) return std::nullopt;
  Vec x = zeros(cone.dim());
  for (const auto& r : cone.canonical().rays) x = add(x, r);
  for (const auto& d : duals) {
    if (dot(d, x).sign() <= 0) return std::nullopt;
  }
  return x;
}

}  // namespace latconv
