#include "latconv/scalar_fn.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "latconv/double_description.hpp"

namespace latconv {

ExtScalarFn::ExtScalarFn(std::vector<Vec> grid, std::vector<ExtReal> values, std::vector<ScalarRay> rays)
    : dim_(grid.empty() ? 0 : grid.front().size()),
      grid_(std::move(grid)),
      values_(std::move(values)),
      rays_(std::move(rays)) {
  if (grid_.size() != values_.size()) throw std::invalid_argument("ExtScalarFn: grid and values differ in length");
  for (const auto& x : grid_) require_dim(x, dim_, "grid point");
  for (const auto& r : rays_) require_dim(r.direction, dim_, "ray direction");
  std::vector<Vec> sorted = grid_;
  std::sort(sorted.begin(), sorted.end(), lex_less);
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("ExtScalarFn: repeated grid point");
  }
}

std::optional<std::size_t> ExtScalarFn::index_of(const Vec& x) const {
  for (std::size_t i = 0; i < grid_.size(); ++i) {
    if (grid_[i] == x) return i;
  }
  return std::nullopt;
}

const ExtReal& ExtScalarFn::at(const Vec& x) const {
  auto i = index_of(x);
  if (!i) throw std::out_of_range("point " + to_string(x) + " is not on the grid");
  return values_[*i];
}

bool ExtScalarFn::domain_empty() const {
  return std::all_of(values_.begin(), values_.end(), [](const ExtReal& v) { return v.is_pos_inf(); });
}

ExtReal conjugate(const ExtScalarFn& rho, const Vec& xstar) {
  require_dim(xstar, rho.dim(), "conjugate argument");
  if (rho.domain_empty()) return ExtReal::neg_inf();
  ExtReal best = ExtReal::neg_inf();
  for (std::size_t i = 0; i < rho.size(); ++i) {
    const ExtReal& v = rho.values()[i];
    if (v.is_pos_inf()) continue;
    if (v.is_neg_inf()) return ExtReal::pos_inf();
    best = ext_max(best, ExtReal(dot(xstar, rho.grid()[i]) - v.value()));
  }
  for (const auto& r : rho.rays()) {
    if (r.slope.is_pos_inf()) continue;
    if (r.slope.is_neg_inf()) return ExtReal::pos_inf();
    if ((dot(xstar, r.direction) - r.slope.value()).sign() > 0) return ExtReal::pos_inf();
  }
  return best;
}

ExtReal biconjugate(const ExtScalarFn& rho, const std::vector<Vec>& dual_grid, const Vec& x) {
  if (!rho.index_of(x)) throw std::out_of_range("biconjugate: point " + to_string(x) + " is not on the grid");
  if (dual_grid.empty()) throw std::invalid_argument("biconjugate: empty dual grid");
  ExtReal best = ExtReal::neg_inf();
  for (const auto& xs : dual_grid) {
    ExtReal c = conjugate(rho, xs);
    if (c.is_pos_inf()) continue;
    if (c.is_neg_inf()) return ExtReal::pos_inf();
    best = ext_max(best, ExtReal(dot(xs, x) - c.value()));
  }
  return best;
}

bool is_proper(const ExtScalarFn& rho) {
  bool finite_somewhere = false;
  for (const auto& v : rho.values()) {
    if (v.is_neg_inf()) return false;
    if (v.is_finite()) finite_somewhere = true;
  }
  for (const auto& r : rho.rays()) {
    if (r.slope.is_neg_inf() && finite_somewhere) return false;
  }
  return finite_somewhere;
}

FenchelMoreauGap fenchel_moreau(const ExtScalarFn& rho, const std::vector<Vec>& dual_grid) {
  if (dual_grid.empty()) throw std::invalid_argument("fenchel_moreau_gap: empty dual grid");
  FenchelMoreauGap out{ExtReal(0), std::nullopt};
  for (std::size_t i = 0; i < rho.size(); ++i) {
    const ExtReal& v = rho.values()[i];
    ExtReal bb = biconjugate(rho, dual_grid, rho.grid()[i]);
    if (v == bb) continue;
    ExtReal gap = v - bb;
    if (gap > out.gap) {
      out.gap = gap;
      out.worst = rho.grid()[i];
    }
  }
  return out;
}

ExtReal fenchel_moreau_gap(const ExtScalarFn& rho, const std::vector<Vec>& dual_grid) {
  return fenchel_moreau(rho, dual_grid).gap;
}

std::vector<Vec> lower_hull_slopes(const ExtScalarFn& rho) {
  const std::size_t n = rho.dim();
  std::vector<Vec> pts, rays;
  for (std::size_t i = 0; i < rho.size(); ++i) {
    const ExtReal& v = rho.values()[i];
    if (v.is_neg_inf()) return {};
    if (!v.is_finite()) continue;
    Vec p = rho.grid()[i];
    p.push_back(v.value());
    pts.push_back(std::move(p));
  }
  if (pts.empty()) return {};
  Vec up = zeros(n + 1);
  up[n] = 1;
  rays.push_back(up);
  for (const auto& r : rho.rays()) {
    if (!r.slope.is_finite()) continue;
    Vec d = r.direction;
    d.push_back(r.slope.value());
    rays.push_back(std::move(d));
  }
  std::vector<Vec> out;
  for (const auto& h : polyhedron_inequalities(pts, rays, n + 1)) {
    const Rational& b = h.normal[n];
    if (b.sign() <= 0) continue;
    Vec s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = -h.normal[i] / b;
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<std::pair<Vec, Vec>> midpoint_convexity_violation(const ExtScalarFn& rho) {
  std::map<Vec, std::size_t, bool (*)(const Vec&, const Vec&)> where(lex_less);
  for (std::size_t i = 0; i < rho.size(); ++i) where.emplace(rho.grid()[i], i);
  const Rational half(1, 2);
  for (std::size_t i = 0; i < rho.size(); ++i) {
    for (std::size_t j = i + 1; j < rho.size(); ++j) {
      const ExtReal &a = rho.values()[i], &b = rho.values()[j];
      if (a.is_pos_inf() || b.is_pos_inf()) continue;
      auto it = where.find(scale(half, add(rho.grid()[i], rho.grid()[j])));
      if (it == where.end()) continue;
      const ExtReal& m = rho.values()[it->second];
      if (a.is_neg_inf() || b.is_neg_inf()) {
        if (!m.is_neg_inf()) return std::make_pair(rho.grid()[i], rho.grid()[j]);
        continue;
      }
      if (m > ExtReal((a.value() + b.value()) * half)) return std::make_pair(rho.grid()[i], rho.grid()[j]);
    }
  }
  return std::nullopt;
}

}  // namespace latconv
