#include "latconv/setvalued_fn.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace latconv {

SetValuedFn::SetValuedFn(std::vector<Vec> grid, std::vector<UpperSet> values, OrderCone ambient,
                         std::optional<OrderCone> primal_cone, std::vector<DomainRay> rays)
    : primal_dim_(grid.empty() ? 0 : grid.front().size()),
      grid_(std::move(grid)),
      values_(std::move(values)),
      ambient_(std::move(ambient)),
      primal_cone_(std::move(primal_cone)),
      rays_(std::move(rays)) {
  if (grid_.size() != values_.size()) throw std::invalid_argument("SetValuedFn: grid and values differ in length");
  for (const auto& x : grid_) require_dim(x, primal_dim_, "primal grid point");
  for (const auto& v : values_) {
    if (!same_ambient(v.ambient(), ambient_)) throw std::invalid_argument("SetValuedFn: value with foreign ambient cone");
  }
  if (primal_cone_ && primal_cone_->dim() != primal_dim_) throw DimensionError("SetValuedFn: primal cone dimension");
  for (const auto& r : rays_) {
    require_dim(r.direction, primal_dim_, "domain ray direction");
    if (r.shift) require_dim(*r.shift, ambient_.dim(), "domain ray shift");
  }
  std::vector<Vec> sorted = grid_;
  std::sort(sorted.begin(), sorted.end(), lex_less);
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("SetValuedFn: repeated grid point");
  }
}

std::optional<std::size_t> SetValuedFn::index_of(const Vec& x) const {
  for (std::size_t i = 0; i < grid_.size(); ++i) {
    if (grid_[i] == x) return i;
  }
  return std::nullopt;
}

const UpperSet& SetValuedFn::at(const Vec& x) const {
  auto i = index_of(x);
  if (!i) throw std::out_of_range("point " + to_string(x) + " is not on the primal grid");
  return values_[*i];
}

bool SetValuedFn::all_empty() const {
  return std::all_of(values_.begin(), values_.end(), [](const UpperSet& v) { return v.is_empty(); });
}

bool SetValuedFn::all_full() const {
  return std::all_of(values_.begin(), values_.end(), [](const UpperSet& v) { return v.is_full(); });
}

ExtScalarFn scalarize(const SetValuedFn& r, const Vec& zstar) {
  require_dim(zstar, r.dim(), "scalarization direction");
  std::vector<ExtReal> vals;
  vals.reserve(r.size());
  for (const auto& v : r.values()) vals.push_back(support(v, zstar));
  std::vector<ScalarRay> rays;
  for (const auto& d : r.rays()) {
    rays.push_back({d.direction, d.shift ? ExtReal(dot(zstar, *d.shift)) : ExtReal::neg_inf()});
  }
  return ExtScalarFn(r.grid(), std::move(vals), std::move(rays));
}

std::vector<Vec> inverse(const SetValuedFn& r, const Vec& z) {
  require_dim(z, r.dim(), "inverse argument");
  std::vector<Vec> out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (contains(r.values()[i], z)) out.push_back(r.grid()[i]);
  }
  return out;
}

std::optional<PairWitness> decreasing_violation(const SetValuedFn& r) {
  if (!r.primal_cone()) throw std::invalid_argument("is_decreasing: no primal cone");
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (i == j || !cone_leq(*r.primal_cone(), r.grid()[i], r.grid()[j])) continue;
      if (!is_subset(r.values()[i], r.values()[j])) return PairWitness{r.grid()[i], r.grid()[j]};
    }
  }
  return std::nullopt;
}

bool is_decreasing(const SetValuedFn& r) { return !decreasing_violation(r).has_value(); }

namespace {

UpperSet half_of(const UpperSet& a) {
  if (!a.is_proper()) return a;
  std::vector<Vec> pts;
  for (const auto& p : a.points()) pts.push_back(scale(Rational(1, 2), p));
  return UpperSet::make(a.ambient(), std::move(pts), a.extra_rays());
}

}  // namespace

ConvexGraphReport check_convex_graph(const SetValuedFn& r, int samples, std::uint64_t seed,
                                     const std::vector<Vec>& probes) {
  ConvexGraphReport rep;
  std::map<Vec, std::size_t, bool (*)(const Vec&, const Vec&)> where(lex_less);
  for (std::size_t i = 0; i < r.size(); ++i) where.emplace(r.grid()[i], i);
  struct Triple {
    std::size_t a, b, m;
  };
  std::vector<Triple> triples;
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = i + 1; j < r.size(); ++j) {
      auto it = where.find(scale(Rational(1, 2), add(r.grid()[i], r.grid()[j])));
      if (it != where.end()) triples.push_back({i, j, it->second});
    }
  }
  if (triples.empty()) rep.vacuous = true;
  if (samples > 0 && triples.size() > static_cast<std::size_t>(samples)) {
    std::mt19937_64 rng(seed);
    for (std::size_t k = triples.size() - 1; k > 0; --k) std::swap(triples[k], triples[rng() % (k + 1)]);
    triples.resize(static_cast<std::size_t>(samples));
  }
  for (const auto& t : triples) {
    ++rep.pairs_checked;
    const UpperSet &ra = r.values()[t.a], &rb = r.values()[t.b], &rm = r.values()[t.m];
    if (ra.is_empty() || rb.is_empty()) continue;
    UpperSet mid = minkowski_sum(half_of(ra), half_of(rb));
    if (is_subset(mid, rm)) continue;
    rep.holds = false;
    rep.grid_pair = PairWitness{r.grid()[t.a], r.grid()[t.b]};
    if (ra.is_proper() && rb.is_proper()) {
      for (const auto& p : ra.points()) {
        for (const auto& q : rb.points()) {
          if (!rep.value_pair && !contains(rm, scale(Rational(1, 2), add(p, q)))) rep.value_pair = PairWitness{p, q};
        }
      }
    }
    break;
  }
  if (rep.holds) {
    for (const auto& z : probes) {
      if (midpoint_convexity_violation(scalarize(r, z))) {
        rep.scalar_consistent = false;
        rep.scalar_witness = z;
        break;
      }
    }
  }
  return rep;
}

bool is_convex_graph(const SetValuedFn& r, int samples, std::uint64_t seed) {
  std::vector<Vec> probes;
  try {
    probes = cone_base(dual_cone(r.ambient())).directions;
  } catch (const ConeError&) {
  }
  return check_convex_graph(r, samples, seed, probes).holds;
}

ProperReport check_proper(const SetValuedFn& r) {
  ProperReport rep;
  bool some_nonempty = false, some_full = false;
  std::vector<Vec> rec;
  for (const auto& v : r.values()) {
    if (v.is_empty()) continue;
    some_nonempty = true;
    if (v.is_full()) some_full = true;
    for (const auto& g : v.recession_rays()) rec.push_back(g);
  }
  bool descent = false;
  for (const auto& d : r.rays()) {
    if (!d.shift) descent = true;
  }
  rep.proper = some_nonempty && !some_full && !descent;
  if (some_nonempty && !some_full && !descent) {
    ConeGenerators dual = cone_from_inequalities(rec, r.dim());
    if (!dual.rays.empty()) {
      rep.scalar_flag = true;
      rep.scalar_witness = dual.rays.front();
    } else if (!dual.lines.empty()) {
      rep.scalar_flag = true;
      rep.scalar_witness = dual.lines.front();
    }
  }
  return rep;
}

bool is_proper_sv(const SetValuedFn& r) { return check_proper(r).proper; }

std::vector<Vec> proper_direction_cone(const SetValuedFn& r, const ConeBase& base) {
  std::vector<Vec> out;
  for (const auto& d : base.directions) {
    if (is_proper(scalarize(r, d))) out.push_back(d);
  }
  return out;
}

UpperSet ConjugateRadius::as_set(const OrderCone& ambient) const {
  if (level.is_pos_inf()) return UpperSet::empty(ambient);
  if (level.is_neg_inf()) return UpperSet::full(ambient);
  return UpperSet::halfspace(ambient, {zstar, level.value()});
}

namespace {

void require_dual_direction(const SetValuedFn& r, const Vec& zstar) {
  require_dim(zstar, r.dim(), "dual direction");
  if (is_zero(zstar)) throw std::invalid_argument("z* must be nonzero");
  for (const auto& g : r.ambient().generators()) {
    if (dot(zstar, g).sign() < 0) throw std::invalid_argument("z* " + to_string(zstar) + " is outside the dual cone");
  }
}

}  // namespace

ConjugateRadius set_conjugate(const SetValuedFn& r, const Vec& xstar, const Vec& zstar) {
  require_dual_direction(r, zstar);
  return {xstar, zstar, -conjugate(scalarize(r, zstar), xstar)};
}

UpperSet set_conjugate_direct(const SetValuedFn& r, const Vec& xstar, const Vec& zstar) {
  require_dual_direction(r, zstar);
  require_dim(xstar, r.primal_dim(), "x*");
  std::vector<UpperSet> parts;
  bool nonempty = false;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const UpperSet& v = r.values()[i];
    if (v.is_empty()) continue;
    nonempty = true;
    UpperSet h = UpperSet::halfspace(r.ambient(), {zstar, Rational(-dot(xstar, r.grid()[i]))});
    parts.push_back(minkowski_sum(v, h));
  }
  if (!nonempty) return UpperSet::empty(r.ambient());
  for (const auto& d : r.rays()) {
    // along the ray the level moves by s * (<z*, shift> - <x*, d>)
    if (!d.shift || (dot(zstar, *d.shift) - dot(xstar, d.direction)).sign() < 0) return UpperSet::full(r.ambient());
  }
  return lattice_inf(parts);
}

UpperSet set_biconjugate(const SetValuedFn& r, const Vec& x, const std::vector<Vec>& dual_primal_grid,
                         const ConeBase& base) {
  if (!r.index_of(x)) throw std::out_of_range("set_biconjugate: point " + to_string(x) + " is not on the grid");
  if (r.all_empty()) return UpperSet::empty(r.ambient());
  std::vector<Inequality> ineqs;
  for (const auto& zs : proper_direction_cone(r, base)) {
    ExtScalarFn phi = scalarize(r, zs);
    for (const auto& xs : dual_primal_grid) {
      ExtReal c = conjugate(phi, xs);
      if (c.is_pos_inf()) continue;
      ineqs.push_back({zs, dot(xs, x) - c.value()});
    }
  }
  if (ineqs.empty()) return UpperSet::full(r.ambient());
  return UpperSet::from_inequalities(r.ambient(), ineqs);
}

SetFenchelMoreauReport sv_fenchel_moreau_check(const SetValuedFn& r, const std::vector<Vec>& dual_primal_grid,
                                               const ConeBase& base) {
  SetFenchelMoreauReport rep;
  for (std::size_t i = 0; i < r.size(); ++i) {
    FenchelMoreauPoint pt;
    pt.x = r.grid()[i];
    UpperSet bb = set_biconjugate(r, pt.x, dual_primal_grid, base);
    pt.comparison = compare_sets(r.values()[i], bb, base.directions);
    pt.equal = pt.comparison.equal;
    rep.pass = rep.pass && pt.equal;
    rep.points.push_back(std::move(pt));
  }
  return rep;
}

std::vector<Vec> derived_dual_grid(const SetValuedFn& r, const ConeBase& base, const std::vector<Vec>& extra) {
  std::vector<Vec> out = extra;
  for (const auto& d : base.directions) {
    auto s = lower_hull_slopes(scalarize(r, d));
    out.insert(out.end(), s.begin(), s.end());
  }
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) out.push_back(zeros(r.primal_dim()));
  return out;
}

ConeBase value_normal_base(const SetValuedFn& r, const ConeBase& base) {
  std::vector<Vec> normals;
  for (const auto& v : r.values()) {
    if (!v.is_proper()) continue;
    for (const auto& h : v.hrep()) normals.push_back(h.normal);
  }
  return refine_base(base, dual_cone(r.ambient()), normals);
}

}  // namespace latconv
