#include "latconv/composition.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "latconv/lp.hpp"

namespace latconv {

namespace {

void sort_unique(std::vector<Vec>& v) {
  std::sort(v.begin(), v.end(), lex_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Inf-addition: +inf absorbs -inf, as in an infimum of sums.
ExtReal inf_add(const ExtReal& a, const ExtReal& b) {
  if (a.is_pos_inf() || b.is_pos_inf()) return ExtReal::pos_inf();
  return a + b;
}

ExtReal gap_of(const ExtReal& lhs, const ExtReal& rhs) {
  if (lhs == rhs) return ExtReal(0);
  if (lhs.is_pos_inf() || rhs.is_neg_inf()) return ExtReal::neg_inf();
  if (rhs.is_pos_inf() || lhs.is_neg_inf()) return ExtReal::pos_inf();
  return rhs - lhs;
}

std::vector<Vec> dual_probe_directions(const OrderCone& ambient) {
  try {
    return cone_base(dual_cone(ambient)).directions;
  } catch (const ConeError&) {
    return ambient.dual_generators();
  }
}

const UpperSet& g_value(const CompositionInstance& inst, const Vec& x) {
  if (!inst.G.index_of(x)) throw std::out_of_range("compose: point " + to_string(x) + " is not on G's grid");
  return inst.G.at(x);
}

}  // namespace

std::optional<Vec> ray_image(const SetValuedFn& f, const Vec& ray) {
  require_dim(ray, f.primal_dim(), "ray");
  if (is_zero(ray)) return zeros(f.dim());
  for (const auto& r : f.rays()) {
    Rational t;
    if (is_zero(r.direction) || !positive_multiple(ray, r.direction, t)) continue;
    if (!r.shift) return std::nullopt;
    return scale(t, *r.shift);
  }
  throw CompositionError("no ray image declared for direction " + to_string(ray));
}

void check_composability(const CompositionInstance& inst) {
  if (inst.G.dim() != inst.F.primal_dim() && inst.F.size() > 0) {
    throw CompositionError("G takes values in dimension " + std::to_string(inst.G.dim()) +
                           " but F is defined on dimension " + std::to_string(inst.F.primal_dim()));
  }
  for (std::size_t i = 0; i < inst.G.size(); ++i) {
    const UpperSet& v = inst.G.values()[i];
    if (v.is_empty()) continue;
    if (v.is_full()) throw CompositionError("G(" + to_string(inst.G.grid()[i]) + ") is the whole space");
    for (const auto& p : v.points()) {
      if (!inst.F.index_of(p)) {
        throw CompositionError("vertex " + to_string(p) + " of G(" + to_string(inst.G.grid()[i]) +
                               ") is not on F's grid");
      }
    }
    for (const auto& r : v.recession_rays()) ray_image(inst.F, r);
  }
  for (const auto& d : inst.G.rays()) {
    if (!d.shift) throw CompositionError("descent ray " + to_string(d.direction) + " has no velocity");
    ray_image(inst.F, *d.shift);
  }
}

UpperSet compose(const CompositionInstance& inst, const Vec& x) {
  const UpperSet& gx = g_value(inst, x);
  const OrderCone& zc = inst.F.ambient();
  if (gx.is_empty()) return UpperSet::empty(zc);
  if (gx.is_full()) throw CompositionError("G(" + to_string(x) + ") is the whole space");
  std::vector<UpperSet> parts;
  for (const auto& p : gx.points()) {
    if (!inst.F.index_of(p)) throw CompositionError("vertex " + to_string(p) + " is not on F's grid");
    const UpperSet& fp = inst.F.at(p);
    if (!fp.is_empty()) parts.push_back(fp);
  }
  if (parts.empty()) return UpperSet::empty(zc);
  std::vector<Vec> images;
  for (const auto& r : gx.recession_rays()) {
    auto w = ray_image(inst.F, r);
    if (!w) return UpperSet::full(zc);
    if (!is_zero(*w)) images.push_back(*w);
  }
  UpperSet hull = lattice_inf(parts);
  if (images.empty() || !hull.is_proper()) return hull;
  std::vector<Vec> rays = hull.extra_rays();
  rays.insert(rays.end(), images.begin(), images.end());
  return UpperSet::make(zc, hull.points(), std::move(rays));
}

SetValuedFn compose_all(const CompositionInstance& inst) {
  check_composability(inst);
  std::vector<UpperSet> values;
  values.reserve(inst.G.size());
  for (const auto& x : inst.G.grid()) values.push_back(compose(inst, x));
  std::vector<DomainRay> rays;
  for (const auto& d : inst.G.rays()) rays.push_back({d.direction, ray_image(inst.F, *d.shift)});
  return SetValuedFn(inst.G.grid(), std::move(values), inst.F.ambient(), inst.G.primal_cone(), std::move(rays));
}

Prop31Report check_prop_3_1(const CompositionInstance& inst, int samples, std::uint64_t seed) {
  Prop31Report rep;
  SetValuedFn fog = compose_all(inst);

  auto cg = check_convex_graph(inst.G, samples, seed, dual_probe_directions(inst.G.ambient()));
  auto cf = check_convex_graph(inst.F, samples, seed, dual_probe_directions(inst.F.ambient()));
  if (!cg.holds || !cf.holds) {
    rep.convex.status = CheckStatus::Skipped;
    rep.convex.detail = !cg.holds ? "G is not convex" : "F is not convex";
    rep.convex.witness = !cg.holds ? cg.grid_pair : cf.grid_pair;
  } else {
    auto c = check_convex_graph(fog, samples, seed, dual_probe_directions(fog.ambient()));
    if (!c.holds) {
      rep.convex.status = CheckStatus::Fail;
      rep.convex.detail = "F o G is not convex";
      rep.convex.witness = c.grid_pair;
    } else {
      rep.convex.detail = c.vacuous ? "no midpoint triples on the grid" : "F o G convex";
    }
  }

  if (!inst.G.primal_cone()) {
    rep.decreasing.status = CheckStatus::Skipped;
    rep.decreasing.detail = "no order on X";
    return rep;
  }
  if (auto w = decreasing_violation(inst.G)) {
    rep.decreasing.status = CheckStatus::Skipped;
    rep.decreasing.detail = "G is not decreasing";
    rep.decreasing.witness = w;
  } else if (auto w2 = decreasing_violation(fog)) {
    rep.decreasing.status = CheckStatus::Fail;
    rep.decreasing.detail = "F o G is not decreasing";
    rep.decreasing.witness = w2;
  } else {
    rep.decreasing.detail = "F o G decreasing";
  }
  return rep;
}

std::pair<ExtReal, ExtReal> comp_scalarization_identity(const CompositionInstance& inst, const Vec& zstar,
                                                        const Vec& x) {
  require_dim(zstar, inst.F.dim(), "z*");
  ExtReal lhs = support(compose(inst, x), zstar);

  const UpperSet& gx = g_value(inst, x);
  if (gx.is_empty()) return {lhs, ExtReal::pos_inf()};
  ExtScalarFn phi_f = scalarize(inst.F, zstar);
  ExtReal rhs = ExtReal::pos_inf();
  for (const auto& p : gx.points()) rhs = ext_min(rhs, phi_f.at(p));
  if (rhs.is_pos_inf()) return {lhs, rhs};
  for (const auto& r : gx.recession_rays()) {
    auto w = ray_image(inst.F, r);
    if (!w || dot(zstar, *w).sign() < 0) return {lhs, ExtReal::neg_inf()};
  }
  return {lhs, rhs};
}

Cor33Report check_cor_3_3(const CompositionInstance& inst, const Vec& zstar) {
  Cor33Report rep;
  rep.premise = is_proper(scalarize(compose_all(inst), zstar));
  rep.conclusion = is_proper(scalarize(inst.F, zstar));
  if (!rep.premise) rep.status = CheckStatus::Skipped;
  else rep.status = rep.conclusion ? CheckStatus::Pass : CheckStatus::Fail;
  return rep;
}

AssumptionStatus check_assumptions(const CompositionInstance& inst) {
  AssumptionStatus st;
  st.mode = inst.assumption_mode;
  const OrderCone& yc = inst.G.ambient();
  OrderCone ydual = dual_cone(yc);

  std::optional<ConeBase> base;
  try {
    base = cone_base(ydual);
    st.a34.holds = true;
    st.a34.detail = "compact base with " + std::to_string(base->directions.size()) + " directions";
  } catch (const ConeError& e) {
    st.a34.detail = e.what();
    if (!e.witness().empty()) st.a34.witness = e.witness();
  }

  // (a): no point of the base may have <y*, v> >= 0 for every declared velocity.
  std::vector<Vec> velocities;
  for (const auto& d : inst.G.rays()) {
    if (d.shift) velocities.push_back(*d.shift);
  }
  if (!base) {
    st.a35a.detail = "no compact base";
  } else {
    const auto& dirs = base->directions;
    const std::size_t m = dirs.size(), k = velocities.size();
    // variables: w (m), slack s (k); sum w = 1; sum_j w_j <b_j, v_i> - s_i = 0
    std::vector<Vec> rows;
    Vec rhs;
    Vec sumrow(m + k);
    for (std::size_t j = 0; j < m; ++j) sumrow[j] = 1;
    rows.push_back(sumrow);
    rhs.push_back(1);
    for (std::size_t i = 0; i < k; ++i) {
      Vec row(m + k);
      for (std::size_t j = 0; j < m; ++j) row[j] = dot(dirs[j], velocities[i]);
      row[m + i] = -1;
      rows.push_back(row);
      rhs.push_back(0);
    }
    Vec sol;
    if (standard_feasible(rows, rhs, &sol)) {
      Vec ystar = zeros(yc.dim());
      for (std::size_t j = 0; j < m; ++j) ystar = add(ystar, scale(sol[j], dirs[j]));
      st.a35a.detail = "no declared descent ray for this base direction";
      st.a35a.witness = ystar;
    } else {
      st.a35a.holds = true;
      st.a35a.detail = "every base direction descends along a declared ray";
    }
    // the declared rays must agree with the sampled values
    for (const auto& d : inst.G.rays()) {
      if (!st.a35a.holds || !d.shift) break;
      for (std::size_t i = 0; i < inst.G.size(); ++i) {
        auto j = inst.G.index_of(add(inst.G.grid()[i], d.direction));
        if (!j) continue;
        const UpperSet& here = inst.G.values()[i];
        const UpperSet& there = inst.G.values()[*j];
        bool ok;
        if (here.is_empty() || !here.is_proper()) {
          ok = here.kind() == there.kind();
        } else {
          std::vector<Vec> pts;
          for (const auto& p : here.points()) pts.push_back(add(p, *d.shift));
          ok = set_equal(UpperSet::make(here.ambient(), pts, here.extra_rays()), there, dirs);
        }
        if (!ok) {
          st.a35a.holds = false;
          st.a35a.detail = "values disagree with declared ray " + to_string(d.direction);
          st.a35a.witness = inst.G.grid()[i];
          break;
        }
      }
    }
  }

  // (b): strict positivity cone nonempty and strict decrease exactly along it.
  if (!inst.G.primal_cone()) {
    st.a35b.detail = "no order on X";
  } else if (!base) {
    st.a35b.detail = "no compact base";
  } else {
    const OrderCone& xc = *inst.G.primal_cone();
    auto sharp = strict_positivity_witness(xc);
    if (!sharp) {
      st.a35b.detail = "strict positivity cone is empty";
    } else {
      const std::vector<Vec> xdual = dual_cone(xc).canonical().rays;
      auto in_sharp = [&](const Vec& v) {
        return std::all_of(xdual.begin(), xdual.end(), [&](const Vec& r) { return dot(r, v).sign() > 0; });
      };
      st.a35b.holds = true;
      st.a35b.detail = "strict decrease matches the strict positivity cone on all grid pairs";
      for (const auto& ys : base->directions) {
        ExtScalarFn phi = scalarize(inst.G, ys);
        for (std::size_t i = 0; i < phi.size() && st.a35b.holds; ++i) {
          for (std::size_t j = 0; j < phi.size(); ++j) {
            if (i == j) continue;
            bool up = in_sharp(sub(phi.grid()[j], phi.grid()[i]));
            bool down = phi.values()[i] > phi.values()[j];
            if (up != down) {
              st.a35b.holds = false;
              st.a35b.detail = "strict decrease fails between " + to_string(phi.grid()[i]) + " and " +
                               to_string(phi.grid()[j]) + " along " + to_string(ys);
              st.a35b.witness = ys;
              break;
            }
          }
        }
        if (!st.a35b.holds) break;
      }
    }
  }
  return st;
}

std::vector<Rational> default_lambda_grid() { return {Rational(1, 4), Rational(1, 2), 1, 2, 4}; }

CompositionVerifier::CompositionVerifier(CompositionInstance inst, int samples, std::uint64_t seed)
    : inst_(std::move(inst)), fog_(compose_all(inst_)), assumptions_(check_assumptions(inst_)) {
  convex_premises_ = check_convex_graph(inst_.G, samples, seed, dual_probe_directions(inst_.G.ambient())).holds &&
                     check_convex_graph(inst_.F, samples, seed, dual_probe_directions(inst_.F.ambient())).holds;

  OrderCone ydual = dual_cone(inst_.G.ambient());
  try {
    ConeBase b = refine_base(cone_base(ydual), ydual, inst_.y_dual_directions);
    y_normalization_ = b.normalization;
    y_dirs_ = b.directions;
  } catch (const ConeError&) {
    y_dirs_ = ydual.generators();
    for (const auto& d : inst_.y_dual_directions) {
      if (!is_zero(d) && in_cone(ydual, d)) y_dirs_.push_back(primitive(d));
    }
    sort_unique(y_dirs_);
  }

  OrderCone zdual = dual_cone(inst_.F.ambient());
  try {
    ConeBase b = refine_base(cone_base(zdual), zdual, inst_.z_dual_directions);
    z_dirs_ = value_normal_base(fog_, b).directions;
  } catch (const ConeError&) {
    z_dirs_ = zdual.generators();
    for (const auto& d : inst_.z_dual_directions) {
      if (!is_zero(d) && in_cone(zdual, d)) z_dirs_.push_back(primitive(d));
    }
    sort_unique(z_dirs_);
  }
}

std::vector<Vec> CompositionVerifier::x_dual_grid(const Vec& zstar) const {
  std::vector<Vec> out = inst_.x_dual_grid;
  auto s = lower_hull_slopes(scalarize(fog_, zstar));
  out.insert(out.end(), s.begin(), s.end());
  sort_unique(out);
  if (out.empty()) out.push_back(zeros(inst_.G.primal_dim()));
  return out;
}

std::vector<Vec> CompositionVerifier::y_candidates(const Vec& zstar, bool refined) const {
  const OrderCone& yc = inst_.G.ambient();
  OrderCone ydual = dual_cone(yc);
  std::vector<Vec> slopes;
  for (const auto& s : lower_hull_slopes(scalarize(inst_.F, zstar))) {
    if (!is_zero(s) && in_cone(ydual, s)) slopes.push_back(s);
  }

  std::vector<Vec> dirs = y_dirs_;
  std::vector<Rational> lambdas = inst_.lambda_grid.empty() ? default_lambda_grid() : inst_.lambda_grid;
  if (y_normalization_) {
    for (const auto& s : slopes) {
      Rational c = dot(*y_normalization_, s);
      dirs.push_back(scale(1 / c, s));
      lambdas.push_back(c);
    }
  } else {
    for (const auto& s : slopes) dirs.push_back(s);
    lambdas.push_back(1);
  }
  sort_unique(dirs);
  std::sort(lambdas.begin(), lambdas.end());
  lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());
  lambdas.erase(std::remove_if(lambdas.begin(), lambdas.end(), [](const Rational& l) { return l.sign() <= 0; }),
                lambdas.end());
  if (refined && !lambdas.empty()) {
    std::vector<Rational> more = lambdas;
    for (std::size_t i = 0; i + 1 < lambdas.size(); ++i) more.push_back((lambdas[i] + lambdas[i + 1]) / 2);
    more.push_back(lambdas.front() / 2);
    more.push_back(lambdas.back() * 2);
    std::sort(more.begin(), more.end());
    more.erase(std::unique(more.begin(), more.end()), more.end());
    lambdas = std::move(more);
  }

  std::vector<Vec> out;
  for (const auto& d : dirs) {
    if (!is_proper(scalarize(inst_.G, d))) continue;
    for (const auto& l : lambdas) out.push_back(scale(l, d));
  }
  sort_unique(out);
  return out;
}

ExtReal CompositionVerifier::rhs_over(const Vec& xstar, const Vec& zstar, const std::vector<Vec>& ys,
                                      std::optional<Vec>* arg) const {
  ExtScalarFn phi_f = scalarize(inst_.F, zstar);
  ExtReal best = ExtReal::pos_inf();
  for (const auto& y : ys) {
    ExtReal term = inf_add(conjugate(scalarize(inst_.G, y), xstar), conjugate(phi_f, y));
    if (term < best) {
      best = term;
      *arg = y;
    }
  }
  return best;
}

Thm36Report CompositionVerifier::theorem_3_6(const Vec& xstar, const Vec& zstar) const {
  require_dim(xstar, inst_.G.primal_dim(), "x*");
  require_dim(zstar, inst_.F.dim(), "z*");
  Thm36Report rep;
  ExtScalarFn phi = scalarize(fog_, zstar);
  rep.lhs = conjugate(phi, xstar);
  std::optional<Vec> arg_base, arg_fine;
  rep.rhs = rhs_over(xstar, zstar, y_candidates(zstar, false), &arg_base);
  rep.rhs_refined = rhs_over(xstar, zstar, y_candidates(zstar, true), &arg_fine);
  rep.minimizer = arg_fine;
  rep.gap = gap_of(rep.lhs, rep.rhs_refined);
  rep.weak_duality = rep.lhs <= rep.rhs_refined;
  rep.formula_exact = rep.rhs == rep.rhs_refined;

  if (!rep.weak_duality) {
    rep.status = CheckStatus::Fail;
    rep.detail = "weak duality violated";
  } else if (!is_proper(phi)) {
    rep.status = CheckStatus::Skipped;
    rep.detail = "z* outside the proper directions of F o G";
  } else if (!hypotheses_hold()) {
    rep.status = CheckStatus::HypothesisViolation;
    rep.detail = !convex_premises_ ? "F or G is not convex" : "assumptions on the cones or descent fail";
  } else if (!rep.formula_exact) {
    rep.status = CheckStatus::Skipped;
    rep.detail = "infimum not stable under refining the scale grid";
  } else if (rep.gap != ExtReal(0)) {
    rep.status = CheckStatus::Fail;
    rep.detail = "duality gap";
  } else {
    rep.detail = "formula exact";
  }
  return rep;
}

Cor37Report CompositionVerifier::corollary_3_7(const Vec& x) const {
  Cor37Report rep;
  if (!fog_.index_of(x)) throw std::out_of_range("corollary_3_7: point " + to_string(x) + " is not on the grid");
  const UpperSet& lhs = fog_.at(x);
  if (!is_proper_sv(fog_)) {
    rep.status = CheckStatus::Skipped;
    rep.detail = "F o G is not proper";
    return rep;
  }
  if (!hypotheses_hold() || !check_convex_graph(fog_, 64, 42, z_dirs_).holds) {
    rep.status = CheckStatus::HypothesisViolation;
    rep.detail = "hypotheses fail";
  }

  std::vector<UpperSet> halfspaces;
  bool empty = false;
  for (const auto& zs : z_dirs_) {
    if (!is_proper(scalarize(inst_.F, zs))) continue;
    for (const auto& xs : x_dual_grid(zs)) {
      std::optional<Vec> arg;
      ExtReal r = rhs_over(xs, zs, y_candidates(zs, true), &arg);
      if (r.is_pos_inf()) continue;
      if (r.is_neg_inf()) {
        empty = true;
        continue;
      }
      halfspaces.push_back(UpperSet::halfspace(fog_.ambient(), {zs, dot(xs, x) - r.value()}));
    }
  }
  const OrderCone& zc = fog_.ambient();
  UpperSet rhs = empty ? UpperSet::empty(zc) : halfspaces.empty() ? UpperSet::full(zc) : lattice_sup(halfspaces);
  rep.comparison = compare_sets(lhs, rhs, z_dirs_);
  rep.rhs = rhs;
  if (!rep.comparison.equal) {
    if (rep.status == CheckStatus::Pass) rep.status = CheckStatus::Fail;
    rep.detail = "dual representation differs";
  } else if (rep.status == CheckStatus::Pass) {
    rep.detail = "recovered";
  }
  return rep;
}

std::vector<Vec> CompositionVerifier::y_probes(int samples, std::uint64_t seed) const {
  std::vector<Vec> ys = inst_.F.grid();
  sort_unique(ys);
  if (samples > 0 && ys.size() > static_cast<std::size_t>(samples)) {
    std::mt19937_64 rng(seed);
    for (std::size_t k = ys.size() - 1; k > 0; --k) std::swap(ys[k], ys[rng() % (k + 1)]);
    ys.resize(static_cast<std::size_t>(samples));
  }
  return ys;
}

Lemma42Report CompositionVerifier::lemma_4_2i(const Vec& ystar, const std::vector<Vec>& ys) const {
  Lemma42Report rep;
  ExtScalarFn phi = scalarize(inst_.G, ystar);
  for (const auto& y : ys) {
    const Rational level = dot(ystar, y);
    // strict points available from the grid or from the declared rays
    bool strict_exists = false;
    for (std::size_t i = 0; i < phi.size() && !strict_exists; ++i) {
      const ExtReal& v = phi.values()[i];
      if (v < ExtReal(level)) strict_exists = true;
      if (v.is_finite()) {
        for (const auto& r : phi.rays()) {
          if (r.slope < ExtReal(0)) strict_exists = true;
        }
      }
    }
    for (std::size_t i = 0; i < phi.size(); ++i) {
      const ExtReal& v = phi.values()[i];
      if (!(v <= ExtReal(level))) continue;
      if (v < ExtReal(level)) continue;  // already strict
      ++rep.boundary_points;
      // x + s d with s = 2^-k along a ray of negative slope is strict for every k
      bool approached = false;
      for (const auto& r : phi.rays()) {
        if (!(r.slope < ExtReal(0))) continue;
        approached = true;
        for (int k = 0; k <= 8 && approached; ++k) {
          Rational s(1, 1L << k);
          ExtReal at = r.slope.is_neg_inf() ? ExtReal::neg_inf() : ExtReal(v.value() + s * r.slope.value());
          approached = at < ExtReal(level);
        }
        if (approached) break;
      }
      // otherwise along the chord towards a strict point, valued by convexity
      if (!approached && strict_exists && convex_premises_) {
        for (std::size_t j = 0; j < phi.size() && !approached; ++j) {
          const ExtReal& w = phi.values()[j];
          if (!(w < ExtReal(level))) continue;
          approached = true;
          for (int k = 1; k <= 8 && approached; ++k) {
            Rational t(1, 1L << k);
            ExtReal bound = w.is_neg_inf() ? ExtReal::neg_inf() : ExtReal((1 - t) * v.value() + t * w.value());
            approached = bound < ExtReal(level);
          }
        }
      }
      if (!approached) {
        rep.holds = false;
        rep.witness_x = phi.grid()[i];
        rep.witness_y = y;
        return rep;
      }
    }
  }
  return rep;
}

Thm36Report theorem_3_6_verify(const CompositionInstance& inst, const Vec& xstar, const Vec& zstar) {
  return CompositionVerifier(inst).theorem_3_6(xstar, zstar);
}

Cor37Report corollary_3_7_verify(const CompositionInstance& inst, const Vec& x) {
  return CompositionVerifier(inst).corollary_3_7(x);
}

bool lemma_4_2i_check(const CompositionInstance& inst, const Vec& y, const Vec& ystar) {
  return CompositionVerifier(inst).lemma_4_2i(ystar, {y}).holds;
}

}  // namespace latconv
