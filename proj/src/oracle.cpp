#include "latconv/oracle.hpp"

#include <stdexcept>

namespace latconv {

ExtReal oracle_support(const UpperSet& a, const Vec& zstar) {
  if (a.is_empty()) return ExtReal::pos_inf();
  if (a.is_full()) return is_zero(zstar) ? ExtReal(0) : ExtReal::neg_inf();
  for (const auto& g : a.ambient().generators()) {
    if (dot(zstar, g) < 0) return ExtReal::neg_inf();
  }
  for (const auto& r : a.extra_rays()) {
    if (dot(zstar, r) < 0) return ExtReal::neg_inf();
  }
  Rational best = dot(zstar, a.points().front());
  for (const auto& p : a.points()) {
    Rational v = dot(zstar, p);
    if (v < best) best = v;
  }
  return best;
}

namespace {

// Image of a direction under F's declared rays: 0 = undeclared, 1 = image, 2 = descent.
int image_of(const SetValuedFn& f, const Vec& w, Vec& out) {
  bool zero = true;
  for (const auto& c : w) zero = zero && c == 0;
  if (zero) {
    out.assign(f.dim(), Rational(0));
    return 1;
  }
  for (const auto& r : f.rays()) {
    // w = t * direction with t > 0
    std::size_t k = 0;
    while (k < w.size() && r.direction[k] == 0) ++k;
    if (k == w.size()) continue;
    Rational t = w[k] / r.direction[k];
    if (t <= 0) continue;
    bool match = true;
    for (std::size_t i = 0; i < w.size() && match; ++i) match = w[i] == t * r.direction[i];
    if (!match) continue;
    if (!r.shift) return 2;
    out = scale(t, *r.shift);
    return 1;
  }
  return 0;
}

struct Ladder {
  Vec dx;        // step in X
  Vec dy;        // step in Y
  bool descent;  // F drops to -inf along the ladder
  Vec dz;        // image of dy under F
};

}  // namespace

ExtReal oracle_conjugate_of_composition(const CompositionInstance& inst, const Vec& xstar, const Vec& zstar) {
  const SetValuedFn& g = inst.G;
  const SetValuedFn& f = inst.F;
  ExtReal best = ExtReal::neg_inf();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const UpperSet& gx = g.values()[i];
    if (gx.is_empty()) continue;
    if (gx.is_full()) throw std::invalid_argument("oracle: G value is the whole space");
    const Vec& x = g.grid()[i];

    std::vector<Ladder> ladders;
    auto add_ladder = [&](const Vec& dx, const Vec& dy) {
      Ladder l{dx, dy, false, {}};
      int kind = image_of(f, dy, l.dz);
      if (kind == 0) throw std::invalid_argument("oracle: undeclared image of " + to_string(dy));
      l.descent = kind == 2;
      ladders.push_back(std::move(l));
    };
    add_ladder(zeros(x.size()), zeros(gx.dim()));
    for (const auto& r : gx.ambient().generators()) add_ladder(zeros(x.size()), r);
    for (const auto& r : gx.extra_rays()) add_ladder(zeros(x.size()), r);
    for (const auto& d : g.rays()) add_ladder(d.direction, *d.shift);

    for (const auto& p : gx.points()) {
      auto j = f.index_of(p);
      if (!j) throw std::invalid_argument("oracle: vertex off F's grid");
      ExtReal phi_p = oracle_support(f.values()[*j], zstar);
      if (phi_p.is_pos_inf()) continue;
      if (phi_p.is_neg_inf()) return ExtReal::pos_inf();
      for (const auto& l : ladders) {
        if (l.descent) return ExtReal::pos_inf();
        std::vector<Rational> vals;
        for (long s : kOracleSteps) {
          Rational xs = dot(xstar, x) + s * dot(xstar, l.dx);
          Rational phi = phi_p.value() + s * dot(zstar, l.dz);
          vals.push_back(xs - phi);
        }
        bool growing = true;
        for (std::size_t k = 1; k < vals.size(); ++k) growing = growing && vals[k] > vals[k - 1];
        if (growing) return ExtReal::pos_inf();
        for (const auto& v : vals) best = ext_max(best, ExtReal(v));
      }
    }
  }
  return best;
}

ExtScalarFn oracle_envelope(const ExtScalarFn& rho) {
  const std::size_t n = rho.dim();
  if (n > 2) throw std::invalid_argument("oracle_envelope: dimension above 2");
  if (!rho.rays().empty()) throw std::invalid_argument("oracle_envelope: rays are not supported");
  std::vector<std::size_t> dom;
  for (std::size_t i = 0; i < rho.size(); ++i) {
    if (rho.values()[i].is_neg_inf()) throw std::invalid_argument("oracle_envelope: -inf value");
    if (rho.values()[i].is_finite()) dom.push_back(i);
  }
  const auto& pts = rho.grid();
  auto val = [&](std::size_t i) { return rho.values()[i].value(); };

  std::vector<ExtReal> env;
  for (std::size_t t = 0; t < rho.size(); ++t) {
    const Vec& x = pts[t];
    ExtReal best = ExtReal::pos_inf();
    auto offer = [&](const Rational& v) { best = ext_min(best, ExtReal(v)); };
    for (std::size_t a : dom) {
      if (pts[a] == x) offer(val(a));
    }
    // segments
    for (std::size_t ia = 0; ia < dom.size(); ++ia) {
      for (std::size_t ib = ia + 1; ib < dom.size(); ++ib) {
        const Vec &pa = pts[dom[ia]], &pb = pts[dom[ib]];
        Vec d = sub(pb, pa), e = sub(x, pa);
        // x = pa + lambda d with 0 <= lambda <= 1
        std::size_t k = 0;
        while (k < n && d[k] == 0) ++k;
        Rational lambda = e[k] / d[k];
        if (lambda < 0 || lambda > 1) continue;
        bool on = true;
        for (std::size_t c = 0; c < n && on; ++c) on = e[c] == lambda * d[c];
        if (on) offer((1 - lambda) * val(dom[ia]) + lambda * val(dom[ib]));
      }
    }
    // triangles
    if (n == 2) {
      for (std::size_t ia = 0; ia < dom.size(); ++ia) {
        for (std::size_t ib = ia + 1; ib < dom.size(); ++ib) {
          for (std::size_t ic = ib + 1; ic < dom.size(); ++ic) {
            const Vec &pa = pts[dom[ia]], &pb = pts[dom[ib]], &pc = pts[dom[ic]];
            Rational u1 = pb[0] - pa[0], u2 = pb[1] - pa[1];
            Rational v1 = pc[0] - pa[0], v2 = pc[1] - pa[1];
            Rational det = u1 * v2 - u2 * v1;
            if (det == 0) continue;
            Rational e1 = x[0] - pa[0], e2 = x[1] - pa[1];
            Rational lb = (e1 * v2 - e2 * v1) / det;
            Rational lc = (u1 * e2 - u2 * e1) / det;
            Rational la = 1 - lb - lc;
            if (la < 0 || lb < 0 || lc < 0) continue;
            offer(la * val(dom[ia]) + lb * val(dom[ib]) + lc * val(dom[ic]));
          }
        }
      }
    }
    env.push_back(best);
  }
  return ExtScalarFn(rho.grid(), std::move(env));
}

}  // namespace latconv
