#include "latconv/upper_sets.hpp"

#include <algorithm>
#include <mutex>
#include <random>

#include "latconv/lp.hpp"

namespace latconv {

struct UpperSet::Cache {
  std::once_flag once;
  std::vector<Inequality> hrep;
};

namespace {

void dedupe(std::vector<Vec>& vs) {
  std::sort(vs.begin(), vs.end(), lex_less);
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

bool recession_is_full(const std::vector<Vec>& rays, std::size_t dim) {
  ConeGenerators dual = cone_from_inequalities(rays, dim);
  return dual.lines.empty() && dual.rays.empty();
}

void require_same_ambient(const UpperSet& a, const UpperSet& b, const char* op) {
  if (!same_ambient(a.ambient(), b.ambient())) {
    throw std::invalid_argument(std::string(op) + ": sets live in different ambient cones");
  }
}

// p in co(points) + cone(rays)
bool in_hull(const std::vector<Vec>& points, const std::vector<Vec>& rays, const Vec& p) {
  const std::size_t d = p.size();
  const std::size_t n = points.size() + rays.size();
  std::vector<Vec> rows(d + 1, zeros(n));
  Vec rhs = p;
  rhs.push_back(Rational(1));
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (std::size_t i = 0; i < d; ++i) rows[i][j] = points[j][i];
    rows[d][j] = 1;
  }
  for (std::size_t j = 0; j < rays.size(); ++j) {
    for (std::size_t i = 0; i < d; ++i) rows[i][points.size() + j] = rays[j][i];
  }
  return standard_feasible(rows, rhs);
}

}  // namespace

bool same_ambient(const OrderCone& a, const OrderCone& b) {
  return a.dim() == b.dim() && a.generators() == b.generators();
}

UpperSet::UpperSet(const OrderCone& ambient, Kind kind, std::vector<Vec> points, std::vector<Vec> rays)
    : ambient_(ambient),
      kind_(kind),
      points_(std::move(points)),
      extra_rays_(std::move(rays)),
      cache_(std::make_shared<Cache>()) {}

UpperSet UpperSet::empty(const OrderCone& ambient) { return UpperSet(ambient, Kind::Empty, {}, {}); }
UpperSet UpperSet::full(const OrderCone& ambient) { return UpperSet(ambient, Kind::Full, {}, {}); }

UpperSet UpperSet::make(const OrderCone& ambient, std::vector<Vec> points, std::vector<Vec> extra_rays) {
  for (const auto& p : points) require_dim(p, ambient.dim(), "upper set point");
  std::vector<Vec> rays;
  for (auto& r : extra_rays) {
    require_dim(r, ambient.dim(), "upper set ray");
    if (is_zero(r)) continue;
    Vec pr = primitive(r);
    bool known = false;
    for (const auto& g : ambient.generators()) known = known || same_direction(pr, g);
    if (!known) rays.push_back(std::move(pr));
  }
  if (points.empty()) return empty(ambient);
  dedupe(points);
  dedupe(rays);
  std::vector<Vec> rec = ambient.generators();
  rec.insert(rec.end(), rays.begin(), rays.end());
  if (recession_is_full(rec, ambient.dim())) return full(ambient);
  return UpperSet(ambient, Kind::Proper, std::move(points), std::move(rays));
}

UpperSet UpperSet::translate(const OrderCone& ambient, const Vec& point) { return make(ambient, {point}); }

UpperSet UpperSet::from_inequalities(const OrderCone& ambient, const std::vector<Inequality>& ineqs) {
  PolyhedronGenerators g = polyhedron_generators(ineqs, ambient.dim());
  if (g.empty) return empty(ambient);
  return make(ambient, g.points, g.rays);
}

UpperSet UpperSet::halfspace(const OrderCone& ambient, const Halfspace& h) {
  return from_inequalities(ambient, {Inequality{h.normal, h.level}});
}

std::vector<Vec> UpperSet::recession_rays() const {
  std::vector<Vec> rec = ambient_.generators();
  rec.insert(rec.end(), extra_rays_.begin(), extra_rays_.end());
  return rec;
}

const std::vector<Inequality>& UpperSet::hrep() const {
  if (kind_ == Kind::Empty) throw std::logic_error("hrep of the empty set");
  std::call_once(cache_->once, [this] {
    if (kind_ == Kind::Proper) cache_->hrep = polyhedron_inequalities(points_, recession_rays(), dim());
  });
  return cache_->hrep;
}

UpperSet UpperSet::reduced() const {
  if (kind_ != Kind::Proper) return *this;
  // Drop points dominated by another point plus the recession cone, then
  // points inside the hull of the remaining ones.
  std::vector<Vec> rec = recession_rays();
  std::vector<Vec> pts = points_;
  for (std::size_t i = 0; i < pts.size();) {
    std::vector<Vec> others;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j != i) others.push_back(pts[j]);
    }
    if (!others.empty() && in_hull(others, rec, pts[i])) {
      pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  std::vector<Vec> rays = extra_rays_;
  for (std::size_t i = 0; i < rays.size();) {
    std::vector<Vec> others = ambient_.generators();
    for (std::size_t j = 0; j < rays.size(); ++j) {
      if (j != i) others.push_back(rays[j]);
    }
    if (in_hull({zeros(dim())}, others, rays[i])) {
      rays.erase(rays.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return UpperSet(ambient_, Kind::Proper, std::move(pts), std::move(rays));
}

ExtReal support(const UpperSet& a, const Vec& zstar) {
  require_dim(zstar, a.dim(), "support direction");
  if (a.is_empty()) return ExtReal::pos_inf();
  if (is_zero(zstar)) return ExtReal(0);
  if (a.is_full()) return ExtReal::neg_inf();
  for (const auto& g : a.ambient().generators()) {
    if (dot(zstar, g).sign() < 0) return ExtReal::neg_inf();
  }
  for (const auto& r : a.extra_rays()) {
    if (dot(zstar, r).sign() < 0) return ExtReal::neg_inf();
  }
  Rational best = dot(zstar, a.points().front());
  for (const auto& p : a.points()) best = std::min(best, dot(zstar, p));
  return ExtReal(best);
}

ExtReal support_lp(const UpperSet& a, const Vec& zstar) {
  require_dim(zstar, a.dim(), "support direction");
  if (a.is_empty()) return ExtReal::pos_inf();
  const auto& h = a.hrep();
  if (h.empty()) return is_zero(zstar) ? ExtReal(0) : ExtReal::neg_inf();
  // max <b, u>  s.t.  sum_i u_i a_i = z*,  u >= 0
  std::vector<Vec> rows(a.dim(), zeros(h.size()));
  Vec b(h.size());
  for (std::size_t j = 0; j < h.size(); ++j) {
    for (std::size_t i = 0; i < a.dim(); ++i) rows[i][j] = h[j].normal[i];
    b[j] = h[j].level;
  }
  LpResult r = solve_standard_lp(rows, zstar, b);
  if (r.status == LpStatus::Infeasible) return ExtReal::neg_inf();
  if (r.status == LpStatus::Unbounded) throw std::logic_error("support_lp: dual unbounded on a nonempty set");
  return ExtReal(r.value);
}

bool contains(const UpperSet& a, const Vec& z) {
  require_dim(z, a.dim(), "contains point");
  if (a.is_empty()) return false;
  if (a.is_full()) return true;
  return in_hull(a.points(), a.recession_rays(), z);
}

UpperSet minkowski_sum(const UpperSet& a, const UpperSet& b) {
  require_same_ambient(a, b, "minkowski_sum");
  if (a.is_empty() || b.is_empty()) return UpperSet::empty(a.ambient());
  if (a.is_full() || b.is_full()) return UpperSet::full(a.ambient());
  std::vector<Vec> pts;
  for (const auto& p : a.points()) {
    for (const auto& q : b.points()) pts.push_back(add(p, q));
  }
  std::vector<Vec> rays = a.extra_rays();
  rays.insert(rays.end(), b.extra_rays().begin(), b.extra_rays().end());
  return UpperSet::make(a.ambient(), std::move(pts), std::move(rays));
}

UpperSet lattice_inf(const std::vector<UpperSet>& sets) {
  if (sets.empty()) throw std::invalid_argument("lattice_inf of an empty family");
  std::vector<Vec> pts, rays;
  for (const auto& s : sets) {
    require_same_ambient(sets.front(), s, "lattice_inf");
    if (s.is_full()) return UpperSet::full(s.ambient());
    if (s.is_empty()) continue;
    pts.insert(pts.end(), s.points().begin(), s.points().end());
    rays.insert(rays.end(), s.extra_rays().begin(), s.extra_rays().end());
  }
  return UpperSet::make(sets.front().ambient(), std::move(pts), std::move(rays));
}

UpperSet lattice_sup(const std::vector<UpperSet>& sets) {
  if (sets.empty()) throw std::invalid_argument("lattice_sup of an empty family");
  std::vector<Inequality> ineqs;
  for (const auto& s : sets) {
    require_same_ambient(sets.front(), s, "lattice_sup");
    if (s.is_empty()) return UpperSet::empty(s.ambient());
    if (s.is_full()) continue;
    ineqs.insert(ineqs.end(), s.hrep().begin(), s.hrep().end());
  }
  if (ineqs.empty()) return UpperSet::full(sets.front().ambient());
  return UpperSet::from_inequalities(sets.front().ambient(), ineqs);
}

SetComparison compare_sets(const UpperSet& a, const UpperSet& b, const std::vector<Vec>& probes) {
  if (probes.empty()) throw std::invalid_argument("compare_sets: empty probe set");
  std::vector<Vec> all = probes;
  if (!a.is_empty()) {
    for (const auto& h : a.hrep()) all.push_back(h.normal);
  }
  if (!b.is_empty()) {
    for (const auto& h : b.hrep()) all.push_back(h.normal);
  }
  SetComparison out;
  for (const auto& z : all) {
    ExtReal sa = support(a, z);
    ExtReal sb = support(b, z);
    if (sa != sb) {
      out.equal = false;
      out.witness = z;
      out.lhs = sa;
      out.rhs = sb;
      return out;
    }
  }
  return out;
}

bool set_equal(const UpperSet& a, const UpperSet& b, const std::vector<Vec>& probes) {
  return compare_sets(a, b, probes).equal;
}

bool is_subset(const UpperSet& a, const UpperSet& b) {
  if (a.is_empty() || b.is_full()) return true;
  if (b.is_empty() || a.is_full()) return false;
  for (const auto& h : b.hrep()) {
    if (support(a, h.normal) < ExtReal(h.level)) return false;
  }
  return true;
}

namespace {

UpperSet as_plain_polyhedron(const UpperSet& s) {
  OrderCone origin = OrderCone::origin(s.dim());
  if (s.is_empty()) return UpperSet::empty(origin);
  if (s.is_full()) return UpperSet::full(origin);
  return UpperSet::make(origin, s.points(), s.recession_rays());
}

// Exact: some z1, z2 in B \ A have a convex combination in A.
std::optional<std::pair<Vec, Vec>> complement_violation(const UpperSet& a, const UpperSet& b) {
  const std::size_t d = a.dim();
  const auto& ha = a.hrep();
  std::vector<Inequality> hb;
  if (!b.is_full()) hb = b.hrep();
  // variables: u1 (d), u2 (d), lambda, s
  const std::size_t nv = 2 * d + 2;
  const std::size_t L = 2 * d, S = 2 * d + 1;
  for (std::size_t h = 0; h < ha.size(); ++h) {
    for (std::size_t k = h; k < ha.size(); ++k) {
      std::vector<Vec> rows;
      Vec rhs;
      for (const auto& ineq : hb) {
        Vec r1 = zeros(nv), r2 = zeros(nv);
        for (std::size_t i = 0; i < d; ++i) {
          r1[i] = ineq.normal[i];
          r2[d + i] = ineq.normal[i];
        }
        r1[L] = -ineq.level;
        rows.push_back(r1);
        rhs.push_back(0);
        r2[L] = ineq.level;
        rows.push_back(r2);
        rhs.push_back(ineq.level);
      }
      Vec rh = zeros(nv), rk = zeros(nv);
      for (std::size_t i = 0; i < d; ++i) {
        rh[i] = -ha[h].normal[i];
        rk[d + i] = -ha[k].normal[i];
      }
      rh[L] = ha[h].level;
      rh[S] = -1;
      rows.push_back(rh);
      rhs.push_back(0);
      rk[L] = -ha[k].level;
      rk[S] = -1;
      rows.push_back(rk);
      rhs.push_back(-ha[k].level);
      for (const auto& ineq : ha) {
        Vec r = zeros(nv);
        for (std::size_t i = 0; i < d; ++i) r[i] = r[d + i] = ineq.normal[i];
        rows.push_back(r);
        rhs.push_back(ineq.level);
      }
      Vec r_lo = zeros(nv), r_hi = zeros(nv), r_s = zeros(nv);
      r_lo[L] = 1;
      r_lo[S] = -1;
      rows.push_back(r_lo);
      rhs.push_back(0);
      r_hi[L] = -1;
      r_hi[S] = -1;
      rows.push_back(r_hi);
      rhs.push_back(-1);
      r_s[S] = -1;
      rows.push_back(r_s);
      rhs.push_back(-1);
      Vec obj = zeros(nv);
      obj[S] = 1;
      LpResult res = solve_inequality_lp(rows, rhs, obj);
      if (res.status != LpStatus::Optimal || res.value.sign() <= 0) continue;
      const Vec& u = res.solution;
      Rational lam = u[L];
      Vec z1(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(d));
      Vec z2(u.begin() + static_cast<std::ptrdiff_t>(d), u.begin() + static_cast<std::ptrdiff_t>(2 * d));
      return std::make_pair(scale(Rational(1) / lam, z1), scale(Rational(1) / (1 - lam), z2));
    }
  }
  return std::nullopt;
}

// Parameter interval of {t in [0,1] : z1 + t (z2 - z1) in A}, nonempty check.
bool segment_meets(const std::vector<Inequality>& ha, const Vec& z1, const Vec& z2) {
  Rational lo = 0, hi = 1;
  Vec dir = sub(z2, z1);
  for (const auto& h : ha) {
    Rational base = dot(h.normal, z1) - h.level;  // >= 0 needed at t with base + t*slope
    Rational slope = dot(h.normal, dir);
    if (slope.is_zero()) {
      if (base.sign() < 0) return false;
      continue;
    }
    Rational t = -base / slope;
    if (slope.sign() > 0) {
      lo = std::max(lo, t);
    } else {
      hi = std::min(hi, t);
    }
    if (lo > hi) return false;
  }
  return lo <= hi;
}

bool inside(const std::vector<Inequality>& h, const Vec& z) {
  for (const auto& ineq : h) {
    if (dot(ineq.normal, z) < ineq.level) return false;
  }
  return true;
}

}  // namespace

QuasiconcavityResult indicator_quasiconcavity(const UpperSet& a_in, const UpperSet& b_in, int samples,
                                              std::uint64_t seed) {
  if (a_in.dim() != b_in.dim()) throw DimensionError("indicator_quasiconcavity: dimension mismatch");
  UpperSet a = as_plain_polyhedron(a_in);
  UpperSet b = as_plain_polyhedron(b_in);
  if (!is_subset(a, b)) throw std::invalid_argument("indicator_quasiconcavity: A is not a subset of B");
  QuasiconcavityResult out;
  if (a.is_empty() || a.is_full()) return out;

  auto violation = complement_violation(a, b);
  out.complement_convex = !violation.has_value();

  const auto& ha = a.hrep();
  std::vector<Inequality> hb;
  if (!b.is_full()) hb = b.hrep();
  const std::size_t d = a.dim();

  // Candidate endpoints: vertices of B, points just outside each face of A,
  // a few steps along recession rays, then random lattice points.
  std::vector<Vec> cands;
  const Rational eps(1, 64);
  std::vector<Vec> anchors = b.is_full() ? a.points() : b.points();
  for (const auto& v : anchors) {
    cands.push_back(v);
    for (const auto& r : b.is_full() ? std::vector<Vec>{} : b.recession_rays()) cands.push_back(add(v, r));
  }
  for (const auto& h : ha) {
    Vec centre = zeros(d);
    long tight = 0;
    for (const auto& v : a.points()) {
      if (dot(h.normal, v) == h.level) {
        centre = add(centre, v);
        ++tight;
      }
    }
    if (tight == 0) continue;
    for (const Rational& e : {eps, Rational(eps * eps)}) cands.push_back(sub(scale(Rational(1, tight), centre), scale(e, h.normal)));
  }
  for (const auto& v : a.points()) {
    for (const auto& h : ha) cands.push_back(sub(v, scale(eps, h.normal)));
    for (std::size_t i = 0; i < d; ++i) {
      cands.push_back(add(v, scale(eps, unit(d, i))));
      cands.push_back(sub(v, scale(eps, unit(d, i))));
    }
  }
  Rational lo = 0, hi = 0;
  bool first = true;
  for (const auto& c : cands) {
    for (const auto& x : c) {
      if (first || x < lo) lo = x;
      if (first || x > hi) hi = x;
      first = false;
    }
  }
  lo -= 1;
  hi += 1;
  std::mt19937_64 rng(seed);
  const long span = 64;
  for (int s = 0; s < samples; ++s) {
    Vec z(d);
    for (auto& x : z) x = lo + (hi - lo) * Rational(static_cast<long>(rng() % (span + 1)), span);
    cands.push_back(std::move(z));
  }
  std::vector<Vec> outside;
  for (const auto& c : cands) {
    if (inside(hb, c) && !inside(ha, c)) outside.push_back(c);
  }
  for (std::size_t i = 0; i < outside.size() && out.indicator_quasiconcave; ++i) {
    for (std::size_t j = i + 1; j < outside.size(); ++j) {
      if (segment_meets(ha, outside[i], outside[j])) {
        out.indicator_quasiconcave = false;
        out.witness = std::make_pair(outside[i], outside[j]);
        break;
      }
    }
  }
  if (!out.witness && violation) out.witness = violation;
  out.agree = out.complement_convex == out.indicator_quasiconcave;
  return out;
}

bool indicator_quasiconcavity_check(const UpperSet& a, const UpperSet& b, int samples, std::uint64_t seed) {
  return indicator_quasiconcavity(a, b, samples, seed).agree;
}

}  // namespace latconv
