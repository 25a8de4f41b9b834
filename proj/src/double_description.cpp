#include "latconv/double_description.hpp"

#include <algorithm>

namespace latconv {
namespace {

struct Ray {
  Vec v;
  std::vector<bool> active;  // per processed row
};

void sort_unique(std::vector<Vec>& vs) {
  std::sort(vs.begin(), vs.end(), lex_less);
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

bool subset_of(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
  }
  return true;
}

}  // namespace

ConeGenerators cone_from_inequalities(const std::vector<Vec>& rows, std::size_t dim) {
  for (const auto& r : rows) require_dim(r, dim, "inequality row");
  std::vector<Vec> lines;
  for (std::size_t i = 0; i < dim; ++i) lines.push_back(unit(dim, i));
  std::vector<Ray> rays;
  std::size_t processed = 0;

  for (const auto& a : rows) {
    std::size_t pivot = lines.size();
    Rational pa;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      pa = dot(a, lines[i]);
      if (!pa.is_zero()) {
        pivot = i;
        break;
      }
    }

    if (pivot < lines.size()) {
      Vec l = lines[pivot];
      if (pa.sign() < 0) {
        l = negate(l);
        pa = -pa;
      }
      lines.erase(lines.begin() + static_cast<std::ptrdiff_t>(pivot));
      for (auto& other : lines) {
        Rational c = dot(a, other);
        if (!c.is_zero()) other = sub(other, scale(c / pa, l));
      }
      for (auto& r : rays) {
        Rational c = dot(a, r.v);
        if (!c.is_zero()) r.v = sub(r.v, scale(c / pa, l));
        r.active.push_back(true);
      }
      // The former line is tight on every earlier row.
      Ray nr{l, std::vector<bool>(processed, true)};
      nr.active.push_back(false);
      rays.push_back(std::move(nr));
      ++processed;
      continue;
    }

    std::vector<Rational> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i].v);
      if (val[i].sign() > 0) pos.push_back(i);
      if (val[i].sign() < 0) neg.push_back(i);
    }

    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (val[i].sign() < 0) continue;
      Ray r = rays[i];
      r.active.push_back(val[i].is_zero());
      next.push_back(std::move(r));
    }
    for (std::size_t p : pos) {
      for (std::size_t n : neg) {
        std::vector<bool> common(processed);
        for (std::size_t k = 0; k < processed; ++k) common[k] = rays[p].active[k] && rays[n].active[k];
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == p || k == n) continue;
          if (subset_of(common, rays[k].active)) adjacent = false;
        }
        if (!adjacent) continue;
        Vec combo = add(scale(val[p], rays[n].v), scale(Rational(-val[n]), rays[p].v));
        Ray r{primitive(combo), common};
        r.active.push_back(true);
        next.push_back(std::move(r));
      }
    }
    rays = std::move(next);
    ++processed;
  }

  ConeGenerators out;
  for (const auto& l : lines) out.lines.push_back(primitive_line(l));
  for (const auto& r : rays) {
    if (!is_zero(r.v)) out.rays.push_back(primitive(r.v));
  }
  sort_unique(out.lines);
  sort_unique(out.rays);
  return out;
}

std::vector<Inequality> polyhedron_inequalities(const std::vector<Vec>& points,
                                                const std::vector<Vec>& rays, std::size_t dim) {
  if (points.empty()) throw std::invalid_argument("polyhedron_inequalities: no points");
  std::vector<Vec> rows;
  for (const auto& p : points) {
    require_dim(p, dim, "point");
    Vec row{Rational(1)};
    row.insert(row.end(), p.begin(), p.end());
    rows.push_back(std::move(row));
  }
  for (const auto& r : rays) {
    require_dim(r, dim, "ray");
    Vec row{Rational(0)};
    row.insert(row.end(), r.begin(), r.end());
    rows.push_back(std::move(row));
  }
  ConeGenerators dual = cone_from_inequalities(rows, dim + 1);

  std::vector<Inequality> out;
  auto emit = [&](const Vec& g) {
    Vec normal(g.begin() + 1, g.end());
    if (is_zero(normal)) return;
    out.push_back({normal, Rational(-g[0])});
  };
  for (const auto& g : dual.rays) emit(g);
  for (const auto& g : dual.lines) {
    emit(g);
    emit(negate(g));
  }
  return out;
}

PolyhedronGenerators polyhedron_generators(const std::vector<Inequality>& ineqs, std::size_t dim) {
  std::vector<Vec> rows;
  for (const auto& h : ineqs) {
    require_dim(h.normal, dim, "inequality normal");
    Vec row{Rational(-h.level)};
    row.insert(row.end(), h.normal.begin(), h.normal.end());
    rows.push_back(std::move(row));
  }
  Vec t_row = zeros(dim + 1);
  t_row[0] = 1;
  rows.push_back(std::move(t_row));
  ConeGenerators cone = cone_from_inequalities(rows, dim + 1);

  PolyhedronGenerators out;
  for (const auto& g : cone.rays) {
    Vec tail(g.begin() + 1, g.end());
    if (g[0].sign() > 0) {
      out.points.push_back(scale(Rational(1) / g[0], tail));
    } else {
      out.rays.push_back(tail);
    }
  }
  for (const auto& g : cone.lines) {
    Vec tail(g.begin() + 1, g.end());
    out.rays.push_back(tail);
    out.rays.push_back(negate(tail));
  }
  out.empty = out.points.empty();
  if (out.empty) out.rays.clear();
  sort_unique(out.points);
  sort_unique(out.rays);
  return out;
}

}  // namespace latconv
