#include "latconv/generator.hpp"

#include <algorithm>
#include <random>

namespace latconv {

namespace {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  long between(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

 private:
  std::mt19937_64 rng_;
};

using Matrix = std::vector<Vec>;  // rows

Vec mat_vec(const Matrix& m, const Vec& x) {
  Vec out;
  for (const auto& row : m) out.push_back(dot(row, x));
  return out;
}

Vec column(const Matrix& m, std::size_t j) {
  Vec out;
  for (const auto& row : m) out.push_back(row[j]);
  return out;
}

std::vector<Vec> box_grid(std::size_t dim, std::size_t size) {
  std::vector<Vec> out{Vec{}};
  const long lo = -static_cast<long>((size - 1) / 2);
  for (std::size_t d = 0; d < dim; ++d) {
    std::vector<Vec> next;
    for (const auto& p : out) {
      for (std::size_t k = 0; k < size; ++k) {
        Vec q = p;
        q.emplace_back(lo + static_cast<long>(k));
        next.push_back(std::move(q));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

CompositionInstance generate_instance(const GeneratorOptions& o) {
  for (std::size_t d : {o.dim_x, o.dim_y, o.dim_z}) {
    if (d < 1 || d > 3) throw GeneratorError("dimensions must lie in 1..3");
  }
  if (o.grid_size < 1 || o.grid_size > 7) throw GeneratorError("grid size must lie in 1..7");
  Draw draw(o.seed);
  const OrderCone xc = OrderCone::orthant(o.dim_x);
  const OrderCone yc = OrderCone::orthant(o.dim_y);
  const OrderCone zc = OrderCone::orthant(o.dim_z);

  auto point = [&](std::size_t dim) {
    Vec p;
    for (std::size_t i = 0; i < dim; ++i) p.emplace_back(draw.between(-2, 2));
    return p;
  };
  auto matrix = [&](std::size_t rows, std::size_t cols, long lo, long hi) {
    Matrix m(rows, Vec(cols));
    for (auto& row : m) {
      for (auto& e : row) e = draw.between(lo, hi);
    }
    return m;
  };

  std::vector<Vec> c_pts;
  for (long k = draw.between(1, 2); k > 0; --k) c_pts.push_back(point(o.dim_y));
  Matrix a = matrix(o.dim_y, o.dim_x, -2, -1);
  std::vector<Vec> d_pts;
  for (long k = draw.between(1, 2); k > 0; --k) d_pts.push_back(point(o.dim_z));
  Matrix m = matrix(o.dim_z, o.dim_y, 1, 2);

  std::vector<Vec> xgrid = box_grid(o.dim_x, o.grid_size);
  std::vector<UpperSet> gvals;
  std::vector<Vec> ygrid;
  for (const auto& x : xgrid) {
    Vec ax = mat_vec(a, x);
    std::vector<Vec> pts;
    for (const auto& c : c_pts) pts.push_back(add(c, ax));
    UpperSet v = UpperSet::make(yc, pts);
    ygrid.insert(ygrid.end(), v.points().begin(), v.points().end());
    gvals.push_back(std::move(v));
  }
  std::sort(ygrid.begin(), ygrid.end(), lex_less);
  ygrid.erase(std::unique(ygrid.begin(), ygrid.end()), ygrid.end());

  std::vector<UpperSet> fvals;
  for (const auto& y : ygrid) {
    Vec my = mat_vec(m, y);
    std::vector<Vec> pts;
    for (const auto& d : d_pts) pts.push_back(add(d, my));
    fvals.push_back(UpperSet::make(zc, pts));
  }
  if (o.nonconvex && !fvals.empty()) {
    std::size_t k = static_cast<std::size_t>(draw.between(0, static_cast<long>(fvals.size()) - 1));
    std::vector<Vec> pts;
    for (const auto& p : fvals[k].points()) pts.push_back(add(p, Vec(o.dim_z, Rational(3))));
    fvals[k] = UpperSet::make(zc, pts);
  }

  std::vector<DomainRay> descent;
  for (std::size_t i = 0; i < o.dim_x; ++i) descent.push_back({unit(o.dim_x, i), column(a, i)});
  std::vector<DomainRay> images;
  for (std::size_t j = 0; j < o.dim_y; ++j) images.push_back({unit(o.dim_y, j), column(m, j)});
  for (std::size_t i = 0; i < o.dim_x; ++i) {
    Vec ai = column(a, i);
    images.push_back({ai, mat_vec(m, ai)});
  }

  std::vector<Vec> xdual{zeros(o.dim_x)};
  for (std::size_t i = 0; i < o.dim_x; ++i) {
    xdual.push_back(unit(o.dim_x, i));
    xdual.push_back(negate(unit(o.dim_x, i)));
  }
  std::vector<Rational> lambdas = default_lambda_grid();
  for (std::size_t k = 0; k < o.dim_z; ++k) {
    // <c, M^T e_k> with c the all-ones normalization of the orthant base
    Rational s = 0;
    for (const auto& e : m[k]) s += e;
    lambdas.push_back(s);
  }
  std::sort(lambdas.begin(), lambdas.end());
  lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());

  return CompositionInstance{SetValuedFn(xgrid, gvals, yc, xc, descent),
                             SetValuedFn(ygrid, fvals, zc, yc, images),
                             xdual,
                             lambdas,
                             'a',
                             {},
                             {}};
}


std::pair<UpperSet, UpperSet> generate_nested_pair(std::uint64_t seed) {
  Draw draw(seed);
  const OrderCone o = OrderCone::origin(2);
  for (;;) {
    std::vector<Vec> bp;
    for (long k = draw.between(3, 5); k > 0; --k) {
      bp.push_back(Vec{Rational(draw.between(-4, 4)), Rational(draw.between(-4, 4))});
    }
    UpperSet b = UpperSet::make(o, bp).reduced();
    if (b.points().size() < 3) continue;
    if (draw.between(0, 1) == 0) {
      std::vector<Inequality> ineqs = b.hrep();
      Vec n{Rational(draw.between(-2, 2)), Rational(draw.between(-2, 2))};
      if (is_zero(n)) continue;
      ineqs.push_back({n, Rational(draw.between(-3, 3))});
      UpperSet a = UpperSet::from_inequalities(o, ineqs);
      if (!a.is_proper()) continue;
      return {a, b};
    }
    std::vector<Vec> ap;
    for (long k = draw.between(1, 3); k > 0; --k) {
      Vec p = zeros(2);
      Rational total = 0;
      std::vector<Rational> w;
      for (std::size_t i = 0; i < b.points().size(); ++i) {
        w.emplace_back(draw.between(0, 3));
        total += w.back();
      }
      if (total == 0) continue;
      for (std::size_t i = 0; i < w.size(); ++i) p = add(p, scale(w[i] / total, b.points()[i]));
      ap.push_back(p);
    }
    if (ap.empty()) continue;
    return {UpperSet::make(o, ap), b};
  }
}

}  // namespace latconv
