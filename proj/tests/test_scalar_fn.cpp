#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "latconv/scalar_fn.hpp"

using namespace latconv;
using th::q;
using th::v;

namespace {

std::vector<Vec> line_grid(long lo, long hi) {
  std::vector<Vec> g;
  for (long x = lo; x <= hi; ++x) g.push_back(v({x}));
  return g;
}

ExtScalarFn from_1d(long lo, long hi, Rational (*f)(long)) {
  std::vector<ExtReal> vals;
  for (long x = lo; x <= hi; ++x) vals.emplace_back(f(x));
  return ExtScalarFn(line_grid(lo, hi), vals);
}

}  // namespace

TEST_CASE("conjugate conventions") {
  ExtScalarFn top(line_grid(-1, 1), {ExtReal::pos_inf(), ExtReal::pos_inf(), ExtReal::pos_inf()});
  CHECK(conjugate(top, v({3})).is_neg_inf());
  ExtScalarFn sq = from_1d(-1, 1, [](long x) { return Rational(x * x); });
  CHECK(conjugate(sq, v({1})) == ExtReal(0));
  ExtScalarFn lin = from_1d(-2, 2, [](long x) { return Rational(3 * x); });
  CHECK(conjugate(lin, v({3})) == ExtReal(0));
  ExtScalarFn bottom(line_grid(0, 1), {ExtReal(1), ExtReal::neg_inf()});
  CHECK(conjugate(bottom, v({0})).is_pos_inf());
  CHECK_THROWS_AS(conjugate(sq, v({1, 2})), DimensionError);
}

TEST_CASE("rays make off-slope conjugates infinite") {
  ExtScalarFn f(line_grid(-1, 1), {ExtReal(1), ExtReal(0), ExtReal(-1)},
                {{v({1}), ExtReal(-1)}, {v({-1}), ExtReal(1)}});
  CHECK(conjugate(f, v({-1})) == ExtReal(0));
  CHECK(conjugate(f, v({0})).is_pos_inf());
  CHECK(conjugate(f, v({-2})).is_pos_inf());
  ExtScalarFn drop(line_grid(0, 0), {ExtReal(0)}, {{v({1}), ExtReal::neg_inf()}});
  CHECK(conjugate(drop, v({5})).is_pos_inf());
  CHECK_FALSE(is_proper(drop));
}

TEST_CASE("biconjugates") {
  ExtScalarFn absx = from_1d(-2, 2, [](long x) { return Rational(x < 0 ? -x : x); });
  auto slopes = lower_hull_slopes(absx);
  CHECK(slopes == std::vector<Vec>{v({-1}), v({1})});
  for (const auto& x : absx.grid()) CHECK(biconjugate(absx, slopes, x) == absx.at(x));
  ExtScalarFn bottom(line_grid(0, 1), {ExtReal::neg_inf(), ExtReal::neg_inf()});
  CHECK(biconjugate(bottom, {v({0})}, v({0})).is_neg_inf());
  ExtScalarFn concave = from_1d(-1, 1, [](long x) { return Rational(-x * x); });
  CHECK(biconjugate(concave, lower_hull_slopes(concave), v({0})) == ExtReal(-1));
  CHECK_THROWS_AS(biconjugate(absx, slopes, v({7})), std::out_of_range);
  CHECK_THROWS_AS(biconjugate(absx, {}, v({0})), std::invalid_argument);
}

TEST_CASE("properness") {
  CHECK(is_proper(from_1d(0, 2, [](long x) { return Rational(x); })));
  CHECK_FALSE(is_proper(ExtScalarFn(line_grid(0, 1), {ExtReal(0), ExtReal::neg_inf()})));
  CHECK_FALSE(is_proper(ExtScalarFn(line_grid(0, 1), {ExtReal::pos_inf(), ExtReal::pos_inf()})));
}

TEST_CASE("Fenchel-Moreau gaps") {
  ExtScalarFn convex = from_1d(-3, 3, [](long x) { return Rational(x < 1 ? -2 * x : 3 * (x - 1) - 2); });
  CHECK(fenchel_moreau_gap(convex, lower_hull_slopes(convex)) == ExtReal(0));
  ExtScalarFn dip = from_1d(-1, 1, [](long x) { return Rational(x == 0 ? 1 : 0); });
  FenchelMoreauGap g = fenchel_moreau(dip, lower_hull_slopes(dip));
  CHECK(g.gap == ExtReal(1));
  CHECK(*g.worst == v({0}));
  ExtScalarFn top(line_grid(-1, 1), {ExtReal::pos_inf(), ExtReal::pos_inf(), ExtReal::pos_inf()});
  CHECK(fenchel_moreau_gap(top, {v({0})}) == ExtReal(0));
}

TEST_CASE("two-dimensional hull slopes") {
  std::vector<Vec> grid;
  std::vector<ExtReal> vals;
  for (long a = -1; a <= 1; ++a) {
    for (long b = -1; b <= 1; ++b) {
      grid.push_back(v({a, b}));
      vals.emplace_back(Rational(std::max({a + b, a - 2 * b, 0L})));
    }
  }
  ExtScalarFn f(grid, vals);
  auto slopes = lower_hull_slopes(f);
  CHECK(fenchel_moreau_gap(f, slopes) == ExtReal(0));
  CHECK_FALSE(midpoint_convexity_violation(f));
}

TEST_CASE("midpoint convexity") {
  ExtScalarFn concave = from_1d(-1, 1, [](long x) { return Rational(-x * x); });
  auto w = midpoint_convexity_violation(concave);
  REQUIRE(w);
  CHECK(w->first == v({-1}));
  CHECK(w->second == v({1}));
}

TEST_CASE("random scalar properties") {
  std::mt19937_64 rng(5);
  auto draw = [&](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1)); };
  std::vector<Vec> probes;
  for (long n = -8; n <= 8; ++n) probes.push_back(th::vq({q(n, 2)}));
  for (int inst = 0; inst < 60; ++inst) {
    std::vector<ExtReal> v1, v2;
    for (int i = 0; i < 7; ++i) {
      long r = draw(-5, 5);
      ExtReal a = draw(0, 6) == 0 ? ExtReal::pos_inf() : ExtReal(r);
      v1.push_back(a);
      v2.push_back(a.is_finite() ? ExtReal(r + draw(0, 3)) : a);
    }
    ExtScalarFn f(line_grid(-3, 3), v1), g(line_grid(-3, 3), v2);
    for (const auto& xs : probes) {
      ExtReal c = conjugate(f, xs);
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (f.values()[i].is_finite() && c.is_finite()) {
          CHECK(dot(xs, f.grid()[i]) <= f.values()[i].value() + c.value());
        }
      }
      CHECK(conjugate(f, xs) >= conjugate(g, xs));
    }
    for (const auto& x : f.grid()) CHECK(biconjugate(f, probes, x) <= f.at(x));
    bool bb_proper = true, bb_finite = false;
    for (const auto& x : f.grid()) {
      ExtReal b = biconjugate(f, probes, x);
      bb_proper = bb_proper && !b.is_neg_inf();
      bb_finite = bb_finite || b.is_finite();
    }
    std::vector<ExtReal> cvals;
    for (const auto& xs : probes) cvals.push_back(conjugate(f, xs));
    ExtScalarFn fstar(probes, cvals);
    if (bb_proper && bb_finite) {
      CHECK(is_proper(fstar));
    }
    if (is_proper(fstar)) {
      CHECK(is_proper(f));
    }
  }
}
