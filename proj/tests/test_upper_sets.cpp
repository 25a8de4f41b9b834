#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "latconv/upper_sets.hpp"

using namespace latconv;
using th::q;
using th::v;

namespace {

const OrderCone R2 = OrderCone::orthant(2);
const OrderCone R1 = OrderCone::orthant(1);

UpperSet box(long lo, long hi) {
  OrderCone o = OrderCone::origin(2);
  return UpperSet::make(o, {v({lo, lo}), v({lo, hi}), v({hi, lo}), v({hi, hi})});
}

std::vector<Vec> probe_grid() {
  std::vector<Vec> out;
  for (long a = 0; a <= 3; ++a) {
    for (long b = 0; b <= 3; ++b) {
      if (a || b) out.push_back(v({a, b}));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("support values") {
  CHECK(support(UpperSet::empty(R2), v({1, 1})).is_pos_inf());
  UpperSet a = UpperSet::translate(R2, v({1, 2}));
  CHECK(support(a, v({1, 1})) == ExtReal(3));
  CHECK(support(a, v({1, -1})).is_neg_inf());
  CHECK(support(UpperSet::full(R2), v({0, 0})) == ExtReal(0));
  CHECK_THROWS_AS(support(a, v({1})), DimensionError);
}

TEST_CASE("support routes agree") {
  UpperSet a = UpperSet::make(R2, {v({0, 3}), v({1, 1}), v({4, 0})});
  for (long x = -2; x <= 3; ++x) {
    for (long y = -2; y <= 3; ++y) CHECK(support(a, v({x, y})) == support_lp(a, v({x, y})));
  }
  CHECK(support_lp(UpperSet::full(R2), v({1, 0})).is_neg_inf());
}

TEST_CASE("membership") {
  UpperSet a = UpperSet::translate(R2, v({0, 0}));
  CHECK(contains(a, v({1, 1})));
  CHECK_FALSE(contains(a, v({-1, 0})));
  CHECK_FALSE(contains(UpperSet::empty(R2), v({0, 0})));
  for (const auto& g : R2.generators()) CHECK(contains(a, add(v({0, 0}), g)));
}

TEST_CASE("normalization to the whole space") {
  UpperSet a = UpperSet::make(R2, {v({0, 0})}, {v({-1, 0}), v({0, -1})});
  CHECK(a.is_full());
  CHECK(UpperSet::make(R2, {}).is_empty());
}

TEST_CASE("minkowski sums") {
  UpperSet s = minkowski_sum(UpperSet::translate(R2, v({1, 0})), UpperSet::translate(R2, v({0, 1})));
  CHECK(set_equal(s, UpperSet::translate(R2, v({1, 1})), probe_grid()));
  CHECK(minkowski_sum(s, UpperSet::empty(R2)).is_empty());
  UpperSet h = UpperSet::halfspace(R2, {v({1, 0}), 0});
  UpperSet hs = minkowski_sum(UpperSet::translate(R2, v({0, 0})), h);
  CHECK(set_equal(hs, h, probe_grid()));
  for (long x = -3; x <= 3; ++x) {
    for (long y = -3; y <= 3; ++y) CHECK(contains(hs, v({x, y})) == (x >= 0));
  }
}

TEST_CASE("lattice infimum") {
  UpperSet a = UpperSet::translate(R2, v({0, 0}));
  UpperSet b = UpperSet::translate(R2, v({2, -1}));
  UpperSet i = lattice_inf({a, b});
  CHECK(support(i, v({1, 1})) == ExtReal(0));
  CHECK(set_equal(lattice_inf({a}), a, probe_grid()));
  CHECK(set_equal(lattice_inf({UpperSet::empty(R2), a}), a, probe_grid()));
  CHECK(lattice_inf({a, UpperSet::full(R2)}).is_full());
  CHECK(lattice_inf({UpperSet::empty(R2), UpperSet::empty(R2)}).is_empty());
  CHECK_THROWS_AS(lattice_inf({}), std::invalid_argument);
}

TEST_CASE("lattice supremum") {
  UpperSet a = UpperSet::translate(R2, v({0, 0}));
  UpperSet b = UpperSet::translate(R2, v({2, -1}));
  CHECK(set_equal(lattice_sup({a, b}), UpperSet::translate(R2, v({2, 0})), probe_grid()));
  CHECK(set_equal(lattice_sup({a, UpperSet::full(R2)}), a, probe_grid()));
  UpperSet c = lattice_sup({UpperSet::translate(R1, v({0})), UpperSet::translate(R1, v({1}))});
  CHECK(set_equal(c, UpperSet::translate(R1, v({1})), {v({1})}));
  CHECK(lattice_sup({a, UpperSet::empty(R2)}).is_empty());
}

TEST_CASE("set equality") {
  UpperSet a = UpperSet::translate(R2, v({0, 0}));
  CHECK(set_equal(a, a, probe_grid()));
  UpperSet b = UpperSet::make(R2, {v({0, 0})}, {v({1, -1})});
  SetComparison cmp = compare_sets(a, b, {v({0, 1})});
  CHECK_FALSE(cmp.equal);
  CHECK(*cmp.witness == v({0, 1}));
  CHECK(cmp.lhs == ExtReal(0));
  CHECK(cmp.rhs.is_neg_inf());
  CHECK_FALSE(set_equal(UpperSet::empty(R2), UpperSet::full(R2), probe_grid()));
  CHECK_THROWS_AS(set_equal(a, a, {}), std::invalid_argument);
}

TEST_CASE("reduction keeps the set") {
  UpperSet a = UpperSet::make(R2, {v({0, 3}), v({1, 1}), v({2, 2}), v({4, 0}), v({5, 5})}, {v({1, 0})});
  UpperSet r = a.reduced();
  CHECK(r.points().size() == 3);
  CHECK(r.extra_rays().empty());
  CHECK(set_equal(a, r, probe_grid()));
}

TEST_CASE("separation reconstruction") {
  UpperSet a = UpperSet::make(R2, {v({0, 3}), v({1, 1}), v({4, 0})});
  std::vector<UpperSet> halves;
  for (const auto& h : a.hrep()) {
    halves.push_back(UpperSet::halfspace(R2, {h.normal, support(a, h.normal).value()}));
  }
  CHECK(set_equal(lattice_sup(halves), a, probe_grid()));
}

TEST_CASE("random support and lattice laws") {
  std::mt19937_64 rng(11);
  auto draw = [&](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1)); };
  auto random_set = [&]() {
    std::vector<Vec> pts;
    int n = 1 + draw(0, 2);
    for (int i = 0; i < n; ++i) pts.push_back(v({draw(-3, 3), draw(-3, 3)}));
    std::vector<Vec> rays;
    if (draw(0, 3) == 0) rays.push_back(v({1, -1}));
    return UpperSet::make(R2, pts, rays);
  };
  std::vector<Vec> probes = probe_grid();
  for (int inst = 0; inst < 40; ++inst) {
    UpperSet a = random_set(), b = random_set(), c = random_set();
    for (const auto& z1 : probes) {
      ExtReal s1 = support(a, z1);
      CHECK(support(a, scale(q(3, 2), z1)) == s1.scaled(q(3, 2)));
      for (const auto& z2 : probes) {
        ExtReal s2 = support(a, z2);
        if (s1.is_finite() && s2.is_finite()) CHECK(support(a, add(z1, z2)) >= s1 + s2);
      }
    }
    UpperSet inf = lattice_inf({a, b, c});
    UpperSet sup = lattice_sup({a, b, c});
    for (const auto& s : {a, b, c}) {
      CHECK(is_subset(s, inf));
      CHECK(is_subset(sup, s));
    }
    // greatest lower bound: any set containing a, b, c contains inf
    UpperSet big = lattice_inf({a, b, c, random_set()});
    CHECK(is_subset(inf, big));
    // indicator calculus on probe points
    for (long x = -4; x <= 4; ++x) {
      for (long y = -4; y <= 4; ++y) {
        Vec z = v({x, y});
        bool all = contains(a, z) && contains(b, z) && contains(c, z);
        CHECK(contains(sup, z) == all);
        if (contains(a, z) || contains(b, z) || contains(c, z)) CHECK(contains(inf, z));
      }
    }
  }
}

TEST_CASE("indicator quasiconcavity") {
  UpperSet b = box(-2, 2);
  CHECK(indicator_quasiconcavity_check(b, b, 50, 1));
  QuasiconcavityResult r = indicator_quasiconcavity(box(-1, 1), b, 50, 1);
  CHECK_FALSE(r.complement_convex);
  CHECK_FALSE(r.indicator_quasiconcave);
  CHECK(r.agree);
  REQUIRE(r.witness);

  OrderCone o = OrderCone::origin(2);
  UpperSet upper = UpperSet::make(o, {v({0, 0})}, {v({1, 0}), v({-1, 0}), v({0, 1})});
  UpperSet strip = UpperSet::make(o, {v({0, 1})}, {v({1, 0}), v({-1, 0}), v({0, 1})});
  QuasiconcavityResult s = indicator_quasiconcavity(strip, upper, 50, 1);
  CHECK(s.complement_convex);
  CHECK(s.indicator_quasiconcave);

  // part of an edge removed: complement stays convex
  UpperSet sq = box(0, 2);
  UpperSet edge = UpperSet::make(o, {v({1, 0}), v({2, 0})});
  CHECK(indicator_quasiconcavity(edge, sq, 50, 3).complement_convex);
  CHECK(indicator_quasiconcavity_check(edge, sq, 50, 3));
  CHECK_THROWS_AS(indicator_quasiconcavity(b, box(-1, 1), 10, 1), std::invalid_argument);
}
