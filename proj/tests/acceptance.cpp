// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "latconv/cli.hpp"
#include "latconv/generator.hpp"
#include "latconv/oracle.hpp"
#include "latconv/serialization.hpp"

using namespace latconv;

namespace {

const std::string kRoot = LATCONV_SOURCE_DIR;

struct Outcome {
  bool ok = true;
  std::string detail;
  double limit_s = 0;  // 0: no runtime bound
};

class Tally {
 public:
  void expect(bool cond, const std::string& what) {
    if (!cond && first_.empty()) first_ = what;
    ok_ = ok_ && cond;
  }
  bool ok() const { return ok_; }
  std::string failure() const { return first_; }

 private:
  bool ok_ = true;
  std::string first_;
};

long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Vec ivec(std::initializer_list<long> xs) {
  Vec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

Vec random_vec(std::mt19937_64& rng, std::size_t d, long lo, long hi) {
  Vec out;
  for (std::size_t i = 0; i < d; ++i) out.emplace_back(draw(rng, lo, hi));
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct Shape {
  std::size_t x, y, z, grid;
};

// The random suite shared by criteria 2 to 4.
std::vector<CompositionInstance> random_suite(bool nonconvex, int per_shape) {
  static const Shape shapes[] = {{1, 1, 1, 7}, {1, 1, 1, 5}, {1, 2, 1, 5}, {1, 1, 2, 3}, {2, 1, 1, 3}, {2, 2, 1, 3},
                                 {1, 2, 2, 3}, {2, 1, 2, 3}, {1, 3, 1, 3}, {3, 1, 1, 2}, {1, 1, 3, 3}, {2, 2, 2, 2}};
  std::vector<CompositionInstance> out;
  std::uint64_t seed = nonconvex ? 5000 : 1000;
  for (const Shape& s : shapes) {
    for (int k = 0; k < per_shape; ++k) {
      GeneratorOptions o;
      o.dim_x = s.x;
      o.dim_y = s.y;
      o.dim_z = s.z;
      o.grid_size = s.grid;
      o.seed = seed++;
      o.nonconvex = nonconvex;
      out.push_back(generate_instance(o));
    }
  }
  return out;
}

std::string fmt(const char* f, long a, long b = 0, long c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Outcome criterion_1() {
  const OrderCone r1 = OrderCone::orthant(1);
  auto halflines = [&](long sign, std::vector<DomainRay> rays) {
    std::vector<Vec> grid;
    std::vector<UpperSet> vals;
    for (long x = -1; x <= 1; ++x) {
      grid.push_back(ivec({x}));
      vals.push_back(UpperSet::translate(r1, ivec({sign * x})));
    }
    return SetValuedFn(grid, vals, r1, r1, std::move(rays));
  };
  CompositionInstance inst{halflines(-1, {{ivec({1}), ivec({-1})}, {ivec({-1}), ivec({1})}}),
                           halflines(1, {{ivec({1}), ivec({1})}, {ivec({-1}), ivec({-1})}}),
                           {ivec({-2}), ivec({-1}), ivec({0}), ivec({1})},
                           {},
                           'a',
                           {},
                           {}};
  Tally t;
  Thm36Report at = theorem_3_6_verify(inst, ivec({-1}), ivec({1}));
  t.expect(at.lhs == ExtReal(0) && at.rhs_refined == ExtReal(0) && at.gap == ExtReal(0) &&
               at.status == CheckStatus::Pass,
           "thm36 at (-1, 1): lhs " + at.lhs.str() + " rhs " + at.rhs_refined.str());
  for (long xs : {-2L, 0L, 1L}) {
    Thm36Report r = theorem_3_6_verify(inst, ivec({xs}), ivec({1}));
    t.expect(r.lhs.is_pos_inf() && r.rhs_refined.is_pos_inf(), fmt("thm36 at (%ld, 1) not +inf on both sides", xs));
  }
  for (long x = -1; x <= 1; ++x) {
    Cor37Report c = corollary_3_7_verify(inst, ivec({x}));
    bool recovered = c.status == CheckStatus::Pass && c.rhs &&
                     set_equal(*c.rhs, UpperSet::translate(r1, ivec({-x})), {ivec({1})});
    t.expect(recovered, fmt("cor37 does not recover [%ld, inf)", -x));
  }
  return {t.ok(), t.ok() ? "worked instance: gap 0 at (-1,1), +inf/+inf off slope, F o G recovered at 3 points"
                         : t.failure(),
          1.0};
}

Outcome criterion_2() {
  std::vector<CompositionInstance> suite = random_suite(false, 10);
  std::vector<CompositionInstance> controls = random_suite(true, 2);
  std::mt19937_64 rng(77);
  Tally t;
  long probes = 0, entries = 0, exact = 0;
  auto run_instance = [&](const CompositionInstance& inst, bool control, std::size_t idx) {
    CompositionVerifier ver(inst, 32, 42);
    const std::string tag = std::string(control ? "control " : "instance ") + std::to_string(idx);
    if (!control) t.expect(ver.hypotheses_hold(), tag + ": hypotheses do not hold");
    std::vector<Vec> zs = ver.z_directions();
    for (int k = 0; k < 3; ++k) {
      Vec z = random_vec(rng, inst.F.dim(), 0, 3);
      if (!is_zero(z)) zs.push_back(z);
    }
    for (const auto& x : inst.G.grid()) {
      UpperSet composed = compose(inst, x);
      for (const auto& z : zs) {
        auto [lhs, rhs] = comp_scalarization_identity(inst, z, x);
        t.expect(lhs == rhs && oracle_support(composed, z) == lhs, tag + ": scalarization identity at " + to_string(x));
        ++probes;
      }
    }
    for (const auto& z : ver.z_directions()) {
      for (const auto& xs : ver.x_dual_grid(z)) {
        Thm36Report r = ver.theorem_3_6(xs, z);
        ++entries;
        t.expect(r.weak_duality, tag + ": weak duality fails at x*=" + to_string(xs));
        t.expect(oracle_conjugate_of_composition(inst, xs, z) == r.lhs, tag + ": oracle disagrees at x*=" + to_string(xs));
        if (!control && r.formula_exact) {
          ++exact;
          t.expect(r.gap == ExtReal(0), tag + ": gap " + r.gap.str() + " at x*=" + to_string(xs));
        }
      }
    }
  };
  for (std::size_t i = 0; i < suite.size(); ++i) run_instance(suite[i], false, i);
  for (std::size_t i = 0; i < controls.size(); ++i) run_instance(controls[i], true, i);
  t.expect(exact > 0, "no formula-exact entry");
  std::string detail = std::to_string(suite.size()) + " instances + " + std::to_string(controls.size()) +
                       " nonconvex controls, " + std::to_string(probes) + " identity probes, " +
                       std::to_string(entries) + " duality entries (" + std::to_string(exact) + " formula-exact)";
  return {t.ok(), t.ok() ? detail : t.failure(), 60.0};
}

Outcome criterion_3() {
  std::mt19937_64 rng(303);
  Tally t;
  int convex_fns = 0, nonconvex_fns = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = static_cast<std::size_t>(draw(rng, 1, 2));
    std::vector<std::pair<Vec, Rational>> pieces;
    for (long k = draw(rng, 1, 4); k > 0; --k) pieces.emplace_back(random_vec(rng, d, -3, 3), Rational(draw(rng, -3, 3)));
    auto value = [&](const Vec& x) {
      Rational best = dot(pieces[0].first, x) + pieces[0].second;
      for (const auto& [s, c] : pieces) best = std::max(best, dot(s, x) + c);
      return best;
    };
    // lift the origin above the chord between its neighbours along the first axis
    const Vec e = unit(d, 0);
    const Rational lifted = (value(e) + value(negate(e))) / 2 + Rational(draw(rng, 1, 4));
    std::vector<Vec> grid;
    std::vector<ExtReal> convex_vals, bumped_vals;
    for (long a = -2; a <= 2; ++a) {
      for (long b = -2; b <= (d == 2 ? 2 : -2); ++b) {
        Vec x = d == 2 ? ivec({a, b}) : ivec({a});
        grid.push_back(x);
        convex_vals.emplace_back(value(x));
        bumped_vals.emplace_back(is_zero(x) ? lifted : value(x));
      }
    }
    ExtScalarFn rho(grid, convex_vals);
    std::vector<Vec> slopes;
    for (const auto& p : pieces) slopes.push_back(p.first);
    t.expect(fenchel_moreau_gap(rho, slopes) == ExtReal(0), fmt("convex function %ld has a gap", trial));
    ++convex_fns;

    ExtScalarFn bumped(grid, bumped_vals);
    FenchelMoreauGap g = fenchel_moreau(bumped, lower_hull_slopes(bumped));
    t.expect(g.gap > ExtReal(0) && g.worst && is_zero(*g.worst), fmt("bumped function %ld shows no gap", trial));
    ++nonconvex_fns;
  }

  int sv_pass = 0, sv_controls = 0;
  auto sv_check = [&](const SetValuedFn& r) {
    ConeBase base = value_normal_base(r, cone_base(dual_cone(r.ambient())));
    return sv_fenchel_moreau_check(r, derived_dual_grid(r, base), base);
  };
  for (const auto& inst : random_suite(false, 5)) {
    for (const SetValuedFn* r : {&inst.G, &inst.F}) {
      SetFenchelMoreauReport rep = sv_check(*r);
      t.expect(rep.pass && rep.points.size() == r->size(), "set-valued Fenchel-Moreau fails on a convex instance");
      ++sv_pass;
    }
  }
  for (const auto& inst : random_suite(true, 1)) {
    SetFenchelMoreauReport rep = sv_check(inst.F);
    bool witnessed = false;
    for (const auto& p : rep.points) witnessed = witnessed || (!p.equal && p.comparison.witness);
    t.expect(!rep.pass && witnessed, "nonconvex control passes the set-valued check");
    ++sv_controls;
  }
  std::string detail = std::to_string(convex_fns) + " convex + " + std::to_string(nonconvex_fns) +
                       " nonconvex scalar functions, " + std::to_string(sv_pass) + " set-valued functions + " +
                       std::to_string(sv_controls) + " nonconvex controls";
  return {t.ok(), t.ok() ? detail : t.failure()};
}

Outcome criterion_4() {
  std::mt19937_64 rng(404);
  Tally t;

  // cone double duality
  long cone_probes = 0;
  for (int c = 0; c < 40; ++c) {
    const std::size_t d = static_cast<std::size_t>(draw(rng, 1, 3));
    std::vector<Vec> gens;
    for (long k = draw(rng, 1, 4); k > 0; --k) {
      Vec g = random_vec(rng, d, -2, 2);
      if (!is_zero(g)) gens.push_back(g);
    }
    OrderCone k(d, gens);
    OrderCone kk = dual_cone(dual_cone(k));
    for (int p = 0; p < 30; ++p) {
      Vec z = random_vec(rng, d, -3, 3);
      t.expect(in_cone(k, z) == in_cone(kk, z), "double dual differs at " + to_string(z));
      ++cone_probes;
    }
  }

  // support laws and lattice bounds
  long support_probes = 0, lattice_pairs = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = static_cast<std::size_t>(draw(rng, 1, 3));
    const OrderCone k = OrderCone::orthant(d);
    auto random_set = [&] {
      std::vector<Vec> pts;
      for (long n = draw(rng, 1, 3); n > 0; --n) pts.push_back(random_vec(rng, d, -3, 3));
      return UpperSet::make(k, pts);
    };
    UpperSet a = random_set(), b = random_set();
    Vec z1 = random_vec(rng, d, -1, 3), z2 = random_vec(rng, d, -1, 3);
    Rational s(draw(rng, 1, 5), draw(rng, 1, 3));
    ExtReal base = support(a, z1);
    t.expect(support(a, scale(s, z1)) == (base.is_finite() ? ExtReal(s * base.value()) : base), "homogeneity");
    ExtReal s1 = support(a, z1), s2 = support(a, z2);
    if (!(s1.is_neg_inf() || s2.is_neg_inf())) t.expect(support(a, add(z1, z2)) >= s1 + s2, "superadditivity");
    ++support_probes;
    UpperSet lo = lattice_inf({a, b}), hi = lattice_sup({a, b});
    t.expect(is_subset(a, lo) && is_subset(b, lo) && is_subset(hi, a) && is_subset(hi, b), "lattice bounds");
    ++lattice_pairs;
  }

  // indicator quasiconcavity against convexity of the complement
  int nested = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto [a, b] = generate_nested_pair(seed);
    t.expect(indicator_quasiconcavity_check(a, b, 50, seed), "quasiconcavity disagrees on pair " + std::to_string(seed));
    ++nested;
  }

  // inverse monotonicity
  int inverse_instances = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const OrderCone k = OrderCone::orthant(2);
    std::vector<Vec> grid;
    std::vector<UpperSet> vals;
    std::vector<Vec> probes;
    const bool monotone = trial % 2 == 0;
    for (long x = 0; x < 4; ++x) {
      grid.push_back(ivec({x}));
      Vec p = monotone ? ivec({3 - x - draw(rng, 0, 1), 3 - x}) : random_vec(rng, 2, -2, 2);
      probes.push_back(p);
      vals.push_back(UpperSet::translate(k, p));
    }
    SetValuedFn r(grid, vals, k, OrderCone::orthant(1));
    bool upper_inverses = true;
    for (const auto& z1 : probes) {
      std::vector<Vec> inv1 = inverse(r, z1);
      for (const auto& z2 : probes) {
        if (!cone_leq(k, z1, z2)) continue;
        std::vector<Vec> inv2 = inverse(r, z2);
        for (const auto& x : inv1) {
          t.expect(std::find(inv2.begin(), inv2.end(), x) != inv2.end(), "inverse not monotone in z");
        }
      }
      for (const auto& x : inv1) {
        for (const auto& x2 : grid) {
          if (x <= x2 && std::find(inv1.begin(), inv1.end(), x2) == inv1.end()) upper_inverses = false;
        }
      }
    }
    t.expect(is_decreasing(r) == upper_inverses, fmt("decreasing vs upper inverses differ on instance %ld", trial));
    ++inverse_instances;
  }

  // composition properness and the closure of sections on the random suite
  long cor33_dirs = 0, lemma_dirs = 0;
  for (const auto& inst : random_suite(false, 4)) {
    CompositionVerifier ver(inst, 32, 42);
    for (const auto& z : ver.z_directions()) {
      Cor33Report c = check_cor_3_3(inst, z);
      t.expect(c.status != CheckStatus::Fail, "proper composition with improper outer scalarization");
      ++cor33_dirs;
    }
    if (!ver.assumptions().satisfied()) continue;
    std::vector<Vec> ys = ver.y_probes(32, 42);
    for (const auto& ystar : ver.y_directions()) {
      t.expect(ver.lemma_4_2i(ystar, ys).holds, "section closure fails at y*=" + to_string(ystar));
      ++lemma_dirs;
    }
  }
  t.expect(lemma_dirs > 0, "no assumption-satisfying instance");

  std::string detail = std::to_string(cone_probes) + " cone probes, " + std::to_string(support_probes) +
                       " support and " + std::to_string(lattice_pairs) + " lattice pairs, " + std::to_string(nested) +
                       " nested pairs, " + std::to_string(inverse_instances) + " inverse instances, " +
                       std::to_string(cor33_dirs) + " properness and " + std::to_string(lemma_dirs) +
                       " section directions";
  return {t.ok(), t.ok() ? detail : t.failure()};
}

Outcome criterion_5() {
  Tally t;
  const std::pair<const char*, int> expected[] = {
      {"worked_1d.json", 0}, {"nonconvex_control.json", 1}, {"hypothesis_violation.json", 2}, {"malformed.json", 3}};
  for (const auto& [file, code] : expected) {
    RunConfig c;
    c.scenario_path = kRoot + "/scenarios/" + file;
    c.cross_check = true;
    std::ostringstream out, err;
    int got = run(c, out, err);
    t.expect(got == code, std::string(file) + " exits " + std::to_string(got));
    if (code != 3) t.expect(validate_report_json(json::parse(out.str())) == "", std::string(file) + " report shape");
    std::ostringstream again;
    run(c, again, err);
    t.expect(out.str() == again.str(), std::string(file) + " report not deterministic");
  }
  for (std::uint64_t seed : {1u, 42u, 4242u}) {
    GenerateConfig g;
    g.dim_x = 2;
    g.dim_y = 2;
    g.seed = seed;
    t.expect(generate_scenario_text(g) == generate_scenario_text(g), "generate not deterministic");
  }
  GenerateConfig golden;
  t.expect(generate_scenario_text(golden) == slurp(kRoot + "/tests/golden/generate_1_1_1_g3_s42.json"),
           "generate differs from the golden file");
  return {t.ok(), t.ok() ? "exit codes 0/1/2/3, deterministic reports and scenarios, report shape valid" : t.failure()};
}

}  // namespace

int main() {
  const std::function<Outcome()> criteria[] = {criterion_1, criterion_2, criterion_3, criterion_4, criterion_5};
  bool all = true;
  for (std::size_t i = 0; i < std::size(criteria); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.limit_s > 0 && secs >= o.limit_s) {
      o.ok = false;
      o.detail += " (over the time limit)";
    }
    std::printf("criterion %zu: %s  %s  [%.2f s]\n", i + 1, o.ok ? "PASS" : "FAIL", o.detail.c_str(), secs);
    all = all && o.ok;
  }
  return all ? 0 : 1;
}
