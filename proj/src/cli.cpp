#include "latconv/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <random>
#include <ostream>
#include <sstream>
#include <thread>

#include "latconv/generator.hpp"
#include "latconv/oracle.hpp"
#include "latconv/serialization.hpp"

namespace latconv {

using nlohmann::json;

const std::vector<std::string>& all_checks() {
  static const std::vector<std::string> names = {"prop31", "prop32",       "cor33",   "assumptions", "thm36",
                                                 "cor37",  "fm_scalar",    "fm_setvalued", "lemma21", "lemma42i"};
  return names;
}

std::vector<std::string> parse_checks(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (std::find(all_checks().begin(), all_checks().end(), item) == all_checks().end()) {
      throw std::invalid_argument("unknown check '" + item + "'");
    }
    if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
  }
  return out;
}

namespace {

using Task = std::function<std::vector<ReportEntry>()>;

ExtReal gap_of(const ExtReal& lhs, const ExtReal& rhs) {
  if (lhs == rhs) return ExtReal(0);
  if (lhs.is_pos_inf() || rhs.is_neg_inf()) return ExtReal::neg_inf();
  if (rhs.is_pos_inf() || lhs.is_neg_inf()) return ExtReal::pos_inf();
  return rhs - lhs;
}

std::string vs(const Vec& v) { return to_string(v); }

json pair_json(const std::optional<PairWitness>& w) {
  if (!w) return nullptr;
  return json::array({vs(w->first), vs(w->second)});
}

unsigned thread_count(const RunConfig& cfg) {
  if (cfg.threads) return cfg.threads;
  if (const char* env = std::getenv("LATCONV_THREADS")) {
    long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<ReportEntry> run_tasks(const std::vector<Task>& tasks, unsigned threads) {
  std::vector<std::vector<ReportEntry>> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < tasks.size();) {
      try {
        results[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::min<std::size_t>(threads, tasks.size()); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<ReportEntry> out;
  for (auto& r : results) {
    for (auto& e : r) out.push_back(std::move(e));
  }
  return out;
}

ReportEntry entry(std::string check, std::string inputs, CheckStatus status, json witness = nullptr) {
  ReportEntry e;
  e.check = std::move(check);
  e.inputs = std::move(inputs);
  e.status = status;
  e.witness = std::move(witness);
  return e;
}

void set_values(ReportEntry& e, const ExtReal& lhs, const ExtReal& rhs) {
  e.lhs = ext_json(lhs);
  e.rhs = ext_json(rhs);
  e.gap = ext_json(gap_of(lhs, rhs));
}

bool partial_domain(const SetValuedFn& r) {
  bool some_empty = false, some_nonempty = false;
  for (const auto& v : r.values()) (v.is_empty() ? some_empty : some_nonempty) = true;
  return some_empty && some_nonempty;
}

std::vector<Vec> merged(std::vector<Vec> a, const std::vector<Vec>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end(), lex_less);
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

// Gap predicted by the exhaustive envelope, for functions it can handle.
std::optional<ExtReal> envelope_gap(const ExtScalarFn& phi) {
  if (phi.dim() > 2 || !phi.rays().empty()) return std::nullopt;
  for (const auto& v : phi.values()) {
    if (v.is_neg_inf()) return std::nullopt;
  }
  ExtScalarFn env = oracle_envelope(phi);
  ExtReal gap(0);
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const ExtReal &a = phi.values()[i], &b = env.values()[i];
    if (a == b) continue;
    gap = ext_max(gap, a.is_pos_inf() || b.is_neg_inf() ? ExtReal::pos_inf() : a - b);
  }
  return gap;
}

}  // namespace

Report run_checks(const CompositionInstance& inst, const RunConfig& cfg) {
  std::vector<std::string> checks = cfg.checks.empty() ? all_checks() : cfg.checks;
  auto wants = [&](const char* name) { return std::find(checks.begin(), checks.end(), name) != checks.end(); };
  const CompositionVerifier ver(inst, cfg.samples, cfg.seed);
  const SetValuedFn& fog = ver.composition();
  const std::vector<Vec>& zdirs = ver.z_directions();
  const std::vector<Vec>& ydirs = ver.y_directions();
  std::vector<Task> tasks;

  if (wants("prop31")) {
    tasks.push_back([&] {
      Prop31Report rep = check_prop_3_1(inst, cfg.samples, cfg.seed);
      std::vector<ReportEntry> out;
      for (auto [name, imp] : {std::pair{"convex", rep.convex}, std::pair{"decreasing", rep.decreasing}}) {
        out.push_back(entry("prop31", name, imp.status, {{"detail", imp.detail}, {"pair", pair_json(imp.witness)}}));
      }
      return out;
    });
  }

  if (wants("prop32")) {
    for (const auto& x : inst.G.grid()) {
      tasks.push_back([&, x] {
        std::vector<ReportEntry> out;
        UpperSet composed = compose(inst, x);
        for (const auto& z : zdirs) {
          auto [lhs, rhs] = comp_scalarization_identity(inst, z, x);
          ReportEntry e = entry("prop32", "x=" + vs(x) + " z*=" + vs(z), lhs == rhs ? CheckStatus::Pass : CheckStatus::Fail);
          set_values(e, lhs, rhs);
          if (cfg.cross_check) {
            ExtReal o = oracle_support(composed, z);
            if (o != lhs) {
              e.status = CheckStatus::Fail;
              e.witness = {{"oracle", o.str()}};
            }
          }
          out.push_back(std::move(e));
        }
        return out;
      });
    }
  }

  if (wants("cor33")) {
    tasks.push_back([&] {
      std::vector<ReportEntry> out;
      for (const auto& z : zdirs) {
        Cor33Report r = check_cor_3_3(inst, z);
        out.push_back(entry("cor33", "z*=" + vs(z), r.status,
                            {{"composition_proper", r.premise}, {"F_proper", r.conclusion}}));
      }
      return out;
    });
  }

  if (wants("assumptions")) {
    tasks.push_back([&] {
      const AssumptionStatus& st = ver.assumptions();
      auto part = [](const AssumptionCheck& c) {
        json j{{"holds", c.holds}, {"detail", c.detail}};
        j["witness"] = c.witness ? json(vs(*c.witness)) : json(nullptr);
        return j;
      };
      std::vector<ReportEntry> out;
      out.push_back(entry("assumptions", "a34", st.a34.holds ? CheckStatus::Pass : CheckStatus::HypothesisViolation,
                          part(st.a34)));
      bool a35 = st.a35a.holds || st.a35b.holds;
      out.push_back(entry("assumptions", std::string("a35 mode=") + st.mode,
                          a35 ? CheckStatus::Pass : CheckStatus::HypothesisViolation,
                          {{"a", part(st.a35a)}, {"b", part(st.a35b)}}));
      return out;
    });
  }

  if (wants("thm36")) {
    for (const auto& z : zdirs) {
      tasks.push_back([&, z] {
        std::vector<ReportEntry> out;
        for (const auto& xs : ver.x_dual_grid(z)) {
          Thm36Report r = ver.theorem_3_6(xs, z);
          ReportEntry e = entry("thm36", "x*=" + vs(xs) + " z*=" + vs(z), r.status);
          e.lhs = ext_json(r.lhs);
          e.rhs = ext_json(r.rhs_refined);
          e.gap = ext_json(r.gap);
          e.witness = {{"detail", r.detail},
                       {"weak_duality", r.weak_duality},
                       {"rhs_unrefined", r.rhs.str()},
                       {"minimizer", r.minimizer ? json(vs(*r.minimizer)) : json(nullptr)}};
          if (cfg.cross_check) {
            ExtReal o = oracle_conjugate_of_composition(inst, xs, z);
            e.witness["oracle_lhs"] = o.str();
            if (o != r.lhs) e.status = CheckStatus::Fail;
          }
          out.push_back(std::move(e));
        }
        return out;
      });
    }
  }

  if (wants("cor37")) {
    for (const auto& x : inst.G.grid()) {
      tasks.push_back([&, x] {
        Cor37Report r = ver.corollary_3_7(x);
        json w{{"detail", r.detail}};
        if (r.comparison.witness) {
          w["probe"] = vs(*r.comparison.witness);
          w["support_composition"] = r.comparison.lhs.str();
          w["support_representation"] = r.comparison.rhs.str();
        }
        return std::vector<ReportEntry>{entry("cor37", "x=" + vs(x), r.status, w)};
      });
    }
  }

  if (wants("fm_scalar")) {
    struct Fn {
      const char* name;
      const SetValuedFn* r;
      const std::vector<Vec>* dirs;
      bool on_x;
    };
    for (const Fn& f : {Fn{"FoG", &fog, &zdirs, true}, Fn{"G", &inst.G, &ydirs, true}, Fn{"F", &inst.F, &zdirs, false}}) {
      tasks.push_back([&, f] {
        std::vector<ReportEntry> out;
        for (const auto& d : *f.dirs) {
          ExtScalarFn phi = scalarize(*f.r, d);
          std::string inputs = std::string(f.name) + " direction=" + vs(d);
          if (!is_proper(phi)) {
            out.push_back(entry("fm_scalar", inputs, CheckStatus::Skipped, {{"detail", "improper scalarization"}}));
            continue;
          }
          std::vector<Vec> grid = lower_hull_slopes(phi);
          if (f.on_x) grid = merged(grid, inst.x_dual_grid);
          if (grid.empty()) grid.push_back(zeros(phi.dim()));
          FenchelMoreauGap g = fenchel_moreau(phi, grid);
          ReportEntry e = entry("fm_scalar", inputs, g.gap == ExtReal(0) ? CheckStatus::Pass : CheckStatus::Fail);
          e.gap = ext_json(g.gap);
          json w{{"worst", g.worst ? json(vs(*g.worst)) : json(nullptr)}};
          if (cfg.cross_check) {
            if (auto predicted = envelope_gap(phi)) {
              w["envelope_gap"] = predicted->str();
              if (*predicted != g.gap) e.status = CheckStatus::Fail;
            }
          }
          e.witness = w;
          out.push_back(std::move(e));
        }
        return out;
      });
    }
  }

  if (wants("fm_setvalued")) {
    struct Fn {
      const char* name;
      const SetValuedFn* r;
      bool on_x;
    };
    for (const Fn& f : {Fn{"FoG", &fog, true}, Fn{"G", &inst.G, true}, Fn{"F", &inst.F, false}}) {
      tasks.push_back([&, f] {
        const SetValuedFn& r = *f.r;
        if (partial_domain(r)) {
          return std::vector<ReportEntry>{entry("fm_setvalued", f.name, CheckStatus::Skipped,
                                                {{"detail", "empty values next to nonempty ones"}})};
        }
        ConeBase base;
        try {
          base = value_normal_base(r, cone_base(dual_cone(r.ambient())));
        } catch (const ConeError& e) {
          return std::vector<ReportEntry>{entry("fm_setvalued", f.name, CheckStatus::Skipped, {{"detail", e.what()}})};
        }
        std::vector<Vec> grid = derived_dual_grid(r, base, f.on_x ? inst.x_dual_grid : std::vector<Vec>{});
        SetFenchelMoreauReport rep = sv_fenchel_moreau_check(r, grid, base);
        json w{{"points", rep.points.size()}};
        for (const auto& p : rep.points) {
          if (p.equal) continue;
          w["x"] = vs(p.x);
          if (p.comparison.witness) {
            w["probe"] = vs(*p.comparison.witness);
            w["support_value"] = p.comparison.lhs.str();
            w["support_biconjugate"] = p.comparison.rhs.str();
          }
          break;
        }
        return std::vector<ReportEntry>{
            entry("fm_setvalued", f.name, rep.pass ? CheckStatus::Pass : CheckStatus::Fail, w)};
      });
    }
  }

  if (wants("lemma21")) {
    tasks.push_back([&] {
      const int pairs = std::max(50, cfg.samples);
      int agree = 0, convex = 0;
      json w;
      for (int i = 0; i < pairs; ++i) {
        auto [a, b] = generate_nested_pair(cfg.seed + static_cast<std::uint64_t>(i));
        QuasiconcavityResult r = indicator_quasiconcavity(a, b, 50, cfg.seed + static_cast<std::uint64_t>(i));
        agree += r.agree;
        convex += r.complement_convex;
        if (!r.agree && !w.contains("pair")) w["pair"] = i;
      }
      w["pairs"] = pairs;
      w["agreeing"] = agree;
      w["convex_complements"] = convex;
      return std::vector<ReportEntry>{
          entry("lemma21", "random planar pairs", agree == pairs ? CheckStatus::Pass : CheckStatus::Fail, w)};
    });
    tasks.push_back([&] {
      // B \ B(x, y) = {y* in base : <y*, y> < support of G(x) at y*} is convex
      std::vector<std::pair<Vec, Vec>> xy;
      for (const auto& x : inst.G.grid()) {
        for (const auto& y : ver.y_probes(cfg.samples, cfg.seed)) xy.emplace_back(x, y);
      }
      if (cfg.samples > 0 && xy.size() > static_cast<std::size_t>(cfg.samples)) {
        std::mt19937_64 rng(cfg.seed);
        for (std::size_t k = xy.size() - 1; k > 0; --k) std::swap(xy[k], xy[rng() % (k + 1)]);
        xy.resize(static_cast<std::size_t>(cfg.samples));
      }
      std::size_t checked = 0;
      for (const auto& [x, y] : xy) {
        const UpperSet& gx = inst.G.at(x);
        auto outside = [&](const Vec& ys) { return ExtReal(dot(ys, y)) < support(gx, ys); };
        for (std::size_t i = 0; i < ydirs.size(); ++i) {
          for (std::size_t j = i + 1; j < ydirs.size(); ++j) {
            if (!outside(ydirs[i]) || !outside(ydirs[j])) continue;
            ++checked;
            Vec mid = scale(Rational(1, 2), add(ydirs[i], ydirs[j]));
            if (!outside(mid)) {
              return std::vector<ReportEntry>{entry("lemma21", "sections", CheckStatus::Fail,
                                                    {{"x", vs(x)}, {"y", vs(y)}, {"midpoint", vs(mid)}})};
            }
          }
        }
      }
      return std::vector<ReportEntry>{
          entry("lemma21", "sections", CheckStatus::Pass, {{"pairs_checked", checked}, {"sections", xy.size()}})};
    });
  }

  if (wants("lemma42i")) {
    tasks.push_back([&] {
      std::vector<ReportEntry> out;
      std::vector<Vec> ys = ver.y_probes(cfg.samples, cfg.seed);
      for (const auto& d : ydirs) {
        std::string inputs = "y*=" + vs(d);
        if (!ver.assumptions().satisfied()) {
          out.push_back(entry("lemma42i", inputs, CheckStatus::HypothesisViolation, {{"detail", "assumptions fail"}}));
          continue;
        }
        Lemma42Report r = ver.lemma_4_2i(d, ys);
        json w{{"boundary_points", r.boundary_points}};
        if (r.witness_x) {
          w["x"] = vs(*r.witness_x);
          w["y"] = vs(*r.witness_y);
        }
        out.push_back(entry("lemma42i", inputs, r.holds ? CheckStatus::Pass : CheckStatus::Fail, w));
      }
      return out;
    });
  }

  Report rep;
  rep.merge(run_tasks(tasks, thread_count(cfg)));
  rep.sort();
  return rep;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Report rep;
  try {
    CompositionInstance inst = load_scenario(cfg.scenario_path);
    rep = run_checks(inst, cfg);
  } catch (const ScenarioError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << cfg.scenario_path << ": " << e.what() << '\n';
    return 3;
  }
  std::string text;
  if (cfg.format == "json") text = rep.to_json().dump(2) + "\n";
  else if (cfg.format == "csv") text = rep.to_csv();
  else text = rep.to_text();
  if (cfg.report_path.empty()) {
    out << text;
  } else {
    std::ofstream f(cfg.report_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << cfg.report_path << '\n';
      return 3;
    }
    f << text;
  }
  if (cfg.format != "text") err << rep.entries().size() << " checks: " << rep.count(CheckStatus::Pass) << " pass, "
      << rep.count(CheckStatus::Fail) << " fail, " << rep.count(CheckStatus::Skipped) << " skipped, "
      << rep.count(CheckStatus::HypothesisViolation) << " hypothesis_violation\n";
  return rep.exit_code();
}

std::string generate_scenario_text(const GenerateConfig& cfg) {
  GeneratorOptions o;
  o.dim_x = cfg.dim_x;
  o.dim_y = cfg.dim_y;
  o.dim_z = cfg.dim_z;
  o.grid_size = cfg.grid_size;
  o.seed = cfg.seed;
  return scenario_to_json(generate_instance(o)).dump(2) + "\n";
}

int generate(const GenerateConfig& cfg, std::ostream& out, std::ostream& err) {
  std::string text;
  try {
    text = generate_scenario_text(cfg);
  } catch (const GeneratorError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
  if (cfg.out_path.empty()) {
    out << text;
    return 0;
  }
  std::ofstream f(cfg.out_path, std::ios::binary);
  if (!f) {
    err << "error: cannot write " << cfg.out_path << '\n';
    return 3;
  }
  f << text;
  return 0;
}

}  // namespace latconv
