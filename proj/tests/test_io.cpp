#include <fstream>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "latconv/cli.hpp"
#include "latconv/generator.hpp"
#include "latconv/serialization.hpp"

using namespace latconv;
using th::q;
using th::v;

namespace {

const std::string kRoot = LATCONV_SOURCE_DIR;

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

json worked_json() { return json::parse(slurp(kRoot + "/scenarios/worked_1d.json")); }

std::string error_location(const json& j) {
  try {
    scenario_from_json(j);
  } catch (const ScenarioError& e) {
    return e.where();
  }
  return "<none>";
}

RunConfig config(const std::string& scenario) {
  RunConfig c;
  c.scenario_path = kRoot + "/scenarios/" + scenario;
  c.cross_check = true;
  return c;
}

}  // namespace

TEST_CASE("rational encodings") {
  CHECK(to_json(q(3)) == json(3));
  CHECK(to_json(q(-1, 2)) == json("-1/2"));
  CHECK(rational_from_json(json("-1/2")) == q(-1, 2));
  CHECK(rational_from_json(json::array({3, 6})) == q(1, 2));
  CHECK(rational_from_json(json(7)) == q(7));
  Rational big = Rational(Integer(1) << 80, Integer(3));
  CHECK(rational_from_json(to_json(big)) == big);
  CHECK_THROWS_AS(rational_from_json(json::array({1, 0}), "/x"), ScenarioError);
  CHECK_THROWS_AS(rational_from_json(json(0.5), "/x"), ScenarioError);
  CHECK(to_json(ExtReal::neg_inf()) == json("-inf"));
  CHECK(ext_real_from_json(json("+inf")).is_pos_inf());
}

TEST_CASE("scenario round trip") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    GeneratorOptions o;
    o.dim_x = 2;
    o.dim_y = 2;
    o.seed = seed;
    CompositionInstance inst = generate_instance(o);
    json j = scenario_to_json(inst);
    CompositionInstance back = scenario_from_json(j);
    CHECK(scenario_to_json(back) == j);
    CHECK(back.G.size() == inst.G.size());
    CHECK(back.F.rays().size() == inst.F.rays().size());
  }
  CompositionInstance w = scenario_from_json(worked_json());
  CHECK(w.G.at(v({1})).points() == std::vector<Vec>{v({-1})});
  CHECK(w.lambda_grid.front() == q(1, 4));
}

TEST_CASE("malformed scenarios name the offending value") {
  json j = worked_json();
  j["extra"] = 1;
  CHECK(error_location(j) == "/extra");

  j = worked_json();
  j["G"]["values"][1]["points"][0] = json::array({0, 2});
  CHECK(error_location(j) == "/G/values/1/points/0");

  j = worked_json();
  j["F"]["values"].erase(2);
  CHECK(error_location(j) == "/F/values");

  j = worked_json();
  j["ray_images"][0]["image"] = "upward";
  CHECK(error_location(j) == "/ray_images/0/image");

  j = worked_json();
  j.erase("z_cone");
  CHECK(error_location(j) == "");

  // G(0) reaches y = 0 but F is only defined at y = 5
  j = worked_json();
  j["F"] = json{{"grid", json::array({json::array({5})})}, {"values", json::array({json{{"points", json::array({json::array({5})})}}})}};
  j["ray_images"] = json::array();
  CHECK(error_location(j) == "/G");

  CHECK_THROWS_AS(load_scenario(kRoot + "/scenarios/malformed.json"), ScenarioError);
  CHECK_THROWS_AS(load_scenario(kRoot + "/scenarios/missing.json"), ScenarioError);
}

TEST_CASE("generator is deterministic and matches the golden file") {
  GenerateConfig g;
  CHECK(generate_scenario_text(g) == slurp(kRoot + "/tests/golden/generate_1_1_1_g3_s42.json"));
  g.dim_x = 2;
  g.dim_y = 3;
  g.seed = 99;
  CHECK(generate_scenario_text(g) == generate_scenario_text(g));
  GenerateConfig other = g;
  other.seed = 100;
  CHECK(generate_scenario_text(g) != generate_scenario_text(other));
  g.dim_z = 4;
  CHECK_THROWS_AS(generate_scenario_text(g), GeneratorError);
}

TEST_CASE("generated instances have the declared shape") {
  GeneratorOptions o;
  o.dim_x = 2;
  o.dim_y = 2;
  o.dim_z = 1;
  o.grid_size = 3;
  CompositionInstance inst = generate_instance(o);
  CHECK(inst.G.size() == 9);
  CHECK(inst.G.rays().size() == 2);
  CHECK(inst.F.rays().size() == 4);
  CHECK(inst.x_dual_grid.size() == 5);
  for (const auto& x : inst.G.grid()) {
    for (const auto& p : inst.G.at(x).points()) CHECK(inst.F.index_of(p).has_value());
  }
  o.nonconvex = true;
  CHECK(scenario_to_json(generate_instance(o)) != scenario_to_json(inst));
}

TEST_CASE("report shape") {
  Report r;
  ReportEntry a;
  a.check = "thm36";
  a.inputs = "x*=(1)";
  a.lhs = ext_json(ExtReal(q(1, 2)));
  a.status = CheckStatus::Skipped;
  a.witness = {{"detail", "a, \"quoted\""}};
  ReportEntry b;
  b.check = "cor37";
  r.add(a);
  r.add(b);
  r.sort();
  CHECK(r.entries().front().check == "cor37");
  CHECK(validate_report_json(r.to_json()) == "");
  CHECK(r.exit_code() == 2);
  CHECK(r.to_csv() ==
        "check,inputs,lhs,rhs,gap,status,witness\n"
        "cor37,,,,,pass,\n"
        "thm36,x*=(1),1/2,,,skipped,\"{\"\"detail\"\":\"\"a, \\\"\"quoted\\\"\"\"\"}\"\n");

  json bad = r.to_json();
  bad[0]["status"] = "ok";
  CHECK(validate_report_json(bad) != "");
  bad = r.to_json();
  std::swap(bad[0], bad[1]);
  CHECK(validate_report_json(bad) != "");
  bad = r.to_json();
  bad[1]["lhs"] = "half";
  CHECK(validate_report_json(bad) != "");
  bad = r.to_json();
  bad[1].erase("gap");
  CHECK(validate_report_json(bad) != "");
}

TEST_CASE("check selection") {
  CHECK(parse_checks("thm36,cor37,thm36") == std::vector<std::string>{"thm36", "cor37"});
  CHECK(parse_checks("").empty());
  CHECK_THROWS_AS(parse_checks("thm36,nope"), std::invalid_argument);
  CHECK(all_checks().size() == 10);
}

TEST_CASE("bundled scenarios give the documented exit codes") {
  std::ostringstream out, err;
  CHECK(run(config("worked_1d.json"), out, err) == 0);
  CHECK(validate_report_json(json::parse(out.str())) == "");
  CHECK(run(config("nonconvex_control.json"), out, err) == 1);
  CHECK(run(config("hypothesis_violation.json"), out, err) == 2);
  std::ostringstream merr;
  CHECK(run(config("malformed.json"), out, merr) == 3);
  CHECK(merr.str().find("/G/values/1/points/0") != std::string::npos);
}

TEST_CASE("nonconvex control carries a convexity witness") {
  RunConfig c = config("nonconvex_control.json");
  c.checks = {"prop31"};
  Report r = run_checks(load_scenario(c.scenario_path), c);
  REQUIRE(r.entries().size() == 2);
  CHECK(r.entries()[0].status == CheckStatus::Skipped);
  CHECK(r.entries()[0].witness["pair"].size() == 2);
}

TEST_CASE("reports are byte-identical across runs and thread counts") {
  RunConfig c = config("worked_1d.json");
  std::ostringstream a, b, err;
  c.threads = 1;
  run(c, a, err);
  c.threads = 4;
  run(c, b, err);
  CHECK(a.str() == b.str());
  c.format = "csv";
  std::ostringstream csv;
  run(c, csv, err);
  CHECK(csv.str().rfind("check,inputs,lhs,rhs,gap,status,witness\n", 0) == 0);
}
