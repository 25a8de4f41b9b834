#pragma once

// Scenario-driven verification runs behind the `latconv` command line tool.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "latconv/composition.hpp"
#include "latconv/report.hpp"

namespace latconv {

struct RunConfig {
  std::string scenario_path;
  std::vector<std::string> checks;  // empty: all
  bool cross_check = false;
  std::uint64_t seed = 42;
  std::string report_path;          // empty: standard output
  std::string format = "json";      // json | csv | text
  int samples = 64;
  unsigned threads = 0;             // 0: LATCONV_THREADS or hardware concurrency
};

const std::vector<std::string>& all_checks();

/// Splits "a,b,c"; throws std::invalid_argument on an unknown name.
std::vector<std::string> parse_checks(const std::string& list);

/// Runs the selected checks on a verified instance; entries come back sorted.
Report run_checks(const CompositionInstance& inst, const RunConfig& cfg);

/// Full run: load, verify, write. Returns the exit code (3 on input errors).
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

struct GenerateConfig {
  std::size_t dim_x = 1, dim_y = 1, dim_z = 1;
  std::size_t grid_size = 3;
  std::uint64_t seed = 42;
  std::string out_path;  // empty: standard output
};

/// Scenario text for a generated instance (byte-deterministic per seed).
std::string generate_scenario_text(const GenerateConfig& cfg);
int generate(const GenerateConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace latconv
