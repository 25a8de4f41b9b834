#include <iostream>

#include <CLI11.hpp>

#include "latconv/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Conjugate duality checks for compositions of set-valued functions"};
  app.require_subcommand(1);

  latconv::RunConfig run;
  std::string checks;
  auto* verify = app.add_subcommand("verify", "Run checks on a scenario file");
  verify->add_option("--scenario", run.scenario_path, "Scenario JSON")->required();
  verify->add_option("--checks", checks, "Comma separated subset of checks");
  verify->add_flag("--cross-check", run.cross_check, "Compare against the independent oracles");
  verify->add_option("--seed", run.seed, "Seed for sampled checks");
  verify->add_option("--samples", run.samples, "Sample budget per sampled check")->check(CLI::NonNegativeNumber);
  verify->add_option("--threads", run.threads, "Worker threads (default LATCONV_THREADS or all cores)");
  verify->add_option("--report", run.report_path, "Report path (default standard output)");
  verify->add_option("--format", run.format, "Report format")->check(CLI::IsMember({"json", "csv", "text"}));

  latconv::GenerateConfig gen;
  std::vector<std::size_t> dims{1, 1, 1};
  auto* generate = app.add_subcommand("generate", "Write a random scenario");
  generate->add_option("--dims", dims, "dim X,Y,Z")->delimiter(',')->expected(3);
  generate->add_option("--grid-size", gen.grid_size, "Grid points per X axis");
  generate->add_option("--seed", gen.seed, "Seed");
  generate->add_option("--out", gen.out_path, "Output path (default standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  if (*verify) {
    try {
      run.checks = latconv::parse_checks(checks);
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << '\n';
      return 3;
    }
    return latconv::run(run, std::cout, std::cerr);
  }
  gen.dim_x = dims[0];
  gen.dim_y = dims[1];
  gen.dim_z = dims[2];
  return latconv::generate(gen, std::cout, std::cerr);
}
