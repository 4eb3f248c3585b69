#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "rext_cli/acm_io.hpp"
#include "rext_cli/sampling.hpp"
#include "rext_cli/suites.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitInput = 1;
constexpr int kExitFail = 2;

struct Flags {
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  std::optional<int> points;
  std::string json_path;
  bool quiet = false;
  std::string input;
};

CLI::App* add_command(CLI::App& app, const std::string& name, const std::string& help, const std::string& what,
                      Flags& f) {
  CLI::App* sub = app.add_subcommand(name, help);
  sub->add_option("input", f.input, what)->required();
  sub->add_option("--tol", f.tol, "Override both scenario tolerances")->check(CLI::PositiveNumber);
  sub->add_option("--seed", f.seed, "Override the sampling seed");
  sub->add_option("--points", f.points, "Samples per check (default: scenario count, else 100)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--json", f.json_path, "Write the JSON report to this path");
  sub->add_flag("--quiet", f.quiet, "Do not print the table");
  return sub;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks for natural Riemann extensions and their level-set hypersurfaces"};
  app.require_subcommand(1);
  Flags f;
  const std::string scenario_help = "Scenario JSON file";
  add_command(app, "validate", "Check scenario invariants and parallelism of xi", scenario_help, f);
  add_command(app, "para-hermitian", "Metric, connection and para-Hermitian checks", scenario_help, f);
  add_command(app, "hypersurface", "Level-set hypersurface and class checks", scenario_help, f);
  add_command(app, "classify", "Classify an almost paracontact metric sample", "Sample JSON file", f);
  add_command(app, "all", "Run validate, para-hermitian and hypersurface", scenario_help, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }
  const std::string sub = app.get_subcommands().front()->get_name();

  rext::cli::Report report;
  try {
    const rext::cli::RunOptions opts{f.tol, f.seed, f.points};
    if (sub == "classify") {
      report = rext::cli::run_sample(rext::cli::load_acm_sample(f.input), f.input, opts);
    } else {
      report = rext::cli::run_scenario(sub, rext::cli::load_scenario(f.input), f.input, opts);
    }
  } catch (const rext::cli::InputError& e) {
    std::cerr << "rext: input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const rext::cli::SamplingError& e) {
    std::cerr << "rext: input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "rext: input error: " << e.what() << "\n";
    return kExitInput;
  }

  if (!f.json_path.empty()) {
    std::ofstream out(f.json_path, std::ios::binary);
    if (!out) {
      std::cerr << "rext: cannot write " << f.json_path << "\n";
      return kExitInput;
    }
    out << rext::cli::to_json(report);
  }
  if (!f.quiet) std::cout << rext::cli::to_table(report);
  return report.pass() ? kExitPass : kExitFail;
}
