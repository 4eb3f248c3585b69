#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rext/classifier.hpp"
#include "rext_cli/report.hpp"
#include "rext_cli/scenario.hpp"

namespace rext::cli {

/// Command-line overrides of the scenario settings.
struct RunOptions {
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  std::optional<int> points;
};

/// Scenario settings after applying the overrides.
struct Settings {
  std::uint64_t seed = 0;
  int points = 100;
  double identity = 1e-9;
  double equivalence = 1e-8;

  static Settings from(const Scenario& s, const RunOptions& o);
};

void run_validate(const Scenario& s, const Settings& st, Report& out);
void run_para_hermitian(const Scenario& s, const Settings& st, Report& out);
/// Throws InputError when xi, f or t is missing or no params entry has b > 0.
void run_hypersurface(const Scenario& s, const Settings& st, Report& out);
void run_classify(const ACMSample& sample, const Settings& st, Report& out);

/// Runs a scenario subcommand: validate, para-hermitian, hypersurface or all.
Report run_scenario(const std::string& subcommand, const Scenario& s, const std::string& input, const RunOptions& o);
Report run_sample(const ACMSample& sample, const std::string& input, const RunOptions& o);

}  // namespace rext::cli
