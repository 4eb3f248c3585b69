#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rext/riemann_extension.hpp"

namespace rext::cli {

/// One certified identity: the worst residual over all samples.
struct Check {
  std::string name;
  std::string anchor;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  /// Comparison records are reported but never fail a run.
  bool gating = true;
  std::string note;
};

struct Run {
  std::string suite;
  std::optional<RExtParams> params;
  int accepted = 0;
  int rejected = 0;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, std::string>> verdicts;
  std::vector<std::string> notes;

  /// Records max_residual against tol; pass iff residual <= tol.
  Check& check(std::string name, std::string anchor, double residual, double tol);
  void verdict(std::string name, std::string value) { verdicts.emplace_back(std::move(name), std::move(value)); }
  void verdict(std::string name, const char* value) { verdict(std::move(name), std::string(value)); }
  void verdict(std::string name, bool value) { verdict(std::move(name), std::string(value ? "true" : "false")); }
};

struct Report {
  std::string subcommand;
  std::string input;
  std::string scenario;
  std::uint64_t seed = 0;
  int points = 0;
  double tol_identity = 0.0;
  double tol_equivalence = 0.0;
  std::vector<Run> runs;

  int total_checks() const;
  int failed_checks() const;
  bool pass() const { return failed_checks() == 0; }
};

/// JSON with fixed key order and doubles printed as %.17g.
std::string to_json(const Report& r);
/// Human-readable table.
std::string to_table(const Report& r);

/// %.17g, or null for non-finite values.
std::string format_double(double v);

}  // namespace rext::cli
