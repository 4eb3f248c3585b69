#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rext/hypersurface.hpp"

namespace rext::cli {

/// Bad input: malformed JSON, bad expressions, violated scenario invariants.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Interval {
  double lo = -1.0;
  double hi = 1.0;
};

struct Scenario {
  std::string name;
  int dim = 0;
  ConnectionSpec connection;
  std::optional<VectorFieldSpec> xi;
  std::optional<ScalarFieldSpec> f;
  std::optional<double> t;
  std::vector<RExtParams> params;
  std::uint64_t seed = 0;
  int count = 100;
  std::vector<Interval> x_box;
  std::vector<Interval> omega_box;
  double tol_identity = 1e-9;
  double tol_equivalence = 1e-8;

  bool has_hypersurface_data() const { return xi && f && t; }
  /// Throws InputError unless xi, f, t are present and b > 0.
  HypersurfaceSpec hypersurface(const RExtParams& prm) const;
};

/// Parses scenario JSON. `params` may be one {a, b} object or a list of them.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

std::string read_file(const std::string& path);

}  // namespace rext::cli
