#pragma once

#include <string>

#include "rext/classifier.hpp"

namespace rext::cli {

/// JSON form of a sample, arrays nested in row-major order:
///   {"m": 3, "g": [[..]], "phi": [[..]], "xibar": [..], "eta": [..],
///    "F": [[[..]]], "parts": {"name": [[[..]]], ...}}
/// phi[i][j] is component i of phi(e_j); F[a][b][c] = F(e_a, e_b, e_c).
/// "parts" may also be a list of {"name", "F"} objects, and is optional.
ACMSample parse_acm_sample(const std::string& text);
ACMSample load_acm_sample(const std::string& path);
std::string acm_sample_to_json(const ACMSample& s);

}  // namespace rext::cli
