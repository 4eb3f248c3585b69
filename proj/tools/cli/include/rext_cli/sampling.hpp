#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "rext_cli/scenario.hpp"

namespace rext::cli {

/// mt19937_64 with a fixed 53-bit conversion, so streams match across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  /// Independent stream derived from a base seed and a stream label.
  static Rng stream(std::uint64_t seed, std::uint64_t label);

  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  Vec uniform(const std::vector<Interval>& box);
  Vec uniform_vec(int n, double lo, double hi);
  Mat uniform_mat(int rows, int cols, double lo, double hi);

 private:
  std::mt19937_64 eng_;
};

/// Every sampler gives up after this many consecutive rejections.
inline constexpr int kRejectionCap = 1000;

class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AmbientSamples {
  std::vector<CotangentPoint> points;
  int rejected = 0;
};

/// Points of T*M in the scenario boxes where every expression evaluates and
/// the metric is nonsingular.
AmbientSamples sample_ambient(const Scenario& s, const RExtParams& prm, int count, Rng& rng);

/// Points of the level set: x from the box, omega from the box projected onto
/// omega(xi) = t - f(x); rejects omega(xi) <= 0 and singular data.
AmbientSamples sample_surface(const HypersurfaceSpec& h, const Scenario& s, int count, Rng& rng);

/// Random second-order jets of smooth fields, coefficients in [-1, 1].
VectorJet random_vector_jet(int n, Rng& rng);
CovectorJet random_covector_jet(int n, Rng& rng);

}  // namespace rext::cli
