#include "rext_cli/sampling.hpp"

#include <string>

namespace rext::cli {

Rng Rng::stream(std::uint64_t seed, std::uint64_t label) {
  // splitmix64 finalizer over the pair
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (label + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return Rng(z ^ (z >> 31));
}

Vec Rng::uniform(const std::vector<Interval>& box) {
  Vec v(static_cast<Eigen::Index>(box.size()));
  for (std::size_t i = 0; i < box.size(); ++i) v(static_cast<Eigen::Index>(i)) = uniform(box[i].lo, box[i].hi);
  return v;
}

Vec Rng::uniform_vec(int n, double lo, double hi) {
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = uniform(lo, hi);
  return v;
}

Mat Rng::uniform_mat(int rows, int cols, double lo, double hi) {
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = uniform(lo, hi);
  return m;
}

namespace {

template <class Draw>
AmbientSamples collect(int count, Draw&& draw) {
  AmbientSamples out;
  int streak = 0;
  while (static_cast<int>(out.points.size()) < count) {
    if (auto p = draw()) {
      out.points.push_back(std::move(*p));
      streak = 0;
      continue;
    }
    ++out.rejected;
    if (++streak >= kRejectionCap) {
      throw SamplingError("sampling gave up after " + std::to_string(kRejectionCap) +
                          " consecutive rejections; check the sampling boxes");
    }
  }
  return out;
}

}  // namespace

AmbientSamples sample_ambient(const Scenario& s, const RExtParams& prm, int count, Rng& rng) {
  return collect(count, [&]() -> std::optional<CotangentPoint> {
    CotangentPoint p{rng.uniform(s.x_box), rng.uniform(s.omega_box)};
    try {
      const AmbientPoint q = AmbientPoint::at(s.connection, prm, p);
      signature(q.G);
      if (s.xi) VectorJet::at(*s.xi, p.x);
      if (s.f) s.f->f.eval_jet2(p.x);
    } catch (const expr::DomainError&) {
      return std::nullopt;
    } catch (const SingularMetricError&) {
      return std::nullopt;
    }
    return p;
  });
}

AmbientSamples sample_surface(const HypersurfaceSpec& h, const Scenario& s, int count, Rng& rng) {
  return collect(count, [&]() -> std::optional<CotangentPoint> {
    const Vec x = rng.uniform(s.x_box);
    const Vec w = rng.uniform(s.omega_box);
    try {
      CotangentPoint p = project_omega(h, x, w);
      const SurfacePoint sp = SurfacePoint::at(h, p);
      signature(sp.q.G);
      return p;
    } catch (const RejectedSample&) {
    } catch (const expr::DomainError&) {
    } catch (const SingularMetricError&) {
    }
    return std::nullopt;
  });
}

VectorJet random_vector_jet(int n, Rng& rng) {
  VectorJet X{rng.uniform_vec(n, -1.0, 1.0), rng.uniform_mat(n, n, -1.0, 1.0), {}};
  for (int h = 0; h < n; ++h) {
    const Mat A = rng.uniform_mat(n, n, -1.0, 1.0);
    X.d2.push_back(0.5 * (A + A.transpose()));
  }
  return X;
}

CovectorJet random_covector_jet(int n, Rng& rng) {
  return {rng.uniform_vec(n, -1.0, 1.0), rng.uniform_mat(n, n, -1.0, 1.0)};
}

}  // namespace rext::cli
