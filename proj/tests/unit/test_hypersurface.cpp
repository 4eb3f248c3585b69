#include <gtest/gtest.h>

#include <cmath>

#include <Eigen/LU>

#include "rext/hypersurface.hpp"
#include "test_util.hpp"

namespace rext {
namespace {

Vec v2(double a, double b) { return (Vec(2) << a, b).finished(); }

TEST(Surface, ProjectOmegaExample) {
  const HypersurfaceSpec h = test::surface(flat2(), 1, 4, "0", 2);
  const CotangentPoint p = project_omega(h, v2(0.1, 0.2), v2(5, 1));
  EXPECT_EQ(p.omega, v2(2, 1));
  EXPECT_EQ(p.x, v2(0.1, 0.2));
  EXPECT_TRUE(on_surface(h, p));
}

TEST(Surface, ProjectOmegaRejects) {
  const HypersurfaceSpec h = test::surface(poly2(), 1, 2, "0.25*x1^2", 0.5);
  EXPECT_THROW(project_omega(h, v2(2, 0), v2(0, 0)), RejectedSample);
  EXPECT_NO_THROW(project_omega(h, v2(1, 0), v2(0, 0)));
}

TEST(Surface, Validation) {
  EXPECT_THROW(test::surface(flat2(), 1, 0, "0").validate(), std::invalid_argument);
  EXPECT_THROW(test::surface(flat2(), 1, -1, "0").validate(), std::invalid_argument);
  EXPECT_THROW(test::surface(flat2(), 0, 1, "0").validate(), std::invalid_argument);
  EXPECT_NO_THROW(test::surface(flat2(), 1, 1, "0").validate());
}

TEST(Normal, FlatHandValues) {
  const HypersurfaceSpec h = test::surface(flat2(), 1, 4, "0", 1);
  const CotangentPoint p{v2(0.2, 0.3), v2(1, 0.5)};
  const Normal nrm = normal_at(h, p);
  EXPECT_DOUBLE_EQ(nrm.N.h(0), 0.5);
  EXPECT_DOUBLE_EQ(nrm.N.h(1), 0.0);
  EXPECT_DOUBLE_EQ(nrm.N.v(0), -2.0);
  EXPECT_DOUBLE_EQ(nrm.N.v(1), -1.0);
  EXPECT_FALSE(nrm.negative_orientation);
  EXPECT_DOUBLE_EQ(pair(metric_at(h.connection, h.prm, p), nrm.N, nrm.N), -1.0);
}

TEST(Normal, NegativeOrientationFlag) {
  const HypersurfaceSpec h = test::surface(flat2(), 1, 4, "0", -1);
  EXPECT_TRUE(normal_at(h, {v2(0, 0), v2(-1, 0)}).negative_orientation);
  EXPECT_THROW(normal_at(h, {v2(0, 0), v2(0, 1)}), RejectedSample);
}

TEST(InducedStructure, FlatConstantF) {
  // f = 0: xibar = xi^C / (sqrt(b) omega(xi)) and eta(U) = sqrt(b) omega(U_h)
  const HypersurfaceSpec h = test::surface(flat2(), 1, 4, "0", 1);
  const SurfacePoint sp = SurfacePoint::at(h, {v2(0.2, 0.3), v2(1, 0.5)});
  EXPECT_NEAR(sp.xibar.h(0), 0.5, 1e-15);
  EXPECT_NEAR(sp.xibar.h(1), 0.0, 1e-15);
  EXPECT_LE(test::max_abs(sp.xibar.v), 1e-15);
  for (int i = 0; i < 3; ++i) {
    const LiftVector U = sp.tangent(i);
    EXPECT_NEAR(sp.eta_of(U), 2.0 * sp.q.p.omega.dot(U.h), 1e-14);
  }
}

struct Case {
  CatalogEntry e;
  std::string f;
  double t;
};

std::vector<Case> cases() {
  return {{flat2(), "0", 1.0}, {flat2(), "0.3*x2^2 - x2", 1.5}, {poly2(), "0.25*x1^2", 1.5},
          {prod3(), "0", 1.0}, {prod3(), "0.3*x2*x3", 1.2}};
}

std::vector<RExtParams> params() { return {{1, 1}, {1, 4}, {2, 4}, {0.5, 3}}; }

TEST(SurfaceProperty, GradientAndNormal) {
  test::Rng rng(1);
  for (const auto& c : cases()) {
    for (const RExtParams prm : params()) {
      const HypersurfaceSpec h = test::surface(c.e, prm.a, prm.b, c.f, c.t);
      for (const auto& p : test::surface_points(h, 20, rng)) {
        const SurfacePoint sp = SurfacePoint::at(h, p);
        const Vec d = dftilde(h, p);
        const LiftVector grad = grad_ftilde(h, p);
        EXPECT_LE(test::max_abs(Vec(sp.q.G * grad.stacked() - d)), 1e-10);
        EXPECT_NEAR(sp.g(grad, grad), -prm.b * sp.xiV * sp.xiV / (prm.a * prm.a), 1e-10);
        EXPECT_NEAR(sp.g(sp.normal.N, sp.normal.N), -1.0, 1e-10);
        EXPECT_LE(test::max_abs(Vec(sp.normal.N.stacked() * std::sqrt(prm.b) * sp.xiV / prm.a - grad.stacked())),
                  1e-10);
        EXPECT_LE(test::max_abs(Vec(d.transpose() * sp.basis)), 1e-12);
        Eigen::FullPivLU<Mat> lu(sp.basis);
        EXPECT_EQ(lu.rank(), 2 * h.dim() - 1);
        for (int i = 0; i < h.dim() - 1; ++i) EXPECT_EQ(test::max_abs(Vec(sp.tangent(i).h)), 0.0);
      }
    }
  }
}

TEST(SurfaceProperty, StructureAxioms) {
  test::Rng rng(2);
  for (const auto& c : cases()) {
    for (const RExtParams prm : params()) {
      const HypersurfaceSpec h = test::surface(c.e, prm.a, prm.b, c.f, c.t);
      for (const auto& p : test::surface_points(h, 20, rng)) {
        const SurfacePoint sp = SurfacePoint::at(h, p);
        EXPECT_LE(structure_residual(h, sp).max(), 1e-9) << c.e.name << " " << c.f;
        for (int i = 0; i < 2 * h.dim() - 1; ++i) {
          const LiftVector U = sp.tangent(i);
          EXPECT_NEAR(eta_closed(sp, U), sp.eta_of(U), 1e-10);
        }
      }
    }
  }
}

TEST(SurfaceProperty, ShapeOperator) {
  test::Rng rng(3);
  for (const auto& c : cases()) {
    for (const RExtParams prm : params()) {
      const HypersurfaceSpec h = test::surface(c.e, prm.a, prm.b, c.f, c.t);
      const int m = 2 * h.dim() - 1;
      for (const auto& p : test::surface_points(h, 10, rng)) {
        const SurfacePoint sp = SurfacePoint::at(h, p);
        std::vector<LiftVector> A;
        for (int i = 0; i < m; ++i) {
          const LiftVector U = sp.tangent(i);
          A.push_back(weingarten_at(sp, U));
          EXPECT_LE(test::max_abs(Vec((A.back() - weingarten_coords(sp, U)).stacked())), 1e-8);
          if (i < h.dim() - 1) {
            const Vec expect = std::sqrt(prm.b) / (2 * prm.a) * U.stacked();
            EXPECT_LE(test::max_abs(Vec(A.back().stacked() - expect)), 1e-10);
          }
        }
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j)
            EXPECT_NEAR(sp.g(A[static_cast<std::size_t>(i)], sp.tangent(j)),
                        sp.g(sp.tangent(i), A[static_cast<std::size_t>(j)]), 1e-8);
      }
    }
  }
}

TEST(SurfaceProperty, GaussRouteForFtilde) {
  test::Rng rng(4);
  for (const auto& c : cases()) {
    for (const RExtParams prm : params()) {
      const HypersurfaceSpec h = test::surface(c.e, prm.a, prm.b, c.f, c.t);
      const int m = 2 * h.dim() - 1;
      for (const auto& p : test::surface_points(h, 5, rng)) {
        const SurfacePoint sp = SurfacePoint::at(h, p);
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
              const FtildeParts fp = ftilde_at(sp, sp.tangent(i), sp.tangent(j), sp.tangent(k));
              EXPECT_NEAR(fp.total(), ftilde_gauss(sp, sp.tangent(i), sp.tangent(j), sp.tangent(k)), 1e-8)
                  << c.e.name << " " << c.f;
              if (c.f == "0") {
                EXPECT_EQ(fp.hessian, 0.0);
              }
              if (c.e.name == "FLAT2") {
                EXPECT_EQ(fp.curvature, 0.0);
              }
            }
      }
    }
  }
}

TEST(SurfaceProperty, MetricPartTheta) {
  test::Rng rng(5);
  for (const auto& c : cases()) {
    for (const RExtParams prm : params()) {
      const HypersurfaceSpec h = test::surface(c.e, prm.a, prm.b, c.f, c.t);
      for (const auto& p : test::surface_points(h, 5, rng)) {
        const ACMSample s = to_acm_sample(SurfacePoint::at(h, p));
        ASSERT_EQ(s.parts.size(), 3u);
        EXPECT_EQ(s.parts[1].name, "metric");
        const double th = theta_forms(s, s.parts[1].F).theta.dot(s.xibar);
        EXPECT_NEAR(th, -(h.dim() - 1) * std::sqrt(prm.b) / prm.a, 1e-8);
        EXPECT_LE(sample_residual(s).max(), 1e-9);
      }
    }
  }
}

TEST(Paracontact, HoldsExactlyAtBEqualFourASquared) {
  test::Rng rng(6);
  for (const auto& c : cases()) {
    for (const double a : {1.0, 0.5, 2.0}) {
      const HypersurfaceSpec h = test::surface(c.e, a, 4 * a * a, c.f, c.t);
      const ParacontactReport r = paracontact_residual(h, test::surface_points(h, 20, rng));
      EXPECT_TRUE(r.b_is_4a2);
      EXPECT_TRUE(r.paracontact) << c.e.name << " a=" << a;
      EXPECT_LE(r.max_residual, 1e-8);
    }
  }
}

TEST(Paracontact, FailsOtherwise) {
  test::Rng rng(7);
  for (const auto& c : cases()) {
    for (const RExtParams prm : {RExtParams{1, 1}, RExtParams{1, 9}, RExtParams{2, 4}}) {
      const HypersurfaceSpec h = test::surface(c.e, prm.a, prm.b, c.f, c.t);
      const ParacontactReport r = paracontact_residual(h, test::surface_points(h, 20, rng));
      EXPECT_FALSE(r.b_is_4a2);
      EXPECT_FALSE(r.paracontact);
      EXPECT_GE(r.min_ratio, 0.1);
    }
  }
}

TEST(DEta, Antisymmetric) {
  test::Rng rng(8);
  const HypersurfaceSpec h = test::surface(poly2(), 1, 2, "0.25*x1^2", 1.5);
  for (const auto& p : test::surface_points(h, 10, rng)) {
    const Mat D = d_eta_matrix(SurfacePoint::at(h, p));
    EXPECT_LE(test::max_abs(Mat(D + D.transpose())), 1e-12);
  }
}

}  // namespace
}  // namespace rext
