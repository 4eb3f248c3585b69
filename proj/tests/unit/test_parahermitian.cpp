#include <gtest/gtest.h>

#include "rext/parahermitian.hpp"
#include "test_util.hpp"

namespace rext {
namespace {

Vec v2(double a, double b) { return (Vec(2) << a, b).finished(); }

LiftVector apply(const Mat& P, const LiftVector& U) { return LiftVector::from_stacked(P * U.stacked()); }

TEST(ParaStructure, FlatProperExample) {
  const Mat P = p_at(ConnectionSpec::flat(2), {1, 4}, {v2(0, 0), v2(1, 0)});
  const LiftVector d1 = apply(P, LiftVector::from_stacked(Vec::Unit(4, 0)));
  EXPECT_EQ(d1.h, v2(1, 0));
  EXPECT_EQ(d1.v, v2(-4, 0));
  for (int i = 0; i < 2; ++i) EXPECT_EQ(Vec(P * Vec::Unit(4, 2 + i)), Vec(-Vec::Unit(4, 2 + i)));
}

TEST(ParaStructure, ClassicalFlatIsDiagonal) {
  const Mat P = p_at(ConnectionSpec::flat(3), {2, 0}, {Vec::Constant(3, 0.4), Vec::Constant(3, -1.1)});
  Vec d(6);
  d << 1, 1, 1, -1, -1, -1;
  EXPECT_EQ(P, Mat(d.asDiagonal()));
}

TEST(ParaStructure, VerticalEigenvectors) {
  test::Rng rng(1);
  for (const auto& e : catalog()) {
    const int n = e.connection.dim();
    for (int t = 0; t < 10; ++t) {
      const CotangentPoint p = test::random_point(n, rng);
      const Mat P = p_at(e.connection, {1.3, 2.2}, p);
      const LiftVector W = liouville_at(p);
      EXPECT_LE(test::max_abs(Vec((apply(P, W) + W).stacked())), 1e-15);
      const VectorFieldSpec X = VectorFieldSpec::parse(std::vector<std::string>(n, "x1*x2 + 1"), n);
      const LiftVector C = contracted_at(nabla_vf_at(e.connection, X, p.x), p);
      EXPECT_LE(test::max_abs(Vec((apply(P, C) + C).stacked())), 1e-15);
    }
  }
}

TEST(ParaStructure, AlmostParaHermitianOnCatalog) {
  test::Rng rng(2);
  for (const auto& e : catalog()) {
    const auto pts = test::random_points(e.connection.dim(), 100, rng);
    for (const RExtParams prm : {RExtParams{1, 0}, RExtParams{1, 2}, RExtParams{2, -3}}) {
      const ApHReport r = check_apH(e.connection, prm, pts);
      EXPECT_TRUE(r.pass) << e.name;
      EXPECT_EQ(r.worst.rank_plus, e.connection.dim());
      EXPECT_EQ(r.worst.rank_minus, e.connection.dim());
    }
  }
}

TEST(ParaStructure, SignFlippedStructureFails) {
  test::Rng rng(3);
  const CatalogEntry e = poly2();
  std::vector<std::pair<Mat, Mat>> pairs;
  for (int t = 0; t < 20; ++t) {
    const CotangentPoint p = test::random_point(2, rng);
    Mat P = p_at(e.connection, {1, 2}, p);
    P.block(2, 0, 2, 2) *= -1.0;
    pairs.emplace_back(metric_at(e.connection, {1, 2}, p), P);
  }
  const ApHReport r = check_apH(pairs, 2);
  EXPECT_FALSE(r.pass);
  EXPECT_LE(r.worst.square, 1e-12);
  EXPECT_GT(r.worst.anti_isometry, 0.1);
  EXPECT_GT(r.worst.fundamental_form, 0.1);
}

TEST(ParaStructure, DerivativeMatchesFiniteDifferences) {
  const ConnectionSpec c(2, {{{1, 1, 2}, "sin(x1)*x2"}, {{2, 2, 2}, "exp(x1)"}});
  const RExtParams prm{1.2, 0.8};
  test::Rng rng(4);
  const double h = 1e-6;
  for (int t = 0; t < 10; ++t) {
    const CotangentPoint p = test::random_point(2, rng);
    const Tensor3 dP = p_derivative(ConnectionJet::at(c, p.x), p.omega, prm);
    for (int A = 0; A < 4; ++A) {
      Vec zp = p.coords(), zm = p.coords();
      zp(A) += h;
      zm(A) -= h;
      const Mat fd = (p_at(c, prm, CotangentPoint::from_coords(zp)) - p_at(c, prm, CotangentPoint::from_coords(zm))) /
                     (2 * h);
      for (int B = 0; B < 4; ++B)
        for (int C = 0; C < 4; ++C) EXPECT_NEAR(dP(A, B, C), fd(B, C), 1e-8);
    }
  }
}

TEST(Fbar, Poly2HandValue) {
  const AmbientPoint q = AmbientPoint::at(poly2().connection, {1, 0}, {v2(0, 2), v2(1, 0)});
  const LiftArg d1 = LiftArg::complete(VectorJet::constant(v2(1, 0)));
  const LiftArg d2 = LiftArg::complete(VectorJet::constant(v2(0, 1)));
  EXPECT_DOUBLE_EQ(fbar_closed(q, d1, d1, d2), 2.0);
  EXPECT_NEAR(fbar_direct(q, d1, d1, d2), 2.0, 1e-12);
  EXPECT_NEAR(fbar_coords(q)(0, 0, 1), 2.0, 1e-12);
}

TEST(Fbar, FlatIsParaKaehler) {
  test::Rng rng(5);
  const auto pts = test::random_points(2, 50, rng);
  const CyclicReport r = cyclic_check(ConnectionSpec::flat(2), {1, 3}, pts);
  EXPECT_TRUE(r.para_kahler);
  EXPECT_LE(r.max_fbar, 1e-12);
}

TEST(Fbar, CurvedIsAlmostParaKaehlerOnly) {
  test::Rng rng(6);
  for (const auto& e : {poly2(), prod3()}) {
    const auto pts = test::random_points(e.connection.dim(), 50, rng);
    for (const RExtParams prm : {RExtParams{1, 0}, RExtParams{1, 2}, RExtParams{2, 4}}) {
      const CyclicReport r = cyclic_check(e.connection, prm, pts);
      EXPECT_FALSE(r.para_kahler) << e.name;
      EXPECT_TRUE(r.almost_para_kahler) << e.name;
      EXPECT_GT(r.max_fbar, 0.1);
      EXPECT_LE(r.max_cyclic, 1e-9);
    }
  }
}

TEST(Fbar, CyclicNegativeControl) {
  // F(A, B, C) = s(A) t(B, C) with t antisymmetric has a nonzero cyclic sum
  test::Rng rng(7);
  const int N = 4;
  const Vec s = rng.uniform_vec(N, -1, 1);
  const Mat m = rng.uniform_mat(N, N, -1, 1);
  const Mat t = m - m.transpose();
  Tensor3 F = Tensor3::cube(N);
  for (int A = 0; A < N; ++A)
    for (int B = 0; B < N; ++B)
      for (int C = 0; C < N; ++C) F(A, B, C) = s(A) * t(B, C);
  EXPECT_GT(cyclic_residual(F), 0.1);
}

// Three routes to Fbar: Koszul symbols in the coordinate frame, the closed
// lift formula, and the lift covariant derivatives.
TEST(FbarProperty, RoutesAgree) {
  test::Rng rng(8);
  for (const auto& e : catalog()) {
    const int n = e.connection.dim();
    for (const RExtParams prm : {RExtParams{1, 0}, RExtParams{1, 2}, RExtParams{2, 4}}) {
      for (int t = 0; t < 20; ++t) {
        const AmbientPoint q = AmbientPoint::at(e.connection, prm, test::random_point(n, rng));
        const Tensor3 F = fbar_coords(q);
        for (int A = 0; A < 2 * n; ++A)
          for (int B = 0; B < 2 * n; ++B)
            for (int C = 0; C < 2 * n; ++C) {
              const LiftVector ua = LiftVector::from_stacked(Vec::Unit(2 * n, A));
              const LiftVector ub = LiftVector::from_stacked(Vec::Unit(2 * n, B));
              const LiftVector uc = LiftVector::from_stacked(Vec::Unit(2 * n, C));
              EXPECT_NEAR(F(A, B, C), fbar_closed(q, ua, ub, uc), 1e-8);
            }
        auto arg = [&](bool complete) {
          return complete ? LiftArg::complete(cli::random_vector_jet(n, rng))
                          : LiftArg::vertical(cli::random_covector_jet(n, rng));
        };
        for (int mask = 0; mask < 8; ++mask) {
          const LiftArg X = arg(mask & 1), Y = arg(mask & 2), Z = arg(mask & 4);
          EXPECT_NEAR(fbar_direct(q, X, Y, Z), fbar_closed(q, X, Y, Z), 1e-8) << e.name << " mask " << mask;
        }
      }
    }
  }
}

TEST(FbarProperty, VerticalSlotsAndBIndependence) {
  test::Rng rng(9);
  for (const auto& e : catalog()) {
    const int n = e.connection.dim();
    for (int t = 0; t < 20; ++t) {
      const CotangentPoint p = test::random_point(n, rng);
      const Tensor3 F0 = fbar_coords(AmbientPoint::at(e.connection, {1.5, 0}, p));
      const Tensor3 F7 = fbar_coords(AmbientPoint::at(e.connection, {1.5, 7}, p));
      for (int A = 0; A < 2 * n; ++A)
        for (int B = 0; B < 2 * n; ++B)
          for (int C = 0; C < 2 * n; ++C) {
            EXPECT_NEAR(F0(A, B, C), F7(A, B, C), 1e-8);
            if (A >= n || B >= n || C >= n) {
              EXPECT_NEAR(F7(A, B, C), 0.0, 1e-8);
            }
          }
    }
  }
}

TEST(FbarProperty, Symmetries) {
  test::Rng rng(10);
  for (const auto& e : catalog()) {
    const int n = e.connection.dim(), N = 2 * n;
    for (int t = 0; t < 20; ++t) {
      const AmbientPoint q = AmbientPoint::at(e.connection, {1.2, 2.5}, test::random_point(n, rng));
      const Tensor3 F = fbar_coords(q);
      const Mat P = p_from(q.conn.gamma, q.p.omega, q.prm);
      const ApHResidual r = aph_residual(q.G, P);
      EXPECT_LE(r.fundamental_form, 1e-12);
      for (int A = 0; A < N; ++A)
        for (int B = 0; B < N; ++B)
          for (int C = 0; C < N; ++C) {
            EXPECT_NEAR(F(A, B, C), -F(A, C, B), 1e-8);
            double s = 0.0;
            for (int D = 0; D < N; ++D)
              for (int E = 0; E < N; ++E) s += F(A, D, E) * P(D, B) * P(E, C);
            EXPECT_NEAR(s, F(A, B, C), 1e-8);
          }
    }
  }
}

TEST(DeltaP, VanishesOnCatalog) {
  test::Rng rng(11);
  for (const auto& e : catalog()) {
    for (const RExtParams prm : {RExtParams{1, 0}, RExtParams{1, 2}, RExtParams{2, 4}}) {
      for (int t = 0; t < 20; ++t) {
        const Vec d = delta_p(e.connection, prm, test::random_point(e.connection.dim(), rng));
        EXPECT_LE(test::max_abs(d), 1e-9) << e.name;
      }
    }
  }
}

TEST(DeltaP, TraceOfNonzeroDerivative) {
  const AmbientPoint q = AmbientPoint::at(poly2().connection, {1, 2}, {v2(0.3, 0.5), v2(0.7, -0.2)});
  const Tensor3 gb = lc_coords(q);
  const Tensor3 nP = nabla_p_coords(q, gb);
  EXPECT_GT(nP.max_abs(), 0.1);
}

}  // namespace
}  // namespace rext
