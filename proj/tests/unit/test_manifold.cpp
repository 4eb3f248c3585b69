#include <gtest/gtest.h>

#include "rext/manifold.hpp"
#include "test_util.hpp"

namespace rext {
namespace {

Vec v2(double a, double b) { return (Vec(2) << a, b).finished(); }

TEST(Christoffel, Flat) {
  const Tensor3 g = christoffel_at(ConnectionSpec::flat(3), Vec::Constant(3, 0.4));
  EXPECT_EQ(g.max_abs(), 0.0);
}

TEST(Christoffel, Poly2Substitution) {
  const Tensor3 g = christoffel_at(poly2().connection, v2(5, 3));
  EXPECT_EQ(g(0, 0, 0), 3.0);
  Tensor3 rest = g;
  rest(0, 0, 0) = 0.0;
  EXPECT_EQ(rest.max_abs(), 0.0);
}

TEST(Christoffel, MirroredEntries) {
  const ConnectionSpec c(3, {{{1, 2, 3}, "x1*x3"}, {{2, 1, 3}, "sin(x2)"}, {{3, 3, 1}, "x2^2"}});
  test::Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    const Tensor3 g = christoffel_at(c, rng.uniform_vec(3, -1, 1));
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) EXPECT_EQ(g(k, i, j), g(k, j, i));
  }
}

TEST(Christoffel, Validation) {
  EXPECT_THROW(ConnectionSpec(2, {{{1, 1, 3}, "1"}}), std::invalid_argument);
  EXPECT_THROW(ConnectionSpec(2, {{{1, 1, 2}, "x1"}, {{1, 2, 1}, "x2"}}), std::invalid_argument);
  EXPECT_NO_THROW(ConnectionSpec(2, {{{1, 1, 2}, "x1"}, {{1, 2, 1}, "x1"}}));
  EXPECT_THROW(ConnectionSpec(1, {}), std::invalid_argument);
}

TEST(NablaVf, ParallelFields) {
  const VectorFieldSpec c = VectorFieldSpec::parse({"2", "-1"}, 2);
  EXPECT_EQ(test::max_abs(nabla_vf_at(ConnectionSpec::flat(2), c, v2(0.3, 0.2))), 0.0);
  EXPECT_EQ(test::max_abs(nabla_vf_at(poly2().connection, VectorFieldSpec::coordinate(1, 2), v2(0.3, 0.2))), 0.0);
}

TEST(NablaVf, PartialDerivatives) {
  const VectorFieldSpec X = VectorFieldSpec::parse({"x1*x2", "0"}, 2);
  const Mat M = nabla_vf_at(ConnectionSpec::flat(2), X, v2(1.5, -2));
  EXPECT_EQ(M(0, 0), -2.0);
  EXPECT_EQ(M(0, 1), 1.5);
  EXPECT_EQ(M(1, 0), 0.0);
  EXPECT_EQ(M(1, 1), 0.0);
}

TEST(Curvature, Flat) { EXPECT_EQ(curvature_at(ConnectionSpec::flat(2), v2(1, 2)).max_abs(), 0.0); }

TEST(Curvature, Poly2) {
  test::Rng rng(5);
  for (int t = 0; t < 5; ++t) {
    const Tensor4 R = curvature_at(poly2().connection, rng.uniform_vec(2, -3, 3));
    // R(d1, d2) d1 = -d1
    EXPECT_DOUBLE_EQ(R(0, 0, 1, 0), -1.0);
    EXPECT_DOUBLE_EQ(R(1, 0, 1, 0), 0.0);
    EXPECT_DOUBLE_EQ(R(0, 1, 0, 0), 1.0);
  }
}

TEST(Curvature, IdentitiesOnCatalog) {
  test::Rng rng(7);
  for (const auto& e : catalog()) {
    for (int t = 0; t < 100; ++t) {
      const auto r = curvature_identities(curvature_at(e.connection, rng.uniform_vec(e.connection.dim(), -1, 1)));
      EXPECT_LE(r.antisymmetry, 1e-10) << e.name;
      EXPECT_LE(r.bianchi, 1e-10) << e.name;
    }
  }
}

TEST(Curvature, IdentitiesOnRandomConnection) {
  const ConnectionSpec c(3, {{{1, 1, 2}, "sin(x3)"}, {{2, 3, 3}, "x1*x2"}, {{3, 1, 1}, "exp(x2)"}, {{1, 3, 3}, "x2^2"}});
  test::Rng rng(9);
  for (int t = 0; t < 50; ++t) {
    const auto r = curvature_identities(curvature_at(c, rng.uniform_vec(3, -1, 1)));
    EXPECT_LE(r.antisymmetry, 1e-10);
    EXPECT_LE(r.bianchi, 1e-10);
  }
}

TEST(Curvature, Prod3NonzeroAndXiParallel) {
  const CatalogEntry e = prod3();
  test::Rng rng(11);
  std::vector<Vec> pts;
  for (int t = 0; t < 20; ++t) pts.push_back(rng.uniform_vec(3, -1, 1));
  EXPECT_GT(curvature_at(e.connection, pts.front()).max_abs(), 0.1);
  EXPECT_TRUE(check_parallel(e.connection, e.xi, pts).pass);
}

TEST(Parallel, Catalog) {
  test::Rng rng(13);
  std::vector<Vec> pts;
  for (int t = 0; t < 20; ++t) pts.push_back(rng.uniform_vec(2, -1, 1));
  EXPECT_TRUE(check_parallel(flat2().connection, flat2().xi, pts).pass);
  EXPECT_TRUE(check_parallel(poly2().connection, VectorFieldSpec::coordinate(1, 2), pts).pass);
  const ParallelReport bad = check_parallel(poly2().connection, VectorFieldSpec::coordinate(0, 2), pts);
  EXPECT_FALSE(bad.pass);
  EXPECT_GT(bad.max_residual, 0.1);
  EXPECT_THROW(check_parallel(flat2().connection, flat2().xi, {}), std::invalid_argument);
}

TEST(NablaDf, Examples) {
  EXPECT_EQ(test::max_abs(nabla_df_at(poly2().connection, ScalarFieldSpec::parse("4", 2), v2(1, 2))), 0.0);
  const Mat H = nabla_df_at(ConnectionSpec::flat(2), ScalarFieldSpec::parse("x1*x2", 2), v2(0.5, 0.7));
  EXPECT_EQ(H(0, 0), 0.0);
  EXPECT_EQ(H(0, 1), 1.0);
  EXPECT_EQ(H(1, 0), 1.0);
  EXPECT_EQ(H(1, 1), 0.0);
  // POLY2: (nabla df)_11 = d1 d1 f - x2 d1 f
  const Mat P = nabla_df_at(poly2().connection, ScalarFieldSpec::parse("x1^2", 2), v2(0.5, 3));
  EXPECT_DOUBLE_EQ(P(0, 0), 2.0 - 3.0 * 1.0);
}

TEST(NablaDf, Symmetric) {
  const ConnectionSpec c(3, {{{1, 1, 2}, "sin(x3)"}, {{2, 3, 3}, "x1*x2"}, {{3, 1, 2}, "exp(x2)"}});
  const ScalarFieldSpec f = ScalarFieldSpec::parse("x1*x2*x3 + sin(x1 - x3)", 3);
  test::Rng rng(17);
  for (int t = 0; t < 20; ++t) {
    const Mat H = nabla_df_at(c, f, rng.uniform_vec(3, -1, 1));
    EXPECT_LE(test::max_abs(Mat(H - H.transpose())), 1e-12);
  }
}

}  // namespace
}  // namespace rext
