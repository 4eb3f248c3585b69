#include <gtest/gtest.h>

#include "rext/lifts.hpp"
#include "test_util.hpp"

namespace rext {
namespace {

Vec v2(double a, double b) { return (Vec(2) << a, b).finished(); }

TEST(CompleteLift, ConstantField) {
  const CotangentPoint p{v2(0.3, -0.2), v2(1.5, 2)};
  const LiftVector L = complete_lift_at(VectorFieldSpec::coordinate(1, 2), p);
  EXPECT_EQ(L.h, v2(0, 1));
  EXPECT_EQ(L.v, v2(0, 0));
}

TEST(CompleteLift, Substitution) {
  const CotangentPoint p{v2(1, 2), v2(3, 0)};
  const LiftVector L = complete_lift_at(VectorFieldSpec::parse({"x1*x2", "0"}, 2), p);
  EXPECT_EQ(L.h, v2(2, 0));
  EXPECT_EQ(L.v, v2(-6, -3));
}

TEST(CompleteLift, Linear) {
  test::Rng rng(1);
  const VectorFieldSpec X = VectorFieldSpec::parse({"sin(x1)", "x1*x2"}, 2);
  const VectorFieldSpec Y = VectorFieldSpec::parse({"x2^2", "exp(x1)"}, 2);
  const VectorFieldSpec S = VectorFieldSpec::parse({"sin(x1) - 3*x2^2", "x1*x2 - 3*exp(x1)"}, 2);
  for (int t = 0; t < 10; ++t) {
    const CotangentPoint p = test::random_point(2, rng);
    const Vec lhs = complete_lift_at(S, p).stacked();
    const Vec rhs = (complete_lift_at(X, p) - 3.0 * complete_lift_at(Y, p)).stacked();
    EXPECT_LE(test::max_abs(Vec(lhs - rhs)), 1e-14);
  }
}

TEST(VerticalLift, Examples) {
  const CotangentPoint p{v2(1, 5), v2(0.2, 0.1)};
  const LiftVector a = vertical_lift_at(OneFormSpec::coordinate(1, 2), p);
  EXPECT_EQ(a.h, v2(0, 0));
  EXPECT_EQ(a.v, v2(0, 1));
  EXPECT_EQ(vertical_lift_at(OneFormSpec::parse({"x2", "0"}, 2), p).v, v2(5, 0));
}

TEST(Liouville, Examples) {
  EXPECT_EQ(liouville_at({v2(1, 1), v2(0, 0)}).stacked(), Vec::Zero(4));
  const CotangentPoint p{v2(1, 1), v2(3, 4)};
  EXPECT_EQ(liouville_at(p).v, v2(3, 4));
  EXPECT_EQ(liouville_at(p).stacked(), vertical_lift(p.omega).stacked());
}

TEST(Contracted, Examples) {
  const CotangentPoint p{v2(0, 2), v2(1, 0)};
  EXPECT_EQ(contracted_at(Mat::Identity(2, 2), p).stacked(), liouville_at(p).stacked());
  EXPECT_EQ(contracted_at(Mat::Zero(2, 2), p).stacked(), Vec::Zero(4));
  const Mat T = nabla_vf_at(poly2().connection, VectorFieldSpec::coordinate(0, 2), p.x);
  EXPECT_EQ(contracted_at(T, p).v, v2(2, 0));
}

TEST(Evaluation, Examples) {
  EXPECT_EQ(evaluation_fn(VectorFieldSpec::coordinate(0, 2), {v2(0, 0), v2(7, 1)}), 7.0);
  EXPECT_EQ(evaluation_fn(VectorFieldSpec::parse({"0", "0"}, 2), {v2(0, 0), v2(7, 1)}), 0.0);
  test::Rng rng(2);
  const VectorFieldSpec X = VectorFieldSpec::parse({"x1 + x2", "x1*x2"}, 2);
  for (int t = 0; t < 5; ++t) {
    const CotangentPoint p = test::random_point(2, rng);
    const Vec Xv = v2(p.x(0) + p.x(1), p.x(0) * p.x(1));
    EXPECT_NEAR(evaluation_fn(X, p), p.omega.dot(Xv), 1e-15);
  }
}

// X^C acting on the evaluation function Z^V equals [X, Z]^V; both sides use
// finite differences of plain component evaluations.
TEST(CompleteLiftProperty, DerivationOnEvaluationFunctions) {
  test::Rng rng(3);
  const int n = 3;
  const VectorFieldSpec X = VectorFieldSpec::parse({"x2*x3", "sin(x1)", "x1^2 - x3"}, n);
  const VectorFieldSpec Z = VectorFieldSpec::parse({"exp(0.5*x2)", "x1*x3", "cos(x2 + x1)"}, n);
  auto eval = [n](const VectorFieldSpec& F, const Vec& x) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v(i) = F.components[static_cast<std::size_t>(i)].eval(x);
    return v;
  };
  auto jac = [&](const VectorFieldSpec& F, const Vec& x) {  // J(h, i) = d_i F^h
    const double h = 1e-6;
    Mat J(n, n);
    for (int i = 0; i < n; ++i) {
      Vec xp = x, xm = x;
      xp(i) += h;
      xm(i) -= h;
      J.col(i) = (eval(F, xp) - eval(F, xm)) / (2 * h);
    }
    return J;
  };
  for (int t = 0; t < 20; ++t) {
    const CotangentPoint p = test::random_point(n, rng);
    const LiftVector XC = complete_lift_at(X, p);
    const Mat JZ = jac(Z, p.x), JX = jac(X, p.x);
    const double lhs = XC.h.dot(JZ.transpose() * p.omega) + XC.v.dot(eval(Z, p.x));
    const double rhs = p.omega.dot(JZ * eval(X, p.x) - JX * eval(Z, p.x));
    EXPECT_NEAR(lhs, rhs, 1e-8);
    const Vec br = lie_bracket(VectorJet::at(X, p.x), VectorJet::at(Z, p.x));
    EXPECT_LE(test::max_abs(Vec(br - (JZ * eval(X, p.x) - JX * eval(Z, p.x)))), 1e-8);
  }
}

TEST(LiftVectorAlgebra, StackRoundTrip) {
  const LiftVector a{v2(1, 2), v2(3, 4)};
  EXPECT_EQ(LiftVector::from_stacked(a.stacked()).stacked(), a.stacked());
  EXPECT_EQ((a + a).stacked(), (2.0 * a).stacked());
  EXPECT_EQ((a - a).stacked(), LiftVector::zero(2).stacked());
  const CotangentPoint p{v2(1, 2), v2(3, 4)};
  EXPECT_EQ(CotangentPoint::from_coords(p.coords()).omega, p.omega);
}

}  // namespace
}  // namespace rext
