#pragma once

#include <stdexcept>

#include "rext/lifts.hpp"

namespace rext {

/// Coefficients of the natural Riemann extension. a > 0; b != 0 is the
/// proper case, b = 0 the classical one.
struct RExtParams {
  double a = 1.0;
  double b = 0.0;

  void validate() const;
  bool proper() const { return b != 0.0; }
};

class SingularMetricError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Metric components in the frame (d_1..d_n, d_1*..d_n*):
///   G_ij = -2a omega_k Gamma^k_ij + b omega_i omega_j,  G_{i j*} = a delta_ij,  G_{i* j*} = 0.
Mat metric_at(const ConnectionSpec& c, const RExtParams& prm, const CotangentPoint& p);
Mat metric_from(const Tensor3& gamma, const Vec& omega, const RExtParams& prm);

/// dG(C, A, B) = d_C G_AB in the bundle coordinates (x, omega).
Tensor3 metric_derivative(const ConnectionJet& conn, const Vec& omega, const RExtParams& prm);

/// g(U, V) for a metric matrix in the lift frame.
double pair(const Mat& G, const LiftVector& U, const LiftVector& V);

struct Signature {
  int positive = 0;
  int negative = 0;
};

/// Eigenvalue sign counts. Throws SingularMetricError when the smallest
/// |eigenvalue| is below 1e-12 times the largest.
Signature signature(const Mat& G);

/// Everything the lift formulas need at one point of T*M.
struct AmbientPoint {
  CotangentPoint p;
  RExtParams prm;
  ConnectionJet conn;
  Tensor4 R;
  Mat G;

  static AmbientPoint at(const ConnectionSpec& c, const RExtParams& prm, const CotangentPoint& p);
  int dim() const { return p.dim(); }
};

/// Christoffel symbols Gbar(A, B, C) of the 2n-dimensional metric from the
/// Koszul formula. Throws SingularMetricError.
Tensor3 lc_coords(const AmbientPoint& q);
Tensor3 lc_coords(const ConnectionSpec& c, const RExtParams& prm, const CotangentPoint& p);

/// (nabla_U V)^B = U^A dV(B, A) + Gbar(B, A, C) U^A V^C, with dV(B, A) = d_A V^B.
Vec covariant_derivative(const Tensor3& gbar, const Vec& U, const Vec& V, const Mat& dV);

/// Covariant derivative of the base field nabla_X Y together with its first
/// derivatives, as a jet (d2 left empty).
VectorJet nabla_jet(const ConnectionJet& conn, const VectorJet& X, const VectorJet& Y);

/// (nabla_X beta)_m = X^i (d_i beta_m - Gamma^k_im beta_k).
Vec nabla_covector(const ConnectionJet& conn, const Vec& X, const CovectorJet& beta);

/// The seven closed-form Levi-Civita cases on lifts.
enum class LcCase {
  CompleteComplete,    // nabla_{X^C} Y^C
  CompleteVertical,    // nabla_{X^C} beta^V
  VerticalComplete,    // nabla_{alpha^V} Y^C
  VerticalVertical,    // nabla_{alpha^V} beta^V
  CompleteLiouville,   // nabla_{X^C} W
  VerticalLiouville,   // nabla_{alpha^V} W
  LiouvilleLiouville,  // nabla_W W
};

/// Base data for lc_lifts; only the fields the case reads must be set.
struct LcInputs {
  VectorJet X;
  VectorJet Y;
  CovectorJet alpha;
  CovectorJet beta;
};

LiftVector lc_lifts(const AmbientPoint& q, LcCase which, const LcInputs& in);

LiftVector lc_complete_complete(const AmbientPoint& q, const VectorJet& X, const VectorJet& Y);
LiftVector lc_complete_vertical(const AmbientPoint& q, const VectorJet& X, const CovectorJet& beta);
LiftVector lc_vertical_complete(const AmbientPoint& q, const Vec& alpha, const VectorJet& Y);
LiftVector lc_complete_liouville(const AmbientPoint& q, const VectorJet& X);
LiftVector lc_vertical_liouville(const AmbientPoint& q, const Vec& alpha);
LiftVector lc_liouville_liouville(const AmbientPoint& q);

}  // namespace rext
