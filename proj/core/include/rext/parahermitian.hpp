#pragma once

#include <vector>

#include "rext/riemann_extension.hpp"

namespace rext {

/// P in the lift frame: P(d_i) = d_i + (2 omega_k Gamma^k_ji - (b/a) omega_i omega_j) d_j*,
/// P(d_i*) = -d_i*. With b = 0 this is P_1.
Mat p_at(const ConnectionSpec& c, const RExtParams& prm, const CotangentPoint& p);
Mat p_from(const Tensor3& gamma, const Vec& omega, const RExtParams& prm);

/// dP(A, B, C) = d_A P(B, C) in the bundle coordinates.
Tensor3 p_derivative(const ConnectionJet& conn, const Vec& omega, const RExtParams& prm);

struct ApHResidual {
  double square = 0.0;          // max |P^2 - Id|
  int rank_plus = 0;            // dim ker(P - Id)
  int rank_minus = 0;           // dim ker(P + Id)
  double anti_isometry = 0.0;   // max |P^T G P + G|
  double fundamental_form = 0.0;  // max |GP + (GP)^T|
};

/// Pointwise almost para-Hermitian residuals of a (G, P) pair.
ApHResidual aph_residual(const Mat& G, const Mat& P);

struct ApHReport {
  ApHResidual worst;
  double tolerance = 0.0;
  bool pass = false;
};

/// Worst residuals over `pts`; passes when every residual is within `tol`
/// and every eigenrank pair is (n, n).
ApHReport check_apH(const ConnectionSpec& c, const RExtParams& prm, const std::vector<CotangentPoint>& pts,
                    double tol = 1e-10);
/// Same check on precomputed (G, P) pairs, for externally supplied structures.
ApHReport check_apH(const std::vector<std::pair<Mat, Mat>>& pairs, int n, double tol = 1e-10);

/// A complete lift X^C or a vertical lift alpha^V, carried as base jets.
struct LiftArg {
  enum class Kind { Complete, Vertical };
  Kind kind = Kind::Complete;
  VectorJet field;
  CovectorJet form;

  static LiftArg complete(VectorJet X);
  static LiftArg vertical(CovectorJet alpha);
  bool is_complete() const { return kind == Kind::Complete; }
  LiftVector at(const CotangentPoint& p) const;
};

/// (nabla_A P)^B_C = d_A P^B_C + Gbar^B_AD P^D_C - P^B_D Gbar^D_AC.
Tensor3 nabla_p_coords(const AmbientPoint& q, const Tensor3& gbar);

/// Fbar(A, B, C) = G_CD (nabla_A P)^D_B over the coordinate frame.
Tensor3 fbar_coords(const AmbientPoint& q);

/// Fbar = g(nabla_X(PY) - P(nabla_X Y), Z) through the closed lift formulas.
double fbar_direct(const AmbientPoint& q, const LiftArg& X, const LiftArg& Y, const LiftArg& Z);

/// 2a omega(R(Z, Y) X) on three complete lifts, 0 otherwise.
double fbar_closed(const AmbientPoint& q, const LiftArg& X, const LiftArg& Y, const LiftArg& Z);

/// The closed form on arbitrary tangent vectors; only the d_i parts enter.
double fbar_closed(const AmbientPoint& q, const LiftVector& X, const LiftVector& Y, const LiftVector& Z);

/// max |F(A,B,C) + F(B,C,A) + F(C,A,B)| over frame triples.
double cyclic_residual(const Tensor3& F);

struct CyclicReport {
  double max_fbar = 0.0;
  double max_cyclic = 0.0;
  double tolerance = 0.0;
  bool para_kahler = false;         // Fbar within tol at every sample
  bool almost_para_kahler = false;  // cyclic sum within tol at every sample
};

CyclicReport cyclic_check(const ConnectionSpec& c, const RExtParams& prm, const std::vector<CotangentPoint>& pts,
                          double tol = 1e-8);

/// deltaP^B = G^{AC} (nabla_A P)^B_C.
Vec delta_p(const AmbientPoint& q);
Vec delta_p(const ConnectionSpec& c, const RExtParams& prm, const CotangentPoint& p);

}  // namespace rext
