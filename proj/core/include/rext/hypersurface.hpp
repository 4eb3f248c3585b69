#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rext/classifier.hpp"
#include "rext/parahermitian.hpp"

namespace rext {

/// Level set f~ = omega(xi) + f = t in T*M, with xi parallel and b > 0.
struct HypersurfaceSpec {
  ConnectionSpec connection;
  RExtParams prm;
  VectorFieldSpec xi;
  ScalarFieldSpec f;
  double t = 0.0;

  /// Throws std::invalid_argument on dimension mismatch, a <= 0 or b <= 0.
  void validate() const;
  int dim() const { return connection.dim(); }
};

/// A sample point that cannot carry the induced structure.
class RejectedSample : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double ftilde(const HypersurfaceSpec& s, const CotangentPoint& p);
bool on_surface(const HypersurfaceSpec& s, const CotangentPoint& p, double tol = 1e-10);

/// Shifts omega along xi / |xi|^2 so that omega(xi) = t - f(x). Rejects when
/// t - f(x) <= 0 (the normal needs omega(xi) > 0) or xi(x) = 0.
CotangentPoint project_omega(const HypersurfaceSpec& s, const Vec& x, const Vec& raw_omega);

/// df~ in bundle coordinates: (d_i f + omega_k d_i xi^k, xi^i).
Vec dftilde(const HypersurfaceSpec& s, const CotangentPoint& p);

/// grad f~ = (1/a){xi^C - (b/a) xi^V W + (df)^V}.
LiftVector grad_ftilde(const HypersurfaceSpec& s, const CotangentPoint& p);

struct Normal {
  LiftVector N;
  /// Set when omega(xi) < 0; N then points along -grad f~.
  bool negative_orientation = false;
};

/// N = {xi^C - (b/a) xi^V W + (df)^V} / (sqrt(b) xi^V). Throws RejectedSample
/// when omega(xi) = 0.
Normal normal_at(const HypersurfaceSpec& s, const CotangentPoint& p);

/// Pointwise data of the hypersurface and its induced structure.
struct SurfacePoint {
  AmbientPoint q;
  VectorJet xi;
  Jet2 f;
  double xiV = 0.0;     // omega(xi)
  Vec df;               // d_i f
  Mat hess_f;           // (nabla df)(i, j)
  Normal normal;
  Mat P;                // ambient P
  LiftVector xibar;     // P N
  Vec eta;              // G xibar, so eta(U) = U . eta
  Mat phi;              // P - N eta^T
  Mat basis;            // 2n x (2n-1) tangent frame, one vector per column

  static SurfacePoint at(const HypersurfaceSpec& s, const CotangentPoint& p);
  int dim() const { return q.dim(); }
  double eta_of(const LiftVector& U) const { return U.stacked().dot(eta); }
  double g(const LiftVector& U, const LiftVector& V) const { return pair(q.G, U, V); }
  LiftVector phi_of(const LiftVector& U) const { return LiftVector::from_stacked(phi * U.stacked()); }
  LiftVector tangent(int i) const { return LiftVector::from_stacked(basis.col(i)); }
};

/// Kernel basis of df~: n-1 vertical lifts alpha^V with alpha(xi) = 0,
/// then n vectors d_i + s xi/|xi|^2 in the vertical slots.
Mat tangent_basis(const HypersurfaceSpec& s, const CotangentPoint& p);

/// The induced structure expressed in the tangent basis.
struct InducedStructure {
  Mat basis;
  Mat g;        // restricted metric
  Mat phi;      // phi in basis coordinates
  Vec xibar;    // xibar in basis coordinates
  Vec eta;      // eta on basis vectors
};

InducedStructure induced_structure_at(const SurfacePoint& sp);

/// Max residuals of the almost paracontact metric axioms on the tangent frame.
struct StructureResidual {
  double phi_square = 0.0;     // phi^2 - Id + eta (x) xibar
  double eta_xibar = 0.0;      // eta(xibar) - 1
  double phi_xibar = 0.0;      // phi xibar
  double eta_phi = 0.0;        // eta o phi
  double compatibility = 0.0;  // g(phi U, phi V) + g(U, V) - eta(U) eta(V)
  double tangency = 0.0;       // df~ of phi U and of xibar
  double eta_is_dual = 0.0;    // eta(U) - g(U, xibar), with eta from its closed form
  double max() const;
};

StructureResidual structure_residual(const HypersurfaceSpec& s, const SurfacePoint& sp);

/// Closed form of eta on a tangent vector: -(2a/(sqrt(b) xi^V)) (h f) + sqrt(b) omega(h).
double eta_closed(const SurfacePoint& sp, const LiftVector& U);

/// Shape operator through the closed lift formula.
LiftVector weingarten_at(const SurfacePoint& sp, const LiftVector& U);
/// Shape operator -nabla_U N from the Koszul symbols and dN.
LiftVector weingarten_coords(const SurfacePoint& sp, const LiftVector& U);

/// dN(B, A) = d_A N^B in bundle coordinates.
Mat normal_derivative(const SurfacePoint& sp);

/// Tensor F~ on a tangent triple, split into its three parts.
struct FtildeParts {
  double curvature = 0.0;        // F'
  double metric = 0.0;           // F''
  double hessian = 0.0;          // F''' with the curvature/Hessian correction
  double hessian_verbatim = 0.0; // F''' from the (Xf)(Zf) terms alone
  double total() const { return curvature + metric + hessian; }
};

FtildeParts ftilde_at(const SurfacePoint& sp, const LiftVector& U, const LiftVector& V, const LiftVector& Z);

/// Fbar(U,V,Z) + eta(V) g(A_N U, Z) - eta(Z) g(A_N U, V).
double ftilde_gauss(const SurfacePoint& sp, const LiftVector& U, const LiftVector& V, const LiftVector& Z);

/// phi-form(U, V) = g(U, phi V).
double phi_form(const SurfacePoint& sp, const LiftVector& U, const LiftVector& V);

/// d eta(U, V) = 1/2 (d_A eta~_B - d_B eta~_A) U^A V^B with eta~ = g(., P N).
Mat d_eta_matrix(const SurfacePoint& sp);
double d_eta_at(const SurfacePoint& sp, const LiftVector& U, const LiftVector& V);

struct ParacontactReport {
  double max_residual = 0.0;   // max |phi-form - d eta| over samples and basis pairs
  double min_ratio = 0.0;      // min over samples of residual / scale (b != 4a^2)
  double scale = 0.0;          // |1 - sqrt(b)/(2a)| * max |phi-form| at the worst sample
  double tolerance = 0.0;
  bool b_is_4a2 = false;
  bool paracontact = false;    // residual within tol everywhere
};

ParacontactReport paracontact_residual(const HypersurfaceSpec& s, const std::vector<CotangentPoint>& pts,
                                       double tol = 1e-8);

/// Complete lift of the linear field X = h + B (y - x), with B adjusted by a
/// rank-one term so that X^C is tangent at p.
VectorJet tangent_field(const SurfacePoint& sp, const Vec& h, const Mat& B);

/// Difference between the displayed closed form of phi X^C and phi from
/// P - eta (x) N, for a tangent complete lift.
double phi_display_gap(const SurfacePoint& sp, const VectorJet& X);

/// Sample for the classifier: g, phi, xibar, eta and F~ in the tangent basis,
/// with the parts "curvature", "metric", "hessian".
ACMSample to_acm_sample(const SurfacePoint& sp);

}  // namespace rext
