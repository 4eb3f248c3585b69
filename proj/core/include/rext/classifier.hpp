#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "rext/tensor.hpp"

namespace rext {

/// A named summand of F, as produced by a known decomposition.
struct ACMPart {
  std::string name;
  Tensor3 F;
};

/// Pointwise almost paracontact metric data in some basis of the tangent
/// space: dimension m = 2 nu + 1, metric g, phi, xibar, eta and
/// F(X,Y,Z) = g((nabla_X phi) Y, Z).
struct ACMSample {
  int m = 0;
  Eigen::MatrixXd g;
  Eigen::MatrixXd phi;
  Eigen::VectorXd xibar;
  Eigen::VectorXd eta;
  Tensor3 F;
  std::vector<ACMPart> parts;

  int nu() const { return (m - 1) / 2; }
  /// Throws std::invalid_argument on inconsistent sizes or even m.
  void validate_shape() const;
};

/// Max residuals of the structure axioms of a sample.
struct SampleResidual {
  double phi_square = 0.0;
  double eta_xibar = 0.0;
  double phi_xibar = 0.0;
  double eta_phi = 0.0;
  double compatibility = 0.0;
  double f_antisymmetry = 0.0;  // F and every part
  int phi_rank = 0;
  double max() const;
};

SampleResidual sample_residual(const ACMSample& s);

/// theta(X) = g^ij F(e_i, e_j, X), theta*(X) = g^ij F(e_i, phi e_j, X),
/// omega_form(X) = F(xibar, xibar, X).
struct ThetaForms {
  Eigen::VectorXd theta;
  Eigen::VectorXd theta_star;
  Eigen::VectorXd omega_form;
};

ThetaForms theta_forms(const ACMSample& s);
ThetaForms theta_forms(const ACMSample& s, const Tensor3& F);

/// Max over basis triples of the defect of the characteristic condition of
/// class G_id (1..12), including its side constraints. Returns nullopt for
/// G1 when m = 3, where its coefficient is undefined.
std::optional<double> class_residual(const ACMSample& s, int id);
std::optional<double> class_residual(const ACMSample& s, const Tensor3& F, int id);

/// |theta(xibar) + (m - 1)|: distance from the G5-bar normalization.
double g5bar_residual(const ACMSample& s);
double g5bar_residual(const ACMSample& s, const Tensor3& F);

struct ClassReport {
  std::array<std::optional<double>, 12> residual{};
  std::array<bool, 12> member{};
  ThetaForms forms;
  double g5bar = 0.0;
  bool g5bar_member = false;  // in G5 and normalized
  double tolerance = 0.0;
};

ClassReport class_report(const ACMSample& s, double tol = 1e-9);
ClassReport class_report(const ACMSample& s, const Tensor3& F, double tol = 1e-9);

enum class Verdict { False, True, Undecidable };
std::string to_string(Verdict v);

/// Least-squares alpha for a template F = alpha T and the max defect.
struct AlphaFit {
  double alpha = 0.0;
  double residual = 0.0;
};

struct PartSummary {
  std::string name;
  double max_abs = 0.0;
  bool zero = false;
  bool g4 = false;
  bool g5 = false;
  bool g5bar = false;
  bool g8 = false;
  bool g10 = false;
};

struct NamedVerdicts {
  Verdict paracontact = Verdict::Undecidable;
  Verdict para_sasakian = Verdict::Undecidable;
  Verdict k_paracontact = Verdict::Undecidable;
  Verdict quasi_para_sasakian = Verdict::Undecidable;
  AlphaFit alpha_para_sasakian;  // F = alpha (g(X,Y) eta(Z) - eta(Y) g(X,Z))
  AlphaFit alpha_para_kenmotsu;  // F = -alpha (g(X,phi Y) eta(Z) + eta(Y) g(phi X,Z))
  bool from_parts = false;
  std::vector<PartSummary> parts;
};

/// Verdicts from the class membership of the sample's parts. Without parts,
/// only what a single class decides is reported; direct-sum verdicts come
/// back Undecidable.
NamedVerdicts named_verdicts(const ACMSample& s, double tol = 1e-9);

struct Dim3Report {
  double g4_part = 0.0;  // largest G4-type part
  double tolerance = 0.0;
  bool pass = false;
};

/// For m = 3: no summand may be a nonzero G4 tensor. Throws for m != 3.
Dim3Report dim3_check(const ACMSample& s, double tol = 1e-9);

}  // namespace rext
