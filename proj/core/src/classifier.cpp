#include "rext/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/LU>

namespace rext {

using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

// Helper views of a (0,3) tensor in the sample basis.
struct Contractions {
  int m;
  const Tensor3& F;
  Tensor3 phiphi;    // F(phi e_i, phi e_j, e_k)
  MatrixXd xi1;      // F(xibar, e_j, e_k)
  MatrixXd xi2;      // F(e_i, xibar, e_k)
  MatrixXd xi3;      // F(e_i, e_j, xibar)
  MatrixXd xi3phi;   // F(phi e_i, phi e_j, xibar)
  MatrixXd xi1phi;   // F(xibar, phi e_j, phi e_k)
  VectorXd xixi;     // F(xibar, xibar, e_k)

  Contractions(const ACMSample& s, const Tensor3& T) : m(s.m), F(T), phiphi(Tensor3::cube(s.m)) {
    const MatrixXd& phi = s.phi;
    const VectorXd& xb = s.xibar;
    xi1 = xi2 = xi3 = MatrixXd::Zero(m, m);
    xixi = VectorXd::Zero(m);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        for (int c = 0; c < m; ++c) {
          const double f = F(a, b, c);
          xi1(b, c) += xb(a) * f;
          xi2(a, c) += xb(b) * f;
          xi3(a, b) += xb(c) * f;
          xixi(c) += xb(a) * xb(b) * f;
        }
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k) {
          double v = 0.0;
          for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) v += phi(a, i) * phi(b, j) * F(a, b, k);
          phiphi(i, j, k) = v;
        }
    xi3phi = phi.transpose() * xi3 * phi;
    xi1phi = phi.transpose() * xi1 * phi;
  }
};

double max_abs(const MatrixXd& M) { return M.size() ? M.cwiseAbs().maxCoeff() : 0.0; }
double max_abs(const VectorXd& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

MatrixXd inverse_metric(const ACMSample& s) {
  Eigen::FullPivLU<MatrixXd> lu(s.g);
  if (!lu.isInvertible()) throw std::invalid_argument("sample metric is singular");
  return lu.inverse();
}

// Residual of F(X,Y,Z) = -eta(Y) F(X,Z,xibar) + eta(Z) F(X,Y,xibar).
double eta_split_defect(const ACMSample& s, const Contractions& c) {
  double r = 0.0;
  for (int i = 0; i < c.m; ++i)
    for (int j = 0; j < c.m; ++j)
      for (int k = 0; k < c.m; ++k)
        r = std::max(r, std::abs(c.F(i, j, k) + s.eta(j) * c.xi3(i, k) - s.eta(k) * c.xi3(i, j)));
  return r;
}

}  // namespace

void ACMSample::validate_shape() const {
  if (m < 3 || m % 2 == 0) throw std::invalid_argument("sample dimension m must be odd and at least 3");
  const auto M = static_cast<Eigen::Index>(m);
  if (g.rows() != M || g.cols() != M || phi.rows() != M || phi.cols() != M || xibar.size() != M || eta.size() != M)
    throw std::invalid_argument("sample arrays do not match m");
  auto cube_ok = [&](const Tensor3& T) {
    return T.extent(0) == m && T.extent(1) == m && T.extent(2) == m;
  };
  if (!cube_ok(F)) throw std::invalid_argument("sample tensor F does not match m");
  for (const auto& p : parts)
    if (!cube_ok(p.F)) throw std::invalid_argument("sample part '" + p.name + "' does not match m");
}

double SampleResidual::max() const {
  return std::max({phi_square, eta_xibar, phi_xibar, eta_phi, compatibility, f_antisymmetry});
}

SampleResidual sample_residual(const ACMSample& s) {
  s.validate_shape();
  const int m = s.m;
  const MatrixXd I = MatrixXd::Identity(m, m);
  SampleResidual r;
  r.phi_square = max_abs(MatrixXd(s.phi * s.phi - I + s.xibar * s.eta.transpose()));
  r.eta_xibar = std::abs(s.eta.dot(s.xibar) - 1.0);
  r.phi_xibar = max_abs(VectorXd(s.phi * s.xibar));
  r.eta_phi = max_abs(VectorXd(s.phi.transpose() * s.eta));
  r.compatibility = max_abs(MatrixXd(s.phi.transpose() * s.g * s.phi + s.g - s.eta * s.eta.transpose()));
  Eigen::FullPivLU<MatrixXd> lu(s.phi);
  lu.setThreshold(1e-10);
  r.phi_rank = static_cast<int>(lu.rank());
  auto antisym = [&](const Tensor3& T) {
    double a = 0.0;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k) a = std::max(a, std::abs(T(i, j, k) + T(i, k, j)));
    return a;
  };
  r.f_antisymmetry = antisym(s.F);
  for (const auto& p : s.parts) r.f_antisymmetry = std::max(r.f_antisymmetry, antisym(p.F));
  return r;
}

ThetaForms theta_forms(const ACMSample& s, const Tensor3& F) {
  const int m = s.m;
  const MatrixXd gi = inverse_metric(s);
  ThetaForms t{VectorXd::Zero(m), VectorXd::Zero(m), VectorXd::Zero(m)};
  for (int k = 0; k < m; ++k) {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        t.theta(k) += gi(i, j) * F(i, j, k);
        double fphi = 0.0;  // F(e_i, phi e_j, e_k)
        for (int b = 0; b < m; ++b) fphi += s.phi(b, j) * F(i, b, k);
        t.theta_star(k) += gi(i, j) * fphi;
        t.omega_form(k) += s.xibar(i) * s.xibar(j) * F(i, j, k);
      }
  }
  return t;
}

ThetaForms theta_forms(const ACMSample& s) { return theta_forms(s, s.F); }

std::optional<double> class_residual(const ACMSample& s, const Tensor3& F, int id) {
  if (id < 1 || id > 12) throw std::invalid_argument("class id must be in 1..12");
  s.validate_shape();
  const int m = s.m;
  const int nu = s.nu();
  if (id == 1 && nu == 1) return std::nullopt;

  const Contractions c(s, F);
  const ThetaForms tf = theta_forms(s, F);
  const MatrixXd& g = s.g;
  const MatrixXd gphi = g * s.phi;                            // g(e_i, phi e_j)
  const MatrixXd phigphi = s.phi.transpose() * g * s.phi;     // g(phi e_i, phi e_j)
  const VectorXd& eta = s.eta;
  const double th_xi = tf.theta.dot(s.xibar);
  const double ths_xi = tf.theta_star.dot(s.xibar);

  double r = 0.0;
  auto up = [&r](double v) { r = std::max(r, std::abs(v)); };
  auto each = [m](auto&& fn) {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k) fn(i, j, k);
  };

  switch (id) {
    case 1: {
      const VectorXd th_phi = s.phi.transpose() * tf.theta;
      const VectorXd th_phi2 = (s.phi * s.phi).transpose() * tf.theta;
      const double coef = 1.0 / (2.0 * (nu - 1));
      each([&](int i, int j, int k) {
        const double rhs = coef * (gphi(i, j) * th_phi(k) - gphi(i, k) * th_phi(j) - phigphi(i, j) * th_phi2(k) +
                                   phigphi(i, k) * th_phi2(j));
        up(F(i, j, k) - rhs);
      });
      break;
    }
    case 2:
      each([&](int i, int j, int k) { up(c.phiphi(i, j, k) + F(i, j, k)); });
      up(max_abs(tf.theta));
      break;
    case 3:
      up(max_abs(c.xi1));
      up(max_abs(c.xi2));
      each([&](int i, int j, int k) { up(F(i, j, k) + F(j, i, k)); });
      break;
    case 4:
      up(max_abs(c.xi1));
      up(max_abs(c.xi2));
      each([&](int i, int j, int k) { up(F(i, j, k) + F(j, k, i) + F(k, i, j)); });
      break;
    case 5:
      each([&](int i, int j, int k) {
        up(F(i, j, k) - th_xi / (2.0 * nu) * (eta(j) * phigphi(i, k) - eta(k) * phigphi(i, j)));
      });
      break;
    case 6:
      each([&](int i, int j, int k) {
        up(F(i, j, k) + ths_xi / (2.0 * nu) * (eta(j) * gphi(i, k) - eta(k) * gphi(i, j)));
      });
      break;
    case 7:
    case 8:
    case 9:
    case 10: {
      up(eta_split_defect(s, c));
      // Sign pattern of F(X,Y,xibar) = s1 F(Y,X,xibar) = s2 F(phi X, phi Y, xibar).
      const double s1 = (id == 7 || id == 9) ? -1.0 : 1.0;
      const double s2 = (id == 7 || id == 8) ? -1.0 : 1.0;
      up(max_abs(MatrixXd(c.xi3 - s1 * c.xi3.transpose())));
      up(max_abs(MatrixXd(c.xi3 - s2 * c.xi3phi)));
      if (id == 7) up(ths_xi);
      if (id == 8) up(th_xi);
      break;
    }
    case 11:
      each([&](int i, int j, int k) { up(F(i, j, k) - eta(i) * c.xi1phi(j, k)); });
      break;
    case 12:
      each([&](int i, int j, int k) { up(F(i, j, k) - eta(i) * (eta(j) * c.xixi(k) - eta(k) * c.xixi(j))); });
      break;
    default: break;
  }
  return r;
}

std::optional<double> class_residual(const ACMSample& s, int id) { return class_residual(s, s.F, id); }

double g5bar_residual(const ACMSample& s, const Tensor3& F) {
  return std::abs(theta_forms(s, F).theta.dot(s.xibar) + (s.m - 1));
}

double g5bar_residual(const ACMSample& s) { return g5bar_residual(s, s.F); }

ClassReport class_report(const ACMSample& s, const Tensor3& F, double tol) {
  ClassReport rep;
  rep.tolerance = tol;
  for (int id = 1; id <= 12; ++id) {
    rep.residual[static_cast<std::size_t>(id - 1)] = class_residual(s, F, id);
    const auto& r = rep.residual[static_cast<std::size_t>(id - 1)];
    rep.member[static_cast<std::size_t>(id - 1)] = r.has_value() && *r <= tol;
  }
  rep.forms = theta_forms(s, F);
  rep.g5bar = g5bar_residual(s, F);
  rep.g5bar_member = rep.member[4] && rep.g5bar <= tol;
  return rep;
}

ClassReport class_report(const ACMSample& s, double tol) { return class_report(s, s.F, tol); }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Undecidable: return "undecidable without projections";
  }
  return "";
}

namespace {

PartSummary summarize(const ACMSample& s, const std::string& name, const Tensor3& F, double tol) {
  PartSummary p;
  p.name = name;
  p.max_abs = F.max_abs();
  p.zero = p.max_abs <= tol;
  const ClassReport rep = class_report(s, F, tol);
  p.g4 = rep.member[3];
  p.g5 = rep.member[4];
  p.g5bar = rep.g5bar_member;
  p.g8 = rep.member[7];
  p.g10 = rep.member[9];
  return p;
}

template <typename Pred>
bool all_nonzero(const std::vector<PartSummary>& parts, Pred pred) {
  return std::all_of(parts.begin(), parts.end(), [&](const PartSummary& p) { return p.zero || pred(p); });
}

bool any_g5bar(const std::vector<PartSummary>& parts) {
  return std::any_of(parts.begin(), parts.end(), [](const PartSummary& p) { return !p.zero && p.g5bar; });
}

AlphaFit fit_alpha(const ACMSample& s, const Tensor3& T) {
  const int m = s.m;
  double ft = 0.0;
  double tt = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        ft += s.F(i, j, k) * T(i, j, k);
        tt += T(i, j, k) * T(i, j, k);
      }
  AlphaFit fit;
  fit.alpha = tt > 0.0 ? ft / tt : 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) fit.residual = std::max(fit.residual, std::abs(s.F(i, j, k) - fit.alpha * T(i, j, k)));
  return fit;
}

}  // namespace

NamedVerdicts named_verdicts(const ACMSample& s, double tol) {
  s.validate_shape();
  const int m = s.m;
  NamedVerdicts v;
  v.from_parts = !s.parts.empty();
  if (v.from_parts) {
    for (const auto& p : s.parts) v.parts.push_back(summarize(s, p.name, p.F, tol));
  } else {
    v.parts.push_back(summarize(s, "F", s.F, tol));
  }
  const auto& parts = v.parts;

  const bool para = any_g5bar(parts) && all_nonzero(parts, [](const PartSummary& p) { return p.g4 || p.g5bar || p.g10; });
  const bool sasaki = any_g5bar(parts) && all_nonzero(parts, [](const PartSummary& p) { return p.g5bar; });
  const bool kpara = any_g5bar(parts) && all_nonzero(parts, [](const PartSummary& p) { return p.g5bar || p.g4; });
  const bool quasi = all_nonzero(parts, [](const PartSummary& p) { return p.g5 || p.g8; });

  auto decide = [&](bool holds) {
    if (holds) return Verdict::True;
    return v.from_parts ? Verdict::False : Verdict::Undecidable;
  };
  v.paracontact = decide(para);
  v.para_sasakian = sasaki ? Verdict::True : Verdict::False;  // a single class decides it
  v.k_paracontact = decide(kpara);
  v.quasi_para_sasakian = decide(quasi);

  Tensor3 Ts = Tensor3::cube(m);
  Tensor3 Tk = Tensor3::cube(m);
  const MatrixXd gphi = s.g * s.phi;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        Ts(i, j, k) = s.g(i, j) * s.eta(k) - s.eta(j) * s.g(i, k);
        Tk(i, j, k) = -(gphi(i, j) * s.eta(k) + s.eta(j) * gphi(k, i));
      }
  v.alpha_para_sasakian = fit_alpha(s, Ts);
  v.alpha_para_kenmotsu = fit_alpha(s, Tk);
  return v;
}

Dim3Report dim3_check(const ACMSample& s, double tol) {
  if (s.m != 3) throw std::invalid_argument("dim3_check needs m = 3");
  s.validate_shape();
  Dim3Report rep;
  rep.tolerance = tol;
  auto visit = [&](const Tensor3& F) {
    const auto r = class_residual(s, F, 4);
    if (r && *r <= tol) rep.g4_part = std::max(rep.g4_part, F.max_abs());
  };
  if (s.parts.empty()) {
    visit(s.F);
  } else {
    for (const auto& p : s.parts) visit(p.F);
  }
  rep.pass = rep.g4_part <= tol;
  return rep;
}

}  // namespace rext
