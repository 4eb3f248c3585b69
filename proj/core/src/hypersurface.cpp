#include "rext/hypersurface.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/LU>
#include <Eigen/QR>

namespace rext {

void HypersurfaceSpec::validate() const {
  const int n = connection.dim();
  if (n < 2) throw std::invalid_argument("hypersurface needs a connection of dimension >= 2");
  if (xi.dim() != n) throw std::invalid_argument("xi must have one component per coordinate");
  if (f.dim() != n) throw std::invalid_argument("f must be an expression over the chart coordinates");
  prm.validate();
  if (!(prm.b > 0.0)) throw std::invalid_argument("hypersurface checks need b > 0");
}

namespace {

Vec eval_components(const std::vector<expr::Expression>& c, const Vec& x) {
  Vec v(static_cast<Eigen::Index>(c.size()));
  for (std::size_t i = 0; i < c.size(); ++i) v(static_cast<Eigen::Index>(i)) = c[i].eval(x);
  return v;
}

Jet2 component_jet(const VectorJet& X, int h) {
  Jet2 j(X.value(h), X.dim());
  j.grad = X.d1.row(h).transpose();
  j.hess = X.d2[static_cast<std::size_t>(h)];
  return j;
}

// sum_l omega_l R(l, z, y, x) for base vectors z, y, x.
double omega_r(const AmbientPoint& q, const Vec& z, const Vec& y, const Vec& x) {
  const int n = q.dim();
  double s = 0.0;
  for (int l = 0; l < n; ++l)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) s += q.p.omega(l) * q.R(l, i, j, k) * z(i) * y(j) * x(k);
  return s;
}

}  // namespace

double ftilde(const HypersurfaceSpec& s, const CotangentPoint& p) {
  return p.omega.dot(eval_components(s.xi.components, p.x)) + s.f.f.eval(p.x);
}

bool on_surface(const HypersurfaceSpec& s, const CotangentPoint& p, double tol) {
  return std::abs(ftilde(s, p) - s.t) <= tol;
}

CotangentPoint project_omega(const HypersurfaceSpec& s, const Vec& x, const Vec& raw_omega) {
  const Vec xi = eval_components(s.xi.components, x);
  const double xi2 = xi.squaredNorm();
  if (!(xi2 > 0.0)) throw RejectedSample("xi vanishes at the sample point");
  const double target = s.t - s.f.f.eval(x);
  if (!(target > 0.0)) throw RejectedSample("t - f(x) must be positive");
  return {x, raw_omega + ((target - raw_omega.dot(xi)) / xi2) * xi};
}

Vec dftilde(const HypersurfaceSpec& s, const CotangentPoint& p) {
  const VectorJet xi = VectorJet::at(s.xi, p.x);
  const Jet2 f = s.f.f.eval_jet2(p.x);
  Vec d(2 * p.dim());
  d << f.grad + xi.d1.transpose() * p.omega, xi.value;
  return d;
}

namespace {

LiftVector normal_bracket(const HypersurfaceSpec& s, const VectorJet& xi, const Vec& df, const CotangentPoint& p) {
  const double xiV = p.omega.dot(xi.value);
  LiftVector u = complete_lift_at(xi, p);
  u -= (s.prm.b / s.prm.a) * xiV * liouville_at(p);
  u += vertical_lift(df);
  return u;
}

}  // namespace

LiftVector grad_ftilde(const HypersurfaceSpec& s, const CotangentPoint& p) {
  const VectorJet xi = VectorJet::at(s.xi, p.x);
  const Jet2 f = s.f.f.eval_jet2(p.x);
  return (1.0 / s.prm.a) * normal_bracket(s, xi, f.grad, p);
}

Normal normal_at(const HypersurfaceSpec& s, const CotangentPoint& p) {
  const VectorJet xi = VectorJet::at(s.xi, p.x);
  const Jet2 f = s.f.f.eval_jet2(p.x);
  const double xiV = p.omega.dot(xi.value);
  if (xiV == 0.0) throw RejectedSample("omega(xi) vanishes at the sample point");
  Normal nrm;
  nrm.N = (1.0 / (std::sqrt(s.prm.b) * xiV)) * normal_bracket(s, xi, f.grad, p);
  nrm.negative_orientation = xiV < 0.0;
  return nrm;
}

Mat tangent_basis(const HypersurfaceSpec& s, const CotangentPoint& p) {
  const int n = p.dim();
  const Vec d = dftilde(s, p);
  const Vec xi = d.tail(n);
  const double xi2 = xi.squaredNorm();
  if (!(xi2 > 0.0)) throw RejectedSample("xi vanishes at the sample point");
  Eigen::FullPivLU<Mat> lu(xi.transpose());
  const Mat K = lu.kernel();  // n x (n-1)
  Mat T = Mat::Zero(2 * n, 2 * n - 1);
  T.block(n, 0, n, n - 1) = K;
  for (int i = 0; i < n; ++i) {
    T(i, n - 1 + i) = 1.0;
    T.block(n, n - 1 + i, n, 1) = (-d(i) / xi2) * xi;
  }
  return T;
}

SurfacePoint SurfacePoint::at(const HypersurfaceSpec& s, const CotangentPoint& p) {
  s.validate();
  SurfacePoint sp;
  sp.q = AmbientPoint::at(s.connection, s.prm, p);
  sp.xi = VectorJet::at(s.xi, p.x);
  sp.f = s.f.f.eval_jet2(p.x);
  const int n = p.dim();
  sp.xiV = p.omega.dot(sp.xi.value);
  sp.df = sp.f.grad;
  sp.hess_f = sp.f.hess;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int m = 0; m < n; ++m) sp.hess_f(i, j) -= sp.q.conn.gamma(m, i, j) * sp.df(m);
  sp.normal = normal_at(s, p);
  sp.P = p_from(sp.q.conn.gamma, p.omega, s.prm);
  sp.xibar = LiftVector::from_stacked(sp.P * sp.normal.N.stacked());
  sp.eta = sp.q.G * sp.xibar.stacked();
  sp.phi = sp.P - sp.normal.N.stacked() * sp.eta.transpose();
  sp.basis = tangent_basis(s, p);
  return sp;
}

InducedStructure induced_structure_at(const SurfacePoint& sp) {
  InducedStructure st;
  const Mat& T = sp.basis;
  const auto qr = T.colPivHouseholderQr();
  st.basis = T;
  st.g = T.transpose() * sp.q.G * T;
  st.phi = qr.solve(Mat(sp.phi * T));
  st.xibar = qr.solve(sp.xibar.stacked());
  st.eta = T.transpose() * sp.eta;
  return st;
}

double StructureResidual::max() const {
  return std::max({phi_square, eta_xibar, phi_xibar, eta_phi, compatibility, tangency, eta_is_dual});
}

double eta_closed(const SurfacePoint& sp, const LiftVector& U) {
  const double sb = std::sqrt(sp.q.prm.b);
  return -(2.0 * sp.q.prm.a / (sb * sp.xiV)) * sp.df.dot(U.h) + sb * sp.q.p.omega.dot(U.h);
}

StructureResidual structure_residual(const HypersurfaceSpec& s, const SurfacePoint& sp) {
  const InducedStructure st = induced_structure_at(sp);
  const auto m = st.g.rows();
  const Mat I = Mat::Identity(m, m);
  StructureResidual r;
  r.phi_square = (st.phi * st.phi - I + st.xibar * st.eta.transpose()).cwiseAbs().maxCoeff();
  r.eta_xibar = std::abs(st.eta.dot(st.xibar) - 1.0);
  r.phi_xibar = (st.phi * st.xibar).cwiseAbs().maxCoeff();
  r.eta_phi = (st.phi.transpose() * st.eta).cwiseAbs().maxCoeff();
  r.compatibility = (st.phi.transpose() * st.g * st.phi + st.g - st.eta * st.eta.transpose()).cwiseAbs().maxCoeff();
  const Vec d = dftilde(s, sp.q.p);
  r.tangency = std::max((d.transpose() * sp.phi * sp.basis).cwiseAbs().maxCoeff(), std::abs(d.dot(sp.xibar.stacked())));
  r.tangency = std::max(r.tangency, (sp.phi * sp.basis - sp.basis * st.phi).cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < m; ++i) {
    const LiftVector U = sp.tangent(static_cast<int>(i));
    r.eta_is_dual = std::max(r.eta_is_dual, std::abs(eta_closed(sp, U) - sp.g(U, sp.xibar)));
  }
  return r;
}

LiftVector weingarten_at(const SurfacePoint& sp, const LiftVector& U) {
  const int n = sp.dim();
  const AmbientPoint& q = sp.q;
  const double a = q.prm.a;
  const double sb = std::sqrt(q.prm.b);
  const Vec& X = U.h;
  Mat T = Mat::Zero(n, n);  // Z -> R(Z, xi) X
  for (int l = 0; l < n; ++l)
    for (int m = 0; m < n; ++m)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) T(l, m) += q.R(l, m, j, k) * sp.xi.value(j) * X(k);
  LiftVector out = contracted_at(T, q.p) + vertical_lift(sp.hess_f.transpose() * X);
  out *= -1.0 / (sb * sp.xiV);
  out += (sb / (2.0 * a)) * (U + sp.eta_of(U) * sp.xibar);
  out -= (2.0 * sp.df.dot(X) / (sb * sp.xiV * sp.xiV)) * vertical_lift(sp.df);
  return out;
}

Mat normal_derivative(const SurfacePoint& sp) {
  const int n = sp.dim();
  const int N = 2 * n;
  const AmbientPoint& q = sp.q;
  std::vector<Dual> w;
  std::vector<Dual> xi;
  for (int k = 0; k < n; ++k) {
    w.push_back(Dual::variable(q.p.omega(k), n + k, N));
    xi.push_back(lift_value(component_jet(sp.xi, k), N));
  }
  Dual xiV(0.0, N);
  for (int k = 0; k < n; ++k) xiV += w[static_cast<std::size_t>(k)] * xi[static_cast<std::size_t>(k)];
  const Dual denom = std::sqrt(q.prm.b) * xiV;
  const double ba = q.prm.b / q.prm.a;
  Mat dN(N, N);
  for (int i = 0; i < n; ++i) {
    const Dual h = xi[static_cast<std::size_t>(i)] / denom;
    Dual v = lift_partial(sp.f, i, N) - ba * (xiV * w[static_cast<std::size_t>(i)]);
    for (int k = 0; k < n; ++k) v -= w[static_cast<std::size_t>(k)] * lift_partial(component_jet(sp.xi, k), i, N);
    v = v / denom;
    dN.row(i) = h.grad.transpose();
    dN.row(n + i) = v.grad.transpose();
  }
  return dN;
}

LiftVector weingarten_coords(const SurfacePoint& sp, const LiftVector& U) {
  const Tensor3 gbar = lc_coords(sp.q);
  const Vec d = covariant_derivative(gbar, U.stacked(), sp.normal.N.stacked(), normal_derivative(sp));
  return LiftVector::from_stacked(-d);
}

FtildeParts ftilde_at(const SurfacePoint& sp, const LiftVector& U, const LiftVector& V, const LiftVector& Z) {
  const AmbientPoint& q = sp.q;
  const double a = q.prm.a;
  const double sb = std::sqrt(q.prm.b);
  const double xv = sp.xiV;
  const Vec& X = U.h;
  const Vec& Y = V.h;
  const Vec& Zh = Z.h;
  const Vec& xi = sp.xi.value;
  const double eV = sp.eta_of(V);
  const double eZ = sp.eta_of(Z);

  FtildeParts parts;
  parts.curvature = (2.0 * a / (sb * xv)) *
                    (sb * xv * omega_r(q, Zh, Y, X) - omega_r(q, Zh, xi, X) * eV + omega_r(q, Y, xi, X) * eZ);
  parts.metric = -(sb / (2.0 * a)) * (-eV * sp.g(U, Z) + eZ * sp.g(U, V));
  const double Xf = sp.df.dot(X);
  const double Yf = sp.df.dot(Y);
  const double Zf = sp.df.dot(Zh);
  parts.hessian_verbatim = (2.0 * a / (sb * xv * xv)) * (-Xf * Zf * eV + Xf * Yf * eZ);
  auto S = [&](const Vec& x, const Vec& z) { return omega_r(q, z, xi, x) - x.dot(sp.hess_f * z); };
  parts.hessian = parts.hessian_verbatim + (a / (sb * xv)) * (S(X, Zh) * eV - S(X, Y) * eZ);
  return parts;
}

double ftilde_gauss(const SurfacePoint& sp, const LiftVector& U, const LiftVector& V, const LiftVector& Z) {
  const LiftVector AU = weingarten_coords(sp, U);
  return fbar_closed(sp.q, U, V, Z) + sp.eta_of(V) * sp.g(AU, Z) - sp.eta_of(Z) * sp.g(AU, V);
}

double phi_form(const SurfacePoint& sp, const LiftVector& U, const LiftVector& V) {
  return sp.g(U, sp.phi_of(V));
}

Mat d_eta_matrix(const SurfacePoint& sp) {
  const AmbientPoint& q = sp.q;
  const int N = 2 * sp.dim();
  const Tensor3 dG = metric_derivative(q.conn, q.p.omega, q.prm);
  const Tensor3 dP = p_derivative(q.conn, q.p.omega, q.prm);
  const Mat dN = normal_derivative(sp);
  const Vec Nv = sp.normal.N.stacked();
  const Vec PN = sp.P * Nv;
  const Mat GP = q.G * sp.P;
  Mat D(N, N);  // D(A, B) = d_A eta~_B
  for (int A = 0; A < N; ++A) {
    Mat dGA(N, N);
    Mat dPA(N, N);
    for (int B = 0; B < N; ++B)
      for (int C = 0; C < N; ++C) {
        dGA(B, C) = dG(A, B, C);
        dPA(B, C) = dP(A, B, C);
      }
    D.row(A) = (dGA * PN + q.G * (dPA * Nv) + GP * dN.col(A)).transpose();
  }
  return 0.5 * (D - D.transpose());
}

double d_eta_at(const SurfacePoint& sp, const LiftVector& U, const LiftVector& V) {
  return U.stacked().dot(d_eta_matrix(sp) * V.stacked());
}

ParacontactReport paracontact_residual(const HypersurfaceSpec& s, const std::vector<CotangentPoint>& pts,
                                       double tol) {
  s.validate();
  ParacontactReport rep;
  rep.tolerance = tol;
  const double a = s.prm.a;
  const double sb = std::sqrt(s.prm.b);
  rep.b_is_4a2 = std::abs(s.prm.b - 4.0 * a * a) <= 1e-12 * std::max(1.0, s.prm.b);
  rep.min_ratio = std::numeric_limits<double>::infinity();
  for (const auto& p : pts) {
    const SurfacePoint sp = SurfacePoint::at(s, p);
    const Mat T = sp.basis;
    const Mat phiform = T.transpose() * sp.q.G * sp.phi * T;
    const Mat deta = T.transpose() * d_eta_matrix(sp) * T;
    const double r = (phiform - deta).cwiseAbs().maxCoeff();
    const double scale = std::abs(1.0 - sb / (2.0 * a)) * phiform.cwiseAbs().maxCoeff();
    if (r >= rep.max_residual) {
      rep.max_residual = r;
      rep.scale = scale;
    }
    if (scale > 0.0) rep.min_ratio = std::min(rep.min_ratio, r / scale);
  }
  if (!std::isfinite(rep.min_ratio)) rep.min_ratio = 0.0;
  rep.paracontact = rep.max_residual <= tol;
  return rep;
}

VectorJet tangent_field(const SurfacePoint& sp, const Vec& h, const Mat& B) {
  const int n = sp.dim();
  const Vec& w = sp.q.p.omega;
  const Vec& xi = sp.xi.value;
  VectorJet X{h, B, std::vector<Mat>(static_cast<std::size_t>(n), Mat::Zero(n, n))};
  // df~(X^C) with df~ = (df + omega_k d xi^k, xi).
  const Vec dh = sp.df + sp.xi.d1.transpose() * w;
  const double r = dh.dot(h) - xi.dot(B.transpose() * w);
  X.d1 += (r / (w.squaredNorm() * xi.squaredNorm())) * (w * xi.transpose());
  return X;
}

double phi_display_gap(const SurfacePoint& sp, const VectorJet& X) {
  const AmbientPoint& q = sp.q;
  const double a = q.prm.a;
  const double sb = std::sqrt(q.prm.b);
  const LiftVector XC = complete_lift_at(X, q.p);
  LiftVector display = XC + 2.0 * contracted_at(nabla_matrix(q.conn, X), q.p);
  display -= (2.0 * a / (sb * sp.xiV)) * sp.df.dot(X.value) * liouville_at(q.p);
  display -= (sp.eta_of(XC) / (sb * sp.xiV)) * (complete_lift_at(sp.xi, q.p) + vertical_lift(sp.df));
  return (display.stacked() - sp.phi * XC.stacked()).cwiseAbs().maxCoeff();
}

ACMSample to_acm_sample(const SurfacePoint& sp) {
  const InducedStructure st = induced_structure_at(sp);
  const int m = static_cast<int>(st.g.rows());
  ACMSample s;
  s.m = m;
  s.g = st.g;
  s.phi = st.phi;
  s.xibar = st.xibar;
  s.eta = st.eta;
  Tensor3 F1 = Tensor3::cube(m);
  Tensor3 F2 = Tensor3::cube(m);
  Tensor3 F3 = Tensor3::cube(m);
  std::vector<LiftVector> E;
  for (int i = 0; i < m; ++i) E.push_back(sp.tangent(i));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        const FtildeParts p = ftilde_at(sp, E[static_cast<std::size_t>(i)], E[static_cast<std::size_t>(j)],
                                        E[static_cast<std::size_t>(k)]);
        F1(i, j, k) = p.curvature;
        F2(i, j, k) = p.metric;
        F3(i, j, k) = p.hessian;
      }
  s.F = F1 + F2 + F3;
  s.parts = {{"curvature", F1}, {"metric", F2}, {"hessian", F3}};
  return s;
}

}  // namespace rext
