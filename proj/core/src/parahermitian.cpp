#include "rext/parahermitian.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/LU>

namespace rext {

Mat p_from(const Tensor3& gamma, const Vec& omega, const RExtParams& prm) {
  const auto n = static_cast<int>(omega.size());
  Mat P = Mat::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    P(i, i) = 1.0;
    P(n + i, n + i) = -1.0;
    for (int j = 0; j < n; ++j) {
      double s = -(prm.b / prm.a) * omega(i) * omega(j);
      for (int k = 0; k < n; ++k) s += 2.0 * omega(k) * gamma(k, j, i);
      P(n + j, i) = s;
    }
  }
  return P;
}

Mat p_at(const ConnectionSpec& c, const RExtParams& prm, const CotangentPoint& p) {
  if (p.dim() != c.dim()) throw std::invalid_argument("point dimension does not match connection");
  return p_from(christoffel_at(c, p.x), p.omega, prm);
}

Tensor3 p_derivative(const ConnectionJet& conn, const Vec& omega, const RExtParams& prm) {
  const int n = conn.dim();
  Tensor3 dP = Tensor3::cube(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        double dx = 0.0;
        for (int k = 0; k < n; ++k) dx += 2.0 * omega(k) * conn.d1(k, j, i, l);
        dP(l, n + j, i) = dx;
        double dw = 2.0 * conn.gamma(l, j, i);
        if (i == l) dw -= (prm.b / prm.a) * omega(j);
        if (j == l) dw -= (prm.b / prm.a) * omega(i);
        dP(n + l, n + j, i) = dw;
      }
  return dP;
}

ApHResidual aph_residual(const Mat& G, const Mat& P) {
  const auto N = P.rows();
  const Mat I = Mat::Identity(N, N);
  ApHResidual r;
  r.square = (P * P - I).cwiseAbs().maxCoeff();
  Eigen::FullPivLU<Mat> plus(P - I);
  Eigen::FullPivLU<Mat> minus(P + I);
  plus.setThreshold(1e-10);
  minus.setThreshold(1e-10);
  r.rank_plus = static_cast<int>(N - plus.rank());
  r.rank_minus = static_cast<int>(N - minus.rank());
  r.anti_isometry = (P.transpose() * G * P + G).cwiseAbs().maxCoeff();
  const Mat GP = G * P;
  r.fundamental_form = (GP + GP.transpose()).cwiseAbs().maxCoeff();
  return r;
}

namespace {

void merge_worst(ApHReport& rep, const ApHResidual& r, int n) {
  rep.worst.square = std::max(rep.worst.square, r.square);
  rep.worst.anti_isometry = std::max(rep.worst.anti_isometry, r.anti_isometry);
  rep.worst.fundamental_form = std::max(rep.worst.fundamental_form, r.fundamental_form);
  // Report the first pair of ranks that deviates from (n, n), otherwise (n, n).
  if (rep.worst.rank_plus == n && rep.worst.rank_minus == n) {
    rep.worst.rank_plus = r.rank_plus;
    rep.worst.rank_minus = r.rank_minus;
  }
}

void finish(ApHReport& rep, int n) {
  rep.pass = rep.worst.square <= rep.tolerance && rep.worst.anti_isometry <= rep.tolerance &&
             rep.worst.fundamental_form <= rep.tolerance && rep.worst.rank_plus == n && rep.worst.rank_minus == n;
}

}  // namespace

ApHReport check_apH(const std::vector<std::pair<Mat, Mat>>& pairs, int n, double tol) {
  ApHReport rep;
  rep.tolerance = tol;
  rep.worst.rank_plus = rep.worst.rank_minus = n;
  for (const auto& [G, P] : pairs) merge_worst(rep, aph_residual(G, P), n);
  finish(rep, n);
  return rep;
}

ApHReport check_apH(const ConnectionSpec& c, const RExtParams& prm, const std::vector<CotangentPoint>& pts,
                    double tol) {
  const int n = c.dim();
  ApHReport rep;
  rep.tolerance = tol;
  rep.worst.rank_plus = rep.worst.rank_minus = n;
  for (const auto& p : pts) {
    const Tensor3 gamma = christoffel_at(c, p.x);
    merge_worst(rep, aph_residual(metric_from(gamma, p.omega, prm), p_from(gamma, p.omega, prm)), n);
  }
  finish(rep, n);
  return rep;
}

LiftArg LiftArg::complete(VectorJet X) {
  LiftArg a;
  a.kind = Kind::Complete;
  a.field = std::move(X);
  return a;
}

LiftArg LiftArg::vertical(CovectorJet alpha) {
  LiftArg a;
  a.kind = Kind::Vertical;
  a.form = std::move(alpha);
  return a;
}

LiftVector LiftArg::at(const CotangentPoint& p) const {
  return is_complete() ? complete_lift_at(field, p) : vertical_lift(form.value);
}

Tensor3 nabla_p_coords(const AmbientPoint& q, const Tensor3& gbar) {
  const int N = 2 * q.dim();
  const Mat P = p_from(q.conn.gamma, q.p.omega, q.prm);
  const Tensor3 dP = p_derivative(q.conn, q.p.omega, q.prm);
  Tensor3 out = Tensor3::cube(N);  // out(A, B, C) = (nabla_A P)^B_C
  for (int A = 0; A < N; ++A)
    for (int B = 0; B < N; ++B)
      for (int C = 0; C < N; ++C) {
        double s = dP(A, B, C);
        for (int D = 0; D < N; ++D) s += gbar(B, A, D) * P(D, C) - P(B, D) * gbar(D, A, C);
        out(A, B, C) = s;
      }
  return out;
}

Tensor3 fbar_coords(const AmbientPoint& q) {
  const int N = 2 * q.dim();
  const Tensor3 nP = nabla_p_coords(q, lc_coords(q));
  Tensor3 F = Tensor3::cube(N);
  for (int A = 0; A < N; ++A)
    for (int B = 0; B < N; ++B)
      for (int C = 0; C < N; ++C) {
        double s = 0.0;
        for (int D = 0; D < N; ++D) s += q.G(C, D) * nP(A, D, B);
        F(A, B, C) = s;
      }
  return F;
}

namespace {

LiftVector nabla_lifts(const AmbientPoint& q, const LiftArg& X, const LiftArg& Y) {
  if (X.is_complete()) {
    return Y.is_complete() ? lc_complete_complete(q, X.field, Y.field) : lc_complete_vertical(q, X.field, Y.form);
  }
  return Y.is_complete() ? lc_vertical_complete(q, X.form.value, Y.field) : LiftVector::zero(q.dim());
}

// Row k of nabla Y as a 1-form jet: theta^k_j = d_j Y^k + Gamma^k_jm Y^m.
CovectorJet nabla_row(const ConnectionJet& conn, const VectorJet& Y, int k) {
  const int n = Y.dim();
  CovectorJet th{Vec::Zero(n), Mat::Zero(n, n)};
  for (int j = 0; j < n; ++j) {
    th.value(j) = Y.d1(k, j);
    for (int m = 0; m < n; ++m) th.value(j) += conn.gamma(k, j, m) * Y.value(m);
    for (int i = 0; i < n; ++i) {
      double s = Y.d2[static_cast<std::size_t>(k)](j, i);
      for (int m = 0; m < n; ++m) s += conn.d1(k, j, m, i) * Y.value(m) + conn.gamma(k, j, m) * Y.d1(m, i);
      th.d1(j, i) = s;
    }
  }
  return th;
}

// nabla_X (P Y) with P Y^C = Y^C + 2 sum_k omega_k (theta^k)^V - (b/a) Y^V W.
LiftVector nabla_of_p(const AmbientPoint& q, const LiftArg& X, const LiftArg& Y) {
  const int n = q.dim();
  if (!Y.is_complete()) return -1.0 * nabla_lifts(q, X, Y);

  const Vec& w = q.p.omega;
  const double ba = q.prm.b / q.prm.a;
  const VectorJet& Yj = Y.field;
  const double YV = w.dot(Yj.value);
  LiftVector out = nabla_lifts(q, X, Y);
  if (X.is_complete()) {
    const VectorJet& Xj = X.field;
    const Vec dw = -(Xj.d1.transpose() * w);  // X^C(omega_k)
    for (int k = 0; k < n; ++k) {
      const CovectorJet th = nabla_row(q.conn, Yj, k);
      out += 2.0 * dw(k) * vertical_lift(th.value);
      out += 2.0 * w(k) * lc_complete_vertical(q, Xj, th);
    }
    const double XYV = w.dot(lie_bracket(Xj, Yj));  // X^C(Y^V)
    out -= ba * (XYV * liouville_at(q.p) + YV * lc_complete_liouville(q, Xj));
  } else {
    const Vec& alpha = X.form.value;
    for (int k = 0; k < n; ++k) out += 2.0 * alpha(k) * vertical_lift(nabla_row(q.conn, Yj, k).value);
    out -= ba * (alpha.dot(Yj.value) * liouville_at(q.p) + YV * vertical_lift(alpha));
  }
  return out;
}

}  // namespace

double fbar_direct(const AmbientPoint& q, const LiftArg& X, const LiftArg& Y, const LiftArg& Z) {
  const Mat P = p_from(q.conn.gamma, q.p.omega, q.prm);
  const Vec lhs = nabla_of_p(q, X, Y).stacked() - P * nabla_lifts(q, X, Y).stacked();
  return lhs.dot(q.G * Z.at(q.p).stacked());
}

double fbar_closed(const AmbientPoint& q, const LiftVector& X, const LiftVector& Y, const LiftVector& Z) {
  const int n = q.dim();
  double s = 0.0;
  for (int l = 0; l < n; ++l)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) s += q.p.omega(l) * q.R(l, i, j, k) * Z.h(i) * Y.h(j) * X.h(k);
  return 2.0 * q.prm.a * s;
}

double fbar_closed(const AmbientPoint& q, const LiftArg& X, const LiftArg& Y, const LiftArg& Z) {
  if (!X.is_complete() || !Y.is_complete() || !Z.is_complete()) return 0.0;
  return fbar_closed(q, X.at(q.p), Y.at(q.p), Z.at(q.p));
}

double cyclic_residual(const Tensor3& F) {
  const int N = F.extent(0);
  double r = 0.0;
  for (int A = 0; A < N; ++A)
    for (int B = 0; B < N; ++B)
      for (int C = 0; C < N; ++C) r = std::max(r, std::abs(F(A, B, C) + F(B, C, A) + F(C, A, B)));
  return r;
}

CyclicReport cyclic_check(const ConnectionSpec& c, const RExtParams& prm, const std::vector<CotangentPoint>& pts,
                          double tol) {
  CyclicReport rep;
  rep.tolerance = tol;
  for (const auto& p : pts) {
    const Tensor3 F = fbar_coords(AmbientPoint::at(c, prm, p));
    rep.max_fbar = std::max(rep.max_fbar, F.max_abs());
    rep.max_cyclic = std::max(rep.max_cyclic, cyclic_residual(F));
  }
  rep.para_kahler = rep.max_fbar <= tol;
  rep.almost_para_kahler = rep.max_cyclic <= tol;
  return rep;
}

Vec delta_p(const AmbientPoint& q) {
  const int N = 2 * q.dim();
  Eigen::FullPivLU<Mat> lu(q.G);
  if (!lu.isInvertible()) throw SingularMetricError("metric is singular");
  const Mat Ginv = lu.inverse();
  const Tensor3 nP = nabla_p_coords(q, lc_coords(q));
  Vec d = Vec::Zero(N);
  for (int B = 0; B < N; ++B)
    for (int A = 0; A < N; ++A)
      for (int C = 0; C < N; ++C) d(B) += Ginv(A, C) * nP(A, B, C);
  return d;
}

Vec delta_p(const ConnectionSpec& c, const RExtParams& prm, const CotangentPoint& p) {
  return delta_p(AmbientPoint::at(c, prm, p));
}

}  // namespace rext
