#include "rext/riemann_extension.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

namespace rext {

void RExtParams::validate() const {
  if (!(a > 0.0) || !std::isfinite(a)) throw std::invalid_argument("parameter a must be positive, got " + std::to_string(a));
  if (!std::isfinite(b)) throw std::invalid_argument("parameter b must be finite");
}

Mat metric_from(const Tensor3& gamma, const Vec& omega, const RExtParams& prm) {
  const auto n = static_cast<int>(omega.size());
  Mat G = Mat::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double s = prm.b * omega(i) * omega(j);
      for (int k = 0; k < n; ++k) s -= 2.0 * prm.a * omega(k) * gamma(k, i, j);
      G(i, j) = G(j, i) = s;
    }
    G(i, n + i) = G(n + i, i) = prm.a;
  }
  return G;
}

Mat metric_at(const ConnectionSpec& c, const RExtParams& prm, const CotangentPoint& p) {
  if (p.dim() != c.dim()) throw std::invalid_argument("point dimension does not match connection");
  return metric_from(christoffel_at(c, p.x), p.omega, prm);
}

Tensor3 metric_derivative(const ConnectionJet& conn, const Vec& omega, const RExtParams& prm) {
  const int n = conn.dim();
  Tensor3 dG = Tensor3::cube(2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int l = 0; l < n; ++l) {
        double dx = 0.0;
        for (int k = 0; k < n; ++k) dx -= 2.0 * prm.a * omega(k) * conn.d1(k, i, j, l);
        dG(l, i, j) = dx;
        double dw = -2.0 * prm.a * conn.gamma(l, i, j);
        if (i == l) dw += prm.b * omega(j);
        if (j == l) dw += prm.b * omega(i);
        dG(n + l, i, j) = dw;
      }
    }
  }
  return dG;
}

double pair(const Mat& G, const LiftVector& U, const LiftVector& V) {
  return U.stacked().dot(G * V.stacked());
}

Signature signature(const Mat& G) {
  Eigen::SelfAdjointEigenSolver<Mat> es(G, Eigen::EigenvaluesOnly);
  const Vec& ev = es.eigenvalues();
  const double scale = ev.cwiseAbs().maxCoeff();
  if (!(scale > 0.0) || ev.cwiseAbs().minCoeff() < 1e-12 * scale) throw SingularMetricError("metric is singular");
  Signature s;
  for (Eigen::Index i = 0; i < ev.size(); ++i) (ev(i) > 0 ? s.positive : s.negative) += 1;
  return s;
}

AmbientPoint AmbientPoint::at(const ConnectionSpec& c, const RExtParams& prm, const CotangentPoint& p) {
  if (p.dim() != c.dim()) throw std::invalid_argument("point dimension does not match connection");
  AmbientPoint q{p, prm, ConnectionJet::at(c, p.x), Tensor4(), Mat()};
  q.R = curvature_from(q.conn);
  q.G = metric_from(q.conn.gamma, p.omega, prm);
  return q;
}

Tensor3 lc_coords(const AmbientPoint& q) {
  const int N = 2 * q.dim();
  Eigen::FullPivLU<Mat> lu(q.G);
  if (!lu.isInvertible()) throw SingularMetricError("metric is singular");
  const Mat Ginv = lu.inverse();
  const Tensor3 dG = metric_derivative(q.conn, q.p.omega, q.prm);
  // First-kind symbols K(D, B, C) = 1/2 (d_B G_DC + d_C G_DB - d_D G_BC).
  Tensor3 K = Tensor3::cube(N);
  for (int D = 0; D < N; ++D)
    for (int B = 0; B < N; ++B)
      for (int C = 0; C < N; ++C) K(D, B, C) = 0.5 * (dG(B, D, C) + dG(C, D, B) - dG(D, B, C));
  Tensor3 gbar = Tensor3::cube(N);
  for (int A = 0; A < N; ++A)
    for (int B = 0; B < N; ++B)
      for (int C = 0; C < N; ++C) {
        double s = 0.0;
        for (int D = 0; D < N; ++D) s += Ginv(A, D) * K(D, B, C);
        gbar(A, B, C) = s;
      }
  return gbar;
}

Tensor3 lc_coords(const ConnectionSpec& c, const RExtParams& prm, const CotangentPoint& p) {
  return lc_coords(AmbientPoint::at(c, prm, p));
}

Vec covariant_derivative(const Tensor3& gbar, const Vec& U, const Vec& V, const Mat& dV) {
  const auto N = U.size();
  Vec out = dV * U;
  for (Eigen::Index B = 0; B < N; ++B)
    for (Eigen::Index A = 0; A < N; ++A)
      for (Eigen::Index C = 0; C < N; ++C) out(B) += gbar(B, A, C) * U(A) * V(C);
  return out;
}

VectorJet nabla_jet(const ConnectionJet& conn, const VectorJet& X, const VectorJet& Y) {
  const int n = X.dim();
  VectorJet Z{Vec::Zero(n), Mat::Zero(n, n), {}};
  for (int h = 0; h < n; ++h) {
    for (int j = 0; j < n; ++j) {
      Z.value(h) += X.value(j) * Y.d1(h, j);
      for (int m = 0; m < n; ++m) Z.value(h) += conn.gamma(h, j, m) * X.value(j) * Y.value(m);
    }
    for (int l = 0; l < n; ++l) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) {
        s += X.d1(j, l) * Y.d1(h, j) + X.value(j) * Y.d2[static_cast<std::size_t>(h)](j, l);
        for (int m = 0; m < n; ++m) {
          s += conn.d1(h, j, m, l) * X.value(j) * Y.value(m);
          s += conn.gamma(h, j, m) * (X.d1(j, l) * Y.value(m) + X.value(j) * Y.d1(m, l));
        }
      }
      Z.d1(h, l) = s;
    }
  }
  return Z;
}

Vec nabla_covector(const ConnectionJet& conn, const Vec& X, const CovectorJet& beta) {
  const auto n = X.size();
  Vec out = beta.d1 * X;
  for (Eigen::Index m = 0; m < n; ++m)
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index k = 0; k < n; ++k) out(m) -= X(i) * conn.gamma(k, i, m) * beta.value(k);
  return out;
}

LiftVector lc_complete_complete(const AmbientPoint& q, const VectorJet& X, const VectorJet& Y) {
  const int n = q.dim();
  const Vec& w = q.p.omega;
  const double a = q.prm.a;
  const double b = q.prm.b;
  const Mat TX = nabla_matrix(q.conn, X);
  const Mat TY = nabla_matrix(q.conn, Y);

  Mat RT = Mat::Zero(n, n);  // Z -> R(Z, X)Y + R(Z, Y)X
  for (int l = 0; l < n; ++l)
    for (int m = 0; m < n; ++m)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          RT(l, m) += q.R(l, m, j, k) * (X.value(j) * Y.value(k) + Y.value(j) * X.value(k));

  LiftVector out = complete_lift_at(nabla_jet(q.conn, X, Y), q.p);
  out += contracted_at(TX * TY + TY * TX, q.p);
  out += contracted_at(RT, q.p);

  const double wX = w.dot(X.value);
  const double wY = w.dot(Y.value);
  const Vec sym = TY * X.value + TX * Y.value;  // nabla_X Y + nabla_Y X
  LiftVector bterm = wY * complete_lift_at(X, q.p) + wX * complete_lift_at(Y, q.p);
  bterm += 2.0 * wY * contracted_at(TX, q.p);
  bterm += 2.0 * wX * contracted_at(TY, q.p);
  bterm += w.dot(sym) * liouville_at(q.p);
  out -= (b / (2.0 * a)) * bterm;
  out += (b * b / (a * a)) * wX * wY * liouville_at(q.p);
  return out;
}

LiftVector lc_complete_vertical(const AmbientPoint& q, const VectorJet& X, const CovectorJet& beta) {
  const Vec& w = q.p.omega;
  const double k = q.prm.b / (2.0 * q.prm.a);
  LiftVector out = vertical_lift(nabla_covector(q.conn, X.value, beta));
  out.v += k * (w.dot(X.value) * beta.value + beta.value.dot(X.value) * w);
  return out;
}

LiftVector lc_vertical_complete(const AmbientPoint& q, const Vec& alpha, const VectorJet& Y) {
  const Vec& w = q.p.omega;
  const double k = q.prm.b / (2.0 * q.prm.a);
  const Mat TY = nabla_matrix(q.conn, Y);
  LiftVector out = vertical_lift(-(TY.transpose() * alpha));
  out.v += k * (w.dot(Y.value) * alpha + alpha.dot(Y.value) * w);
  return out;
}

LiftVector lc_complete_liouville(const AmbientPoint& q, const VectorJet& X) {
  LiftVector out = -1.0 * contracted_at(nabla_matrix(q.conn, X), q.p);
  out += (q.prm.b / q.prm.a) * q.p.omega.dot(X.value) * liouville_at(q.p);
  return out;
}

LiftVector lc_vertical_liouville(const AmbientPoint&, const Vec& alpha) { return vertical_lift(alpha); }

LiftVector lc_liouville_liouville(const AmbientPoint& q) { return liouville_at(q.p); }

LiftVector lc_lifts(const AmbientPoint& q, LcCase which, const LcInputs& in) {
  switch (which) {
    case LcCase::CompleteComplete: return lc_complete_complete(q, in.X, in.Y);
    case LcCase::CompleteVertical: return lc_complete_vertical(q, in.X, in.beta);
    case LcCase::VerticalComplete: return lc_vertical_complete(q, in.alpha.value, in.Y);
    case LcCase::VerticalVertical: return LiftVector::zero(q.dim());
    case LcCase::CompleteLiouville: return lc_complete_liouville(q, in.X);
    case LcCase::VerticalLiouville: return lc_vertical_liouville(q, in.alpha.value);
    case LcCase::LiouvilleLiouville: return lc_liouville_liouville(q);
  }
  return LiftVector::zero(q.dim());
}

}  // namespace rext
