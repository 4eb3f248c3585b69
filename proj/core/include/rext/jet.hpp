#pragma once

#include <Eigen/Core>

namespace rext {

/// Second-order forward-mode jet: value, gradient and Hessian of a scalar
/// with respect to `dim` independent variables.
///
/// Updates write symmetric terms; Expression::eval_jet2 symmetrizes the
/// final Hessian so rounding cannot leave it one-sided.
struct Jet2 {
  double value = 0.0;
  Eigen::VectorXd grad;
  Eigen::MatrixXd hess;

  Jet2() = default;
  Jet2(double v, int dim) : value(v), grad(Eigen::VectorXd::Zero(dim)), hess(Eigen::MatrixXd::Zero(dim, dim)) {}

  static Jet2 constant(double v, int dim) { return Jet2(v, dim); }
  static Jet2 variable(double v, int index, int dim) {
    Jet2 j(v, dim);
    j.grad(index) = 1.0;
    return j;
  }

  int dim() const { return static_cast<int>(grad.size()); }

  /// Applies a scalar function with known derivatives d1 = g'(u), d2 = g''(u).
  Jet2 chain(double g, double d1, double d2) const {
    Jet2 r(g, dim());
    r.grad = d1 * grad;
    r.hess = d1 * hess + d2 * (grad * grad.transpose());
    return r;
  }
};

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
  Jet2 r(a.value + b.value, a.dim());
  r.grad = a.grad + b.grad;
  r.hess = a.hess + b.hess;
  return r;
}

inline Jet2 operator-(const Jet2& a, const Jet2& b) {
  Jet2 r(a.value - b.value, a.dim());
  r.grad = a.grad - b.grad;
  r.hess = a.hess - b.hess;
  return r;
}

inline Jet2 operator-(const Jet2& a) {
  Jet2 r(-a.value, a.dim());
  r.grad = -a.grad;
  r.hess = -a.hess;
  return r;
}

inline Jet2 operator*(const Jet2& a, const Jet2& b) {
  Jet2 r(a.value * b.value, a.dim());
  r.grad = a.value * b.grad + b.value * a.grad;
  Eigen::MatrixXd cross = a.grad * b.grad.transpose();
  r.hess = a.value * b.hess + b.value * a.hess + cross + cross.transpose();
  return r;
}

/// a / b assuming b.value != 0 (checked by the caller).
inline Jet2 operator/(const Jet2& a, const Jet2& b) {
  const double inv = 1.0 / b.value;
  Jet2 recip = b.chain(inv, -inv * inv, 2.0 * inv * inv * inv);
  return a * recip;
}

/// First-order forward-mode dual number with a dynamic gradient.
///
/// Used on the cotangent bundle, where fields are differentiated in all
/// 2n coordinates (x, omega) at once.
struct Dual {
  double value = 0.0;
  Eigen::VectorXd grad;

  Dual() = default;
  Dual(double v, int dim) : value(v), grad(Eigen::VectorXd::Zero(dim)) {}
  Dual(double v, Eigen::VectorXd g) : value(v), grad(std::move(g)) {}

  static Dual variable(double v, int index, int dim) {
    Dual d(v, dim);
    d.grad(index) = 1.0;
    return d;
  }
  int dim() const { return static_cast<int>(grad.size()); }
};

inline Dual operator+(const Dual& a, const Dual& b) { return {a.value + b.value, a.grad + b.grad}; }
inline Dual operator-(const Dual& a, const Dual& b) { return {a.value - b.value, a.grad - b.grad}; }
inline Dual operator-(const Dual& a) { return {-a.value, -a.grad}; }
inline Dual operator*(const Dual& a, const Dual& b) {
  return {a.value * b.value, a.value * b.grad + b.value * a.grad};
}
inline Dual operator*(double s, const Dual& a) { return {s * a.value, s * a.grad}; }
inline Dual operator*(const Dual& a, double s) { return {s * a.value, s * a.grad}; }
inline Dual operator/(const Dual& a, const Dual& b) {
  const double inv = 1.0 / b.value;
  return {a.value * inv, (a.grad - a.value * inv * b.grad) * inv};
}
inline Dual& operator+=(Dual& a, const Dual& b) {
  a.value += b.value;
  a.grad += b.grad;
  return a;
}
inline Dual& operator-=(Dual& a, const Dual& b) {
  a.value -= b.value;
  a.grad -= b.grad;
  return a;
}

/// Embeds a base-manifold jet in the bundle coordinates (x, omega):
/// the gradient is padded with zeros in the omega directions.
inline Dual lift_value(const Jet2& j, int bundle_dim) {
  Dual d(j.value, bundle_dim);
  d.grad.head(j.dim()) = j.grad;
  return d;
}

/// The partial derivative d/dx^i of a base jet, as a bundle dual number.
inline Dual lift_partial(const Jet2& j, int i, int bundle_dim) {
  Dual d(j.grad(i), bundle_dim);
  d.grad.head(j.dim()) = j.hess.row(i).transpose();
  return d;
}

}  // namespace rext
