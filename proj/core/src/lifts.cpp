#include "rext/lifts.hpp"

#include <stdexcept>

namespace rext {

Vec CotangentPoint::coords() const {
  Vec z(2 * dim());
  z << x, omega;
  return z;
}

CotangentPoint CotangentPoint::from_coords(const Vec& z) {
  if (z.size() % 2 != 0) throw std::invalid_argument("bundle coordinates must have even length");
  const auto n = z.size() / 2;
  return {z.head(n), z.tail(n)};
}

LiftVector LiftVector::zero(int n) { return {Vec::Zero(n), Vec::Zero(n)}; }

Vec LiftVector::stacked() const {
  Vec z(2 * dim());
  z << h, v;
  return z;
}

LiftVector LiftVector::from_stacked(const Vec& z) {
  if (z.size() % 2 != 0) throw std::invalid_argument("stacked lift vector must have even length");
  const auto n = z.size() / 2;
  return {z.head(n), z.tail(n)};
}

LiftVector& LiftVector::operator+=(const LiftVector& o) {
  h += o.h;
  v += o.v;
  return *this;
}

LiftVector& LiftVector::operator-=(const LiftVector& o) {
  h -= o.h;
  v -= o.v;
  return *this;
}

LiftVector& LiftVector::operator*=(double s) {
  h *= s;
  v *= s;
  return *this;
}

LiftVector operator+(LiftVector a, const LiftVector& b) { return a += b; }
LiftVector operator-(LiftVector a, const LiftVector& b) { return a -= b; }
LiftVector operator*(double s, LiftVector a) { return a *= s; }

LiftVector complete_lift_at(const VectorJet& X, const CotangentPoint& p) {
  return {X.value, -(X.d1.transpose() * p.omega)};
}

LiftVector complete_lift_at(const VectorFieldSpec& X, const CotangentPoint& p) {
  if (X.dim() != p.dim()) throw std::invalid_argument("vector field dimension does not match point");
  return complete_lift_at(VectorJet::at(X, p.x), p);
}

LiftVector vertical_lift(const Vec& alpha) { return {Vec::Zero(alpha.size()), alpha}; }

LiftVector vertical_lift_at(const OneFormSpec& alpha, const CotangentPoint& p) {
  if (alpha.dim() != p.dim()) throw std::invalid_argument("1-form dimension does not match point");
  Vec v(p.dim());
  for (int i = 0; i < p.dim(); ++i) v(i) = alpha.components[static_cast<std::size_t>(i)].eval(p.x);
  return vertical_lift(v);
}

LiftVector liouville_at(const CotangentPoint& p) { return vertical_lift(p.omega); }

LiftVector contracted_at(const Mat& T, const CotangentPoint& p) { return vertical_lift(T.transpose() * p.omega); }

double evaluation_fn(const VectorFieldSpec& X, const CotangentPoint& p) {
  if (X.dim() != p.dim()) throw std::invalid_argument("vector field dimension does not match point");
  double s = 0.0;
  for (int i = 0; i < p.dim(); ++i) s += p.omega(i) * X.components[static_cast<std::size_t>(i)].eval(p.x);
  return s;
}

Vec lie_bracket(const VectorJet& X, const VectorJet& Y) { return Y.d1 * X.value - X.d1 * Y.value; }

}  // namespace rext
