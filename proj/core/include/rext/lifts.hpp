#pragma once

#include "rext/manifold.hpp"

namespace rext {

/// A point (x, omega) of the cotangent bundle.
struct CotangentPoint {
  Vec x;
  Vec omega;

  int dim() const { return static_cast<int>(x.size()); }
  /// Bundle coordinates (x^1..x^n, omega_1..omega_n).
  Vec coords() const;
  static CotangentPoint from_coords(const Vec& z);
};

/// Tangent vector h^i d_i + v_i d_i* at a point of T*M.
struct LiftVector {
  Vec h;
  Vec v;

  static LiftVector zero(int n);
  /// Coefficients in the frame (d_1..d_n, d_1*..d_n*).
  Vec stacked() const;
  static LiftVector from_stacked(const Vec& z);
  int dim() const { return static_cast<int>(h.size()); }

  LiftVector& operator+=(const LiftVector& o);
  LiftVector& operator-=(const LiftVector& o);
  LiftVector& operator*=(double s);
};

LiftVector operator+(LiftVector a, const LiftVector& b);
LiftVector operator-(LiftVector a, const LiftVector& b);
LiftVector operator*(double s, LiftVector a);

/// X^C: h = X, v_i = -omega_h d_i X^h.
LiftVector complete_lift_at(const VectorFieldSpec& X, const CotangentPoint& p);
LiftVector complete_lift_at(const VectorJet& X, const CotangentPoint& p);

/// alpha^V: h = 0, v = alpha(x).
LiftVector vertical_lift_at(const OneFormSpec& alpha, const CotangentPoint& p);
LiftVector vertical_lift(const Vec& alpha);

/// Liouville field W = omega^V.
LiftVector liouville_at(const CotangentPoint& p);

/// C(T) for a (1,1) tensor T(k, j): v_j = omega_k T(k, j).
LiftVector contracted_at(const Mat& T, const CotangentPoint& p);

/// X^V(x, omega) = omega(X_x).
double evaluation_fn(const VectorFieldSpec& X, const CotangentPoint& p);

/// [X, Y]^k = X^j d_j Y^k - Y^j d_j X^k at the jets' point.
Vec lie_bracket(const VectorJet& X, const VectorJet& Y);

}  // namespace rext
