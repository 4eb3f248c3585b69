#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "rext/expr.hpp"
#include "rext/tensor.hpp"

namespace rext {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Symmetric linear connection on a chart of dimension n >= 2.
///
/// Only entries with i <= j are stored; (k, j, i) reads the same expression.
class ConnectionSpec {
 public:
  /// Key (k, i, j), 1-based, for the coefficient Gamma^k_ij. Missing entries
  /// are zero. Supplying both (k,i,j) and (k,j,i) with different text is an
  /// error.
  using Table = std::map<std::array<int, 3>, std::string>;

  ConnectionSpec() = default;
  ConnectionSpec(int n, const Table& gamma);

  /// The flat connection Gamma = 0.
  static ConnectionSpec flat(int n);

  int dim() const { return n_; }

  /// 0-based access.
  const expr::Expression& gamma(int k, int i, int j) const;

 private:
  int n_ = 0;
  std::vector<expr::Expression> entries_;  // k * n*(n+1)/2 + packed(i <= j)
};

/// Vector field X = X^i d_i with one expression per component.
struct VectorFieldSpec {
  std::vector<expr::Expression> components;

  static VectorFieldSpec parse(const std::vector<std::string>& text, int n);
  /// Constant field e_k (0-based).
  static VectorFieldSpec coordinate(int k, int n);
  int dim() const { return static_cast<int>(components.size()); }
};

/// 1-form alpha = alpha_i dx^i.
struct OneFormSpec {
  std::vector<expr::Expression> components;

  static OneFormSpec parse(const std::vector<std::string>& text, int n);
  static OneFormSpec coordinate(int k, int n);
  int dim() const { return static_cast<int>(components.size()); }
};

struct ScalarFieldSpec {
  expr::Expression f;

  static ScalarFieldSpec parse(const std::string& text, int n);
  int dim() const { return f.dim(); }
};

/// Value and derivatives of a vector field at a point.
/// d1(h, i) = d_i X^h, d2[h](i, j) = d_i d_j X^h.
struct VectorJet {
  Vec value;
  Mat d1;
  std::vector<Mat> d2;

  static VectorJet at(const VectorFieldSpec& X, const Vec& x);
  /// Field with constant components.
  static VectorJet constant(const Vec& value);
  int dim() const { return static_cast<int>(value.size()); }
};

/// Value and first derivatives of a 1-form. d1(m, i) = d_i beta_m.
struct CovectorJet {
  Vec value;
  Mat d1;

  static CovectorJet at(const OneFormSpec& beta, const Vec& x);
  static CovectorJet constant(const Vec& value);
  int dim() const { return static_cast<int>(value.size()); }
};

/// Christoffel symbols and their first derivatives at a point.
/// gamma(k,i,j) = Gamma^k_ij, d1(k,i,j,l) = d_l Gamma^k_ij.
struct ConnectionJet {
  Tensor3 gamma;
  Tensor4 d1;

  static ConnectionJet at(const ConnectionSpec& c, const Vec& x);
  int dim() const { return gamma.extent(0); }
};

/// R(l, i, j, k): the d_l component of R(d_i, d_j) d_k.
Tensor3 christoffel_at(const ConnectionSpec& c, const Vec& x);
Tensor4 curvature_at(const ConnectionSpec& c, const Vec& x);
Tensor4 curvature_from(const ConnectionJet& jet);

/// Matrix of nabla X: column j holds (nabla_{d_j} X)^i.
Mat nabla_vf_at(const ConnectionSpec& c, const VectorFieldSpec& X, const Vec& x);
Mat nabla_matrix(const ConnectionJet& conn, const VectorJet& X);

/// (nabla_{d_i} df)_j = d_i d_j f - Gamma^m_ij d_m f.
Mat nabla_df_at(const ConnectionSpec& c, const ScalarFieldSpec& f, const Vec& x);

/// Max |R(l,i,j,k) + R(l,j,i,k)| and max |cyclic sum over (i,j,k)|.
struct CurvatureIdentityResidual {
  double antisymmetry = 0.0;
  double bianchi = 0.0;
};
CurvatureIdentityResidual curvature_identities(const Tensor4& R);

struct ParallelReport {
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// max over pts of max |nabla xi| against `tol`. Throws on empty pts.
ParallelReport check_parallel(const ConnectionSpec& c, const VectorFieldSpec& xi, const std::vector<Vec>& pts,
                              double tol = 1e-9);

/// Bundled base manifolds.
struct CatalogEntry {
  std::string name;
  ConnectionSpec connection;
  VectorFieldSpec xi;
};

CatalogEntry flat2();
CatalogEntry poly2();
CatalogEntry prod3();
std::vector<CatalogEntry> catalog();

}  // namespace rext
