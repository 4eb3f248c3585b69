#include "rext/manifold.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rext {

namespace {

int packed_size(int n) { return n * (n + 1) / 2; }

int packed_index(int i, int j, int n) {
  if (i > j) std::swap(i, j);
  // Row i of the upper triangle starts after rows 0..i-1.
  return i * n - i * (i - 1) / 2 + (j - i);
}

std::vector<expr::Expression> parse_components(const std::vector<std::string>& text, int n, const char* what) {
  if (static_cast<int>(text.size()) != n) {
    throw std::invalid_argument(std::string(what) + " needs " + std::to_string(n) + " components, got " +
                                std::to_string(text.size()));
  }
  std::vector<expr::Expression> out;
  out.reserve(text.size());
  for (const auto& t : text) out.push_back(expr::Expression::parse(t, n));
  return out;
}

std::vector<expr::Expression> unit_components(int k, int n) {
  if (k < 0 || k >= n) throw std::out_of_range("coordinate index out of range");
  std::vector<expr::Expression> out;
  for (int i = 0; i < n; ++i) out.push_back(expr::Expression::constant(i == k ? 1.0 : 0.0, n));
  return out;
}

}  // namespace

ConnectionSpec::ConnectionSpec(int n, const Table& gamma) : n_(n) {
  if (n < 2) throw std::invalid_argument("connection dimension must be at least 2");
  entries_.assign(static_cast<std::size_t>(n * packed_size(n)), expr::Expression::constant(0.0, n));
  std::vector<std::string> seen(entries_.size());
  for (const auto& [key, text] : gamma) {
    const auto [k, i, j] = key;
    if (k < 1 || k > n || i < 1 || i > n || j < 1 || j > n) {
      throw std::invalid_argument("connection index (" + std::to_string(k) + "," + std::to_string(i) + "," +
                                  std::to_string(j) + ") out of range 1.." + std::to_string(n));
    }
    const std::size_t slot = static_cast<std::size_t>((k - 1) * packed_size(n) + packed_index(i - 1, j - 1, n));
    expr::Expression e = expr::Expression::parse(text, n);
    if (!seen[slot].empty() && seen[slot] != e.to_string()) {
      throw std::invalid_argument("connection entries (" + std::to_string(k) + "," + std::to_string(i) + "," +
                                  std::to_string(j) + ") and its mirror disagree");
    }
    seen[slot] = e.to_string();
    entries_[slot] = std::move(e);
  }
}

ConnectionSpec ConnectionSpec::flat(int n) { return ConnectionSpec(n, {}); }

const expr::Expression& ConnectionSpec::gamma(int k, int i, int j) const {
  return entries_[static_cast<std::size_t>(k * packed_size(n_) + packed_index(i, j, n_))];
}

VectorFieldSpec VectorFieldSpec::parse(const std::vector<std::string>& text, int n) {
  return {parse_components(text, n, "vector field")};
}

VectorFieldSpec VectorFieldSpec::coordinate(int k, int n) { return {unit_components(k, n)}; }

OneFormSpec OneFormSpec::parse(const std::vector<std::string>& text, int n) {
  return {parse_components(text, n, "1-form")};
}

OneFormSpec OneFormSpec::coordinate(int k, int n) { return {unit_components(k, n)}; }

ScalarFieldSpec ScalarFieldSpec::parse(const std::string& text, int n) { return {expr::Expression::parse(text, n)}; }

VectorJet VectorJet::at(const VectorFieldSpec& X, const Vec& x) {
  const int n = X.dim();
  VectorJet j{Vec(n), Mat(n, n), std::vector<Mat>(static_cast<std::size_t>(n))};
  for (int h = 0; h < n; ++h) {
    const Jet2 c = X.components[static_cast<std::size_t>(h)].eval_jet2(x);
    j.value(h) = c.value;
    j.d1.row(h) = c.grad.transpose();
    j.d2[static_cast<std::size_t>(h)] = c.hess;
  }
  return j;
}

VectorJet VectorJet::constant(const Vec& value) {
  const auto n = value.size();
  return {value, Mat::Zero(n, n), std::vector<Mat>(static_cast<std::size_t>(n), Mat::Zero(n, n))};
}

CovectorJet CovectorJet::at(const OneFormSpec& beta, const Vec& x) {
  const int n = beta.dim();
  CovectorJet j{Vec(n), Mat(n, n)};
  for (int m = 0; m < n; ++m) {
    const Jet2 c = beta.components[static_cast<std::size_t>(m)].eval_jet2(x);
    j.value(m) = c.value;
    j.d1.row(m) = c.grad.transpose();
  }
  return j;
}

CovectorJet CovectorJet::constant(const Vec& value) {
  return {value, Mat::Zero(value.size(), value.size())};
}

ConnectionJet ConnectionJet::at(const ConnectionSpec& c, const Vec& x) {
  const int n = c.dim();
  ConnectionJet j{Tensor3::cube(n), Tensor4::cube(n)};
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int jj = i; jj < n; ++jj) {
        const Jet2 g = c.gamma(k, i, jj).eval_jet2(x);
        j.gamma(k, i, jj) = j.gamma(k, jj, i) = g.value;
        for (int l = 0; l < n; ++l) j.d1(k, i, jj, l) = j.d1(k, jj, i, l) = g.grad(l);
      }
    }
  }
  return j;
}

Tensor3 christoffel_at(const ConnectionSpec& c, const Vec& x) {
  const int n = c.dim();
  Tensor3 g = Tensor3::cube(n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) g(k, i, j) = g(k, j, i) = c.gamma(k, i, j).eval(x);
  return g;
}

Tensor4 curvature_from(const ConnectionJet& jet) {
  const int n = jet.dim();
  const Tensor3& G = jet.gamma;
  Tensor4 R = Tensor4::cube(n);
  for (int l = 0; l < n; ++l)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          double r = jet.d1(l, j, k, i) - jet.d1(l, i, k, j);
          for (int m = 0; m < n; ++m) r += G(l, i, m) * G(m, j, k) - G(l, j, m) * G(m, i, k);
          R(l, i, j, k) = r;
        }
  return R;
}

Tensor4 curvature_at(const ConnectionSpec& c, const Vec& x) { return curvature_from(ConnectionJet::at(c, x)); }

Mat nabla_matrix(const ConnectionJet& conn, const VectorJet& X) {
  const int n = X.dim();
  Mat T = X.d1;
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      for (int m = 0; m < n; ++m) T(k, j) += conn.gamma(k, j, m) * X.value(m);
  return T;
}

Mat nabla_vf_at(const ConnectionSpec& c, const VectorFieldSpec& X, const Vec& x) {
  if (X.dim() != c.dim()) throw std::invalid_argument("vector field dimension does not match connection");
  const int n = c.dim();
  const Tensor3 G = christoffel_at(c, x);
  Mat T(n, n);
  Vec val(n);
  for (int k = 0; k < n; ++k) {
    const Jet2 comp = X.components[static_cast<std::size_t>(k)].eval_jet2(x);
    val(k) = comp.value;
    T.row(k) = comp.grad.transpose();
  }
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      for (int m = 0; m < n; ++m) T(k, j) += G(k, j, m) * val(m);
  return T;
}

Mat nabla_df_at(const ConnectionSpec& c, const ScalarFieldSpec& f, const Vec& x) {
  if (f.dim() != c.dim()) throw std::invalid_argument("scalar field dimension does not match connection");
  const int n = c.dim();
  const Tensor3 G = christoffel_at(c, x);
  const Jet2 fj = f.f.eval_jet2(x);
  Mat H = fj.hess;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int m = 0; m < n; ++m) H(i, j) -= G(m, i, j) * fj.grad(m);
  return H;
}

CurvatureIdentityResidual curvature_identities(const Tensor4& R) {
  const int n = R.extent(0);
  CurvatureIdentityResidual r;
  for (int l = 0; l < n; ++l)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          r.antisymmetry = std::max(r.antisymmetry, std::abs(R(l, i, j, k) + R(l, j, i, k)));
          r.bianchi = std::max(r.bianchi, std::abs(R(l, i, j, k) + R(l, j, k, i) + R(l, k, i, j)));
        }
  return r;
}

ParallelReport check_parallel(const ConnectionSpec& c, const VectorFieldSpec& xi, const std::vector<Vec>& pts,
                              double tol) {
  if (pts.empty()) throw std::invalid_argument("check_parallel needs at least one point");
  ParallelReport r;
  r.tolerance = tol;
  for (const Vec& x : pts) r.max_residual = std::max(r.max_residual, nabla_vf_at(c, xi, x).cwiseAbs().maxCoeff());
  r.pass = r.max_residual <= tol;
  return r;
}

CatalogEntry flat2() { return {"FLAT2", ConnectionSpec::flat(2), VectorFieldSpec::coordinate(0, 2)}; }

CatalogEntry poly2() {
  return {"POLY2", ConnectionSpec(2, {{{1, 1, 1}, "x2"}}), VectorFieldSpec::coordinate(1, 2)};
}

CatalogEntry prod3() {
  return {"PROD3", ConnectionSpec(3, {{{2, 2, 2}, "x3"}}), VectorFieldSpec::coordinate(0, 3)};
}

std::vector<CatalogEntry> catalog() { return {flat2(), poly2(), prod3()}; }

}  // namespace rext
