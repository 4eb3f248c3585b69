#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <vector>

namespace rext {

/// Small dense row-major tensor of fixed rank and runtime extents.
///
/// The geometry here never goes beyond 2n = 6 per axis, so a flat
/// std::vector is all the storage we need.
template <std::size_t Rank>
class DenseTensor {
 public:
  DenseTensor() { extents_.fill(0); }

  explicit DenseTensor(std::array<int, Rank> extents, double fill = 0.0)
      : extents_(extents) {
    std::size_t total = 1;
    for (int e : extents_) total *= static_cast<std::size_t>(e);
    data_.assign(total, fill);
  }

  /// Cube of side `n`.
  static DenseTensor cube(int n, double fill = 0.0) {
    std::array<int, Rank> e;
    e.fill(n);
    return DenseTensor(e, fill);
  }

  template <typename... I>
  double& operator()(I... idx) {
    static_assert(sizeof...(I) == Rank);
    return data_[offset({static_cast<int>(idx)...})];
  }

  template <typename... I>
  double operator()(I... idx) const {
    static_assert(sizeof...(I) == Rank);
    return data_[offset({static_cast<int>(idx)...})];
  }

  int extent(std::size_t axis) const { return extents_[axis]; }
  const std::array<int, Rank>& extents() const { return extents_; }
  std::size_t size() const { return data_.size(); }

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  double max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
  }

  DenseTensor& operator+=(const DenseTensor& o) {
    assert(o.extents_ == extents_);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  DenseTensor& operator-=(const DenseTensor& o) {
    assert(o.extents_ == extents_);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  DenseTensor& operator*=(double s) {
    for (double& v : data_) v *= s;
    return *this;
  }

  friend DenseTensor operator+(DenseTensor a, const DenseTensor& b) { return a += b; }
  friend DenseTensor operator-(DenseTensor a, const DenseTensor& b) { return a -= b; }
  friend DenseTensor operator*(double s, DenseTensor a) { return a *= s; }

 private:
  std::size_t offset(std::array<int, Rank> idx) const {
    std::size_t off = 0;
    for (std::size_t r = 0; r < Rank; ++r) {
      assert(idx[r] >= 0 && idx[r] < extents_[r]);
      off = off * static_cast<std::size_t>(extents_[r]) + static_cast<std::size_t>(idx[r]);
    }
    return off;
  }

  std::array<int, Rank> extents_;
  std::vector<double> data_;
};

using Tensor3 = DenseTensor<3>;
using Tensor4 = DenseTensor<4>;

}  // namespace rext
