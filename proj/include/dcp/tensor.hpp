#pragma once

#include <cassert>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "dcp/common.hpp"

namespace dcp {

/// Dense row-major double tensor. Rank is small (1..4); shapes follow the
/// (C,H,W) convention for feature grids and (H,W) for maps.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<int> shape);

  static Tensor zeros(std::vector<int> shape) { return Tensor(std::move(shape)); }
  static Tensor full(std::vector<int> shape, double v);

  const std::vector<int>& shape() const { return shape_; }
  int rank() const { return static_cast<int>(shape_.size()); }
  int dim(int i) const { return shape_[static_cast<size_t>(i)]; }
  std::int64_t numel() const { return static_cast<std::int64_t>(data_.size()); }
  bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  double& operator[](std::int64_t i) { return data_[static_cast<size_t>(i)]; }
  double operator[](std::int64_t i) const { return data_[static_cast<size_t>(i)]; }

  // (h, w) indexing for rank-2 tensors.
  double& at(int y, int x) {
    assert(rank() == 2);
    return data_[static_cast<size_t>(y) * shape_[1] + x];
  }
  double at(int y, int x) const {
    assert(rank() == 2);
    return data_[static_cast<size_t>(y) * shape_[1] + x];
  }

  // (c, h, w) indexing for rank-3 tensors.
  double& at(int c, int y, int x) {
    assert(rank() == 3);
    return data_[(static_cast<size_t>(c) * shape_[1] + y) * shape_[2] + x];
  }
  double at(int c, int y, int x) const {
    assert(rank() == 3);
    return data_[(static_cast<size_t>(c) * shape_[1] + y) * shape_[2] + x];
  }

  void fill(double v);
  bool all_finite() const;

 private:
  std::vector<int> shape_;
  std::vector<double> data_;
};

/// Binary little-endian serialization: rank, dims (int32), payload (doubles).
/// Layouts round-trip bit-identically.
void write_tensor(std::ostream& os, const Tensor& t);
Tensor read_tensor(std::istream& is);

}  // namespace dcp
