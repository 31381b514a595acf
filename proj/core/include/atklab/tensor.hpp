#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

namespace atklab {

class GradTape;

/// Extents of each axis, outermost first. Rank 0 is not used; scalars are {1}.
using Shape = std::vector<int>;

std::string shape_str(const Shape& s);
std::int64_t shape_numel(const Shape& s);

/// Dense row-major float32 tensor. Copies share storage; values are treated as
/// immutable once built. `mutable_data` is reserved for builders and
/// optimizers that own the only live reference.
///
/// A tensor may carry a link to a GradTape node, in which case operations on
/// it are recorded for reverse-mode differentiation. `detach` strips the link.
class Tensor {
 public:
  Tensor() = default;

  static Tensor zeros(Shape shape);
  static Tensor full(Shape shape, float value);
  static Tensor from_data(Shape shape, std::vector<float> data);
  /// Like from_data but rejects NaN/Inf anywhere (contract violation).
  static Tensor from_data_checked(Shape shape, std::vector<float> data);
  static Tensor identity(int n);
  static Tensor scalar(float v);

  bool defined() const { return storage_ != nullptr; }
  const Shape& shape() const { return shape_; }
  int rank() const { return static_cast<int>(shape_.size()); }
  int dim(int axis) const;
  std::int64_t numel() const;

  const float* data() const;
  float* mutable_data();
  float at(std::initializer_list<int> idx) const;
  /// Value of a single-element tensor.
  float item() const;

  bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }
  bool all_finite() const;

  /// Deep copy with no tape link.
  Tensor clone() const;
  /// Same storage, tape link stripped.
  Tensor detach() const;
  /// Drop the tape link on this object (storage untouched).
  void detach_inplace();

  bool tracked() const { return tape_ != nullptr; }
  GradTape* tape() const { return tape_; }
  int node() const { return node_; }

 private:
  friend class GradTape;

  std::shared_ptr<std::vector<float>> storage_;
  Shape shape_;
  GradTape* tape_ = nullptr;
  int node_ = -1;
};

/// Elementwise |a-b| max. Shapes must match.
float max_abs_diff(const Tensor& a, const Tensor& b);

/// True when both tensors have identical shape and bit-identical elements.
bool bit_identical(const Tensor& a, const Tensor& b);

}  // namespace atklab
