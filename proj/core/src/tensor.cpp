#include "atklab/tensor.hpp"

#include <cmath>
#include <cstring>
#include <sstream>

#include "atklab/errors.hpp"

namespace atklab {

std::string shape_str(const Shape& s) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) os << "x";
    os << s[i];
  }
  os << ")";
  return os.str();
}

std::int64_t shape_numel(const Shape& s) {
  std::int64_t n = 1;
  for (int d : s) n *= d;
  return n;
}

static void check_shape(const Shape& shape) {
  if (shape.empty()) throw ContractError("tensor shape must have rank >= 1");
  for (int d : shape) {
    if (d <= 0)
      throw ContractError("tensor extents must be positive, got " + shape_str(shape));
  }
}

Tensor Tensor::zeros(Shape shape) {
  check_shape(shape);
  Tensor t;
  t.storage_ = std::make_shared<std::vector<float>>(shape_numel(shape), 0.0f);
  t.shape_ = std::move(shape);
  return t;
}

Tensor Tensor::full(Shape shape, float value) {
  check_shape(shape);
  Tensor t;
  t.storage_ = std::make_shared<std::vector<float>>(shape_numel(shape), value);
  t.shape_ = std::move(shape);
  return t;
}

Tensor Tensor::from_data(Shape shape, std::vector<float> data) {
  check_shape(shape);
  if (shape_numel(shape) != static_cast<std::int64_t>(data.size()))
    throw ContractError("from_data: " + shape_str(shape) + " needs " +
                        std::to_string(shape_numel(shape)) + " elements, got " +
                        std::to_string(data.size()));
  Tensor t;
  t.storage_ = std::make_shared<std::vector<float>>(std::move(data));
  t.shape_ = std::move(shape);
  return t;
}

Tensor Tensor::from_data_checked(Shape shape, std::vector<float> data) {
  for (float v : data) {
    if (!std::isfinite(v))
      throw ContractError("tensor contains a non-finite element");
  }
  return from_data(std::move(shape), std::move(data));
}

Tensor Tensor::identity(int n) {
  Tensor t = zeros({n, n});
  float* p = t.mutable_data();
  for (int i = 0; i < n; ++i) p[i * n + i] = 1.0f;
  return t;
}

Tensor Tensor::scalar(float v) { return full({1}, v); }

int Tensor::dim(int axis) const {
  if (axis < 0 || axis >= rank())
    throw ContractError("dim: axis " + std::to_string(axis) + " out of range for " +
                        shape_str(shape_));
  return shape_[axis];
}

std::int64_t Tensor::numel() const { return storage_ ? shape_numel(shape_) : 0; }

const float* Tensor::data() const {
  if (!storage_) throw ContractError("use of undefined tensor");
  return storage_->data();
}

float* Tensor::mutable_data() {
  if (!storage_) throw ContractError("use of undefined tensor");
  return storage_->data();
}

float Tensor::at(std::initializer_list<int> idx) const {
  if (static_cast<int>(idx.size()) != rank())
    throw ContractError("at: index rank mismatch");
  std::int64_t off = 0;
  int axis = 0;
  for (int i : idx) {
    if (i < 0 || i >= shape_[axis]) throw ContractError("at: index out of range");
    off = off * shape_[axis] + i;
    ++axis;
  }
  return (*storage_)[off];
}

float Tensor::item() const {
  if (numel() != 1)
    throw ContractError("item: tensor " + shape_str(shape_) + " is not a scalar");
  return (*storage_)[0];
}

bool Tensor::all_finite() const {
  const float* p = data();
  const std::int64_t n = numel();
  for (std::int64_t i = 0; i < n; ++i)
    if (!std::isfinite(p[i])) return false;
  return true;
}

Tensor Tensor::clone() const {
  if (!storage_) return {};
  Tensor t;
  t.storage_ = std::make_shared<std::vector<float>>(*storage_);
  t.shape_ = shape_;
  return t;
}

Tensor Tensor::detach() const {
  Tensor t = *this;
  t.tape_ = nullptr;
  t.node_ = -1;
  return t;
}

void Tensor::detach_inplace() {
  tape_ = nullptr;
  node_ = -1;
}

float max_abs_diff(const Tensor& a, const Tensor& b) {
  if (!a.same_shape(b))
    throw ContractError("max_abs_diff: shape mismatch " + shape_str(a.shape()) +
                        " vs " + shape_str(b.shape()));
  float m = 0.0f;
  const float* pa = a.data();
  const float* pb = b.data();
  for (std::int64_t i = 0; i < a.numel(); ++i)
    m = std::max(m, std::fabs(pa[i] - pb[i]));
  return m;
}

bool bit_identical(const Tensor& a, const Tensor& b) {
  if (!a.same_shape(b)) return false;
  return std::memcmp(a.data(), b.data(), sizeof(float) * a.numel()) == 0;
}

}  // namespace atklab
