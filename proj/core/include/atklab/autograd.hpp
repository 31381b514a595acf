#pragma once

#include <functional>
#include <vector>

#include "atklab/tensor.hpp"

namespace atklab {

/// Reverse-mode tape. Ops append nodes in evaluation order, so node index
/// order is already topological. A tape is confined to one worker; run
/// independent tapes in parallel workers instead of sharing one.
class GradTape {
 public:
  GradTape() = default;
  GradTape(const GradTape&) = delete;
  GradTape& operator=(const GradTape&) = delete;

  /// Tracked copy of `value` (shared storage).
  Tensor leaf(const Tensor& value);

  /// Track `t` in place, e.g. model parameters during a training step.
  void watch(Tensor& t);

  /// Reverse pass from a tracked scalar root. After it returns, every tracked
  /// leaf has a gradient of its own shape (all-zero when the root does not
  /// depend on it).
  void backward(const Tensor& root);

  /// Gradient accumulated for `t` by the last backward pass.
  Tensor grad(const Tensor& t) const;

  int node_count() const { return static_cast<int>(nodes_.size()); }

  // --- recording interface used by the ops layer ---

  using BackwardFn = std::function<void(GradTape&, const Tensor& out_grad)>;

  /// Appends a node holding `value`; `backward` scatters the node's output
  /// gradient into its parents via accumulate().
  Tensor record(Tensor value, std::vector<int> parents, BackwardFn backward);

  /// Adds `delta` into the gradient buffer of node `idx` (ignored when idx<0).
  void accumulate(int idx, const Tensor& delta);

 private:
  struct Node {
    Shape shape;
    std::vector<int> parents;
    BackwardFn backward;
    Tensor grad;  // undefined until touched by a backward pass
  };
  std::vector<Node> nodes_;
};

namespace detail {
/// Tape shared by the tracked inputs (nullptr when none is tracked).
/// Mixing tensors from two different tapes is a contract error.
GradTape* common_tape(std::initializer_list<const Tensor*> inputs);
int parent_index(const Tensor& t);
}  // namespace detail

}  // namespace atklab
