#pragma once

#include <cstdint>

#include "atklab/tensor.hpp"

namespace atklab {

/// Deterministic PCG32 generator with an explicit stream id. Identical
/// (seed, stream) pairs produce bit-identical sequences on every platform;
/// normal variates use the polar Box-Muller transform (log/sqrt only, both
/// correctly rounded under IEEE 754).
///
/// Generators are never shared between workers: derive a child stream per
/// image / per task instead.
class Rng {
 public:
  Rng() : Rng(0, 0) {}
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint32_t next_u32();
  std::uint64_t next_u64();
  /// Uniform double in (0, 1), never exactly 0 or 1.
  double next_double();

  /// Independent stream keyed by `id`; pure (does not advance this generator),
  /// so child(i) always denotes the same stream for a given parent state.
  Rng child(std::uint64_t id) const;

  std::uint64_t stream_id() const { return stream_id_; }

 private:
  std::uint64_t state_;
  std::uint64_t inc_;
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  // one cached normal from the polar transform
  bool have_spare_ = false;
  double spare_ = 0.0;

  friend Tensor randn(Rng& rng, Shape shape);
  friend float randn_scalar(Rng& rng);
};

/// Standard-normal tensor of the given shape.
Tensor randn(Rng& rng, Shape shape);
float randn_scalar(Rng& rng);

/// Uniform tensor with elements in [lo, hi).
Tensor rand_uniform(Rng& rng, Shape shape, float lo, float hi);

/// Uniform integer in [lo, hi). Requires lo < hi.
std::int64_t rand_uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi);

}  // namespace atklab
