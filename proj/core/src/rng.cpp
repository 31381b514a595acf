#include "atklab/rng.hpp"

#include <cmath>

#include "atklab/errors.hpp"

namespace atklab {

namespace {

constexpr std::uint64_t kPcgMult = 6364136223846793005ULL;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_id_(stream) {
  inc_ = (stream << 1u) | 1u;
  state_ = 0;
  next_u32();
  state_ += seed;
  next_u32();
}

std::uint32_t Rng::next_u32() {
  std::uint64_t old = state_;
  state_ = old * kPcgMult + inc_;
  std::uint32_t xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
  std::uint32_t rot = static_cast<std::uint32_t>(old >> 59u);
  return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
}

std::uint64_t Rng::next_u64() {
  std::uint64_t hi = next_u32();
  std::uint64_t lo = next_u32();
  return (hi << 32) | lo;
}

double Rng::next_double() {
  return (static_cast<double>(next_u32()) + 0.5) * (1.0 / 4294967296.0);
}

Rng Rng::child(std::uint64_t id) const {
  return Rng(splitmix64(seed_ ^ splitmix64(id)), splitmix64(stream_id_ ^ (id * 2 + 1)));
}

namespace {

double polar_normal(Rng& rng, bool& have_spare, double& spare) {
  if (have_spare) {
    have_spare = false;
    return spare;
  }
  double u, v, s;
  do {
    u = 2.0 * rng.next_double() - 1.0;
    v = 2.0 * rng.next_double() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  double f = std::sqrt(-2.0 * std::log(s) / s);
  spare = v * f;
  have_spare = true;
  return u * f;
}

}  // namespace

Tensor randn(Rng& rng, Shape shape) {
  Tensor t = Tensor::zeros(std::move(shape));
  float* p = t.mutable_data();
  const std::int64_t n = t.numel();
  for (std::int64_t i = 0; i < n; ++i)
    p[i] = static_cast<float>(polar_normal(rng, rng.have_spare_, rng.spare_));
  return t;
}

float randn_scalar(Rng& rng) {
  return static_cast<float>(polar_normal(rng, rng.have_spare_, rng.spare_));
}

Tensor rand_uniform(Rng& rng, Shape shape, float lo, float hi) {
  if (!(lo < hi)) throw ContractError("rand_uniform: requires lo < hi");
  Tensor t = Tensor::zeros(std::move(shape));
  float* p = t.mutable_data();
  const std::int64_t n = t.numel();
  for (std::int64_t i = 0; i < n; ++i)
    p[i] = lo + static_cast<float>(rng.next_double()) * (hi - lo);
  return t;
}

std::int64_t rand_uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  if (!(lo < hi)) throw ContractError("rand_uniform_int: requires lo < hi");
  std::uint64_t range = static_cast<std::uint64_t>(hi - lo);
  // rejection sampling for an unbiased draw
  std::uint64_t threshold = (~range + 1) % range;  // (2^64 - range) mod range
  for (;;) {
    std::uint64_t r = rng.next_u64();
    if (r >= threshold) return lo + static_cast<std::int64_t>(r % range);
  }
}

}  // namespace atklab
