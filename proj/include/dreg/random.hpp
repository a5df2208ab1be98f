#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

#include "dreg/rational.hpp"

namespace dreg {

// Combine a user seed with stream labels (splitmix64 finalizer), so that
// each sampling task gets its own reproducible stream.
std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> labels);

// Deterministic across platforms: only the raw mt19937_64 output is used,
// never the implementation-defined std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform-ish integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  // p/q with |p| <= height and 1 <= q <= height.
  Rational rational(std::int64_t height);

 private:
  std::mt19937_64 engine_;
};

}  // namespace dreg
