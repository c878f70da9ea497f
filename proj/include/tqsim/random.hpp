// Copyright 2026 The tqsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace tqsim {

// Deterministic pseudo-random stream.
//
// The generator is xoshiro256** (Blackman & Vigna). Its 256-bit state is
// keyed from a (seed, stream index) pair through the splitmix64 finalizer,
// which is a bijection on 64-bit words, so distinct keys give distinct
// states. Trial `i` of a parallel run draws from `substream(seed, i)`; the
// result of a run therefore does not depend on how trials are scheduled.
//
// The algorithm and key schedule are part of the output format: changing
// either changes every seeded result.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  explicit RandomStream(std::uint64_t seed) : RandomStream(seed, 0) {}

  static RandomStream substream(std::uint64_t seed, std::uint64_t index) {
    return RandomStream(seed, index);
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t index() const { return index_; }

  result_type operator()() { return next_u64(); }
  std::uint64_t next_u64();

  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  // Uniform on (0, 1]; safe as a logarithm argument.
  double uniform_pos();
  // Standard normal variate (Box-Muller, one output per call).
  double normal();
  bool bernoulli(double p) { return uniform() < p; }

 private:
  RandomStream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t seed_;
  std::uint64_t index_;
  std::array<std::uint64_t, 4> state_;
};

// splitmix64 output finalizer. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace tqsim
