// Copyright 2026 The tqsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "tqsim/random.hpp"

#include <cmath>
#include <numbers>

namespace tqsim {
namespace {

constexpr std::uint64_t kIndexKey = 0x9e3779b97f4a7c15ULL;
constexpr std::uint64_t kSeedKey2 = 0xd1b54a32d192ed03ULL;
constexpr std::uint64_t kIndexKey2 = 0x8cb92ba72f3d8dd7ULL;

constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t index)
    : seed_(seed), index_(index) {
  // s0 is zero only for seed 0 and s2 only for seed == kSeedKey2, so the
  // state is never all-zero.
  state_ = {mix64(seed), mix64(index ^ kIndexKey), mix64(seed ^ kSeedKey2),
            mix64(index + kIndexKey2)};
  for (int i = 0; i < 16; ++i) next_u64();
}

std::uint64_t RandomStream::next_u64() {
  auto& s = state_;
  const std::uint64_t result = rotl(s[1] * 5, 7) * 9;
  const std::uint64_t t = s[1] << 17;
  s[2] ^= s[0];
  s[3] ^= s[1];
  s[1] ^= s[2];
  s[0] ^= s[3];
  s[2] ^= t;
  s[3] = rotl(s[3], 45);
  return result;
}

double RandomStream::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double RandomStream::uniform_pos() {
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double RandomStream::normal() {
  const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
  return r * std::cos(2.0 * std::numbers::pi * uniform());
}

}  // namespace tqsim
