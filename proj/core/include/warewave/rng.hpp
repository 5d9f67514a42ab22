// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 warewave contributors

#pragma once

#include <cstdint>

namespace warewave {

// SplitMix64. Chosen over std::mt19937_64 + distributions because its output
// is pinned by the algorithm alone, so scene generation is bit-identical
// across standard libraries and platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53-bit resolution.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

 private:
  uint64_t state_;
};

}  // namespace warewave
