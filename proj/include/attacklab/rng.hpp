// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>

namespace attacklab {

// SplitMix64. Deliberately not std::mt19937 + distributions: distribution
// output is implementation-defined, and every seeded artifact here must be
// reproducible byte-for-byte.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform integer in [0, bound)
  std::uint64_t next_below(std::uint64_t bound) {
    // 64-bit multiply-shift; bias is negligible for the bounds used here
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
  }
};

// Stateless hash of a (seed, counter) pair; basis of the race-free
// per-step Gaussian draws.
inline std::uint64_t mix_u64(std::uint64_t seed, std::uint64_t counter) {
  SplitMix64 g(seed ^ (0x9e3779b97f4a7c15ull + counter * 0xff51afd7ed558ccdull));
  g.next_u64();
  return g.next_u64();
}

// Standard normal draw addressed by (seed, index) via Box-Muller.
inline double counter_normal(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t u1_bits = mix_u64(seed, 2 * index);
  std::uint64_t u2_bits = mix_u64(seed, 2 * index + 1);
  // map to (0,1] so log stays finite
  double u1 = (static_cast<double>(u1_bits >> 11) + 1.0) * 0x1.0p-53;
  double u2 = static_cast<double>(u2_bits >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
}

}  // namespace attacklab
