// Copyright 2026 allsmiles authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>

namespace allsmiles {

// Splittable counter-based generator. Every stream is a (key, counter) pair;
// output is a SplitMix64-style avalanche of key ^ mixed counter. Splitting
// derives an independent key, so parallel subcommands stay deterministic no
// matter how work is divided across threads.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t key) : key_(key) {}

  // Derived stream for a subtask; does not advance this stream.
  SplitRng split(std::uint64_t tag) const {
    return SplitRng(mix(key_ ^ mix(tag ^ 0x9e3779b97f4a7c15ull)));
  }

  std::uint64_t next_u64() { return mix(key_ ^ mix(counter_++)); }

  // Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, n); n > 0.
  std::uint64_t uniform_index(std::uint64_t n) {
    return next_u64() % n;
  }

  // Standard normal via Box-Muller (cached pair member).
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace allsmiles
