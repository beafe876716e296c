// Copyright 2026 The bayescorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace bayescorr {

inline std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stream key from (seed, a, b, c); streams for distinct keys are
// independent and do not depend on the order they are created in.
inline std::uint64_t StreamKey(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                               std::uint64_t c = 0) {
  std::uint64_t h = SplitMix64(seed);
  h = SplitMix64(h ^ a);
  h = SplitMix64(h ^ b);
  return SplitMix64(h ^ c);
}

class RandomStream {
 public:
  explicit RandomStream(std::uint64_t key) : eng_(key) {}
  RandomStream(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0)
      : eng_(StreamKey(seed, a, b, c)) {}

  // Uniform on [0, 1) with 53 random bits, independent of the standard
  // library's distribution implementations.
  double Uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  std::uint64_t Bits() { return eng_(); }
  // Uniform integer in [0, n).
  std::uint64_t Below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r;
    do {
      r = eng_();
    } while (r >= limit);
    return r % n;
  }
  // Index drawn from a (possibly unnormalized) weight vector.
  std::size_t Discrete(std::span<const double> w, double total = 1.0) {
    const double u = Uniform() * total;
    double acc = 0.0;
    std::size_t last = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (w[k] <= 0.0) continue;
      acc += w[k];
      last = k;
      if (u < acc) return k;
    }
    return last;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace bayescorr
