// Copyright 2026 The hamdg Authors.
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

#ifndef HAMDG_RNG_H_
#define HAMDG_RNG_H_

#include <cstdint>
#include <utility>
#include <vector>

namespace hamdg {

// Counter-based generator: output i of stream (seed, key) is the SplitMix64
// finalizer applied to a Weyl sequence. Split() derives independent child
// streams, so parallel workers never share state. Distributions are
// implemented here rather than with <random> so that output is identical
// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t key = 0)
      : base_(Mix(seed ^ Mix(key + 0x632be59bd9b4e019ULL))) {}

  std::uint64_t Next() { return Mix(base_ + kGamma * ++counter_); }

  Rng Split(std::uint64_t child) const {
    return Rng(base_ ^ Mix(child + kGamma), counter_);
  }

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t Uniform(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = Next();
    } while (x >= limit);
    return x % bound;
  }

  int UniformInt(int lo, int hi) {
    return lo + static_cast<int>(Uniform(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // 53-bit double in [0, 1).
  double UniformReal() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

  bool Bernoulli(double p) { return UniformReal() < p; }

  template <typename T>
  void Shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[Uniform(i)]);
    }
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  static std::uint64_t Mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t base_;
  std::uint64_t counter_ = 0;
};

}  // namespace hamdg

#endif  // HAMDG_RNG_H_
