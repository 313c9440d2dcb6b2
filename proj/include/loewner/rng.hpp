// Copyright 2026 The loewner developers
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

#ifndef LOEWNER_RNG_HPP
#define LOEWNER_RNG_HPP

#include <cstdint>
#include <string_view>

#include "loewner/types.hpp"

namespace loewner {

// FNV-1a over a byte string; used for stream splitting and instance digests.
constexpr std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : bytes) {
    h ^= static_cast<std::uint8_t>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

// xoshiro256++ with splitmix64 seeding. Reproducible across platforms: no
// std:: distributions anywhere, uniform doubles come from the top 53 bits.
//
// Stream splitting: Rng::for_trial(master_seed, suite_id, trial_index) mixes
// the three values through splitmix64 so that every (suite, trial) pair gets
// an independent, schedule-free stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  static Rng for_trial(std::uint64_t master_seed, std::string_view suite_id,
                       std::uint64_t trial_index);

  std::uint64_t next_u64();
  double uniform01();                    // [0, 1)
  double uniform(double lo, double hi);  // [lo, hi)
  double normal();                       // N(0, 1), Box-Muller
  Complex complex_normal();              // standard complex Gaussian, E|z|^2 = 1
  // Uniform index in [0, n).
  std::size_t index(std::size_t n);

 private:
  std::uint64_t s_[4];
};

}  // namespace loewner

#endif  // LOEWNER_RNG_HPP
