// Copyright 2026 The qfdiv Authors.
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

#ifndef QFDIV_DETAIL_COUNTER_RNG_HPP
#define QFDIV_DETAIL_COUNTER_RNG_HPP

#include <cstdint>

namespace qfdiv::detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Counter-based generator: the stream for (seed, counter) is independent of
/// any other counter, so sample ranges can be sharded across threads while
/// every sample sees exactly the values it would see serially.
class CounterRng {
public:
  CounterRng(std::uint64_t seed, std::uint64_t counter) {
    // Two mixing rounds decorrelate (seed, counter) pairs.
    std::uint64_t s = seed ^ 0x517cc1b727220a95ull;
    splitmix64(s);
    state_ = s + counter * 0x2545f4914f6cdd1dull;
    splitmix64(state_);
  }

  std::uint64_t next_u64() { return splitmix64(state_); }

  /// Uniform in [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [-1, 1).
  double next_symmetric() { return 2.0 * next_unit() - 1.0; }

private:
  std::uint64_t state_;
};

}  // namespace qfdiv::detail

#endif  // QFDIV_DETAIL_COUNTER_RNG_HPP
