// Copyright 2026 The starpc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Deterministic randomness. std::mt19937_64 and std::seed_seq are fully
// specified by the standard; the uniform_int_distribution family is not, so
// draws go through UniformBelow to stay reproducible across toolchains.

#ifndef STARPC_RANDOM_HPP_
#define STARPC_RANDOM_HPP_

#include <cstdint>
#include <random>

namespace starpc {

using Rng = std::mt19937_64;

// Named substreams derived from a session seed.
enum class Stream : std::uint32_t {
  kIteration = 1,
  kData = 2,
  kFunctions = 3,
  kSupport = 4,
};

inline Rng Substream(std::uint64_t seed, Stream stream, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

// Uniform integer in [0, bound) by rejection; bound >= 1.
inline std::uint64_t UniformBelow(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = Rng::max() - Rng::max() % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

}  // namespace starpc

#endif  // STARPC_RANDOM_HPP_
