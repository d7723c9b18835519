// Copyright 2026 The qcat Authors
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

#ifndef QCAT_RNG_H_
#define QCAT_RNG_H_

#include <cstdint>
#include <random>

namespace qcat {

/// Deterministic random stream addressed by (master seed, stream id).
///
/// Monte-Carlo trials draw their stream id from the trial index, so results
/// are bit-identical no matter how trials are scheduled across threads.
/// Doubles are built from raw 64-bit draws rather than std distributions,
/// whose output is not pinned down by the standard.
class TrialRng {
 public:
  TrialRng(std::uint64_t master_seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(master_seed),
                      static_cast<std::uint32_t>(master_seed >> 32),
                      static_cast<std::uint32_t>(stream),
                      static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53-bit resolution.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform on [-1, 1).
  double next_symmetric() { return 2.0 * next_unit() - 1.0; }

  /// Uniform on {0, ..., bound-1} via rejection.
  std::size_t next_index(std::size_t bound) {
    const std::uint64_t limit =
        std::uint64_t(-1) - (std::uint64_t(-1) % bound + 1) % bound;
    std::uint64_t draw;
    do {
      draw = next_u64();
    } while (draw > limit);
    return static_cast<std::size_t>(draw % bound);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qcat

#endif  // QCAT_RNG_H_
