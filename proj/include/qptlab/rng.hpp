// Copyright 2026 The qptlab Authors
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

namespace qptlab {

/// Counter-based 64-bit generator.
///
/// Output i of stream `seed` is the SplitMix64 finalizer applied to
/// `seed + (i+1) * 0x9E3779B97F4A7C15`. Instance identity therefore lives in
/// the specification of this mixing function, not in any library
/// implementation: skipping ahead, replaying, and splitting streams are all
/// pure integer arithmetic.
class CounterRng {
  public:
    explicit CounterRng(uint64_t seed) : seed_(seed) {}

    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    uint64_t next_u64() {
        counter_++;
        return mix(seed_ + counter_ * 0x9E3779B97F4A7C15ULL);
    }

    /// Uniform in [0, 1) with 53 bits of precision.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Unbiased uniform integer in [0, bound) via rejection.
    uint64_t next_below(uint64_t bound) {
        uint64_t threshold = (0ULL - bound) % bound;
        for (;;) {
            uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    uint64_t seed() const { return seed_; }

  private:
    uint64_t seed_;
    uint64_t counter_ = 0;
};

/// Splittable seed derivation for sweep tasks.
///
/// derive_seed(master, i, r) = mix(mix(master ^ GOLDEN*(i+1)) ^ GOLDEN*(r+1))
/// with GOLDEN = 0x9E3779B97F4A7C15. A pure integer function, identical on
/// every platform; collision-free over any practical sweep domain.
inline uint64_t derive_seed(uint64_t master, uint64_t instance_index,
                            uint64_t repetition_index) {
    constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
    uint64_t s = CounterRng::mix(master ^ (kGolden * (instance_index + 1)));
    return CounterRng::mix(s ^ (kGolden * (repetition_index + 1)));
}

}  // namespace qptlab
