// Copyright 2026 The qudit-mub Authors
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

#ifndef QUDIT_MUB_RANDOM_H
#define QUDIT_MUB_RANDOM_H

#include <cmath>
#include <cstdint>
#include <numbers>

namespace qmub {

/// Stateless counter-based generator: every draw is a pure function of
/// (seed, stream, counter), so results do not depend on evaluation order or platform.
class CounterRng {
   public:
    explicit CounterRng(uint64_t seed) : seed_(seed) {
    }

    uint64_t seed() const {
        return seed_;
    }

    uint64_t bits(uint64_t stream, uint64_t counter) const {
        uint64_t x = mix(seed_ ^ mix(stream + 0x632BE59BD9B4E019ULL));
        return mix(x + counter * 0x9E3779B97F4A7C15ULL);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform(uint64_t stream, uint64_t counter) const {
        return (double)(bits(stream, counter) >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller; consumes counters 2c and 2c+1.
    double normal(uint64_t stream, uint64_t counter) const {
        double u1 = 1.0 - uniform(stream, 2 * counter);
        double u2 = uniform(stream, 2 * counter + 1);
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

   private:
    // splitmix64 finalizer
    static uint64_t mix(uint64_t z) {
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    uint64_t seed_;
};

}  // namespace qmub

#endif
