/*
   Copyright 2026 The confocal authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CONFOCAL_RANDOM_HPP
#define CONFOCAL_RANDOM_HPP

#include <cstdint>

#include "confocal/scalar.hpp"

namespace confocal {

/// Counter-based SplitMix64 stream: draw k of stream (seed, key) is a pure function of
/// (seed, key, k), so trials can run in any order or thread and reproduce exactly.
class Rng {
   public:
    Rng(std::uint64_t seed, std::uint64_t key = 0) : base_(mix(seed ^ mix(key + 0x9e3779b97f4a7c15ULL))) {}

    std::uint64_t next() { return mix(base_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Dyadic rational k / 2^bits uniform on [-1, 1].
    Rational dyadic(int bits = 10) {
        const std::int64_t span = std::int64_t{1} << bits;
        std::int64_t k = static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(2 * span + 1)) - span;
        Rational q(static_cast<long>(k), static_cast<unsigned long>(span));
        q.canonicalize();
        return q;
    }

    /// Splits off an independent child stream.
    Rng split(std::uint64_t key) { return Rng(next(), key); }

   private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t base_;
    std::uint64_t counter_ = 0;
};

}  // namespace confocal

#endif  // CONFOCAL_RANDOM_HPP
