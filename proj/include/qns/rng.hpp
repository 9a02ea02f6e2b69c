// Copyright 2026 The qns Authors
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

// Deterministic random streams. Everything here is specified bit-for-bit
// (mt19937_64 plus hand-written transforms) so results do not depend on the
// standard library's distribution implementations.

#include <cstdint>
#include <random>

namespace qns {

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Seed of substream `index` of a master seed (counter-based split).
std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index);

class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Standard normal (Box-Muller, one value cached).
    double normal();
    /// Poisson(mean): exact inversion below `normal_threshold`, otherwise
    /// round(mean + sqrt(mean) z) (continuity-corrected normal), clamped at 0.
    std::uint64_t poisson(double mean, double normal_threshold);
    /// Index drawn from unnormalized non-negative weights.
    std::size_t categorical(const double* weights, std::size_t n);

   private:
    std::mt19937_64 engine_;
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

}  // namespace qns
