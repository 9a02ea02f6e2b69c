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

#include <cstddef>

namespace qns {

/// Numerical tolerances shared by every module.
struct Tolerances {
    /// Hermiticity, trace and positivity checks on operators and states.
    double structural = 1e-10;
    /// ||U^dagger U - I||_max for computed propagators.
    double unitarity = 1e-9;
    /// Largest imaginary part tolerated on a trace that must be real.
    double imaginary_residue = 1e-10;
    /// Eigenvalues closer than this are merged into one spectral projector.
    double degeneracy = 1e-9;
    /// Probability mass a truncated Fock state may lose beyond the cutoff.
    double fock_leakage = 1e-10;
    /// Memory budget for joint sensor-target buffers (bytes).
    std::size_t joint_memory_budget = std::size_t{2} << 30;
    /// Poisson sampling switches from inversion to the normal approximation
    /// at this mean.
    double poisson_normal_threshold = 30.0;
};

inline constexpr Tolerances kTol{};

}  // namespace qns
