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

#include <vector>

#include "qns/operator.hpp"

namespace qns {

/// Eigendecomposition of a Hermitian operator: h = V diag(values) V^dagger,
/// eigenvalues ascending, eigenvectors in the columns of `vectors`.
struct EigenSystem {
    std::vector<double> values;
    Operator vectors;
};

/// Throws NumericError if h is not Hermitian within kTol.structural.
EigenSystem eigh(const Operator& h);

/// One eigenvalue cluster of a Hermitian operator and its orthogonal projector.
struct SpectralComponent {
    double value;
    Operator projector;
};

/// h = sum_k value_k P_k, eigenvalues closer than `tol` merged (their mean is
/// reported).
std::vector<SpectralComponent> spectral_decomposition(const Operator& h, double tol = kTol.degeneracy);

/// exp(-i h t) from the eigendecomposition of h.
Operator hermitian_expm(const Operator& h, double t);

/// exp(-beta h) / Tr exp(-beta h).
DensityMatrix thermal_state(const Operator& h, double beta);

/// Trace over the leading (sensor) factor of a sensor (x) target operator.
Operator partial_trace_sensor(const Operator& joint, std::size_t sensor_dim);

/// Smallest eigenvalue of a Hermitian operator.
double min_eigenvalue(const Operator& h);

}  // namespace qns
