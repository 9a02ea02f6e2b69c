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

#include "qns/linalg.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "qns/errors.hpp"

namespace qns {

namespace {

Eigen::MatrixXcd to_eigen(const Operator& op) {
    const auto n = static_cast<Eigen::Index>(op.dim());
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            m(i, j) = op(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        }
    }
    return m;
}

// V f(D) V^dagger for real weights f(lambda_k).
Operator reconstruct(const EigenSystem& es, const std::vector<cplx>& weights) {
    const std::size_t n = es.values.size();
    Operator scaled(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            scaled(i, k) = es.vectors(i, k) * weights[k];
        }
    }
    return matmul(scaled, es.vectors.adjoint());
}

}  // namespace

EigenSystem eigh(const Operator& h) {
    if (!h.is_hermitian(kTol.structural)) {
        throw NumericError("eigh: operator is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(h));
    if (solver.info() != Eigen::Success) {
        throw NumericError("eigh: eigensolver did not converge");
    }
    const std::size_t n = h.dim();
    EigenSystem out{std::vector<double>(n), Operator(n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = solver.eigenvalues()(static_cast<Eigen::Index>(k));
        for (std::size_t i = 0; i < n; ++i) {
            out.vectors(i, k) = solver.eigenvectors()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k));
        }
    }
    return out;
}

std::vector<SpectralComponent> spectral_decomposition(const Operator& h, double tol) {
    const EigenSystem es = eigh(h);
    const std::size_t n = es.values.size();
    std::vector<SpectralComponent> out;
    std::size_t start = 0;
    while (start < n) {
        std::size_t end = start + 1;
        while (end < n && es.values[end] - es.values[end - 1] <= tol) {
            ++end;
        }
        Operator proj(n);
        double mean = 0.0;
        for (std::size_t k = start; k < end; ++k) {
            mean += es.values[k];
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    proj(i, j) += es.vectors(i, k) * std::conj(es.vectors(j, k));
                }
            }
        }
        out.push_back({mean / static_cast<double>(end - start), std::move(proj)});
        start = end;
    }
    return out;
}

Operator hermitian_expm(const Operator& h, double t) {
    const EigenSystem es = eigh(h);
    std::vector<cplx> phases(es.values.size());
    for (std::size_t k = 0; k < phases.size(); ++k) {
        phases[k] = std::exp(-kI * (es.values[k] * t));
    }
    return reconstruct(es, phases);
}

DensityMatrix thermal_state(const Operator& h, double beta) {
    if (!(beta >= 0.0)) {
        throw NumericError("thermal_state: beta must be non-negative");
    }
    const EigenSystem es = eigh(h);
    const double e0 = es.values.front();
    std::vector<cplx> weights(es.values.size());
    double z = 0.0;
    for (std::size_t k = 0; k < weights.size(); ++k) {
        const double w = std::exp(-beta * (es.values[k] - e0));
        weights[k] = w;
        z += w;
    }
    for (auto& w : weights) {
        w /= z;
    }
    Operator rho = reconstruct(es, weights);
    // Restore exact Hermiticity lost to roundoff in the reconstruction.
    rho = 0.5 * (rho + rho.adjoint());
    return DensityMatrix(std::move(rho));
}

Operator partial_trace_sensor(const Operator& joint, std::size_t sensor_dim) {
    if (sensor_dim == 0 || joint.dim() % sensor_dim != 0) {
        throw DimensionError("partial_trace_sensor: joint dim not divisible by sensor dim");
    }
    const std::size_t nt = joint.dim() / sensor_dim;
    Operator out(nt);
    for (std::size_t s = 0; s < sensor_dim; ++s) {
        for (std::size_t i = 0; i < nt; ++i) {
            for (std::size_t j = 0; j < nt; ++j) {
                out(i, j) += joint(s * nt + i, s * nt + j);
            }
        }
    }
    return out;
}

double min_eigenvalue(const Operator& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(h), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericError("min_eigenvalue: eigensolver did not converge");
    }
    return solver.eigenvalues()(0);
}

}  // namespace qns
