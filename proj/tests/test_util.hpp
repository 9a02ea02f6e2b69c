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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "qns/linalg.hpp"
#include "qns/operator.hpp"

namespace qns_test {

using qns::cplx;
using qns::Operator;

inline cplx random_complex(std::mt19937_64& gen) {
    std::normal_distribution<double> n;
    return {n(gen), n(gen)};
}

inline Operator random_matrix(std::size_t d, std::mt19937_64& gen) {
    Operator m(d);
    for (auto& x : m.data()) {
        x = random_complex(gen);
    }
    return m;
}

inline Operator random_hermitian(std::size_t d, std::mt19937_64& gen) {
    const Operator m = random_matrix(d, gen);
    return 0.5 * (m + m.adjoint());
}

inline std::vector<cplx> random_state(std::size_t d, std::mt19937_64& gen) {
    std::vector<cplx> psi(d);
    double norm = 0.0;
    for (auto& x : psi) {
        x = random_complex(gen);
        norm += std::norm(x);
    }
    for (auto& x : psi) {
        x /= std::sqrt(norm);
    }
    return psi;
}

/// Full-rank mixed state rho = M M^dag / Tr.
inline qns::DensityMatrix random_density(std::size_t d, std::mt19937_64& gen) {
    const Operator m = random_matrix(d, gen);
    Operator rho = m * m.adjoint();
    rho *= 1.0 / rho.trace().real();
    return qns::DensityMatrix(0.5 * (rho + rho.adjoint()));
}

inline qns::TargetModel random_model(std::size_t d, std::mt19937_64& gen) {
    return qns::TargetModel(random_hermitian(d, gen), random_hermitian(d, gen), random_density(d, gen));
}

/// Naive triple loop, the product oracle.
inline Operator naive_product(const Operator& a, const Operator& b) {
    const std::size_t d = a.dim();
    Operator c(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < d; ++k) {
                s += a(i, k) * b(k, j);
            }
            c(i, j) = s;
        }
    }
    return c;
}

/// Sorted non-decreasing random times in [0, span).
inline std::vector<double> random_times(std::size_t k, double span, std::mt19937_64& gen) {
    std::uniform_real_distribution<double> u(0.0, span);
    std::vector<double> t(k);
    for (auto& x : t) {
        x = u(gen);
    }
    std::sort(t.begin(), t.end());
    return t;
}

}  // namespace qns_test

namespace qns_test {

/// Least-squares slope of log|y| against log x.
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double lx = std::log(x[i]);
        const double ly = std::log(std::abs(y[i]));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace qns_test
