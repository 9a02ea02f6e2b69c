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

#include "qns/snr.hpp"

#include <cmath>
#include <numbers>

#include "qns/errors.hpp"

namespace qns {

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw ConfigError(std::string("snr: ") + name + " must be positive and finite");
    }
}

}  // namespace

double snr_first_order(double alpha, double tau, double L, double c_plus) {
    return 0.5 * std::sqrt(L) * alpha * tau * c_plus;
}

double snr_kth_order(double alpha, double tau, double L, int K, double c_k) {
    if (K < 1) {
        throw ConfigError("snr: K must be at least 1");
    }
    return std::sqrt(L) * std::pow(0.5 * alpha * tau, K) * c_k;
}

double recorded_snr(double formula_snr, std::size_t s2_shots) {
    return std::ldexp(formula_snr, static_cast<int>(s2_shots));
}

double faraday_angle(double g, double D, double j_z) { return g * D * j_z; }

double spot_area(double size, SpotShape shape) {
    require_positive(size, "spot size");
    return shape == SpotShape::square ? size * size : std::numbers::pi * size * size;
}

void SnrScenario::validate() const {
    require_positive(g, "g");
    require_positive(D, "D");
    require_positive(n_s, "n_s");
    require_positive(A, "A");
    require_positive(N_ph, "N_ph");
    require_positive(L, "L");
    require_positive(moment_k, "moment_k");
    if (K < 1) {
        throw ConfigError("snr: K must be at least 1");
    }
    if (xi) {
        require_positive(*xi, "xi");
    }
}

FeasibilityReport snr_material(const SnrScenario& s) {
    s.validate();
    FeasibilityReport r;
    if (s.xi) {
        const double xi3 = *s.xi * *s.xi * *s.xi;
        r.regime = Regime::critical;
        r.base_factor = s.g * xi3 * std::sqrt(s.N_ph) / (2.0 * s.A);
        r.prefactor = s.D * s.A / xi3;
    } else {
        r.regime = Regime::uncorrelated;
        r.base_factor = s.g * std::sqrt(s.N_ph) / (2.0 * s.n_s * s.A);
        r.prefactor = s.n_s * s.D * s.A;
    }
    // Work in logs: the K = 4 estimate sits near 1e-25 and its square near 1e-50.
    const double log_per_sqrt_l = s.K * std::log(r.base_factor) + std::log(r.prefactor) + std::log(s.moment_k);
    r.snr_per_sqrt_L = std::exp(log_per_sqrt_l);
    r.snr = std::sqrt(s.L) * r.snr_per_sqrt_L;
    r.L_for_unit_snr = std::exp(-2.0 * log_per_sqrt_l);
    return r;
}

DimensionalAudit audit_dimensions(Regime regime) {
    // cm exponents: g -1, D +1, n_s -3, A +2, xi +1, N_ph and moments 0.
    constexpr int g = -1, D = 1, n_s = -3, A = 2, xi = 1;
    DimensionalAudit a;
    if (regime == Regime::uncorrelated) {
        a.base_factor = g - (n_s + A);
        a.prefactor = n_s + D + A;
    } else {
        a.base_factor = g + 3 * xi - A;
        a.prefactor = D + A - 3 * xi;
    }
    a.faraday_angle = g + D;
    return a;
}

SnrScenario lihof4_preset(int K, double L, SpotShape shape) {
    SnrScenario s;
    s.g = 20.0;
    s.D = 1.0;
    s.n_s = 1.39e28;
    s.A = spot_area(1e-4, shape);
    s.N_ph = 1e14;
    s.L = L;
    s.K = K;
    s.moment_k = std::pow(8.0, K);
    return s;
}

}  // namespace qns
