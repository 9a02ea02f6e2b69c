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

// Closed-form signal-to-noise and material feasibility estimates.
//
// All lengths are in cm, g in rad/cm, densities in cm^-3. The closed-form
// formulas count the unhalved difference as the per-shot noise (sigma = alpha);
// recorded_snr converts to the readout convention used by the simulator.

#include <cstddef>
#include <optional>
#include <string>

namespace qns {

/// (sqrt(L)/2) alpha tau c_plus.
double snr_first_order(double alpha, double tau, double L, double c_plus);

/// 2^-K sqrt(L) alpha^K tau^K c_k.
double snr_kth_order(double alpha, double tau, double L, int K, double c_k);

/// Closed-form SNR of a protocol with `s2_shots` S2 shots, rescaled to
/// the recorded observables (S2 shots record half the difference count).
double recorded_snr(double formula_snr, std::size_t s2_shots);

/// g D j_z, radians.
double faraday_angle(double g, double D, double j_z);

enum class SpotShape { square, circular };

/// Square: size^2. Circular: pi size^2 with size the radius.
double spot_area(double size, SpotShape shape);

struct SnrScenario {
    double g = 0.0;         ///< rad/cm
    double D = 0.0;         ///< cm
    double n_s = 0.0;       ///< cm^-3
    double A = 0.0;         ///< cm^2
    double N_ph = 0.0;      ///< photons per pulse
    double L = 1.0;         ///< sequences
    int K = 1;              ///< correlation order
    double moment_k = 1.0;  ///< <(J^z_i)^K>
    std::optional<double> xi;  ///< cm; critical regime when set

    void validate() const;
};

enum class Regime { uncorrelated, critical };

inline const char* regime_name(Regime r) { return r == Regime::uncorrelated ? "uncorrelated" : "critical"; }

struct FeasibilityReport {
    double snr = 0.0;
    double snr_per_sqrt_L = 0.0;
    double L_for_unit_snr = 0.0;
    double base_factor = 0.0;  ///< g sqrt(N_ph)/(2 n_s A), or g xi^3 sqrt(N_ph)/(2A) when critical
    double prefactor = 0.0;    ///< n_s D A, or D A / xi^3 when critical
    Regime regime = Regime::uncorrelated;
};

FeasibilityReport snr_material(const SnrScenario& s);

/// Power of cm carried by each formula ingredient; all must be 0.
struct DimensionalAudit {
    int base_factor = 0;
    int prefactor = 0;
    int faraday_angle = 0;

    bool dimensionless() const { return base_factor == 0 && prefactor == 0 && faraday_angle == 0; }
};

DimensionalAudit audit_dimensions(Regime regime);

/// LiHoF4 constants: g = 20 rad/cm, n_s = 1.39e28 cm^-3, 1e-4 cm focus,
/// N_ph = 1e14, D = 1 cm, J = 8 so moment_k = 8^K.
SnrScenario lihof4_preset(int K, double L = 1.0, SpotShape shape = SpotShape::square);

}  // namespace qns
