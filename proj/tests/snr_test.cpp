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

#include "gtest/gtest.h"
#include "qns/errors.hpp"
#include "qns/trajectory.hpp"

using namespace qns;

TEST(SnrFirstOrder, examples) {
    EXPECT_EQ(snr_first_order(3.0, 0.1, 100.0, 0.0), 0.0);
    EXPECT_DOUBLE_EQ(snr_first_order(1.0, 1.0, 4.0, 1.0), 1.0);
}

TEST(SnrKthOrder, examples) {
    EXPECT_DOUBLE_EQ(snr_kth_order(2.0, 0.3, 50.0, 1, 0.7), snr_first_order(2.0, 0.3, 50.0, 0.7));
    EXPECT_NEAR(snr_kth_order(10.0, 0.01, 1e4, 2, 1.0), 0.25, 1e-15);
    EXPECT_THROW(snr_kth_order(1.0, 1.0, 1.0, 0, 1.0), ConfigError);
}

TEST(SnrFirstOrder, matches_monte_carlo) {
    // Constant field b0 = 1: C+ = b0. Recorded S2 readouts are half counts,
    // so the recorded SNR is twice the closed-form value.
    const double alpha = 10.0, tau = 0.02, l = 10000;
    TrajectoryConfig c;
    c.mode = TrajectoryMode::semiclassical_field;
    c.field = ClassicalFieldModel{ClassicalFieldModel::Kind::constant, 1.0, 1.0};
    c.proto.shots = {{0.0, Basis::S2}};
    c.proto.sensor = SensorConfig{alpha, tau, 0.0};
    c.sequences = static_cast<std::size_t>(l);
    c.seed = 5;
    const double predicted = recorded_snr(snr_first_order(alpha, tau, l, 1.0), 1);
    EXPECT_NEAR(empirical_snr(run_sequences(c)) / predicted, 1.0, 0.2);
}

TEST(FaradayAngle, examples) {
    EXPECT_EQ(faraday_angle(20.0, 1.0, 0.0), 0.0);
    EXPECT_NEAR(faraday_angle(20.0, 1.0, 1e-12), 2e-11, 1e-26);
}

TEST(FaradayAngle, single_spin_matches_material_base) {
    // One fully polarized spin (J = 8) in N_s = n_s A D spins rotates the
    // plane by g D 8 / N_s; scaled by sqrt(N_ph)/2 this is the per-spin base.
    const SnrScenario s = lihof4_preset(1);
    const double n_spins = s.n_s * s.A * s.D;
    const double theta = faraday_angle(s.g, s.D, 8.0 / n_spins);
    const auto rep = snr_material(s);
    EXPECT_NEAR(theta * std::sqrt(s.N_ph) / 2 / s.D, rep.base_factor * 8.0, 1e-12 * rep.base_factor * 8.0);
}

TEST(SnrMaterial, lihof4_reproduces_estimates) {
    for (int k : {2, 3, 4}) {
        const auto rep = snr_material(lihof4_preset(k));
        EXPECT_EQ(rep.regime, Regime::uncorrelated);
        const double reference = std::pow(8e-12, k) * 1e20;
        EXPECT_LT(std::abs(std::log10(rep.snr_per_sqrt_L / reference)), 1.0) << k;
        EXPECT_NEAR(rep.base_factor * 8.0, 5.76e-12, 0.01e-12);
        EXPECT_NEAR(rep.prefactor, 1.39e20, 1e17);
    }
    const double l2 = snr_material(lihof4_preset(2)).L_for_unit_snr;
    const double l4 = snr_material(lihof4_preset(4)).L_for_unit_snr;
    EXPECT_LT(std::abs(std::log10(l2 / 1e5)), 1.0);
    EXPECT_GT(l4, 1e48);
    EXPECT_TRUE(std::isfinite(l4));
}

TEST(SnrMaterial, report_consistency) {
    SnrScenario s = lihof4_preset(2, 1e6);
    const auto rep = snr_material(s);
    EXPECT_NEAR(rep.snr, 1e3 * rep.snr_per_sqrt_L, 1e-12 * rep.snr);
    EXPECT_NEAR(rep.L_for_unit_snr, 1.0 / (rep.snr_per_sqrt_L * rep.snr_per_sqrt_L), 1e-10 * rep.L_for_unit_snr);
}

TEST(SnrMaterial, circular_spot_option) {
    const auto sq = lihof4_preset(2, 1.0, SpotShape::square);
    const auto ci = lihof4_preset(2, 1.0, SpotShape::circular);
    EXPECT_NEAR(ci.A / sq.A, std::numbers::pi, 1e-12);
}

TEST(SnrMaterialProperty, monotonicity) {
    const SnrScenario base = lihof4_preset(2, 1e4);
    const double s0 = snr_material(base).snr;
    for (double f : {1.5, 4.0}) {
        SnrScenario s = base;
        s.L *= f;
        EXPECT_GT(snr_material(s).snr, s0);
        s = base;
        s.N_ph *= f;
        EXPECT_GT(snr_material(s).snr, s0);
        s = base;
        s.g *= f;
        EXPECT_GT(snr_material(s).snr, s0);
    }
    // Base factor below one: higher orders are weaker at a fixed per-spin moment.
    for (int k = 1; k < 6; ++k) {
        SnrScenario a = base, b = base;
        a.K = k;
        b.K = k + 1;
        a.moment_k = b.moment_k = 1.0;
        EXPECT_LT(snr_material(b).snr, snr_material(a).snr);
    }
}

TEST(SnrMaterialProperty, critical_crossover) {
    SnrScenario s = lihof4_preset(1);
    // xi^3 g sqrt(N_ph) / (2A) = 1.
    s.xi = std::cbrt(2 * s.A / (s.g * std::sqrt(s.N_ph)));
    EXPECT_NEAR(snr_material(s).base_factor, 1.0, 1e-12);
    s.xi = *s.xi * 3.0;
    const double base = snr_material(s).base_factor;
    ASSERT_GE(base, 1.0);
    const double mpf = 8.0;
    for (int k = 1; k < 5; ++k) {
        SnrScenario a = s, b = s;
        a.K = k;
        a.moment_k = std::pow(mpf, k);
        b.K = k + 1;
        b.moment_k = std::pow(mpf, k + 1);
        const auto ra = snr_material(a);
        const auto rb = snr_material(b);
        EXPECT_EQ(ra.regime, Regime::critical);
        EXPECT_NEAR(rb.snr / ra.snr, base * b.moment_k / a.moment_k, 1e-9 * base * mpf);
        EXPECT_GE(rb.snr, ra.snr);
    }
}

TEST(SnrMaterial, dimensional_audit) {
    EXPECT_TRUE(audit_dimensions(Regime::uncorrelated).dimensionless());
    EXPECT_TRUE(audit_dimensions(Regime::critical).dimensionless());
}

TEST(SnrMaterial, rejects_unphysical_inputs) {
    SnrScenario s = lihof4_preset(2);
    s.n_s = -1.0;
    EXPECT_THROW(snr_material(s), ConfigError);
    s = lihof4_preset(2);
    s.K = 0;
    EXPECT_THROW(snr_material(s), ConfigError);
    s = lihof4_preset(2);
    s.xi = 0.0;
    EXPECT_THROW(snr_material(s), ConfigError);
}

TEST(RecordedSnr, conversion) {
    EXPECT_EQ(recorded_snr(3.0, 0), 3.0);
    EXPECT_EQ(recorded_snr(3.0, 2), 12.0);
}
