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

#include "qns/sensor_optics.hpp"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "qns/errors.hpp"

using namespace qns;

namespace {

/// max |<r| op |c>| over basis states r, c with at most `total` photons.
double max_on_subspace(const SparseOperator& op, const FockSpace& fs, unsigned total) {
    const auto idx = fs.subspace_up_to(total);
    double m = 0.0;
    for (std::size_t r : idx) {
        for (std::size_t c : idx) {
            m = std::max(m, std::abs(op.at(r, c)));
        }
    }
    return m;
}

/// Two-mode coherent state |a>_H |b>_V on the truncated space (oracle).
std::vector<cplx> two_mode_coherent(cplx a, cplx b, const FockSpace& fs) {
    std::vector<cplx> psi(fs.dim());
    const double norm = std::exp(-0.5 * (std::norm(a) + std::norm(b)));
    for (unsigned nh = 0; nh <= fs.n_max; ++nh) {
        for (unsigned nv = 0; nv <= fs.n_max; ++nv) {
            psi[fs.index(nh, nv)] = norm * std::pow(a, nh) * std::pow(b, nv) /
                                    std::sqrt(std::tgamma(nh + 1.0) * std::tgamma(nv + 1.0));
        }
    }
    return psi;
}

double expectation(const SparseOperator& op, const std::vector<cplx>& psi) {
    const auto y = op.apply(psi);
    cplx s = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i) {
        s += std::conj(psi[i]) * y[i];
    }
    return s.real();
}

const cplx I{0.0, 1.0};

}  // namespace

TEST(FockTruncation, rule) {
    EXPECT_EQ(FockTruncation::for_alpha(2.0).n_max, 34u);
    EXPECT_EQ(FockTruncation::for_alpha(4.0).n_max, 66u);
    EXPECT_TRUE(FockTruncation{40}.admits(2.0));
    EXPECT_FALSE(FockTruncation{20}.admits(2.0));
    EXPECT_THROW(FockTruncation{20}.require(2.0), NumericError);
}

TEST(Stokes, su2_commutators_on_safe_subspace) {
    const unsigned n_max = 8;
    const auto fs = FockSpace::get(n_max);
    const auto s = stokes_operators(FockTruncation{n_max});
    // Exact up to rounding of the sqrt(n) matrix elements.
    EXPECT_LT(max_on_subspace(s.s1 * s.s2 - s.s2 * s.s1 - s.s3.scaled(I), *fs, n_max - 1), 1e-13);
    EXPECT_LT(max_on_subspace(s.s2 * s.s3 - s.s3 * s.s2 - s.s1.scaled(I), *fs, n_max - 1), 1e-13);
    EXPECT_LT(max_on_subspace(s.s3 * s.s1 - s.s1 * s.s3 - s.s2.scaled(I), *fs, n_max - 1), 1e-13);
}

TEST(Stokes, hermitian) {
    const auto s = stokes_operators(FockTruncation{6});
    for (const SparseOperator* op : {&s.s1, &s.s2, &s.s3}) {
        EXPECT_TRUE(op->dense().is_hermitian(0.0));
    }
}

TEST(Stokes, anomalous_anticommutator_s2_s3) {
    const unsigned n_max = 8;
    const auto fs = FockSpace::get(n_max);
    const auto& s = *fs;
    const SparseOperator anti = s.s2 * s.s3 + s.s3 * s.s2;
    const SparseOperator avd = s.a_v.adjoint();
    const SparseOperator term = (avd * avd * s.a_h * s.a_h).scaled(0.5 * I);
    const SparseOperator rhs = term + term.adjoint();
    EXPECT_LT(max_on_subspace(anti - rhs, s, n_max - 2), 1e-13);
    EXPECT_GT(max_on_subspace(anti, s, n_max - 2), 0.5);
}

TEST(Stokes, anomalous_anticommutator_s3_s3) {
    const unsigned n_max = 8;
    const auto fs = FockSpace::get(n_max);
    const auto& s = *fs;
    const SparseOperator lhs = (s.s3 * s.s3).scaled(2.0);
    const SparseOperator x = s.a_h.adjoint() * s.a_v;
    const SparseOperator rhs = s.n_h * s.n_v + (s.n_h + s.n_v).scaled(0.5) - (x * x + (x * x).adjoint()).scaled(0.5);
    EXPECT_LT(max_on_subspace(lhs - rhs, s, n_max - 2), 1e-13);
}

TEST(Stokes, vacuum_expectations_vanish) {
    const auto fs = FockSpace::get(5);
    std::vector<cplx> vac(fs->dim());
    vac[fs->index(0, 0)] = 1.0;
    for (const SparseOperator* op : {&fs->s1, &fs->s2, &fs->s3}) {
        EXPECT_EQ(expectation(*op, vac), 0.0);
    }
}

TEST(CoherentState, zero_amplitude_is_vacuum) {
    const FockTruncation tr{10};
    const auto psi = coherent_state(0.0, tr);
    const auto fs = FockSpace::get(10);
    for (std::size_t i = 0; i < psi.size(); ++i) {
        EXPECT_EQ(psi[i], i == fs->index(0, 0) ? cplx(1.0) : cplx(0.0));
    }
}

TEST(CoherentState, moments) {
    for (double alpha : {0.5, 2.0, 4.0}) {
        const FockTruncation tr = FockTruncation::for_alpha(alpha);
        const auto fs = FockSpace::get(tr.n_max);
        const auto psi = coherent_state(alpha, tr);
        EXPECT_NEAR(expectation(fs->n_h, psi), alpha * alpha, 1e-9);
        EXPECT_NEAR(expectation(fs->s1, psi), alpha * alpha / 2, 1e-9);
        EXPECT_NEAR(expectation(fs->s2, psi), 0.0, 1e-12);
        EXPECT_NEAR(expectation(fs->s3, psi), 0.0, 1e-12);
    }
}

TEST(CoherentState, insufficient_truncation_throws) {
    EXPECT_THROW(coherent_state(3.0, FockTruncation{20}), NumericError);
}

TEST(SelectionTraces, s2_selects_commutator_branch) {
    for (double alpha : {1.0, 2.0, 3.0, 4.0}) {
        const auto t = selection_traces(alpha, FockTruncation::for_alpha(alpha)).s2;
        const double a2 = alpha * alpha;
        EXPECT_NEAR(t.t0, 0.0, 1e-8 * a2);
        EXPECT_NEAR(t.t_plus, 0.0, 1e-8 * a2);
        EXPECT_NEAR(t.t_minus, a2 / 2, 1e-8 * a2);
    }
}

TEST(SelectionTraces, s3_selects_anticommutator_branch) {
    for (double alpha : {1.0, 2.0, 3.0, 4.0}) {
        const FockTruncation tr = FockTruncation::for_alpha(alpha);
        const double a2 = alpha * alpha;
        const auto t = selection_traces(alpha, tr).s3;
        EXPECT_NEAR(t.t0, 0.0, 1e-8 * a2);
        EXPECT_NEAR(t.t_plus, a2 / 2, 1e-8 * a2);
        EXPECT_NEAR(t.t_minus, 0.0, 1e-8 * a2);
        // The bare S3 operator carries half of it: <{S3, S3}>/2 = alpha^2 / 4.
        const auto raw = sensor_traces(stokes_operators(tr).s3, alpha, tr);
        EXPECT_NEAR(raw.t_plus, a2 / 4, 1e-8 * a2);
    }
}

TEST(SelectionTraces, vanish_without_light) {
    const auto t = selection_traces(0.0, FockTruncation{10});
    for (const auto& x : {t.s2, t.s3}) {
        EXPECT_EQ(x.t0, 0.0);
        EXPECT_EQ(x.t_plus, 0.0);
        EXPECT_EQ(x.t_minus, 0.0);
    }
}

TEST(Interferometer, balanced_without_rotation) {
    SensorConfig cfg{3.0, 0.1, 0.0};
    const auto out = interferometer_amplitudes(cfg, 0.0);
    EXPECT_NEAR(std::norm(out.beta_c), 4.5, 1e-12);
    EXPECT_NEAR(std::norm(out.beta_d), 4.5, 1e-12);
    EXPECT_NEAR(out.mean_difference(), 0.0, 1e-12);
}

TEST(Interferometer, s2_readout_is_linear_in_angle) {
    const double alpha = 3.0;
    SensorConfig cfg{alpha, 0.1, std::numbers::pi / 2};
    for (double theta : {1e-4, 1e-3, 0.01, 0.1}) {
        const auto out = interferometer_amplitudes(cfg, theta);
        EXPECT_NEAR(out.mean_difference() / 2, alpha * alpha / 2 * std::sin(2 * theta), 1e-12);
    }
    // Linearization: (half difference) / (alpha^2 theta) -> 1.
    double prev = 2.0;
    for (double theta : {0.1, 0.01, 0.001}) {
        const double ratio = interferometer_amplitudes(cfg, theta).mean_difference() / 2 / (alpha * alpha * theta);
        EXPECT_LT(std::abs(ratio - 1.0), std::abs(prev - 1.0) + 1e-15);
        prev = ratio;
    }
    EXPECT_NEAR(prev, 1.0, 1e-6);
}

TEST(Interferometer, swap_flag_flips_sign) {
    SensorConfig cfg{2.0, 0.1, std::numbers::pi / 2};
    const double d = interferometer_amplitudes(cfg, 0.05).mean_difference();
    cfg.swap_detectors = true;
    EXPECT_NEAR(interferometer_amplitudes(cfg, 0.05).mean_difference(), -d, 1e-12);
}

TEST(InterferometerProperty, photon_conservation) {
    for (double phi = -3.0; phi <= 3.0; phi += 0.37) {
        for (double theta = -1.5; theta <= 1.5; theta += 0.23) {
            SensorConfig cfg{2.5, 0.1, phi};
            const auto out = interferometer_amplitudes(cfg, theta);
            EXPECT_NEAR(std::norm(out.beta_c) + std::norm(out.beta_d), 6.25, 1e-12);
        }
    }
}

TEST(InterferometerProperty, basis_mapping_against_fock_expectations) {
    const double alpha = 2.0;
    const FockTruncation tr = FockTruncation::for_alpha(alpha);
    const auto fs = FockSpace::get(tr.n_max);
    const double a2 = alpha * alpha;
    for (double theta = -0.3; theta <= 0.3001; theta += 0.05) {
        const auto rotated = two_mode_coherent(alpha * std::cos(theta), alpha * std::sin(theta), *fs);
        SensorConfig s2{alpha, 0.1, std::numbers::pi / 2};
        SensorConfig s3{alpha, 0.1, 0.0};
        EXPECT_NEAR(interferometer_amplitudes(s2, theta).mean_difference() / 2, expectation(fs->s2, rotated), 1e-8 * a2);
        EXPECT_NEAR(interferometer_amplitudes(s3, theta).mean_difference(), 2 * expectation(fs->s3, rotated), 1e-8 * a2);
    }
    // Circular components need complex inputs: check the phi = 0 mapping there.
    for (cplx b : {cplx(0.3, 0.4), cplx(-0.2, 0.7), cplx(0.5, -0.5)}) {
        const cplx a(1.5, 0.2);
        const auto psi = two_mode_coherent(a, b, *fs);
        EXPECT_NEAR(network_amplitudes(a, b, 0.0).mean_difference(), 2 * expectation(fs->s3, psi), 1e-8 * a2);
        EXPECT_NEAR(network_amplitudes(a, b, std::numbers::pi / 2).mean_difference(), 2 * expectation(fs->s2, psi),
                    1e-8 * a2);
    }
}

TEST(S3Propagator, rotates_polarization_plane) {
    const double alpha = 2.0;
    const FockTruncation tr = FockTruncation::for_alpha(alpha);
    const auto fs = FockSpace::get(tr.n_max);
    const auto prop = S3Propagator::get(tr.n_max);
    const auto psi = coherent_state(alpha, tr);
    for (double tb : {0.05, 0.4, -1.0}) {
        const auto out = prop->apply(psi, tb);
        const double theta = plane_rotation_angle(1.0, tb);
        const auto expected = two_mode_coherent(alpha * std::cos(theta), alpha * std::sin(theta), *fs);
        double err = 0.0;
        for (std::size_t i = 0; i < out.size(); ++i) {
            err = std::max(err, std::abs(out[i] - expected[i]));
        }
        EXPECT_LT(err, 1e-9) << tb;
        // Mean recorded S2 readout: (alpha^2 / 2) sin(tau b).
        EXPECT_NEAR(expectation(fs->s2, out), (alpha * alpha / 2) * std::sin(tb), 1e-9);
    }
}
