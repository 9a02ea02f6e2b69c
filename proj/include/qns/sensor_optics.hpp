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

// Photon polarization as a pseudo-spin sensor.
//
// Two polarization modes H and V, each truncated at n_max photons; Fock index
// of |n_H, n_V> is n_H * (n_max + 1) + n_V. Stokes operators:
//   S1 = (n_H - n_V) / 2
//   S2 = (a_H^dag a_V + a_V^dag a_H) / 2
//   S3 = (-i a_H^dag a_V + i a_V^dag a_H) / 2
// The light-target coupling exp(-i tau S3 (x) B) rotates the polarization
// plane of |alpha, H> by theta = tau * b / 2 for a target eigenvalue b.
//
// Interferometer: the PBS reflects H into arm a and transmits V into arm b,
// arm b picks up exp(i phi), and the 1:1 splitter maps (a, b) to
// c = (a + i b)/sqrt(2), d = (i a + b)/sqrt(2). With this labeling
// n_d - n_c = 2 S2 at phi = pi/2 and n_d - n_c = 2 S3 at phi = 0.

#include <array>
#include <cstddef>
#include <memory>
#include <numbers>
#include <vector>

#include "qns/operator.hpp"
#include "qns/sparse.hpp"

namespace qns {

/// Polarization component selected by the interferometer phase.
enum class Basis { S2, S3 };

inline const char* basis_name(Basis b) { return b == Basis::S2 ? "S2" : "S3"; }

/// Interferometer phase that selects the basis.
inline double basis_phase(Basis b) { return b == Basis::S2 ? std::numbers::pi / 2 : 0.0; }

/// Recorded observable per shot is readout_scale(basis) * (n_d - n_c):
/// S2 shots record the half difference (= S2), S3 shots the full difference
/// (= n_R - n_L = 2 S3). Both choices give the selection coefficient
/// alpha^2 / 2 against the target superoperator they select.
inline double readout_scale(Basis b) { return b == Basis::S2 ? 0.5 : 1.0; }

struct SensorConfig {
    double alpha = 1.0;  ///< real coherent amplitude, N_ph = alpha^2
    double tau = 0.0;    ///< pulse duration (s)
    double phase = 0.0;  ///< interferometer phase (rad)
    /// Swap the c/d detector labels; flips the sign of every difference count.
    bool swap_detectors = false;

    /// Throws ConfigError unless alpha > 0 and tau > 0.
    void validate() const;
};

/// Per-mode photon cutoff.
struct FockTruncation {
    unsigned n_max = 1;

    /// ceil(alpha^2 + 10 alpha + 10)
    static FockTruncation for_alpha(double alpha);
    /// Whether the cutoff satisfies the rule n_max >= alpha^2 + 10 alpha + 10.
    bool admits(double alpha) const;
    /// Throws NumericError when !admits(alpha).
    void require(double alpha) const;
    std::size_t dim() const { return (std::size_t{n_max} + 1) * (std::size_t{n_max} + 1); }
};

/// Mode and Stokes operators of one truncated two-mode space.
struct FockSpace {
    unsigned n_max;
    SparseOperator a_h;
    SparseOperator a_v;
    SparseOperator n_h;
    SparseOperator n_v;
    SparseOperator s1;
    SparseOperator s2;
    SparseOperator s3;

    std::size_t dim() const { return (std::size_t{n_max} + 1) * (std::size_t{n_max} + 1); }
    std::size_t index(unsigned nh, unsigned nv) const { return std::size_t{nh} * (n_max + 1) + nv; }
    /// Indices of the basis states with n_H + n_V <= total.
    std::vector<std::size_t> subspace_up_to(unsigned total) const;

    /// Shared immutable instance; safe to call from several threads.
    static std::shared_ptr<const FockSpace> get(unsigned n_max);
};

struct StokesOperators {
    SparseOperator s1;
    SparseOperator s2;
    SparseOperator s3;
};

StokesOperators stokes_operators(const FockTruncation& tr);

/// Recorded observable of a basis on the truncated space: S2 or 2 S3.
SparseOperator readout_observable(Basis basis, const FockTruncation& tr);

/// |alpha, H>: H mode coherent, V mode vacuum. Throws NumericError when the
/// truncation rule fails or the truncated norm deviates from 1 by > 1e-10.
std::vector<cplx> coherent_state(double alpha, const FockTruncation& tr);

/// Sensor traces deciding which target superoperator a readout selects:
///   t0      = Tr[L rho_s]
///   t_plus  = Tr[L S3^+ rho_s]  = <{L, S3}> / 2
///   t_minus = Tr[L S3^- rho_s]  = <[L, S3]> / i
struct SensorTraces {
    double t0;
    double t_plus;
    double t_minus;
};

/// Traces of an arbitrary Hermitian readout on |alpha, H><alpha, H|.
SensorTraces sensor_traces(const SparseOperator& readout, double alpha, const FockTruncation& tr);

struct SelectionTraces {
    SensorTraces s2;  ///< recorded S2 readout
    SensorTraces s3;  ///< recorded S3 readout (2 S3)
};

SelectionTraces selection_traces(double alpha, const FockTruncation& tr);

/// Coherent amplitudes at the two detectors.
struct OutputAmplitudes {
    cplx beta_c;
    cplx beta_d;

    /// <n_d - n_c>
    double mean_difference() const { return std::norm(beta_d) - std::norm(beta_c); }
};

/// Network applied to arbitrary input amplitudes (H, V).
OutputAmplitudes network_amplitudes(cplx in_h, cplx in_v, double phase, bool swap_detectors = false);

/// |alpha, H> rotated by the polarization-plane angle, then sent through the
/// interferometer at cfg.phase.
OutputAmplitudes interferometer_amplitudes(const SensorConfig& cfg, double plane_angle);

/// Plane rotation produced by target eigenvalue b during one pulse.
inline double plane_rotation_angle(double tau, double b) { return 0.5 * tau * b; }

/// exp(-i angle S3) restricted to the complete photon-number sectors
/// N <= n_max, diagonalized once per cutoff.
class S3Propagator {
   public:
    explicit S3Propagator(unsigned n_max);

    /// exp(-i angle S3) psi. psi must vanish outside the sectors N <= n_max.
    std::vector<cplx> apply(std::span<const cplx> psi, double angle) const;

    unsigned n_max() const { return n_max_; }
    std::size_t footprint_bytes() const;

    /// Shared immutable instance per cutoff.
    static std::shared_ptr<const S3Propagator> get(unsigned n_max);

   private:
    struct Sector {
        std::vector<std::size_t> indices;
        std::vector<double> values;
        Operator vectors;
    };
    unsigned n_max_;
    std::vector<Sector> sectors_;
};

}  // namespace qns
