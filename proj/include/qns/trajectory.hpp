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

// Monte Carlo of the photon-counting experiment.
//
// Quantum mode: B(t_j) = sum_k b_k P_k. Given branch k the sensor leaves the
// interferometer in the coherent state |beta_c(b_k), beta_d(b_k)>, so the
// outcome probability is the Poisson mixture
//   P(n_c, n_d) = sum_k Tr[P_k rho] Pois(n_c; |beta_c,k|^2) Pois(n_d; |beta_d,k|^2)
// and the target is updated with the full Kraus element
//   K = sum_k <n_c, n_d | beta_c,k, beta_d,k> P_k,   rho -> K rho K^dag / P.
// Branch interference therefore enters only through the state update, which
// is exact. Sampling draws k first, then the two Poisson counts.
//
// Semiclassical mode: a classical field b(t) replaces B; counts are Poisson
// with the same means and the field is not disturbed.
//
// The target is kept in the interaction picture (B evaluated at each shot's
// coupling time), which equals free evolution between shots.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qns/linalg.hpp"
#include "qns/operator.hpp"
#include "qns/rng.hpp"
#include "qns/sensor_optics.hpp"
#include "qns/weak_measurement.hpp"

namespace qns {

struct CountOutcome {
    std::uint64_t n_c = 0;
    std::uint64_t n_d = 0;
    std::size_t branch = 0;  ///< eigenvalue branch drawn (sampling detail)

    double difference() const { return static_cast<double>(n_d) - static_cast<double>(n_c); }
};

/// Spectral data and detector amplitudes of one shot; independent of the
/// target state, so it is built once per shot and shared by all sequences.
class ShotChannel {
   public:
    ShotChannel(const Operator& b, const SensorConfig& cfg, double phase);

    std::size_t branches() const { return components_.size(); }
    double eigenvalue(std::size_t k) const { return components_[k].value; }
    const Operator& projector(std::size_t k) const { return components_[k].projector; }
    const OutputAmplitudes& amplitudes(std::size_t k) const { return amplitudes_[k]; }

    /// Tr[P_k rho], clipped at 0 and normalized.
    std::vector<double> branch_probabilities(const Operator& rho) const;
    /// Exact P(n_c, n_d | rho).
    double probability(const Operator& rho, std::uint64_t n_c, std::uint64_t n_d) const;
    CountOutcome sample(const Operator& rho, Rng& rng, double poisson_threshold) const;
    /// Kraus element for an outcome, with its true normalization.
    Operator kraus(std::uint64_t n_c, std::uint64_t n_d) const;
    /// K rho K^dag / Tr[...], computed with rescaled amplitudes so large counts
    /// do not underflow.
    Operator update(const Operator& rho, std::uint64_t n_c, std::uint64_t n_d) const;

   private:
    std::vector<SpectralComponent> components_;
    std::vector<OutputAmplitudes> amplitudes_;
};

/// Outcome distribution of one shot on a given target state.
class KrausOutcomeDistribution {
   public:
    KrausOutcomeDistribution(const DensityMatrix& rho, const Operator& b, const SensorConfig& cfg, double phase);

    double probability(std::uint64_t n_c, std::uint64_t n_d) const { return channel_.probability(rho_, n_c, n_d); }
    CountOutcome sample(Rng& rng, double poisson_threshold = kTol.poisson_normal_threshold) const {
        return channel_.sample(rho_, rng, poisson_threshold);
    }
    DensityMatrix post_state(const CountOutcome& outcome) const;
    const ShotChannel& channel() const { return channel_; }

   private:
    Operator rho_;
    ShotChannel channel_;
};

struct ClassicalFieldModel {
    enum class Kind { ornstein_uhlenbeck, telegraph, constant };

    Kind kind = Kind::constant;
    double amplitude = 0.0;         ///< rad/s; stationary std (OU), level (telegraph, constant)
    double correlation_time = 1.0;  ///< s; <b(0) b(t)> = amplitude^2 exp(-|t| / correlation_time)

    void validate() const;
    /// Field values at increasing times, drawn from the stationary process.
    std::vector<double> sample(const std::vector<double>& times, Rng& rng) const;
};

enum class TrajectoryMode { kraus_quantum, semiclassical_field };

struct TrajectoryConfig {
    std::size_t sequences = 1;
    std::uint64_t seed = 0;
    TrajectoryMode mode = TrajectoryMode::kraus_quantum;
    ProtocolSpec proto;
    std::optional<TargetModel> model;
    std::optional<ClassicalFieldModel> field;
    unsigned threads = 1;
    double poisson_normal_threshold = kTol.poisson_normal_threshold;

    void validate() const;
};

struct McEstimate {
    double mean = 0.0;                     ///< estimate of G^(K) = E[prod_j Lambda_j]
    double std_error = 0.0;                ///< sample std / sqrt(L); +inf for L = 1
    double per_shot_variance = 0.0;        ///< mean over shots of Var(recorded Lambda_j)
    double raw_difference_variance = 0.0;  ///< mean over shots of Var(n_d - n_c)
    std::vector<double> shot_means;        ///< E[Lambda_j]
    std::vector<double> shot_variances;    ///< Var(Lambda_j)
    std::size_t n_sequences = 0;
};

/// L independent sequences; bit-identical for a given config regardless of
/// `threads`.
McEstimate run_sequences(const TrajectoryConfig& cfg);

/// mean / std_error (0 when std_error is infinite).
double empirical_snr(const McEstimate& est);

/// Exact G^(K) of the semiclassical experiment. Closed forms: constant field
/// (any K), telegraph (any K), Ornstein-Uhlenbeck (Gaussian characteristic
/// function, any K).
double semiclassical_expectation(const ClassicalFieldModel& field, const ProtocolSpec& proto);

}  // namespace qns
