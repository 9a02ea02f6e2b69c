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

// Sequential weak measurement: each shot maps the (unnormalized) target
// operator through M_j, and G^(K) = Tr[M_K ... M_1 rho_B]. To leading order
//   M_j rho = (tau alpha^2 / 2) B_j^{eta_j} rho,  eta = + for S2, - for S3,
// so G^(K) = 2^-K tau^K alpha^2K C^{eta_K ... eta_1}.

#include <cstddef>
#include <string>
#include <vector>

#include "qns/correlations.hpp"
#include "qns/operator.hpp"
#include "qns/sensor_optics.hpp"

namespace qns {

inline BranchSign basis_sign(Basis b) { return b == Basis::S2 ? BranchSign::plus : BranchSign::minus; }

struct ShotSpec {
    double time = 0.0;
    Basis basis = Basis::S2;
};

/// Time at which B(t) is evaluated for a shot starting at t.
enum class CouplingTime { start, midpoint };

struct ProtocolSpec {
    std::vector<ShotSpec> shots;
    SensorConfig sensor;
    CouplingTime coupling_time = CouplingTime::start;

    std::size_t order() const { return shots.size(); }
    /// Throws ConfigError on an empty or time-reversed shot list or bad sensor.
    void validate() const;
    /// Non-fatal problems, e.g. a trailing S3 shot (signal vanishes).
    std::vector<std::string> warnings() const;
    /// Evaluation time of B for shot j.
    double coupling_time_of(std::size_t j) const;
    /// The correlation selected by the shot bases, at the coupling times.
    CorrelationQuery induced_query() const;
    /// Label "+-" of the selected correlation, eta_K first.
    std::string label() const;
};

struct GkResult {
    double value = 0.0;             ///< G^(K), counts^K
    std::size_t order = 0;          ///< K
    double predicted_from_c = 0.0;  ///< 2^-K tau^K alpha^2K C
    double correlation = 0.0;       ///< C^{eta_K...eta_1}
    std::string label;
};

/// Leading-order measurement map of one shot.
class LeadingShotMap {
   public:
    LeadingShotMap(Operator coupling, BranchSign sign, double coefficient);
    Operator operator()(const Operator& rho) const;

    double coefficient() const { return coefficient_; }

   private:
    Operator coupling_;
    BranchSign sign_;
    double coefficient_;
};

/// All-orders map rho -> sum_{k,k'} m_{kk'} P_k rho P_k' where P_k are the
/// spectral projectors of B(t_j) and m_{kk'} = <psi_k'| L |psi_k>,
/// psi_k = exp(-i tau b_k S3) |alpha, H>.
class ExactShotMap {
   public:
    ExactShotMap(std::vector<Operator> projectors, std::vector<cplx> weights);
    Operator operator()(const Operator& rho) const;

    std::size_t branches() const { return projectors_.size(); }
    cplx weight(std::size_t k, std::size_t kp) const { return weights_[k * projectors_.size() + kp]; }

   private:
    std::vector<Operator> projectors_;
    std::vector<cplx> weights_;
};

LeadingShotMap measurement_superoperator(const TargetModel& model, const ShotSpec& shot, const SensorConfig& sensor,
                                         CouplingTime coupling_time = CouplingTime::start);

ExactShotMap exact_shot_map(const TargetModel& model, const ShotSpec& shot, const SensorConfig& sensor,
                            const FockTruncation& tr, CouplingTime coupling_time = CouplingTime::start);

GkResult gk_leading(const TargetModel& model, const ProtocolSpec& proto);

/// Keeps every order in tau. Throws NumericError on insufficient truncation and
/// ResourceError when the cached sector propagators exceed the memory budget.
GkResult gk_exact_unitary(const TargetModel& model, const ProtocolSpec& proto, const FockTruncation& tr);

/// Same quantity built literally on the joint sensor (x) target space:
/// rho_s (x) rho_B, exp(-i tau S3 (x) B(t_j)), partial trace of (L (x) I) rho.
/// Only for tiny systems; throws ResourceError above the joint memory budget.
GkResult gk_exact_dense(const TargetModel& model, const ProtocolSpec& proto, const FockTruncation& tr,
                        std::size_t memory_budget = kTol.joint_memory_budget);

/// Estimated bytes gk_exact_dense would allocate.
std::size_t dense_joint_footprint(std::size_t fock_dim, std::size_t target_dim);

}  // namespace qns
