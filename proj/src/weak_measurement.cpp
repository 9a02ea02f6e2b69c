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

#include "qns/weak_measurement.hpp"

#include <cmath>
#include <string>

#include "qns/errors.hpp"
#include "qns/kernels.hpp"
#include "qns/linalg.hpp"

namespace qns {

namespace {

double leading_coefficient(const SensorConfig& sensor) {
    const double sign = sensor.swap_detectors ? -1.0 : 1.0;
    return sign * 0.5 * sensor.tau * sensor.alpha * sensor.alpha;
}

GkResult finish(const TargetModel& model, const ProtocolSpec& proto, const Operator& final_state) {
    GkResult out;
    out.order = proto.order();
    out.label = proto.label();
    out.value = final_state.trace().real();
    out.correlation = correlation(model, proto.induced_query());
    out.predicted_from_c =
        std::pow(leading_coefficient(proto.sensor), static_cast<double>(proto.order())) * out.correlation;
    return out;
}

std::size_t propagator_footprint(unsigned n_max) {
    const std::size_t n = n_max;
    return sizeof(cplx) * (n + 1) * (n + 2) * (2 * n + 3) / 6;
}

}  // namespace

void ProtocolSpec::validate() const {
    if (shots.empty()) {
        throw ConfigError("protocol needs at least one shot");
    }
    for (std::size_t j = 1; j < shots.size(); ++j) {
        if (shots[j].time < shots[j - 1].time) {
            throw ConfigError("protocol shot times must be non-decreasing");
        }
    }
    sensor.validate();
}

std::vector<std::string> ProtocolSpec::warnings() const {
    std::vector<std::string> out;
    if (!shots.empty() && shots.back().basis == Basis::S3) {
        out.emplace_back("last shot measures S3: the selected correlation ends in a commutator and vanishes");
    }
    return out;
}

double ProtocolSpec::coupling_time_of(std::size_t j) const {
    const double t = shots.at(j).time;
    return coupling_time == CouplingTime::midpoint ? t + 0.5 * sensor.tau : t;
}

CorrelationQuery ProtocolSpec::induced_query() const {
    CorrelationQuery q;
    for (std::size_t j = 0; j < shots.size(); ++j) {
        q.times.push_back(coupling_time_of(j));
        q.signs.push_back(basis_sign(shots[j].basis));
    }
    return q;
}

std::string ProtocolSpec::label() const { return correlation_label(induced_query().signs); }

LeadingShotMap::LeadingShotMap(Operator coupling, BranchSign sign, double coefficient)
    : coupling_(std::move(coupling)), sign_(sign), coefficient_(coefficient) {}

Operator LeadingShotMap::operator()(const Operator& rho) const {
    return coefficient_ * apply_branch(coupling_, sign_, rho);
}

ExactShotMap::ExactShotMap(std::vector<Operator> projectors, std::vector<cplx> weights)
    : projectors_(std::move(projectors)), weights_(std::move(weights)) {
    if (weights_.size() != projectors_.size() * projectors_.size()) {
        throw DimensionError("exact shot map needs one weight per projector pair");
    }
}

Operator ExactShotMap::operator()(const Operator& rho) const {
    const std::size_t n = projectors_.size();
    Operator out(rho.dim());
    std::vector<Operator> left;
    left.reserve(n);
    for (const auto& p : projectors_) {
        left.push_back(matmul(p, rho));
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t kp = 0; kp < n; ++kp) {
            const cplx w = weights_[k * n + kp];
            if (w == cplx{}) {
                continue;
            }
            out += w * matmul(left[k], projectors_[kp]);
        }
    }
    return out;
}

LeadingShotMap measurement_superoperator(const TargetModel& model, const ShotSpec& shot, const SensorConfig& sensor,
                                         CouplingTime coupling_time) {
    const double t = coupling_time == CouplingTime::midpoint ? shot.time + 0.5 * sensor.tau : shot.time;
    return LeadingShotMap(heisenberg_coupling(model, t), basis_sign(shot.basis), leading_coefficient(sensor));
}

ExactShotMap exact_shot_map(const TargetModel& model, const ShotSpec& shot, const SensorConfig& sensor,
                            const FockTruncation& tr, CouplingTime coupling_time) {
    tr.require(sensor.alpha);
    if (propagator_footprint(tr.n_max) > kTol.joint_memory_budget) {
        throw ResourceError("Fock sector propagators for n_max=" + std::to_string(tr.n_max) +
                            " exceed the memory budget");
    }
    const double t = coupling_time == CouplingTime::midpoint ? shot.time + 0.5 * sensor.tau : shot.time;
    const auto components = spectral_decomposition(heisenberg_coupling(model, t));
    const auto propagator = S3Propagator::get(tr.n_max);
    SparseOperator readout = readout_observable(shot.basis, tr);
    if (sensor.swap_detectors) {
        readout = readout.scaled(-1.0);
    }
    const auto psi = coherent_state(sensor.alpha, tr);

    const std::size_t n = components.size();
    std::vector<std::vector<cplx>> rotated;
    std::vector<std::vector<cplx>> read;
    for (const auto& c : components) {
        rotated.push_back(propagator->apply(psi, sensor.tau * c.value));
        read.push_back(readout.apply(rotated.back()));
    }
    std::vector<cplx> weights(n * n);
    std::vector<Operator> projectors;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t kp = 0; kp < n; ++kp) {
            weights[k * n + kp] = kernels::cdotc(rotated[kp], read[k]);
        }
        projectors.push_back(components[k].projector);
    }
    return ExactShotMap(std::move(projectors), std::move(weights));
}

GkResult gk_leading(const TargetModel& model, const ProtocolSpec& proto) {
    proto.validate();
    Operator rho = model.initial_state.op();
    for (const auto& shot : proto.shots) {
        rho = measurement_superoperator(model, shot, proto.sensor, proto.coupling_time)(rho);
    }
    return finish(model, proto, rho);
}

GkResult gk_exact_unitary(const TargetModel& model, const ProtocolSpec& proto, const FockTruncation& tr) {
    proto.validate();
    Operator rho = model.initial_state.op();
    for (const auto& shot : proto.shots) {
        rho = exact_shot_map(model, shot, proto.sensor, tr, proto.coupling_time)(rho);
    }
    return finish(model, proto, rho);
}

std::size_t dense_joint_footprint(std::size_t fock_dim, std::size_t target_dim) {
    const std::size_t joint = fock_dim * target_dim;
    return 8 * joint * joint * sizeof(cplx);
}

GkResult gk_exact_dense(const TargetModel& model, const ProtocolSpec& proto, const FockTruncation& tr,
                        std::size_t memory_budget) {
    proto.validate();
    tr.require(proto.sensor.alpha);
    const std::size_t fock_dim = tr.dim();
    const std::size_t bytes = dense_joint_footprint(fock_dim, model.dim());
    if (bytes > memory_budget) {
        throw ResourceError("dense joint space needs ~" + std::to_string(bytes >> 20) + " MiB, budget is " +
                            std::to_string(memory_budget >> 20) + " MiB");
    }
    const auto fs = FockSpace::get(tr.n_max);
    const Operator s3 = fs->s3.dense(fock_dim);
    const auto psi = coherent_state(proto.sensor.alpha, tr);
    const Operator rho_s = Operator::projector(psi);
    const Operator id_target = Operator::identity(model.dim());

    Operator rho = model.initial_state.op();
    for (std::size_t j = 0; j < proto.order(); ++j) {
        const auto& shot = proto.shots[j];
        Operator readout = readout_observable(shot.basis, tr).dense(fock_dim);
        if (proto.sensor.swap_detectors) {
            readout *= -1.0;
        }
        const Operator b = heisenberg_coupling(model, proto.coupling_time_of(j));
        const Operator u = hermitian_expm(kron(s3, b), proto.sensor.tau);
        const Operator joint = matmul(matmul(u, kron(rho_s, rho)), u.adjoint());
        rho = partial_trace_sensor(matmul(kron(readout, id_target), joint), fock_dim);
    }
    return finish(model, proto, rho);
}

}  // namespace qns
