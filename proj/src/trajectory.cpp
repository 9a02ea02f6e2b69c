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

#include "qns/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

#include "qns/errors.hpp"

namespace qns {

namespace {

double log_poisson(std::uint64_t n, double mean) {
    if (mean <= 0.0) {
        return n == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
    }
    const double nn = static_cast<double>(n);
    return nn * std::log(mean) - mean - std::lgamma(nn + 1.0);
}

// log of beta^n as (log modulus, phase); beta = 0 with n > 0 gives -inf.
std::pair<double, double> log_power(cplx beta, std::uint64_t n) {
    if (n == 0) {
        return {0.0, 0.0};
    }
    const double nn = static_cast<double>(n);
    const double mod = std::abs(beta);
    if (mod == 0.0) {
        return {-std::numeric_limits<double>::infinity(), 0.0};
    }
    return {nn * std::log(mod), nn * std::arg(beta)};
}

Operator hermitize(const Operator& rho) { return 0.5 * (rho + rho.adjoint()); }

// Streaming mean/variance, mergeable in a fixed order.
struct Welford {
    double count = 0.0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        count += 1.0;
        const double delta = x - mean;
        mean += delta / count;
        m2 += delta * (x - mean);
    }

    void merge(const Welford& o) {
        if (o.count == 0.0) {
            return;
        }
        const double total = count + o.count;
        const double delta = o.mean - mean;
        mean += delta * o.count / total;
        m2 += o.m2 + delta * delta * count * o.count / total;
        count = total;
    }

    double variance() const { return count > 1.0 ? m2 / (count - 1.0) : std::numeric_limits<double>::quiet_NaN(); }
};

struct BlockStats {
    Welford product;
    std::vector<Welford> recorded;
    std::vector<Welford> raw;
};

constexpr std::size_t kBlockSize = 1024;

SensorConfig with_phase(const SensorConfig& cfg, double phase) {
    SensorConfig out = cfg;
    out.phase = phase;
    return out;
}

}  // namespace

ShotChannel::ShotChannel(const Operator& b, const SensorConfig& cfg, double phase)
    : components_(spectral_decomposition(b)) {
    const SensorConfig local = with_phase(cfg, phase);
    for (const auto& c : components_) {
        amplitudes_.push_back(interferometer_amplitudes(local, plane_rotation_angle(cfg.tau, c.value)));
    }
}

std::vector<double> ShotChannel::branch_probabilities(const Operator& rho) const {
    std::vector<double> p(components_.size());
    double total = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        p[k] = std::max(0.0, hs_inner(components_[k].projector, rho).real());
        total += p[k];
    }
    if (!(total > 0.0)) {
        throw NumericError("target state has no weight on the coupling spectrum");
    }
    for (auto& x : p) {
        x /= total;
    }
    return p;
}

double ShotChannel::probability(const Operator& rho, std::uint64_t n_c, std::uint64_t n_d) const {
    const auto p = branch_probabilities(rho);
    double out = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        out += p[k] * std::exp(log_poisson(n_c, std::norm(amplitudes_[k].beta_c)) +
                               log_poisson(n_d, std::norm(amplitudes_[k].beta_d)));
    }
    return out;
}

CountOutcome ShotChannel::sample(const Operator& rho, Rng& rng, double poisson_threshold) const {
    const auto p = branch_probabilities(rho);
    CountOutcome out;
    out.branch = p.size() == 1 ? 0 : rng.categorical(p.data(), p.size());
    out.n_c = rng.poisson(std::norm(amplitudes_[out.branch].beta_c), poisson_threshold);
    out.n_d = rng.poisson(std::norm(amplitudes_[out.branch].beta_d), poisson_threshold);
    return out;
}

Operator ShotChannel::kraus(std::uint64_t n_c, std::uint64_t n_d) const {
    const std::size_t dim = components_.front().projector.dim();
    Operator out(dim);
    for (std::size_t k = 0; k < components_.size(); ++k) {
        const auto& a = amplitudes_[k];
        const auto [lc, pc] = log_power(a.beta_c, n_c);
        const auto [ld, pd] = log_power(a.beta_d, n_d);
        const double log_mod = lc + ld - 0.5 * (std::norm(a.beta_c) + std::norm(a.beta_d)) -
                               0.5 * (std::lgamma(n_c + 1.0) + std::lgamma(n_d + 1.0));
        out += std::polar(std::exp(log_mod), pc + pd) * components_[k].projector;
    }
    return out;
}

Operator ShotChannel::update(const Operator& rho, std::uint64_t n_c, std::uint64_t n_d) const {
    const std::size_t n = components_.size();
    std::vector<double> log_mod(n);
    std::vector<double> phase(n);
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
        const auto& a = amplitudes_[k];
        const auto [lc, pc] = log_power(a.beta_c, n_c);
        const auto [ld, pd] = log_power(a.beta_d, n_d);
        log_mod[k] = lc + ld - 0.5 * (std::norm(a.beta_c) + std::norm(a.beta_d));
        phase[k] = pc + pd;
        best = std::max(best, log_mod[k]);
    }
    if (!std::isfinite(best)) {
        throw NumericError("outcome has zero probability in every branch");
    }
    Operator k_op(rho.dim());
    for (std::size_t k = 0; k < n; ++k) {
        k_op += std::polar(std::exp(log_mod[k] - best), phase[k]) * components_[k].projector;
    }
    Operator out = matmul(matmul(k_op, rho), k_op.adjoint());
    const double tr = out.trace().real();
    if (!(tr > 0.0)) {
        throw NumericError("post-measurement state has vanishing trace");
    }
    out *= 1.0 / tr;
    return hermitize(out);
}

KrausOutcomeDistribution::KrausOutcomeDistribution(const DensityMatrix& rho, const Operator& b,
                                                   const SensorConfig& cfg, double phase)
    : rho_(rho.op()), channel_(b, cfg, phase) {}

DensityMatrix KrausOutcomeDistribution::post_state(const CountOutcome& outcome) const {
    return DensityMatrix(channel_.update(rho_, outcome.n_c, outcome.n_d));
}

void ClassicalFieldModel::validate() const {
    if (!std::isfinite(amplitude)) {
        throw ConfigError("classical field amplitude must be finite");
    }
    if (kind != Kind::constant && !(correlation_time > 0.0)) {
        throw ConfigError("classical field correlation_time must be positive");
    }
}

std::vector<double> ClassicalFieldModel::sample(const std::vector<double>& times, Rng& rng) const {
    std::vector<double> out(times.size());
    for (std::size_t j = 0; j < times.size(); ++j) {
        const double decay = j == 0 ? 0.0 : std::exp(-(times[j] - times[j - 1]) / correlation_time);
        switch (kind) {
            case Kind::constant:
                out[j] = amplitude;
                break;
            case Kind::ornstein_uhlenbeck:
                out[j] = j == 0 ? amplitude * rng.normal()
                                : out[j - 1] * decay + amplitude * std::sqrt(1.0 - decay * decay) * rng.normal();
                break;
            case Kind::telegraph:
                if (j == 0) {
                    out[j] = rng.uniform() < 0.5 ? amplitude : -amplitude;
                } else {
                    out[j] = rng.uniform() < 0.5 * (1.0 - decay) ? -out[j - 1] : out[j - 1];
                }
                break;
        }
    }
    return out;
}

void TrajectoryConfig::validate() const {
    if (sequences < 1) {
        throw ConfigError("trajectory: need at least one sequence");
    }
    proto.validate();
    if (mode == TrajectoryMode::kraus_quantum && !model) {
        throw ConfigError("trajectory: quantum mode requires a target model");
    }
    if (mode == TrajectoryMode::semiclassical_field) {
        if (!field) {
            throw ConfigError("trajectory: semiclassical mode requires a classical field model");
        }
        field->validate();
    }
}

McEstimate run_sequences(const TrajectoryConfig& cfg) {
    cfg.validate();
    const std::size_t shots = cfg.proto.order();
    std::vector<double> times(shots);
    std::vector<SensorConfig> sensors(shots);
    std::vector<double> scales(shots);
    std::vector<ShotChannel> channels;
    for (std::size_t j = 0; j < shots; ++j) {
        times[j] = cfg.proto.coupling_time_of(j);
        const Basis basis = cfg.proto.shots[j].basis;
        sensors[j] = with_phase(cfg.proto.sensor, basis_phase(basis));
        scales[j] = readout_scale(basis);
        if (cfg.mode == TrajectoryMode::kraus_quantum) {
            channels.emplace_back(heisenberg_coupling(*cfg.model, times[j]), cfg.proto.sensor, basis_phase(basis));
        }
    }

    auto run_one = [&](std::size_t index, BlockStats& stats) {
        Rng rng(substream_seed(cfg.seed, index));
        double product = 1.0;
        if (cfg.mode == TrajectoryMode::kraus_quantum) {
            Operator rho = cfg.model->initial_state.op();
            for (std::size_t j = 0; j < shots; ++j) {
                const CountOutcome o = channels[j].sample(rho, rng, cfg.poisson_normal_threshold);
                if (j + 1 < shots) {
                    rho = channels[j].update(rho, o.n_c, o.n_d);
                }
                const double lambda = scales[j] * o.difference();
                product *= lambda;
                stats.recorded[j].add(lambda);
                stats.raw[j].add(o.difference());
            }
        } else {
            const auto field = cfg.field->sample(times, rng);
            for (std::size_t j = 0; j < shots; ++j) {
                const auto amp = interferometer_amplitudes(sensors[j], plane_rotation_angle(cfg.proto.sensor.tau, field[j]));
                const double n_c = static_cast<double>(rng.poisson(std::norm(amp.beta_c), cfg.poisson_normal_threshold));
                const double n_d = static_cast<double>(rng.poisson(std::norm(amp.beta_d), cfg.poisson_normal_threshold));
                const double lambda = scales[j] * (n_d - n_c);
                product *= lambda;
                stats.recorded[j].add(lambda);
                stats.raw[j].add(n_d - n_c);
            }
        }
        stats.product.add(product);
    };

    const std::size_t n_blocks = (cfg.sequences + kBlockSize - 1) / kBlockSize;
    std::vector<BlockStats> blocks(n_blocks);
    for (auto& b : blocks) {
        b.recorded.resize(shots);
        b.raw.resize(shots);
    }
    const unsigned n_threads = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(n_blocks)));
    std::vector<std::exception_ptr> errors(n_threads);
    auto worker = [&](unsigned t) {
        try {
            for (std::size_t b = t; b < n_blocks; b += n_threads) {
                const std::size_t end = std::min(cfg.sequences, (b + 1) * kBlockSize);
                for (std::size_t i = b * kBlockSize; i < end; ++i) {
                    run_one(i, blocks[b]);
                }
            }
        } catch (...) {
            errors[t] = std::current_exception();
        }
    };
    if (n_threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n_threads; ++t) {
            pool.emplace_back(worker, t);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }

    BlockStats total;
    total.recorded.resize(shots);
    total.raw.resize(shots);
    for (const auto& b : blocks) {
        total.product.merge(b.product);
        for (std::size_t j = 0; j < shots; ++j) {
            total.recorded[j].merge(b.recorded[j]);
            total.raw[j].merge(b.raw[j]);
        }
    }

    McEstimate est;
    est.n_sequences = cfg.sequences;
    est.mean = total.product.mean;
    est.std_error = cfg.sequences > 1 ? std::sqrt(total.product.variance() / static_cast<double>(cfg.sequences))
                                      : std::numeric_limits<double>::infinity();
    double rec = 0.0;
    double raw = 0.0;
    for (std::size_t j = 0; j < shots; ++j) {
        est.shot_means.push_back(total.recorded[j].mean);
        est.shot_variances.push_back(total.recorded[j].variance());
        rec += total.recorded[j].variance();
        raw += total.raw[j].variance();
    }
    est.per_shot_variance = rec / static_cast<double>(shots);
    est.raw_difference_variance = raw / static_cast<double>(shots);
    return est;
}

double empirical_snr(const McEstimate& est) {
    if (!std::isfinite(est.std_error) || est.std_error <= 0.0) {
        return 0.0;
    }
    return est.mean / est.std_error;
}

double semiclassical_expectation(const ClassicalFieldModel& field, const ProtocolSpec& proto) {
    field.validate();
    proto.validate();
    const std::size_t k_order = proto.order();
    for (const auto& shot : proto.shots) {
        if (shot.basis == Basis::S3) {
            return 0.0;  // a classical field produces no circular readout
        }
    }
    const double sign = proto.sensor.swap_detectors ? -1.0 : 1.0;
    const double prefactor = std::pow(sign * 0.5 * proto.sensor.alpha * proto.sensor.alpha, static_cast<double>(k_order));
    const double tau = proto.sensor.tau;
    std::vector<double> times(k_order);
    for (std::size_t j = 0; j < k_order; ++j) {
        times[j] = proto.coupling_time_of(j);
    }

    // E[prod_j sin(tau b(t_j))]
    double moment = 0.0;
    switch (field.kind) {
        case ClassicalFieldModel::Kind::constant:
            moment = std::pow(std::sin(tau * field.amplitude), static_cast<double>(k_order));
            break;
        case ClassicalFieldModel::Kind::telegraph: {
            if (k_order % 2 == 1) {
                moment = 0.0;
                break;
            }
            double signs = 1.0;
            for (std::size_t j = 0; j + 1 < k_order; j += 2) {
                signs *= std::exp(-(times[j + 1] - times[j]) / field.correlation_time);
            }
            moment = signs * std::pow(std::sin(tau * field.amplitude), static_cast<double>(k_order));
            break;
        }
        case ClassicalFieldModel::Kind::ornstein_uhlenbeck: {
            // sin x = (e^{ix} - e^{-ix}) / 2i and E[exp(i s.x)] = exp(-s^T Sigma s / 2).
            const double var = tau * tau * field.amplitude * field.amplitude;
            cplx acc = 0.0;
            for (std::size_t mask = 0; mask < (std::size_t{1} << k_order); ++mask) {
                double quad = 0.0;
                double parity = 1.0;
                for (std::size_t a = 0; a < k_order; ++a) {
                    const double sa = (mask >> a) & 1 ? -1.0 : 1.0;
                    parity *= sa;
                    for (std::size_t b = 0; b < k_order; ++b) {
                        const double sb = (mask >> b) & 1 ? -1.0 : 1.0;
                        quad += sa * sb * var * std::exp(-std::abs(times[a] - times[b]) / field.correlation_time);
                    }
                }
                acc += parity * std::exp(-0.5 * quad);
            }
            acc /= std::pow(2.0 * kI, static_cast<double>(k_order));
            moment = acc.real();
            break;
        }
    }
    return prefactor * moment;
}

}  // namespace qns
