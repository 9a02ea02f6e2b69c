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
#include <map>
#include <mutex>
#include <string>

#include "qns/errors.hpp"
#include "qns/kernels.hpp"
#include "qns/linalg.hpp"
#include "qns/tolerances.hpp"

namespace qns {

namespace {

template <typename T>
std::shared_ptr<const T> cached(unsigned n_max) {
    static std::mutex mutex;
    static std::map<unsigned, std::shared_ptr<const T>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n_max];
    if (!slot) {
        slot = std::make_shared<const T>(n_max);
    }
    return slot;
}

FockSpace build_fock_space(unsigned n_max) {
    const std::size_t side = std::size_t{n_max} + 1;
    const std::size_t dim = side * side;
    std::vector<SparseOperator::Entry> ah;
    std::vector<SparseOperator::Entry> av;
    std::vector<SparseOperator::Entry> nh;
    std::vector<SparseOperator::Entry> nv;
    for (unsigned h = 0; h <= n_max; ++h) {
        for (unsigned v = 0; v <= n_max; ++v) {
            const std::size_t idx = h * side + v;
            if (h > 0) {
                ah.push_back({(h - 1) * side + v, idx, std::sqrt(static_cast<double>(h))});
            }
            if (v > 0) {
                av.push_back({h * side + v - 1, idx, std::sqrt(static_cast<double>(v))});
            }
            nh.push_back({idx, idx, static_cast<double>(h)});
            nv.push_back({idx, idx, static_cast<double>(v)});
        }
    }
    FockSpace fs{n_max,
                 SparseOperator(dim, std::move(ah)),
                 SparseOperator(dim, std::move(av)),
                 SparseOperator(dim, std::move(nh)),
                 SparseOperator(dim, std::move(nv)),
                 {},
                 {},
                 {}};
    const SparseOperator x = fs.a_h.adjoint() * fs.a_v;  // a_H^dag a_V
    const SparseOperator xd = x.adjoint();
    fs.s1 = (fs.n_h - fs.n_v).scaled(0.5);
    fs.s2 = (x + xd).scaled(0.5);
    fs.s3 = x.scaled(-0.5 * kI) + xd.scaled(0.5 * kI);
    return fs;
}

struct FockSpaceHolder {
    explicit FockSpaceHolder(unsigned n_max) : space(build_fock_space(n_max)) {}
    FockSpace space;
};

}  // namespace

void SensorConfig::validate() const {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw ConfigError("sensor: alpha must be a positive real amplitude");
    }
    if (!(tau > 0.0) || !std::isfinite(tau)) {
        throw ConfigError("sensor: tau must be positive");
    }
}

FockTruncation FockTruncation::for_alpha(double alpha) {
    return {static_cast<unsigned>(std::ceil(alpha * alpha + 10.0 * alpha + 10.0))};
}

bool FockTruncation::admits(double alpha) const {
    return n_max >= 1 && static_cast<double>(n_max) >= alpha * alpha + 10.0 * alpha + 10.0 - 1e-12;
}

void FockTruncation::require(double alpha) const {
    if (!admits(alpha)) {
        throw NumericError("Fock truncation n_max=" + std::to_string(n_max) + " is insufficient for alpha=" +
                           std::to_string(alpha) + " (need >= alpha^2 + 10 alpha + 10)");
    }
}

std::vector<std::size_t> FockSpace::subspace_up_to(unsigned total) const {
    std::vector<std::size_t> out;
    for (unsigned h = 0; h <= n_max; ++h) {
        for (unsigned v = 0; v <= n_max; ++v) {
            if (h + v <= total) {
                out.push_back(index(h, v));
            }
        }
    }
    return out;
}

std::shared_ptr<const FockSpace> FockSpace::get(unsigned n_max) {
    auto holder = cached<FockSpaceHolder>(n_max);
    return std::shared_ptr<const FockSpace>(holder, &holder->space);
}

StokesOperators stokes_operators(const FockTruncation& tr) {
    const auto fs = FockSpace::get(tr.n_max);
    return {fs->s1, fs->s2, fs->s3};
}

SparseOperator readout_observable(Basis basis, const FockTruncation& tr) {
    const auto fs = FockSpace::get(tr.n_max);
    return basis == Basis::S2 ? fs->s2 : fs->s3.scaled(2.0);
}

std::vector<cplx> coherent_state(double alpha, const FockTruncation& tr) {
    if (alpha < 0.0) {
        throw NumericError("coherent_state: alpha must be non-negative");
    }
    tr.require(alpha);
    const auto fs = FockSpace::get(tr.n_max);
    std::vector<cplx> psi(fs->dim());
    double norm2 = 0.0;
    for (unsigned n = 0; n <= tr.n_max; ++n) {
        double amp = 0.0;
        if (alpha == 0.0) {
            amp = n == 0 ? 1.0 : 0.0;
        } else {
            amp = std::exp(-0.5 * alpha * alpha + n * std::log(alpha) - 0.5 * std::lgamma(n + 1.0));
        }
        psi[fs->index(n, 0)] = amp;
        norm2 += amp * amp;
    }
    if (std::abs(norm2 - 1.0) > kTol.fock_leakage) {
        throw NumericError("coherent_state: truncated norm deviates from 1 by " + std::to_string(1.0 - norm2));
    }
    return psi;
}

SensorTraces sensor_traces(const SparseOperator& readout, double alpha, const FockTruncation& tr) {
    const auto fs = FockSpace::get(tr.n_max);
    if (readout.dim() != fs->dim()) {
        throw DimensionError("sensor_traces: readout does not act on this Fock space");
    }
    const auto psi = coherent_state(alpha, tr);
    const auto l_psi = readout.apply(psi);
    const auto s_psi = fs->s3.apply(psi);
    const cplx ls = kernels::cdotc(l_psi, s_psi);  // <psi| L S3 |psi>
    const cplx sl = kernels::cdotc(s_psi, l_psi);  // <psi| S3 L |psi>
    const cplx t0 = kernels::cdotc(psi, l_psi);
    const cplx t_plus = 0.5 * (ls + sl);
    const cplx t_minus = (ls - sl) / kI;
    const double tol = kTol.imaginary_residue * std::max(1.0, alpha * alpha);
    for (const cplx& t : {t0, t_plus, t_minus}) {
        if (std::abs(t.imag()) > tol) {
            throw NumericError("sensor_traces: readout is not Hermitian");
        }
    }
    return {t0.real(), t_plus.real(), t_minus.real()};
}

SelectionTraces selection_traces(double alpha, const FockTruncation& tr) {
    return {sensor_traces(readout_observable(Basis::S2, tr), alpha, tr),
            sensor_traces(readout_observable(Basis::S3, tr), alpha, tr)};
}

OutputAmplitudes network_amplitudes(cplx in_h, cplx in_v, double phase, bool swap_detectors) {
    const double r = 1.0 / std::sqrt(2.0);
    const cplx arm_a = in_h;
    const cplx arm_b = std::polar(1.0, phase) * in_v;
    OutputAmplitudes out{r * (arm_a + kI * arm_b), r * (kI * arm_a + arm_b)};
    if (swap_detectors) {
        std::swap(out.beta_c, out.beta_d);
    }
    return out;
}

OutputAmplitudes interferometer_amplitudes(const SensorConfig& cfg, double plane_angle) {
    return network_amplitudes(cfg.alpha * std::cos(plane_angle), cfg.alpha * std::sin(plane_angle), cfg.phase,
                              cfg.swap_detectors);
}

S3Propagator::S3Propagator(unsigned n_max) : n_max_(n_max) {
    const auto fs = FockSpace::get(n_max);
    sectors_.reserve(n_max + 1);
    for (unsigned total = 0; total <= n_max; ++total) {
        Sector sec;
        for (unsigned v = 0; v <= total; ++v) {
            sec.indices.push_back(fs->index(total - v, v));
        }
        const std::size_t n = sec.indices.size();
        Operator block(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                block(i, j) = fs->s3.at(sec.indices[i], sec.indices[j]);
            }
        }
        EigenSystem es = eigh(block);
        sec.values = std::move(es.values);
        sec.vectors = std::move(es.vectors);
        sectors_.push_back(std::move(sec));
    }
}

std::vector<cplx> S3Propagator::apply(std::span<const cplx> psi, double angle) const {
    const std::size_t side = std::size_t{n_max_} + 1;
    if (psi.size() != side * side) {
        throw DimensionError("S3Propagator: state does not live on this Fock space");
    }
    double outside = 0.0;
    for (unsigned h = 0; h <= n_max_; ++h) {
        for (unsigned v = n_max_ - h + 1; v <= n_max_; ++v) {
            outside += std::norm(psi[h * side + v]);
        }
    }
    if (outside > kTol.fock_leakage) {
        throw NumericError("S3Propagator: state has weight beyond the complete photon-number sectors");
    }
    std::vector<cplx> out(psi.size());
    std::vector<cplx> local;
    std::vector<cplx> coeff;
    for (const auto& sec : sectors_) {
        const std::size_t n = sec.indices.size();
        local.resize(n);
        coeff.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            local[i] = psi[sec.indices[i]];
        }
        // coeff = diag(exp(-i angle lambda)) V^dagger local
        for (std::size_t k = 0; k < n; ++k) {
            cplx acc = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                acc += std::conj(sec.vectors(i, k)) * local[i];
            }
            coeff[k] = acc * std::exp(-kI * (angle * sec.values[k]));
        }
        for (std::size_t i = 0; i < n; ++i) {
            cplx acc = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                acc += sec.vectors(i, k) * coeff[k];
            }
            out[sec.indices[i]] = acc;
        }
    }
    return out;
}

std::size_t S3Propagator::footprint_bytes() const {
    std::size_t bytes = 0;
    for (const auto& sec : sectors_) {
        const std::size_t n = sec.indices.size();
        bytes += n * n * sizeof(cplx) + n * (sizeof(double) + sizeof(std::size_t));
    }
    return bytes;
}

std::shared_ptr<const S3Propagator> S3Propagator::get(unsigned n_max) { return cached<S3Propagator>(n_max); }

}  // namespace qns
