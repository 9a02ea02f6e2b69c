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

#include "qns/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qns/errors.hpp"
#include "qns/linalg.hpp"
#include "qns/tolerances.hpp"

namespace qns {

namespace {

// Roundoff in the imaginary part grows with the operator norms involved.
double residue_tolerance(const std::vector<Operator>& couplings) {
    double scale = 1.0;
    for (const auto& b : couplings) {
        scale *= std::max(1.0, max_abs(b) * static_cast<double>(b.dim()));
    }
    return kTol.imaginary_residue * scale;
}

double checked_real(cplx value, double tol) {
    if (std::abs(value.imag()) > tol) {
        throw NumericError("correlation trace has imaginary residue " + std::to_string(value.imag()));
    }
    return value.real();
}

std::vector<Operator> couplings_at(const TargetModel& model, const CorrelationQuery& query) {
    std::vector<Operator> out;
    out.reserve(query.order());
    for (double t : query.times) {
        out.push_back(heisenberg_coupling(model, t));
    }
    return out;
}

}  // namespace

std::string correlation_label(std::span<const BranchSign> signs) {
    std::string out;
    for (auto it = signs.rbegin(); it != signs.rend(); ++it) {
        out.push_back(sign_char(*it));
    }
    return out;
}

void CorrelationQuery::validate() const {
    if (times.empty()) {
        throw ConfigError("correlation query needs at least one time");
    }
    if (times.size() != signs.size()) {
        throw ConfigError("correlation query: times and signs differ in length");
    }
    for (std::size_t k = 1; k < times.size(); ++k) {
        if (times[k] < times[k - 1]) {
            throw ConfigError("correlation query: times must be non-decreasing");
        }
    }
}

Operator apply_branch(const Operator& b, BranchSign sign, const Operator& rho) {
    if (b.dim() != rho.dim()) {
        throw DimensionError("apply_branch: dimension mismatch");
    }
    const Operator left = matmul(b, rho);
    const Operator right = matmul(rho, b);
    if (sign == BranchSign::plus) {
        return 0.5 * (left + right);
    }
    return (-kI) * (left - right);
}

Operator heisenberg_coupling(const TargetModel& model, double t) {
    if (t == 0.0) {
        return model.coupling;
    }
    const Operator u = hermitian_expm(model.hamiltonian, t);
    Operator bt = matmul(matmul(u.adjoint(), model.coupling), u);
    return 0.5 * (bt + bt.adjoint());
}

double correlation(const TargetModel& model, const CorrelationQuery& query) {
    query.validate();
    if (query.signs.back() == BranchSign::minus) {
        return 0.0;
    }
    const auto couplings = couplings_at(model, query);
    Operator rho = model.initial_state.op();
    for (std::size_t k = 0; k < query.order(); ++k) {
        rho = apply_branch(couplings[k], query.signs[k], rho);
    }
    return checked_real(rho.trace(), residue_tolerance(couplings));
}

LiouvilleMatrix LiouvilleMatrix::left(const Operator& b) { return LiouvilleMatrix(kron(Operator::identity(b.dim()), b)); }

LiouvilleMatrix LiouvilleMatrix::right(const Operator& b) {
    return LiouvilleMatrix(kron(b.transpose(), Operator::identity(b.dim())));
}

LiouvilleMatrix LiouvilleMatrix::branch(const Operator& b, BranchSign sign) {
    const Operator l = left(b).matrix();
    const Operator r = right(b).matrix();
    if (sign == BranchSign::plus) {
        return LiouvilleMatrix(0.5 * (l + r));
    }
    return LiouvilleMatrix((-kI) * (l - r));
}

std::vector<cplx> LiouvilleMatrix::apply(std::span<const cplx> vec_rho) const {
    return qns::apply(matrix_, vec_rho);
}

std::vector<cplx> vectorize(const Operator& rho) {
    const std::size_t d = rho.dim();
    std::vector<cplx> out(d * d);
    for (std::size_t col = 0; col < d; ++col) {
        for (std::size_t row = 0; row < d; ++row) {
            out[col * d + row] = rho(row, col);
        }
    }
    return out;
}

Operator unvectorize(std::span<const cplx> vec_rho) {
    const auto d = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(vec_rho.size()))));
    if (d * d != vec_rho.size()) {
        throw DimensionError("unvectorize: length is not a perfect square");
    }
    Operator out(d);
    for (std::size_t col = 0; col < d; ++col) {
        for (std::size_t row = 0; row < d; ++row) {
            out(row, col) = vec_rho[col * d + row];
        }
    }
    return out;
}

double liouville_correlation(const TargetModel& model, const CorrelationQuery& query) {
    query.validate();
    const auto couplings = couplings_at(model, query);
    std::vector<cplx> v = vectorize(model.initial_state.op());
    for (std::size_t k = 0; k < query.order(); ++k) {
        v = LiouvilleMatrix::branch(couplings[k], query.signs[k]).apply(v);
    }
    const std::size_t d = model.dim();
    cplx tr = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        tr += v[i * d + i];
    }
    return checked_real(tr, residue_tolerance(couplings));
}

}  // namespace qns
