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

#include "qns/operator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qns/errors.hpp"
#include "qns/kernels.hpp"
#include "qns/linalg.hpp"

namespace qns {

namespace {

void require_same_dim(const Operator& a, const Operator& b, const char* what) {
    if (a.dim() != b.dim()) {
        throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) + " vs " +
                             std::to_string(b.dim()) + ")");
    }
}

}  // namespace

Operator::Operator(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

Operator::Operator(std::size_t dim, std::vector<cplx> entries) : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim * dim) {
        throw DimensionError("operator entries must be dim*dim");
    }
}

Operator::Operator(std::initializer_list<std::initializer_list<cplx>> rows) : dim_(rows.size()) {
    entries_.reserve(dim_ * dim_);
    for (const auto& row : rows) {
        if (row.size() != dim_) {
            throw DimensionError("operator rows must form a square matrix");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

Operator Operator::identity(std::size_t dim) {
    Operator out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        out(i, i) = 1.0;
    }
    return out;
}

Operator Operator::diagonal(std::span<const double> values) {
    Operator out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        out(i, i) = values[i];
    }
    return out;
}

Operator Operator::projector(std::span<const cplx> psi) {
    Operator out(psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i) {
        for (std::size_t j = 0; j < psi.size(); ++j) {
            out(i, j) = psi[i] * std::conj(psi[j]);
        }
    }
    return out;
}

Operator Operator::adjoint() const {
    Operator out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

Operator Operator::transpose() const {
    Operator out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            out(j, i) = (*this)(i, j);
        }
    }
    return out;
}

cplx Operator::trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

Operator& Operator::operator+=(const Operator& other) {
    require_same_dim(*this, other, "operator+");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] += other.entries_[i];
    }
    return *this;
}

Operator& Operator::operator-=(const Operator& other) {
    require_same_dim(*this, other, "operator-");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] -= other.entries_[i];
    }
    return *this;
}

Operator& Operator::operator*=(cplx s) {
    for (auto& e : entries_) {
        e *= s;
    }
    return *this;
}

bool Operator::is_hermitian(double tol) const {
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = i; j < dim_; ++j) {
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) {
                return false;
            }
        }
    }
    return true;
}

bool Operator::is_unitary(double tol) const {
    return max_abs_diff(matmul(adjoint(), *this), identity(dim_)) <= tol;
}

Operator operator+(Operator a, const Operator& b) { return a += b; }
Operator operator-(Operator a, const Operator& b) { return a -= b; }
Operator operator-(Operator a) { return a *= -1.0; }
Operator operator*(cplx s, Operator a) { return a *= s; }
Operator operator*(Operator a, cplx s) { return a *= s; }
Operator operator*(const Operator& a, const Operator& b) { return matmul(a, b); }

Operator matmul(const Operator& a, const Operator& b) {
    require_same_dim(a, b, "matmul");
    const std::size_t n = a.dim();
    Operator out(n);
    kernels::cgemm(n, n, n, a.data().data(), b.data().data(), out.data().data());
    return out;
}

Operator kron(const Operator& a, const Operator& b) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    Operator out(na * nb);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < na; ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx{}) {
                continue;
            }
            for (std::size_t k = 0; k < nb; ++k) {
                for (std::size_t l = 0; l < nb; ++l) {
                    out(i * nb + k, j * nb + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

Operator commutator(const Operator& a, const Operator& b) { return matmul(a, b) - matmul(b, a); }

Operator anticommutator(const Operator& a, const Operator& b) { return matmul(a, b) + matmul(b, a); }

double max_abs_diff(const Operator& a, const Operator& b) {
    require_same_dim(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    }
    return m;
}

double max_abs(const Operator& a) {
    double m = 0.0;
    for (const auto& e : a.data()) {
        m = std::max(m, std::abs(e));
    }
    return m;
}

cplx hs_inner(const Operator& a, const Operator& b) {
    require_same_dim(a, b, "hs_inner");
    return kernels::cdotc(a.data(), b.data());
}

std::vector<cplx> apply(const Operator& op, std::span<const cplx> psi) {
    if (psi.size() != op.dim()) {
        throw DimensionError("apply: vector length does not match operator dim");
    }
    std::vector<cplx> out(op.dim());
    kernels::cgemm(op.dim(), 1, op.dim(), op.data().data(), psi.data(), out.data());
    return out;
}

DensityMatrix::DensityMatrix(Operator op) : op_(std::move(op)) {
    if (op_.dim() == 0) {
        throw DimensionError("density matrix must have positive dimension");
    }
    if (!op_.is_hermitian(kTol.structural)) {
        throw NumericError("density matrix is not Hermitian");
    }
    const cplx tr = op_.trace();
    if (std::abs(tr - 1.0) > kTol.structural) {
        throw NumericError("density matrix trace is " + std::to_string(tr.real()) + ", expected 1");
    }
    if (min_eigenvalue(op_) < -kTol.structural) {
        throw NumericError("density matrix has a negative eigenvalue");
    }
}

DensityMatrix DensityMatrix::pure(std::span<const cplx> psi) {
    double norm2 = 0.0;
    for (const auto& c : psi) {
        norm2 += std::norm(c);
    }
    if (norm2 <= 0.0) {
        throw NumericError("pure state vector has zero norm");
    }
    Operator rho = Operator::projector(psi);
    rho *= 1.0 / norm2;
    return DensityMatrix(std::move(rho));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
    Operator rho = Operator::identity(dim);
    rho *= 1.0 / static_cast<double>(dim);
    return DensityMatrix(std::move(rho));
}

TargetModel::TargetModel(Operator h, Operator b, DensityMatrix rho)
    : hamiltonian(std::move(h)), coupling(std::move(b)), initial_state(std::move(rho)) {
    if (hamiltonian.dim() != coupling.dim() || hamiltonian.dim() != initial_state.dim()) {
        throw DimensionError("target model: H, B and rho must share one dimension");
    }
    if (!hamiltonian.is_hermitian()) {
        throw NumericError("target model: Hamiltonian is not Hermitian");
    }
    if (!coupling.is_hermitian()) {
        throw NumericError("target model: coupling operator is not Hermitian");
    }
}

}  // namespace qns
