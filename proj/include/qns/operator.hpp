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

// Dense complex operators on small Hilbert spaces, density matrices and the
// target-system model. Joint sensor-target spaces are always ordered
// sensor (x) target: index = sensor_index * target_dim + target_index.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "qns/tolerances.hpp"

namespace qns {

using cplx = std::complex<double>;
inline constexpr cplx kI{0.0, 1.0};

/// Square complex matrix, row-major.
class Operator {
   public:
    Operator() = default;
    explicit Operator(std::size_t dim);
    Operator(std::size_t dim, std::vector<cplx> entries);
    Operator(std::initializer_list<std::initializer_list<cplx>> rows);

    static Operator identity(std::size_t dim);
    static Operator zero(std::size_t dim) { return Operator(dim); }
    static Operator diagonal(std::span<const double> values);
    /// |psi><psi|
    static Operator projector(std::span<const cplx> psi);

    std::size_t dim() const { return dim_; }
    cplx& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
    const cplx& operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
    std::span<const cplx> data() const { return entries_; }
    std::span<cplx> data() { return entries_; }

    Operator adjoint() const;
    Operator transpose() const;
    cplx trace() const;

    Operator& operator+=(const Operator& other);
    Operator& operator-=(const Operator& other);
    Operator& operator*=(cplx s);

    bool is_hermitian(double tol = kTol.structural) const;
    bool is_unitary(double tol = kTol.unitarity) const;

   private:
    std::size_t dim_ = 0;
    std::vector<cplx> entries_;
};

Operator operator+(Operator a, const Operator& b);
Operator operator-(Operator a, const Operator& b);
Operator operator-(Operator a);
Operator operator*(cplx s, Operator a);
Operator operator*(Operator a, cplx s);
/// Matrix product; same as matmul().
Operator operator*(const Operator& a, const Operator& b);

/// Exact matrix product. Throws DimensionError when dims differ.
Operator matmul(const Operator& a, const Operator& b);

/// Kronecker product a (x) b.
Operator kron(const Operator& a, const Operator& b);

Operator commutator(const Operator& a, const Operator& b);
Operator anticommutator(const Operator& a, const Operator& b);

/// Largest |a_ij - b_ij|.
double max_abs_diff(const Operator& a, const Operator& b);
double max_abs(const Operator& a);

/// Frobenius inner product Tr[a^dagger b].
cplx hs_inner(const Operator& a, const Operator& b);

/// op * psi
std::vector<cplx> apply(const Operator& op, std::span<const cplx> psi);

/// Hermitian, unit-trace, positive semidefinite operator.
class DensityMatrix {
   public:
    /// Validates the three invariants; throws NumericError on violation.
    explicit DensityMatrix(Operator op);

    static DensityMatrix pure(std::span<const cplx> psi);
    static DensityMatrix maximally_mixed(std::size_t dim);

    const Operator& op() const { return op_; }
    std::size_t dim() const { return op_.dim(); }

   private:
    Operator op_;
};

/// Hamiltonian H (rad/s), coupling B (rad/s) and initial state of the spin
/// system probed by the light.
struct TargetModel {
    TargetModel(Operator hamiltonian, Operator coupling, DensityMatrix initial_state);

    Operator hamiltonian;
    Operator coupling;
    DensityMatrix initial_state;

    std::size_t dim() const { return hamiltonian.dim(); }
};

}  // namespace qns
