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

// Time-ordered correlations C^{eta_K...eta_1} = Tr[B_K^{eta_K} ... B_1^{eta_1} rho]
// built from the superoperators
//   B^+ rho = (B rho + rho B) / 2      (anticommutator branch)
//   B^- rho = (B rho - rho B) / i      (commutator branch)
// with B_k = B(t_k) in the interaction picture of the target Hamiltonian.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qns/operator.hpp"

namespace qns {

enum class BranchSign { plus, minus };

inline char sign_char(BranchSign s) { return s == BranchSign::plus ? '+' : '-'; }

/// "+--+" style label in the conventional eta_K ... eta_1 order.
std::string correlation_label(std::span<const BranchSign> signs);

/// Times t_1 <= ... <= t_K and the branch sign applied at each of them.
struct CorrelationQuery {
    std::vector<double> times;
    std::vector<BranchSign> signs;

    std::size_t order() const { return times.size(); }
    /// Throws ConfigError unless K >= 1, lengths match, times non-decreasing.
    void validate() const;
};

Operator apply_branch(const Operator& b, BranchSign sign, const Operator& rho);

/// B(t) = exp(+iHt) B exp(-iHt).
Operator heisenberg_coupling(const TargetModel& model, double t);

/// Superoperator chain evaluated on dense matrices. Returns exactly 0.0 when
/// the last sign is minus. Throws NumericError if the trace has an imaginary
/// part above tolerance.
double correlation(const TargetModel& model, const CorrelationQuery& query);

/// Superoperator as a d^2 x d^2 matrix acting on column-major vec(rho):
/// vec(A rho C) = (C^T (x) A) vec(rho), so left multiplication by B is I (x) B
/// and right multiplication is B^T (x) I.
class LiouvilleMatrix {
   public:
    static LiouvilleMatrix left(const Operator& b);
    static LiouvilleMatrix right(const Operator& b);
    static LiouvilleMatrix branch(const Operator& b, BranchSign sign);

    std::size_t dim2() const { return matrix_.dim(); }
    const Operator& matrix() const { return matrix_; }
    std::vector<cplx> apply(std::span<const cplx> vec_rho) const;

   private:
    explicit LiouvilleMatrix(Operator m) : matrix_(std::move(m)) {}
    Operator matrix_;
};

std::vector<cplx> vectorize(const Operator& rho);
Operator unvectorize(std::span<const cplx> vec_rho);

/// Independent evaluation of correlation() in Liouville space. No shortcut for
/// a trailing minus sign: the trace is computed in full.
double liouville_correlation(const TargetModel& model, const CorrelationQuery& query);

}  // namespace qns
