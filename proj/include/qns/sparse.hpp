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

#include <cstddef>
#include <span>
#include <vector>

#include "qns/operator.hpp"

namespace qns {

/// Square complex matrix in compressed sparse row form.
class SparseOperator {
   public:
    struct Entry {
        std::size_t row;
        std::size_t col;
        cplx value;
    };

    SparseOperator() = default;
    /// Duplicate (row, col) entries are summed; exact zeros are dropped.
    SparseOperator(std::size_t dim, std::vector<Entry> entries);

    std::size_t dim() const { return dim_; }
    std::size_t nonzeros() const { return values_.size(); }

    void apply(std::span<const cplx> x, std::span<cplx> y) const;
    std::vector<cplx> apply(std::span<const cplx> x) const;

    /// Throws ResourceError above `max_dim`.
    Operator dense(std::size_t max_dim = 4096) const;

    SparseOperator adjoint() const;
    SparseOperator scaled(cplx s) const;
    /// Element (row, col), zero if absent.
    cplx at(std::size_t row, std::size_t col) const;

    friend SparseOperator operator+(const SparseOperator& a, const SparseOperator& b);
    friend SparseOperator operator-(const SparseOperator& a, const SparseOperator& b);
    /// Sparse product a * b.
    friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);

   private:
    std::vector<Entry> entries() const;

    std::size_t dim_ = 0;
    std::vector<std::size_t> row_start_;
    std::vector<std::size_t> cols_;
    std::vector<cplx> values_;
};

}  // namespace qns
