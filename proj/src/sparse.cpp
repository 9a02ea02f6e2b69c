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

#include "qns/sparse.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "qns/errors.hpp"

namespace qns {

SparseOperator::SparseOperator(std::size_t dim, std::vector<Entry> entries) : dim_(dim), row_start_(dim + 1, 0) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.row != b.row ? a.row < b.row : a.col < b.col; });
    std::size_t i = 0;
    while (i < entries.size()) {
        const Entry& e = entries[i];
        if (e.row >= dim || e.col >= dim) {
            throw DimensionError("sparse entry out of range");
        }
        cplx sum = 0.0;
        std::size_t j = i;
        while (j < entries.size() && entries[j].row == e.row && entries[j].col == e.col) {
            sum += entries[j].value;
            ++j;
        }
        if (sum != cplx{}) {
            cols_.push_back(e.col);
            values_.push_back(sum);
            ++row_start_[e.row + 1];
        }
        i = j;
    }
    for (std::size_t r = 0; r < dim; ++r) {
        row_start_[r + 1] += row_start_[r];
    }
}

void SparseOperator::apply(std::span<const cplx> x, std::span<cplx> y) const {
    if (x.size() != dim_ || y.size() != dim_) {
        throw DimensionError("sparse apply: vector length mismatch");
    }
    for (std::size_t r = 0; r < dim_; ++r) {
        cplx acc = 0.0;
        for (std::size_t p = row_start_[r]; p < row_start_[r + 1]; ++p) {
            acc += values_[p] * x[cols_[p]];
        }
        y[r] = acc;
    }
}

std::vector<cplx> SparseOperator::apply(std::span<const cplx> x) const {
    std::vector<cplx> y(dim_);
    apply(x, y);
    return y;
}

Operator SparseOperator::dense(std::size_t max_dim) const {
    if (dim_ > max_dim) {
        throw ResourceError("refusing to densify a " + std::to_string(dim_) + "-dimensional sparse operator");
    }
    Operator out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t p = row_start_[r]; p < row_start_[r + 1]; ++p) {
            out(r, cols_[p]) = values_[p];
        }
    }
    return out;
}

std::vector<SparseOperator::Entry> SparseOperator::entries() const {
    std::vector<Entry> out;
    out.reserve(values_.size());
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t p = row_start_[r]; p < row_start_[r + 1]; ++p) {
            out.push_back({r, cols_[p], values_[p]});
        }
    }
    return out;
}

SparseOperator SparseOperator::adjoint() const {
    auto e = entries();
    for (auto& x : e) {
        std::swap(x.row, x.col);
        x.value = std::conj(x.value);
    }
    return SparseOperator(dim_, std::move(e));
}

SparseOperator SparseOperator::scaled(cplx s) const {
    auto e = entries();
    for (auto& x : e) {
        x.value *= s;
    }
    return SparseOperator(dim_, std::move(e));
}

cplx SparseOperator::at(std::size_t row, std::size_t col) const {
    const auto first = cols_.begin() + static_cast<std::ptrdiff_t>(row_start_[row]);
    const auto last = cols_.begin() + static_cast<std::ptrdiff_t>(row_start_[row + 1]);
    const auto it = std::lower_bound(first, last, col);
    if (it == last || *it != col) {
        return 0.0;
    }
    return values_[static_cast<std::size_t>(it - cols_.begin())];
}

SparseOperator operator+(const SparseOperator& a, const SparseOperator& b) {
    if (a.dim_ != b.dim_) {
        throw DimensionError("sparse +: dimension mismatch");
    }
    auto e = a.entries();
    auto eb = b.entries();
    e.insert(e.end(), eb.begin(), eb.end());
    return SparseOperator(a.dim_, std::move(e));
}

SparseOperator operator-(const SparseOperator& a, const SparseOperator& b) { return a + b.scaled(-1.0); }

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
    if (a.dim_ != b.dim_) {
        throw DimensionError("sparse *: dimension mismatch");
    }
    std::vector<SparseOperator::Entry> out;
    for (std::size_t r = 0; r < a.dim_; ++r) {
        std::map<std::size_t, cplx> row;
        for (std::size_t p = a.row_start_[r]; p < a.row_start_[r + 1]; ++p) {
            const std::size_t mid = a.cols_[p];
            for (std::size_t q = b.row_start_[mid]; q < b.row_start_[mid + 1]; ++q) {
                row[b.cols_[q]] += a.values_[p] * b.values_[q];
            }
        }
        for (const auto& [col, v] : row) {
            out.push_back({r, col, v});
        }
    }
    return SparseOperator(a.dim_, std::move(out));
}

}  // namespace qns
