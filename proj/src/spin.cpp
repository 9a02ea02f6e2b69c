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

#include "qns/spin.hpp"

#include <cmath>

#include "qns/errors.hpp"

namespace qns {

SpinOperators spin_operators(unsigned two_j) {
    const std::size_t dim = two_j + 1;
    const double j = 0.5 * two_j;
    Operator jplus(dim);
    Operator jz(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        const double m = j - static_cast<double>(k);
        jz(k, k) = m;
        if (k > 0) {
            // <m+1| J+ |m>, row k-1 holds m+1.
            jplus(k - 1, k) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
        }
    }
    const Operator jminus = jplus.adjoint();
    return {0.5 * (jplus + jminus), (-0.5 * kI) * (jplus - jminus), jz};
}

Operator site_operator(const Operator& local, std::size_t site, std::size_t n_sites) {
    if (site >= n_sites) {
        throw DimensionError("site_operator: site index out of range");
    }
    const Operator id = Operator::identity(local.dim());
    Operator out = site == 0 ? local : id;
    for (std::size_t s = 1; s < n_sites; ++s) {
        out = kron(out, s == site ? local : id);
    }
    return out;
}

namespace pauli {
Operator x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
Operator y() { return {{0.0, -kI}, {kI, 0.0}}; }
Operator z() { return {{1.0, 0.0}, {0.0, -1.0}}; }
}  // namespace pauli

}  // namespace qns
