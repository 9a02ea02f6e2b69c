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

#include "qns/operator.hpp"

namespace qns {

struct SpinOperators {
    Operator jx;
    Operator jy;
    Operator jz;
};

/// Spin-j matrices (j = two_j/2) in the |j, m> basis with m descending, so
/// jz = diag(j, j-1, ..., -j).
SpinOperators spin_operators(unsigned two_j);

/// Embeds a single-site operator at `site` of an `n_sites` chain of identical
/// sites (site 0 is the leftmost tensor factor).
Operator site_operator(const Operator& local, std::size_t site, std::size_t n_sites);

namespace pauli {
Operator x();
Operator y();
Operator z();
}  // namespace pauli

}  // namespace qns
