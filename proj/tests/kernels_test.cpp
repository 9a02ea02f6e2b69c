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

#include "qns/kernels.hpp"

#include <random>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "qns/operator.hpp"
#include "test_util.hpp"

using namespace qns;
using namespace qns::kernels;

namespace {

std::vector<cplx> random_vector(std::size_t n, std::mt19937_64& gen) {
    std::vector<cplx> v(n);
    for (auto& x : v) {
        x = qns_test::random_complex(gen);
    }
    return v;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

std::vector<cplx> naive_gemm(std::size_t m, std::size_t n, std::size_t k, const std::vector<cplx>& a,
                             const std::vector<cplx>& b) {
    std::vector<cplx> c(m * n);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cplx s = 0.0;
            for (std::size_t p = 0; p < k; ++p) {
                s += a[i * k + p] * b[p * n + j];
            }
            c[i * n + j] = s;
        }
    }
    return c;
}

struct IsaGuard {
    Isa saved = active_isa();
    ~IsaGuard() { set_active_isa(saved); }
};

}  // namespace

TEST(Kernels, scalar_cgemm_matches_naive) {
    std::mt19937_64 gen(1);
    for (auto [m, n, k] : {std::tuple{1, 1, 1}, {3, 5, 7}, {4, 4, 4}, {17, 9, 13}, {64, 64, 64}}) {
        const auto a = random_vector(m * k, gen);
        const auto b = random_vector(k * n, gen);
        std::vector<cplx> c(m * n, cplx(99.0, 99.0));
        scalar::cgemm(m, n, k, a.data(), b.data(), c.data());
        EXPECT_LT(max_diff(c, naive_gemm(m, n, k, a, b)), 1e-12 * k) << m << "x" << n << "x" << k;
    }
}

#if defined(__x86_64__) || defined(_M_X64)
TEST(Kernels, avx2_matches_scalar) {
    if (!isa_supported(Isa::avx2)) {
        GTEST_SKIP() << "CPU lacks AVX2/FMA";
    }
    std::mt19937_64 gen(2);
    for (auto [m, n, k] : {std::tuple{1, 1, 1}, {2, 3, 1}, {3, 5, 7}, {8, 8, 8}, {17, 9, 13}, {33, 65, 31}}) {
        const auto a = random_vector(m * k, gen);
        const auto b = random_vector(k * n, gen);
        std::vector<cplx> cs(m * n), cv(m * n, cplx(-5.0, 5.0));
        scalar::cgemm(m, n, k, a.data(), b.data(), cs.data());
        avx2::cgemm(m, n, k, a.data(), b.data(), cv.data());
        EXPECT_LT(max_diff(cs, cv), 1e-12 * k);
    }
    for (std::size_t n : {0, 1, 2, 3, 7, 64, 1001}) {
        const auto x = random_vector(n, gen);
        const auto y = random_vector(n, gen);
        EXPECT_LT(std::abs(scalar::cdotc(x.data(), y.data(), n) - avx2::cdotc(x.data(), y.data(), n)),
                  1e-12 * (n + 1));
        const cplx s = qns_test::random_complex(gen);
        auto ys = y;
        auto yv = y;
        scalar::caxpy(s, x.data(), ys.data(), n);
        avx2::caxpy(s, x.data(), yv.data(), n);
        EXPECT_LT(max_diff(ys, yv), 1e-13);
    }
}
#endif

TEST(Kernels, cdotc_conjugates_first_argument) {
    const std::vector<cplx> x{{0.0, 1.0}};
    const std::vector<cplx> y{{0.0, 1.0}};
    EXPECT_EQ(cdotc(x, y), cplx(1.0, 0.0));
    EXPECT_EQ(scalar::cdotc(x.data(), y.data(), 1), cplx(1.0, 0.0));
}

TEST(Kernels, dispatch_selects_and_pins) {
    IsaGuard guard;
    EXPECT_TRUE(isa_supported(Isa::scalar));
    EXPECT_TRUE(isa_supported(detected_isa()));
    set_active_isa(Isa::scalar);
    EXPECT_EQ(active_isa(), Isa::scalar);
    EXPECT_EQ(isa_name(Isa::scalar), "scalar");
    for (Isa isa : {Isa::avx2, Isa::neon}) {
        if (!isa_supported(isa)) {
            EXPECT_THROW(set_active_isa(isa), std::invalid_argument);
        }
    }
}

TEST(Kernels, matmul_is_isa_independent) {
    IsaGuard guard;
    std::mt19937_64 gen(3);
    const Operator a = qns_test::random_matrix(23, gen);
    const Operator b = qns_test::random_matrix(23, gen);
    const Operator oracle = qns_test::naive_product(a, b);
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
        if (!isa_supported(isa)) {
            continue;
        }
        set_active_isa(isa);
        EXPECT_LT(max_abs_diff(matmul(a, b), oracle), 1e-12) << isa_name(isa);
        const std::vector<cplx> va(a.data().begin(), a.data().end());
        const std::vector<cplx> vb(b.data().begin(), b.data().end());
        EXPECT_LT(std::abs(hs_inner(a, b) - scalar::cdotc(va.data(), vb.data(), va.size())), 1e-11);
    }
}
