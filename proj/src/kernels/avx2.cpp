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

// Compiled with -mavx2 -mfma; only reached through the runtime dispatcher.

#include <immintrin.h>

#include "qns/kernels.hpp"

namespace qns::kernels::avx2 {

namespace {

// (ar + i ai) * [b0, b1] for two interleaved complex doubles.
inline __m256d cmul_broadcast(__m256d ar, __m256d ai, __m256d b) {
    const __m256d b_swapped = _mm256_permute_pd(b, 0b0101);
    return _mm256_fmaddsub_pd(ar, b, _mm256_mul_pd(ai, b_swapped));
}


}  // namespace

void cgemm(std::size_t m, std::size_t n, std::size_t k, const cplx* a, const cplx* b, cplx* c) {
    const std::size_t n2 = n & ~std::size_t{1};
    for (std::size_t i = 0; i < m; ++i) {
        double* crow = reinterpret_cast<double*>(c + i * n);
        for (std::size_t j = 0; j < 2 * n; ++j) {
            crow[j] = 0.0;
        }
        for (std::size_t p = 0; p < k; ++p) {
            const double ar_s = a[i * k + p].real();
            const double ai_s = a[i * k + p].imag();
            const __m256d ar = _mm256_set1_pd(ar_s);
            const __m256d ai = _mm256_set1_pd(ai_s);
            const double* brow = reinterpret_cast<const double*>(b + p * n);
            std::size_t j = 0;
            for (; j + 4 <= n2; j += 4) {
                const __m256d b0 = _mm256_loadu_pd(brow + 2 * j);
                const __m256d b1 = _mm256_loadu_pd(brow + 2 * j + 4);
                __m256d c0 = _mm256_loadu_pd(crow + 2 * j);
                __m256d c1 = _mm256_loadu_pd(crow + 2 * j + 4);
                c0 = _mm256_add_pd(c0, cmul_broadcast(ar, ai, b0));
                c1 = _mm256_add_pd(c1, cmul_broadcast(ar, ai, b1));
                _mm256_storeu_pd(crow + 2 * j, c0);
                _mm256_storeu_pd(crow + 2 * j + 4, c1);
            }
            for (; j < n2; j += 2) {
                const __m256d b0 = _mm256_loadu_pd(brow + 2 * j);
                const __m256d c0 = _mm256_loadu_pd(crow + 2 * j);
                _mm256_storeu_pd(crow + 2 * j, _mm256_add_pd(c0, cmul_broadcast(ar, ai, b0)));
            }
            if (n2 != n) {
                const double br = brow[2 * n2];
                const double bi = brow[2 * n2 + 1];
                crow[2 * n2] += ar_s * br - ai_s * bi;
                crow[2 * n2 + 1] += ar_s * bi + ai_s * br;
            }
        }
    }
}

cplx cdotc(const cplx* x, const cplx* y, std::size_t n) {
    const double* xd = reinterpret_cast<const double*>(x);
    const double* yd = reinterpret_cast<const double*>(y);
    // direct accumulates [xr*yr, xi*yi], cross accumulates [xr*yi, xi*yr].
    __m256d direct = _mm256_setzero_pd();
    __m256d cross = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        direct = _mm256_fmadd_pd(xv, yv, direct);
        cross = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), cross);
    }
    alignas(32) double d[4];
    alignas(32) double x4[4];
    _mm256_store_pd(d, direct);
    _mm256_store_pd(x4, cross);
    double re = (d[0] + d[2]) + (d[1] + d[3]);
    double im = (x4[0] + x4[2]) - (x4[1] + x4[3]);
    for (; i < n; ++i) {
        re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
        im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
    }
    return {re, im};
}

void caxpy(cplx s, const cplx* x, cplx* y, std::size_t n) {
    const __m256d sr = _mm256_set1_pd(s.real());
    const __m256d si = _mm256_set1_pd(s.imag());
    const double* xd = reinterpret_cast<const double*>(x);
    double* yd = reinterpret_cast<double*>(y);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(yv, cmul_broadcast(sr, si, xv)));
    }
    for (; i < n; ++i) {
        y[i] = {y[i].real() + s.real() * x[i].real() - s.imag() * x[i].imag(),
                y[i].imag() + s.real() * x[i].imag() + s.imag() * x[i].real()};
    }
}

}  // namespace qns::kernels::avx2
