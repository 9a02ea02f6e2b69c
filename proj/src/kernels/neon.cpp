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

#if defined(__aarch64__)

#include <arm_neon.h>

#include "qns/kernels.hpp"

namespace qns::kernels::neon {

namespace {

// s * b for one complex double held as [re, im]; sign_im = [-si, si].
inline float64x2_t cmul(double sr, float64x2_t sign_im, float64x2_t b) {
    return vfmaq_f64(vmulq_n_f64(b, sr), sign_im, vextq_f64(b, b, 1));
}

}  // namespace

void cgemm(std::size_t m, std::size_t n, std::size_t k, const cplx* a, const cplx* b, cplx* c) {
    for (std::size_t i = 0; i < m; ++i) {
        double* crow = reinterpret_cast<double*>(c + i * n);
        for (std::size_t j = 0; j < 2 * n; ++j) {
            crow[j] = 0.0;
        }
        for (std::size_t p = 0; p < k; ++p) {
            const double ar = a[i * k + p].real();
            const double ai = a[i * k + p].imag();
            const float64x2_t sign_im = {-ai, ai};
            const double* brow = reinterpret_cast<const double*>(b + p * n);
            for (std::size_t j = 0; j < n; ++j) {
                const float64x2_t bv = vld1q_f64(brow + 2 * j);
                const float64x2_t cv = vld1q_f64(crow + 2 * j);
                vst1q_f64(crow + 2 * j, vaddq_f64(cv, cmul(ar, sign_im, bv)));
            }
        }
    }
}

cplx cdotc(const cplx* x, const cplx* y, std::size_t n) {
    const double* xd = reinterpret_cast<const double*>(x);
    const double* yd = reinterpret_cast<const double*>(y);
    float64x2_t direct = vdupq_n_f64(0.0);
    float64x2_t cross = vdupq_n_f64(0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t xv = vld1q_f64(xd + 2 * i);
        const float64x2_t yv = vld1q_f64(yd + 2 * i);
        direct = vfmaq_f64(direct, xv, yv);
        cross = vfmaq_f64(cross, xv, vextq_f64(yv, yv, 1));
    }
    return {vgetq_lane_f64(direct, 0) + vgetq_lane_f64(direct, 1),
            vgetq_lane_f64(cross, 0) - vgetq_lane_f64(cross, 1)};
}

void caxpy(cplx s, const cplx* x, cplx* y, std::size_t n) {
    const float64x2_t sign_im = {-s.imag(), s.imag()};
    const double* xd = reinterpret_cast<const double*>(x);
    double* yd = reinterpret_cast<double*>(y);
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t xv = vld1q_f64(xd + 2 * i);
        const float64x2_t yv = vld1q_f64(yd + 2 * i);
        vst1q_f64(yd + 2 * i, vaddq_f64(yv, cmul(s.real(), sign_im, xv)));
    }
}

}  // namespace qns::kernels::neon

#endif
