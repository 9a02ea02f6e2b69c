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

// Dense complex inner loops. Every kernel has a scalar reference
// implementation and, where the target supports it, an AVX2+FMA (x86-64) or
// NEON (AArch64) variant. The variant is chosen once at startup from the CPU
// features and can be pinned with set_active_isa() or QNS_ISA=scalar|avx2|neon.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace qns::kernels {

using cplx = std::complex<double>;

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);

/// Whether the running CPU can execute kernels of this ISA.
bool isa_supported(Isa isa);

/// Best ISA supported by the running CPU (ignores QNS_ISA).
Isa detected_isa();

Isa active_isa();

/// Pins the dispatch target. Throws std::invalid_argument if unsupported.
void set_active_isa(Isa isa);

/// c = a * b for row-major a (m x k), b (k x n), c (m x n). c must not alias.
void cgemm(std::size_t m, std::size_t n, std::size_t k, const cplx* a, const cplx* b, cplx* c);

/// sum_i conj(x_i) * y_i
cplx cdotc(std::span<const cplx> x, std::span<const cplx> y);

/// y += s * x
void caxpy(cplx s, std::span<const cplx> x, std::span<cplx> y);

// Per-ISA entry points, exposed for equivalence testing. Calling a variant the
// CPU does not support is undefined behaviour; check isa_supported() first.
namespace scalar {
void cgemm(std::size_t m, std::size_t n, std::size_t k, const cplx* a, const cplx* b, cplx* c);
cplx cdotc(const cplx* x, const cplx* y, std::size_t n);
void caxpy(cplx s, const cplx* x, cplx* y, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void cgemm(std::size_t m, std::size_t n, std::size_t k, const cplx* a, const cplx* b, cplx* c);
cplx cdotc(const cplx* x, const cplx* y, std::size_t n);
void caxpy(cplx s, const cplx* x, cplx* y, std::size_t n);
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
void cgemm(std::size_t m, std::size_t n, std::size_t k, const cplx* a, const cplx* b, cplx* c);
cplx cdotc(const cplx* x, const cplx* y, std::size_t n);
void caxpy(cplx s, const cplx* x, cplx* y, std::size_t n);
}  // namespace neon
#endif

}  // namespace qns::kernels
