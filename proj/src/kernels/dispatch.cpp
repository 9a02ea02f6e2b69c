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

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "qns/kernels.hpp"

namespace qns::kernels {

namespace {

Isa initial_isa() {
    if (const char* env = std::getenv("QNS_ISA")) {
        const std::string name(env);
        for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
            if (name == isa_name(isa) && isa_supported(isa)) {
                return isa;
            }
        }
    }
    return detected_isa();
}

std::atomic<Isa>& active() {
    static std::atomic<Isa> isa{initial_isa()};
    return isa;
}

void check_sizes(std::size_t nx, std::size_t ny) {
    if (nx != ny) {
        throw std::invalid_argument("kernel operands differ in length");
    }
}

}  // namespace

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return "scalar";
        case Isa::avx2:
            return "avx2";
        case Isa::neon:
            return "neon";
    }
    return "unknown";
}

bool isa_supported(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return true;
        case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
        case Isa::neon:
#if defined(__aarch64__)
            return true;
#else
            return false;
#endif
    }
    return false;
}

Isa detected_isa() {
    if (isa_supported(Isa::avx2)) {
        return Isa::avx2;
    }
    if (isa_supported(Isa::neon)) {
        return Isa::neon;
    }
    return Isa::scalar;
}

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
    if (!isa_supported(isa)) {
        throw std::invalid_argument("ISA not supported on this CPU: " + std::string(isa_name(isa)));
    }
    active().store(isa, std::memory_order_relaxed);
}

void cgemm(std::size_t m, std::size_t n, std::size_t k, const cplx* a, const cplx* b, cplx* c) {
    switch (active_isa()) {
#if defined(__x86_64__) || defined(_M_X64)
        case Isa::avx2:
            return avx2::cgemm(m, n, k, a, b, c);
#endif
#if defined(__aarch64__)
        case Isa::neon:
            return neon::cgemm(m, n, k, a, b, c);
#endif
        default:
            return scalar::cgemm(m, n, k, a, b, c);
    }
}

cplx cdotc(std::span<const cplx> x, std::span<const cplx> y) {
    check_sizes(x.size(), y.size());
    switch (active_isa()) {
#if defined(__x86_64__) || defined(_M_X64)
        case Isa::avx2:
            return avx2::cdotc(x.data(), y.data(), x.size());
#endif
#if defined(__aarch64__)
        case Isa::neon:
            return neon::cdotc(x.data(), y.data(), x.size());
#endif
        default:
            return scalar::cdotc(x.data(), y.data(), x.size());
    }
}

void caxpy(cplx s, std::span<const cplx> x, std::span<cplx> y) {
    check_sizes(x.size(), y.size());
    switch (active_isa()) {
#if defined(__x86_64__) || defined(_M_X64)
        case Isa::avx2:
            return avx2::caxpy(s, x.data(), y.data(), x.size());
#endif
#if defined(__aarch64__)
        case Isa::neon:
            return neon::caxpy(s, x.data(), y.data(), x.size());
#endif
        default:
            return scalar::caxpy(s, x.data(), y.data(), x.size());
    }
}

}  // namespace qns::kernels
