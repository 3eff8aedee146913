// Copyright 2026 The wigner-dfe Authors
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

// Inner-loop arithmetic kernels with a scalar reference implementation and
// SIMD variants selected at runtime.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>

namespace wdfe::kernels {

using cplx = std::complex<double>;

enum class Isa { scalar, avx2, neon };

/// Function table implemented once per instruction set.
struct KernelTable {
    Isa isa;
    /// sum_k a[k] * conj(b[k])
    cplx (*dot_conj)(const cplx* a, const cplx* b, std::size_t n);
    /// sum_k a[k] * b[k]
    double (*dot)(const double* a, const double* b, std::size_t n);
    /// sum_k |a[k]|
    double (*abs_sum)(const double* a, std::size_t n);
    /// sum_k coeff[k] * y[offset[k]]; the trace of a monomial matrix against
    /// a dense one once offsets are laid out for the dense storage order.
    cplx (*gather_dot)(const cplx* coeff, const std::uint32_t* offset, const cplx* y, std::size_t n);
};

const char* isa_name(Isa isa);
bool isa_supported(Isa isa);

/// Best supported table on this machine, chosen on first use.
const KernelTable& active();

/// Table for a specific ISA. Throws std::invalid_argument when unsupported.
const KernelTable& table(Isa isa);

/// Overrides the active table (tests, benchmarking). Not thread-safe with
/// respect to concurrent kernel calls.
void force_isa(Isa isa);

namespace detail {
extern const KernelTable scalar_table;
#if defined(WDFE_HAVE_AVX2)
extern const KernelTable avx2_table;
#endif
#if defined(WDFE_HAVE_NEON)
extern const KernelTable neon_table;
#endif
}  // namespace detail

inline cplx dot_conj(std::span<const cplx> a, std::span<const cplx> b)
{
    return active().dot_conj(a.data(), b.data(), a.size() < b.size() ? a.size() : b.size());
}

inline double dot(std::span<const double> a, std::span<const double> b)
{
    return active().dot(a.data(), b.data(), a.size() < b.size() ? a.size() : b.size());
}

inline double abs_sum(std::span<const double> a) { return active().abs_sum(a.data(), a.size()); }

inline cplx gather_dot(std::span<const cplx> coeff, std::span<const std::uint32_t> offset, const cplx* y)
{
    return active().gather_dot(coeff.data(), offset.data(), y, coeff.size());
}

}  // namespace wdfe::kernels
