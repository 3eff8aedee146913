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

// Compiled with -mavx2 -mfma. Only reached after a runtime CPU check; keep
// this translation unit free of Eigen and other inline-heavy headers.

#include "wdfe/kernels.hpp"

#include <immintrin.h>

#include <cmath>

namespace wdfe::kernels::detail {
namespace {

inline double hsum(__m256d v)
{
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// Sum of lanes {0,2} and {1,3} separately.
inline void hsum_pairs(__m256d v, double& even, double& odd)
{
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    even = _mm_cvtsd_f64(s);
    odd = _mm_cvtsd_f64(_mm_unpackhi_pd(s, s));
}

cplx dot_conj_avx2(const cplx* a, const cplx* b, std::size_t n)
{
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        const __m256d va = _mm256_loadu_pd(pa + 2 * k);
        const __m256d vb = _mm256_loadu_pd(pb + 2 * k);
        const __m256d vb_sw = _mm256_permute_pd(vb, 0b0101);
        acc_re = _mm256_fmadd_pd(va, vb, acc_re);
        acc_im = _mm256_fmadd_pd(va, vb_sw, acc_im);
    }
    double re = hsum(acc_re);
    double im_even = 0.0;
    double im_odd = 0.0;
    hsum_pairs(acc_im, im_even, im_odd);
    double im = im_odd - im_even;
    for (; k < n; ++k) {
        re += a[k].real() * b[k].real() + a[k].imag() * b[k].imag();
        im += a[k].imag() * b[k].real() - a[k].real() * b[k].imag();
    }
    return {re, im};
}

double dot_avx2(const double* a, const double* b, std::size_t n)
{
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 8 <= n; k += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + k + 4), _mm256_loadu_pd(b + k + 4), acc1);
    }
    for (; k + 4 <= n; k += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k), acc0);
    }
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; k < n; ++k) {
        s += a[k] * b[k];
    }
    return s;
}

double abs_sum_avx2(const double* a, std::size_t n)
{
    const __m256d sign = _mm256_set1_pd(-0.0);
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 8 <= n; k += 8) {
        acc0 = _mm256_add_pd(acc0, _mm256_andnot_pd(sign, _mm256_loadu_pd(a + k)));
        acc1 = _mm256_add_pd(acc1, _mm256_andnot_pd(sign, _mm256_loadu_pd(a + k + 4)));
    }
    for (; k + 4 <= n; k += 4) {
        acc0 = _mm256_add_pd(acc0, _mm256_andnot_pd(sign, _mm256_loadu_pd(a + k)));
    }
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; k < n; ++k) {
        s += std::fabs(a[k]);
    }
    return s;
}

cplx gather_dot_avx2(const cplx* coeff, const std::uint32_t* offset, const cplx* y, std::size_t n)
{
    const double* pc = reinterpret_cast<const double*>(coeff);
    const double* py = reinterpret_cast<const double*>(y);
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        const __m256d vc = _mm256_loadu_pd(pc + 2 * k);
        const __m128d y0 = _mm_loadu_pd(py + 2 * std::size_t{offset[k]});
        const __m128d y1 = _mm_loadu_pd(py + 2 * std::size_t{offset[k + 1]});
        const __m256d vy = _mm256_set_m128d(y1, y0);
        const __m256d vy_sw = _mm256_permute_pd(vy, 0b0101);
        acc_re = _mm256_fmadd_pd(vc, vy, acc_re);     // [cr*yr, ci*yi]
        acc_im = _mm256_fmadd_pd(vc, vy_sw, acc_im);  // [cr*yi, ci*yr]
    }
    double re_even = 0.0, re_odd = 0.0;
    hsum_pairs(acc_re, re_even, re_odd);
    double re = re_even - re_odd;
    double im = hsum(acc_im);
    for (; k < n; ++k) {
        const cplx c = coeff[k];
        const cplx v = y[offset[k]];
        re += c.real() * v.real() - c.imag() * v.imag();
        im += c.real() * v.imag() + c.imag() * v.real();
    }
    return {re, im};
}

}  // namespace

const KernelTable avx2_table{
    Isa::avx2, dot_conj_avx2, dot_avx2, abs_sum_avx2, gather_dot_avx2,
};

}  // namespace wdfe::kernels::detail
