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

// AArch64 only; Advanced SIMD is architecturally guaranteed there.

#include "wdfe/kernels.hpp"

#include <arm_neon.h>

#include <cmath>

namespace wdfe::kernels::detail {
namespace {

cplx dot_conj_neon(const cplx* a, const cplx* b, std::size_t n)
{
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    float64x2_t acc_re = vdupq_n_f64(0.0);
    float64x2_t acc_im = vdupq_n_f64(0.0);
    for (std::size_t k = 0; k < n; ++k) {
        const float64x2_t va = vld1q_f64(pa + 2 * k);
        const float64x2_t vb = vld1q_f64(pb + 2 * k);
        acc_re = vfmaq_f64(acc_re, va, vb);                 // [ar*br, ai*bi]
        acc_im = vfmaq_f64(acc_im, va, vextq_f64(vb, vb, 1));  // [ar*bi, ai*br]
    }
    const double re = vgetq_lane_f64(acc_re, 0) + vgetq_lane_f64(acc_re, 1);
    const double im = vgetq_lane_f64(acc_im, 1) - vgetq_lane_f64(acc_im, 0);
    return {re, im};
}

double dot_neon(const double* a, const double* b, std::size_t n)
{
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        acc = vfmaq_f64(acc, vld1q_f64(a + k), vld1q_f64(b + k));
    }
    double s = vaddvq_f64(acc);
    for (; k < n; ++k) {
        s += a[k] * b[k];
    }
    return s;
}

double abs_sum_neon(const double* a, std::size_t n)
{
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        acc = vaddq_f64(acc, vabsq_f64(vld1q_f64(a + k)));
    }
    double s = vaddvq_f64(acc);
    for (; k < n; ++k) {
        s += std::fabs(a[k]);
    }
    return s;
}

cplx gather_dot_neon(const cplx* coeff, const std::uint32_t* offset, const cplx* y, std::size_t n)
{
    const double* pc = reinterpret_cast<const double*>(coeff);
    const double* py = reinterpret_cast<const double*>(y);
    float64x2_t acc_re = vdupq_n_f64(0.0);
    float64x2_t acc_im = vdupq_n_f64(0.0);
    for (std::size_t k = 0; k < n; ++k) {
        const float64x2_t vc = vld1q_f64(pc + 2 * k);
        const float64x2_t vy = vld1q_f64(py + 2 * std::size_t{offset[k]});
        acc_re = vfmaq_f64(acc_re, vc, vy);                    // [cr*yr, ci*yi]
        acc_im = vfmaq_f64(acc_im, vc, vextq_f64(vy, vy, 1));  // [cr*yi, ci*yr]
    }
    const double re = vgetq_lane_f64(acc_re, 0) - vgetq_lane_f64(acc_re, 1);
    const double im = vaddvq_f64(acc_im);
    return {re, im};
}

}  // namespace

const KernelTable neon_table{
    Isa::neon, dot_conj_neon, dot_neon, abs_sum_neon, gather_dot_neon,
};

}  // namespace wdfe::kernels::detail
