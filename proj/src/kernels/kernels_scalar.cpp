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

#include "wdfe/kernels.hpp"

#include <cmath>

namespace wdfe::kernels::detail {
namespace {

cplx dot_conj_scalar(const cplx* a, const cplx* b, std::size_t n)
{
    double re = 0.0;
    double im = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double ar = a[k].real(), ai = a[k].imag();
        const double br = b[k].real(), bi = b[k].imag();
        re += ar * br + ai * bi;
        im += ai * br - ar * bi;
    }
    return {re, im};
}

double dot_scalar(const double* a, const double* b, std::size_t n)
{
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        s += a[k] * b[k];
    }
    return s;
}

double abs_sum_scalar(const double* a, std::size_t n)
{
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        s += std::fabs(a[k]);
    }
    return s;
}

cplx gather_dot_scalar(const cplx* coeff, const std::uint32_t* offset, const cplx* y, std::size_t n)
{
    double re = 0.0;
    double im = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const cplx c = coeff[k];
        const cplx v = y[offset[k]];
        re += c.real() * v.real() - c.imag() * v.imag();
        im += c.real() * v.imag() + c.imag() * v.real();
    }
    return {re, im};
}

}  // namespace

const KernelTable scalar_table{
    Isa::scalar, dot_conj_scalar, dot_scalar, abs_sum_scalar, gather_dot_scalar,
};

}  // namespace wdfe::kernels::detail
