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

#include "doctest.h"

#include "wdfe/kernels.hpp"
#include "wdfe/rng.hpp"

#include <cmath>
#include <vector>

using namespace wdfe;
using kernels::cplx;
using kernels::Isa;

namespace {

struct Inputs {
    std::vector<cplx> a, b;
    std::vector<double> x, y;
    std::vector<std::uint32_t> offset;
    std::vector<cplx> pool;
};

Inputs make_inputs(std::size_t n, std::uint64_t seed)
{
    RngStream rng(seed);
    Inputs in;
    for (std::size_t i = 0; i < n; ++i) {
        in.a.emplace_back(rng.normal(), rng.normal());
        in.b.emplace_back(rng.normal(), rng.normal());
        in.x.push_back(rng.normal());
        in.y.push_back(rng.normal());
    }
    const std::size_t pool = 3 * n + 1;
    for (std::size_t i = 0; i < pool; ++i) {
        in.pool.emplace_back(rng.normal(), rng.normal());
    }
    for (std::size_t i = 0; i < n; ++i) {
        in.offset.push_back(static_cast<std::uint32_t>(rng.next_u64() % pool));
    }
    return in;
}

// Straight-line loops, independent of every kernel table.
cplx ref_dot_conj(const Inputs& in)
{
    cplx s = 0.0;
    for (std::size_t i = 0; i < in.a.size(); ++i) {
        s += in.a[i] * std::conj(in.b[i]);
    }
    return s;
}

}  // namespace

TEST_CASE("kernel variants agree with straight-line reference")
{
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
        if (!kernels::isa_supported(isa)) {
            continue;
        }
        CAPTURE(kernels::isa_name(isa));
        const kernels::KernelTable& t = kernels::table(isa);
        // Lengths cover empty input, SIMD tails and multi-block bodies.
        for (std::size_t n : {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 63, 100, 2401}) {
            CAPTURE(n);
            const Inputs in = make_inputs(n, 1000 + n);
            const cplx dc = t.dot_conj(in.a.data(), in.b.data(), n);
            CHECK(std::abs(dc - ref_dot_conj(in)) <= 1e-12 * (1.0 + n));
            double d = 0.0, s = 0.0;
            cplx g = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                d += in.x[i] * in.y[i];
                s += std::abs(in.x[i]);
                g += in.a[i] * in.pool[in.offset[i]];
            }
            CHECK(std::abs(t.dot(in.x.data(), in.y.data(), n) - d) <= 1e-12 * (1.0 + n));
            CHECK(std::abs(t.abs_sum(in.x.data(), n) - s) <= 1e-12 * (1.0 + n));
            CHECK(std::abs(t.gather_dot(in.a.data(), in.offset.data(), in.pool.data(), n) - g) <= 1e-12 * (1.0 + n));
        }
    }
}

TEST_CASE("kernel dispatch")
{
    CHECK(kernels::isa_supported(Isa::scalar));
    CHECK(kernels::table(Isa::scalar).isa == Isa::scalar);
    const Isa best = kernels::active().isa;
    CHECK(kernels::isa_supported(best));
    kernels::force_isa(Isa::scalar);
    CHECK(kernels::active().isa == Isa::scalar);
    kernels::force_isa(best);
    CHECK(kernels::active().isa == best);
    if (!kernels::isa_supported(Isa::neon)) {
        CHECK_THROWS_AS(kernels::table(Isa::neon), std::invalid_argument);
    }
}
