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

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

namespace wdfe::kernels {
namespace {

const KernelTable* select_best()
{
    // WDFE_FORCE_SCALAR=1 pins the reference path, e.g. for bisecting a
    // numerical difference between variants.
    if (const char* env = std::getenv("WDFE_FORCE_SCALAR"); env != nullptr && std::strcmp(env, "0") != 0) {
        return &detail::scalar_table;
    }
#if defined(WDFE_HAVE_AVX2)
    if (isa_supported(Isa::avx2)) {
        return &detail::avx2_table;
    }
#endif
#if defined(WDFE_HAVE_NEON)
    return &detail::neon_table;
#else
    return &detail::scalar_table;
#endif
}

std::atomic<const KernelTable*>& current()
{
    static std::atomic<const KernelTable*> table{select_best()};
    return table;
}

}  // namespace

const char* isa_name(Isa isa)
{
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

bool isa_supported(Isa isa)
{
    switch (isa) {
    case Isa::scalar:
        return true;
    case Isa::avx2:
#if defined(WDFE_HAVE_AVX2)
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
        return false;
#endif
    case Isa::neon:
#if defined(WDFE_HAVE_NEON)
        return true;
#else
        return false;
#endif
    }
    return false;
}

const KernelTable& active() { return *current().load(std::memory_order_relaxed); }

const KernelTable& table(Isa isa)
{
    if (!isa_supported(isa)) {
        throw std::invalid_argument(std::string("kernel ISA not supported on this machine: ") + isa_name(isa));
    }
    switch (isa) {
#if defined(WDFE_HAVE_AVX2)
    case Isa::avx2:
        return detail::avx2_table;
#endif
#if defined(WDFE_HAVE_NEON)
    case Isa::neon:
        return detail::neon_table;
#endif
    default:
        return detail::scalar_table;
    }
}

void force_isa(Isa isa) { current().store(&table(isa), std::memory_order_relaxed); }

}  // namespace wdfe::kernels
