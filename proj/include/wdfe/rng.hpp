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

#include <cstdint>
#include <initializer_list>
#include <random>

namespace wdfe {

/// SplitMix64 finalizer; used to derive well-separated stream seeds.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed for the stream at `path` below `master`. Distinct paths give
/// statistically independent streams and the mapping is a pure function,
/// so work can be scheduled on any number of threads.
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path) noexcept;

/// A single random stream. Not shared between threads.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : engine_(seed), seed_(seed) {}

    static RngStream derive(std::uint64_t master, std::initializer_list<std::uint64_t> path)
    {
        return RngStream(derive_seed(master, path));
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Standard normal variate (Box-Muller on two uniforms; the
    /// implementation-defined std::normal_distribution is avoided so
    /// sequences match across standard libraries).
    double normal();

    std::uint64_t next_u64() { return engine_(); }
    std::uint64_t seed() const noexcept { return seed_; }

    std::mt19937_64& engine() noexcept { return engine_; }

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
};

}  // namespace wdfe
