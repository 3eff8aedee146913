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

#include "wdfe/phase_space.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace wdfe {

inline constexpr double default_zero_threshold = 1e-10;

struct MagicReport {
    /// Bits.
    double mana = 0.0;
    std::size_t wigner_rank = 0;
    /// log2 chi - log2 of the normalizing dimension (D for states, d^{2n}
    /// for channels).
    double log_wigner_rank = 0.0;
    /// Flat indices of nonzero coefficients; channels use v * P + u.
    std::vector<std::uint64_t> support;
    double zero_threshold = default_zero_threshold;
    /// Ranks recounted at 10x and 0.1x the threshold.
    std::size_t rank_at_coarse = 0;
    std::size_t rank_at_fine = 0;
    /// True when the rank changes across the sensitivity band.
    bool unstable = false;
};

/// log2 sum_u |W(u)|, clipped to 0 within 1e-9. ValidationError unless the
/// values sum to 1.
double mana_state(const WignerFunction& w);
/// log2 max_u sum_v |W(v|u)|. ValidationError unless every column sums to 1.
double mana_channel(const ChannelWigner& cw);

/// sum_u |W(u)| (Delta = 2^mana for states).
double l1_mass(const WignerFunction& w);
/// max column l1 mass (Delta = 2^mana for channels).
double max_column_l1(const ChannelWigner& cw);
/// beta = sum_{v,u} |W(v|u)|.
double total_l1(const ChannelWigner& cw);

/// Wigner rank of a pure state. ValidationError for mixed input
/// (D sum W^2 < 1 - 1e-6) or a non-positive threshold.
MagicReport wigner_rank_state(const WignerFunction& w, double zero_threshold = default_zero_threshold);
/// Wigner rank of a unitary channel. ValidationError for non-unitary input
/// (sum W^2 must equal d^{2n}).
MagicReport wigner_rank_channel(const ChannelWigner& cw, double zero_threshold = default_zero_threshold);

}  // namespace wdfe
