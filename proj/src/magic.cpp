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

#include "wdfe/magic.hpp"

#include "wdfe/errors.hpp"
#include "wdfe/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <string>

namespace wdfe {
namespace {

double clipped_log2(double mass)
{
    const double m = std::log2(mass);
    return std::abs(m) <= 1e-9 ? 0.0 : m;
}

void check_threshold(double t)
{
    if (!(t > 0.0)) {
        throw ValidationError("zero threshold must be positive");
    }
}

std::size_t count_above(std::span<const double> values, double t)
{
    return static_cast<std::size_t>(std::count_if(values.begin(), values.end(), [t](double x) { return std::abs(x) > t; }));
}

void check_columns(const ChannelWigner& cw)
{
    for (Eigen::Index u = 0; u < cw.values.cols(); ++u) {
        const double s = cw.values.col(u).sum();
        if (std::abs(s - 1.0) > default_tolerances.derived) {
            throw ValidationError("channel Wigner column " + std::to_string(u) + " sums to " + std::to_string(s));
        }
    }
}

MagicReport rank_report(std::span<const double> values, double threshold, double normalizer_log2)
{
    check_threshold(threshold);
    MagicReport r;
    r.zero_threshold = threshold;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (std::abs(values[i]) > threshold) {
            r.support.push_back(i);
        }
    }
    r.wigner_rank = r.support.size();
    r.rank_at_coarse = count_above(values, threshold * 10.0);
    r.rank_at_fine = count_above(values, threshold * 0.1);
    r.unstable = r.rank_at_coarse != r.wigner_rank || r.rank_at_fine != r.wigner_rank;
    if (r.wigner_rank == 0) {
        throw ValidationError("Wigner function has no coefficient above the threshold");
    }
    r.log_wigner_rank = std::log2(static_cast<double>(r.wigner_rank)) - normalizer_log2;
    if (std::abs(r.log_wigner_rank) <= 1e-12) {
        r.log_wigner_rank = 0.0;
    }
    return r;
}

}  // namespace

double l1_mass(const WignerFunction& w)
{
    return kernels::abs_sum(std::span<const double>(w.values.data(), static_cast<std::size_t>(w.values.size())));
}

double max_column_l1(const ChannelWigner& cw)
{
    double best = 0.0;
    for (Eigen::Index u = 0; u < cw.values.cols(); ++u) {
        const double* col = cw.values.data() + u * cw.values.rows();
        best = std::max(best, kernels::abs_sum(std::span<const double>(col, static_cast<std::size_t>(cw.values.rows()))));
    }
    return best;
}

double total_l1(const ChannelWigner& cw)
{
    return kernels::abs_sum(std::span<const double>(cw.values.data(), static_cast<std::size_t>(cw.values.size())));
}

double mana_state(const WignerFunction& w)
{
    const double s = w.values.sum();
    if (std::abs(s - 1.0) > default_tolerances.derived) {
        throw ValidationError("mana needs a normalized Wigner function; values sum to " + std::to_string(s));
    }
    return clipped_log2(l1_mass(w));
}

double mana_channel(const ChannelWigner& cw)
{
    check_columns(cw);
    return clipped_log2(max_column_l1(cw));
}

MagicReport wigner_rank_state(const WignerFunction& w, double zero_threshold)
{
    const double dim = static_cast<double>(w.system.dim());
    const double purity = dim * w.values.squaredNorm();
    if (purity < 1.0 - 1e-6) {
        throw ValidationError("Wigner rank is defined for pure states; purity is " + std::to_string(purity));
    }
    MagicReport r = rank_report(std::span<const double>(w.values.data(), static_cast<std::size_t>(w.values.size())),
                                zero_threshold, std::log2(dim));
    r.mana = mana_state(w);
    return r;
}

MagicReport wigner_rank_channel(const ChannelWigner& cw, double zero_threshold)
{
    const double points = static_cast<double>(cw.system.points());
    // Unitary channels have a pure Choi state: sum W^2 = d^{2n}.
    const double square_sum = cw.values.squaredNorm();
    if (std::abs(square_sum - points) > 1e-6 * points) {
        throw ValidationError("Wigner rank of channels is defined for unitary channels");
    }
    // Row-major (v, u) order so flat index = v * P + u.
    const RealMatrix transposed = cw.values.transpose();
    MagicReport r = rank_report(
        std::span<const double>(transposed.data(), static_cast<std::size_t>(transposed.size())), zero_threshold,
        std::log2(points));
    r.mana = mana_channel(cw);
    return r;
}

}  // namespace wdfe
