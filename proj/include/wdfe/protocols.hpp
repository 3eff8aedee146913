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

#include "wdfe/channel.hpp"
#include "wdfe/device.hpp"
#include "wdfe/phase_space.hpp"
#include "wdfe/rng.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace wdfe {

enum class Protocol { state_l2, state_l1, state_stabilizer, channel_l2, channel_l1, channel_clifford };

std::string to_string(Protocol protocol);
/// Throws ValidationError for unknown names.
Protocol parse_protocol(const std::string& name);
bool is_channel_protocol(Protocol protocol);

struct ProtocolConfig {
    Protocol protocol = Protocol::state_l2;
    double epsilon = 0.1;
    double delta = 0.05;
    std::uint64_t seed = 0;
    /// Channel protocols only.
    Backend backend = Backend::bernoulli;

    /// ValidationError unless epsilon and delta lie strictly inside (0,1).
    void validate() const;
};

struct EstimationResult {
    double estimate = 0.0;
    std::uint64_t K = 0;
    std::vector<std::uint64_t> Nk;
    std::uint64_t total_samples = 0;
    /// Simulator-only ground truth, when requested.
    std::optional<double> exact;
    std::uint64_t seed = 0;
    double wall_seconds = 0.0;
};

/// Shot schedules. All values are plain ceilings of the double-precision
/// expressions; ResourceError when a count is not representable.
namespace schedule {

/// ceil(8 / (eps^2 delta)): Protocols 1 and 4.
std::uint64_t k_chebyshev(double epsilon, double delta);
/// ceil(8 Delta / (eps^2 delta)): Protocols 2 and 5.
std::uint64_t k_chebyshev(double epsilon, double delta, double mass);
/// ceil(8 ln(4/delta) / eps^2): Protocols 3 and 6.
std::uint64_t k_hoeffding(double epsilon, double delta);
/// ceil(8 Delta^2 / (K w^2 eps^2) ln(4/delta)): Protocols 1 and 4.
std::uint64_t nk_weighted(double epsilon, double delta, std::uint64_t k, double range, double weight);
/// ceil(8 Delta^2 / (K eps^2) ln(4/delta)): Protocols 2, 3, 5 and 6.
std::uint64_t nk_uniform(double epsilon, double delta, std::uint64_t k, double range);

}  // namespace schedule

/// Exact discrete distribution over a support, sampled by inverse CDF.
class SupportDistribution {
public:
    SupportDistribution() = default;
    /// Items with weight <= 0 are dropped. ValidationError if nothing remains.
    SupportDistribution(std::vector<std::uint64_t> items, const std::vector<double>& weights);

    std::uint64_t draw(RngStream& rng) const;
    std::size_t size() const noexcept { return items_.size(); }
    const std::vector<std::uint64_t>& items() const noexcept { return items_; }
    /// Normalized probability of the i-th retained item.
    double probability(std::size_t i) const;

private:
    std::vector<std::uint64_t> items_;
    std::vector<double> cdf_;
};

/// A pure target state with its Wigner data and magic, shared read-only by
/// every run.
class StateTarget {
public:
    StateTarget(std::shared_ptr<const PhaseSpace> space, Vector psi);

    const std::shared_ptr<const PhaseSpace>& space() const noexcept { return space_; }
    const Vector& psi() const noexcept { return psi_; }
    const WignerFunction& wigner() const noexcept { return wigner_; }
    /// Delta_psi = sum |W| = 2^mana.
    double l1() const noexcept { return l1_; }
    double mana() const noexcept { return mana_; }
    double chi_log() const noexcept { return chi_log_; }
    bool is_stabilizer() const noexcept { return stabilizer_; }

    /// Pr(u) = D W(u)^2 over the support.
    const SupportDistribution& l2_distribution() const noexcept { return l2_; }
    /// Pr(u) = |W(u)| / Delta_psi.
    const SupportDistribution& l1_distribution() const noexcept { return l1_dist_; }

private:
    std::shared_ptr<const PhaseSpace> space_;
    Vector psi_;
    WignerFunction wigner_;
    double l1_ = 0.0;
    double mana_ = 0.0;
    double chi_log_ = 0.0;
    bool stabilizer_ = false;
    SupportDistribution l2_;
    SupportDistribution l1_dist_;
};

/// A unitary target channel with its channel Wigner function and magic.
/// Pair items are encoded as v * P + u.
class ChannelTarget {
public:
    ChannelTarget(std::shared_ptr<const PhaseSpace> space, QuantumChannel target);

    const std::shared_ptr<const PhaseSpace>& space() const noexcept { return space_; }
    const QuantumChannel& channel() const noexcept { return target_; }
    const ChannelWigner& wigner() const noexcept { return wigner_; }
    /// Delta_U = max column l1 = 2^mana.
    double delta() const noexcept { return delta_; }
    /// beta_U = sum |W_U|.
    double beta() const noexcept { return beta_; }
    double mana() const noexcept { return mana_; }
    double chi_log() const noexcept { return chi_log_; }
    bool is_clifford() const noexcept { return clifford_; }

    /// Pr(v,u) = W_U(v|u)^2 / d^{2n}.
    const SupportDistribution& l2_distribution() const noexcept { return l2_; }
    /// Pr(v,u) = |W_U(v|u)| / beta_U.
    const SupportDistribution& l1_distribution() const noexcept { return l1_dist_; }

    double weight(std::uint64_t pair) const;

private:
    std::shared_ptr<const PhaseSpace> space_;
    QuantumChannel target_;
    ChannelWigner wigner_;
    double delta_ = 0.0;
    double beta_ = 0.0;
    double mana_ = 0.0;
    double chi_log_ = 0.0;
    bool clifford_ = false;
    SupportDistribution l2_;
    SupportDistribution l1_dist_;
};

/// tr[psi rho], checked to lie in [-1e-9, 1 + 1e-9].
double exact_state_fidelity(const Vector& psi, const Matrix& rho);
/// D sum_u W_psi(u) W_rho(u).
double exact_state_fidelity_wigner(const PhaseSpace& space, const Vector& psi, const Matrix& rho);
/// d^{-2n} sum_{v,u} W_U(v|u) W_Lambda(v|u). ValidationError unless `u` is
/// a unitary channel.
double exact_channel_fidelity(const PhaseSpace& space, const QuantumChannel& u, const QuantumChannel& lambda);
/// Same quantity through Kraus overlaps; O(#Kraus D^2).
double exact_channel_fidelity_kraus(const QuantumChannel& u, const QuantumChannel& lambda);

/// Protocol 1: importance sampling with Pr(u) = D W_psi(u)^2.
EstimationResult estimate_state_fidelity_l2(const StateTarget& target, StateSampler& device,
                                            const ProtocolConfig& cfg);
/// Protocol 2: Pr(u) = |W_psi(u)| / Delta_psi.
EstimationResult estimate_state_fidelity_l1(const StateTarget& target, StateSampler& device,
                                            const ProtocolConfig& cfg);
/// Protocol 3: stabilizer targets, uniform over the support, one shot each.
/// PreconditionError for non-stabilizer targets.
EstimationResult estimate_stabilizer_fidelity(const StateTarget& target, StateSampler& device,
                                              const ProtocolConfig& cfg);
/// Protocol 4: Pr(v,u) = W_U(v|u)^2 / d^{2n}.
EstimationResult estimate_channel_fidelity_l2(const ChannelTarget& target, ChannelSampler& device,
                                              const ProtocolConfig& cfg);
/// Protocol 5: Pr(v,u) = |W_U(v|u)| / beta_U.
EstimationResult estimate_channel_fidelity_l1(const ChannelTarget& target, ChannelSampler& device,
                                              const ProtocolConfig& cfg);
/// Protocol 6: Clifford targets, uniform over the support pairs.
/// PreconditionError for non-Clifford targets.
EstimationResult estimate_clifford_fidelity(const ChannelTarget& target, ChannelSampler& device,
                                            const ProtocolConfig& cfg);

/// Dispatch on cfg.protocol. DomainError when a state protocol is given a
/// channel target or vice versa.
EstimationResult estimate(const StateTarget& target, StateSampler& device, const ProtocolConfig& cfg);
EstimationResult estimate(const ChannelTarget& target, ChannelSampler& device, const ProtocolConfig& cfg);

/// Expected total samples from the performance analyses, plus K for the
/// per-k ceilings. Protocols 3 and 6 return K exactly.
double expected_samples_bound(const StateTarget& target, const ProtocolConfig& cfg);
double expected_samples_bound(const ChannelTarget& target, const ProtocolConfig& cfg);

/// Number of shots K each protocol would draw, for budget estimates.
std::uint64_t planned_k(const StateTarget& target, const ProtocolConfig& cfg);
std::uint64_t planned_k(const ChannelTarget& target, const ProtocolConfig& cfg);

}  // namespace wdfe
