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

#include "wdfe/protocols.hpp"

#include "wdfe/errors.hpp"
#include "wdfe/magic.hpp"
#include "wdfe/stabilizer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

namespace wdfe {

std::string to_string(Protocol protocol)
{
    switch (protocol) {
    case Protocol::state_l2:
        return "state_l2";
    case Protocol::state_l1:
        return "state_l1";
    case Protocol::state_stabilizer:
        return "state_stabilizer";
    case Protocol::channel_l2:
        return "channel_l2";
    case Protocol::channel_l1:
        return "channel_l1";
    case Protocol::channel_clifford:
        return "channel_clifford";
    }
    return "unknown";
}

Protocol parse_protocol(const std::string& name)
{
    for (Protocol p : {Protocol::state_l2, Protocol::state_l1, Protocol::state_stabilizer, Protocol::channel_l2,
                       Protocol::channel_l1, Protocol::channel_clifford}) {
        if (to_string(p) == name) {
            return p;
        }
    }
    throw ValidationError("unknown protocol '" + name + "'");
}

bool is_channel_protocol(Protocol protocol)
{
    return protocol == Protocol::channel_l2 || protocol == Protocol::channel_l1 ||
           protocol == Protocol::channel_clifford;
}

void ProtocolConfig::validate() const
{
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw ValidationError("epsilon must lie in (0,1), got " + std::to_string(epsilon));
    }
    if (!(delta > 0.0 && delta < 1.0)) {
        throw ValidationError("delta must lie in (0,1), got " + std::to_string(delta));
    }
}

namespace schedule {
namespace {

std::uint64_t ceil_count(double x)
{
    if (!std::isfinite(x) || x > 0x1.0p53) {
        throw ResourceError("shot count " + std::to_string(x) + " is not representable");
    }
    return x <= 0.0 ? 0 : static_cast<std::uint64_t>(std::ceil(x));
}

}  // namespace

std::uint64_t k_chebyshev(double epsilon, double delta) { return ceil_count(8.0 / (epsilon * epsilon * delta)); }

std::uint64_t k_chebyshev(double epsilon, double delta, double mass)
{
    return ceil_count(8.0 * mass / (epsilon * epsilon * delta));
}

std::uint64_t k_hoeffding(double epsilon, double delta)
{
    return ceil_count(8.0 * std::log(4.0 / delta) / (epsilon * epsilon));
}

std::uint64_t nk_weighted(double epsilon, double delta, std::uint64_t k, double range, double weight)
{
    return ceil_count(8.0 * range * range / (static_cast<double>(k) * weight * weight * epsilon * epsilon) *
                      std::log(4.0 / delta));
}

std::uint64_t nk_uniform(double epsilon, double delta, std::uint64_t k, double range)
{
    return ceil_count(8.0 * range * range / (static_cast<double>(k) * epsilon * epsilon) * std::log(4.0 / delta));
}

}  // namespace schedule

SupportDistribution::SupportDistribution(std::vector<std::uint64_t> items, const std::vector<double>& weights)
{
    if (items.size() != weights.size()) {
        throw DomainError("support items and weights differ in length");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (weights[i] > 0.0) {
            acc += weights[i];
            items_.push_back(items[i]);
            cdf_.push_back(acc);
        }
    }
    if (items_.empty()) {
        throw ValidationError("sampling distribution has empty support");
    }
}

std::uint64_t SupportDistribution::draw(RngStream& rng) const
{
    const double r = rng.uniform() * cdf_.back();
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), r);
    const auto i = std::min(static_cast<std::size_t>(it - cdf_.begin()), cdf_.size() - 1);
    return items_[i];
}

double SupportDistribution::probability(std::size_t i) const
{
    const double lower = i == 0 ? 0.0 : cdf_[i - 1];
    return (cdf_.at(i) - lower) / cdf_.back();
}

StateTarget::StateTarget(std::shared_ptr<const PhaseSpace> space, Vector psi)
    : space_(std::move(space)), psi_(std::move(psi)), wigner_(wigner_of_state(*space_, psi_))
{
    if (std::abs(psi_.norm() - 1.0) > 1e-9) {
        throw ValidationError("target state is not normalized");
    }
    const MagicReport report = wigner_rank_state(wigner_);
    l1_ = l1_mass(wigner_);
    mana_ = report.mana;
    chi_log_ = report.log_wigner_rank;
    stabilizer_ = is_stabilizer_state(*space_, psi_);

    std::vector<double> squares;
    std::vector<double> magnitudes;
    for (std::uint64_t u : report.support) {
        const double w = wigner_.values(static_cast<Eigen::Index>(u));
        squares.push_back(w * w);
        magnitudes.push_back(std::abs(w));
    }
    l2_ = SupportDistribution(report.support, squares);
    l1_dist_ = SupportDistribution(report.support, magnitudes);
}

namespace {

const QuantumChannel& require_unitary(const QuantumChannel& c)
{
    if (!c.is_unitary(default_tolerances.derived)) {
        throw ValidationError("channel protocols need a unitary target");
    }
    return c;
}

}  // namespace

ChannelTarget::ChannelTarget(std::shared_ptr<const PhaseSpace> space, QuantumChannel target)
    : space_(std::move(space)), target_(std::move(target)), wigner_(wigner_of_channel(*space_, require_unitary(target_)))
{
    const MagicReport report = wigner_rank_channel(wigner_);
    delta_ = max_column_l1(wigner_);
    beta_ = total_l1(wigner_);
    mana_ = report.mana;
    chi_log_ = report.log_wigner_rank;
    clifford_ = wdfe::is_clifford(*space_, target_.unitary_matrix());

    std::vector<double> squares;
    std::vector<double> magnitudes;
    for (std::uint64_t pair : report.support) {
        const double w = weight(pair);
        squares.push_back(w * w);
        magnitudes.push_back(std::abs(w));
    }
    l2_ = SupportDistribution(report.support, squares);
    l1_dist_ = SupportDistribution(report.support, magnitudes);
    // Range bound assumed by the l1 schedule.
    if (beta_ / static_cast<double>(space_->points()) > delta_ + 1e-9) {
        throw NumericalError("beta_U / d^{2n} exceeds Delta_U");
    }
}

double ChannelTarget::weight(std::uint64_t pair) const
{
    const std::uint64_t p = space_->points();
    return wigner_.values(static_cast<Eigen::Index>(pair / p), static_cast<Eigen::Index>(pair % p));
}

double exact_state_fidelity(const Vector& psi, const Matrix& rho)
{
    if (rho.rows() != psi.size() || rho.cols() != psi.size()) {
        throw DomainError("state and density matrix dimensions differ");
    }
    const double f = psi.dot(rho * psi).real();
    if (f < -1e-9 || f > 1.0 + 1e-9) {
        throw NumericalError("fidelity " + std::to_string(f) + " outside [0,1]");
    }
    return f;
}

double exact_state_fidelity_wigner(const PhaseSpace& space, const Vector& psi, const Matrix& rho)
{
    return wigner_inner_product(wigner_of_state(space, psi), wigner_of_operator(space, rho));
}

double exact_channel_fidelity(const PhaseSpace& space, const QuantumChannel& u, const QuantumChannel& lambda)
{
    if (!u.is_unitary(default_tolerances.derived)) {
        throw ValidationError("channel fidelity needs a unitary target");
    }
    if (!(u.system() == lambda.system())) {
        throw DomainError("channels act on different systems");
    }
    const ChannelWigner wu = wigner_of_channel(space, u);
    const ChannelWigner wl = wigner_of_channel(space, lambda);
    return wu.values.cwiseProduct(wl.values).sum() / static_cast<double>(space.points());
}

double exact_channel_fidelity_kraus(const QuantumChannel& u, const QuantumChannel& lambda)
{
    if (!u.is_unitary(default_tolerances.derived)) {
        throw ValidationError("channel fidelity needs a unitary target");
    }
    if (!(u.system() == lambda.system())) {
        throw DomainError("channels act on different systems");
    }
    return entanglement_fidelity_kraus(u.unitary_matrix(), lambda);
}

namespace {

// Runs the K outer iterations with per-k streams and a fixed-order mean.
template <typename Step>
EstimationResult run_outer_loop(std::uint64_t k_total, const ProtocolConfig& cfg, Step step)
{
    const auto start = std::chrono::steady_clock::now();
    EstimationResult r;
    r.K = k_total;
    r.seed = cfg.seed;
    r.Nk.reserve(k_total);
    double sum = 0.0;
    for (std::uint64_t k = 0; k < k_total; ++k) {
        RngStream rng = RngStream::derive(cfg.seed, {k});
        std::uint64_t nk = 0;
        sum += step(rng, nk);
        r.Nk.push_back(nk);
        r.total_samples += nk;
    }
    r.estimate = sum / static_cast<double>(k_total);
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

template <typename Draw>
double mean_of(std::uint64_t n, Draw draw)
{
    double s = 0.0;
    for (std::uint64_t j = 0; j < n; ++j) {
        s += draw();
    }
    return s / static_cast<double>(n);
}

double sign(double x) { return x < 0.0 ? -1.0 : 1.0; }

}  // namespace

EstimationResult estimate_state_fidelity_l2(const StateTarget& target, StateSampler& device,
                                            const ProtocolConfig& cfg)
{
    cfg.validate();
    const std::uint64_t k_total = schedule::k_chebyshev(cfg.epsilon, cfg.delta);
    const double range = 1.0 / static_cast<double>(target.space()->dim());
    return run_outer_loop(k_total, cfg, [&](RngStream& rng, std::uint64_t& nk) {
        const std::uint64_t u = target.l2_distribution().draw(rng);
        const double w = target.wigner().values(static_cast<Eigen::Index>(u));
        nk = schedule::nk_weighted(cfg.epsilon, cfg.delta, k_total, range, w);
        return mean_of(nk, [&] { return device.measure(u, rng).value; }) / w;
    });
}

EstimationResult estimate_state_fidelity_l1(const StateTarget& target, StateSampler& device,
                                            const ProtocolConfig& cfg)
{
    cfg.validate();
    const double mass = target.l1();
    const std::uint64_t k_total = schedule::k_chebyshev(cfg.epsilon, cfg.delta, mass);
    const std::uint64_t n_each = schedule::nk_uniform(cfg.epsilon, cfg.delta, k_total, mass);
    const double scale = static_cast<double>(target.space()->dim()) * mass;
    return run_outer_loop(k_total, cfg, [&](RngStream& rng, std::uint64_t& nk) {
        const std::uint64_t u = target.l1_distribution().draw(rng);
        const double w = target.wigner().values(static_cast<Eigen::Index>(u));
        nk = n_each;
        return sign(w) * scale * mean_of(nk, [&] { return device.measure(u, rng).value; });
    });
}

EstimationResult estimate_stabilizer_fidelity(const StateTarget& target, StateSampler& device,
                                              const ProtocolConfig& cfg)
{
    cfg.validate();
    if (!target.is_stabilizer()) {
        throw PreconditionError("stabilizer protocol needs a stabilizer target state");
    }
    const std::uint64_t k_total = schedule::k_hoeffding(cfg.epsilon, cfg.delta);
    const std::uint64_t n_each = schedule::nk_uniform(cfg.epsilon, cfg.delta, k_total, 1.0);
    // For stabilizer targets the l1 distribution is uniform over the support.
    return run_outer_loop(k_total, cfg, [&](RngStream& rng, std::uint64_t& nk) {
        const std::uint64_t u = target.l1_distribution().draw(rng);
        nk = n_each;
        return mean_of(nk, [&] { return device.measure(u, rng).raw; });
    });
}

EstimationResult estimate_channel_fidelity_l2(const ChannelTarget& target, ChannelSampler& device,
                                              const ProtocolConfig& cfg)
{
    cfg.validate();
    const std::uint64_t k_total = schedule::k_chebyshev(cfg.epsilon, cfg.delta);
    const std::uint64_t p = target.space()->points();
    return run_outer_loop(k_total, cfg, [&](RngStream& rng, std::uint64_t& nk) {
        const std::uint64_t pair = target.l2_distribution().draw(rng);
        const double w = target.weight(pair);
        nk = schedule::nk_weighted(cfg.epsilon, cfg.delta, k_total, 1.0, w);
        return mean_of(nk, [&] { return device.sample(pair % p, pair / p, rng).value; }) / w;
    });
}

EstimationResult estimate_channel_fidelity_l1(const ChannelTarget& target, ChannelSampler& device,
                                              const ProtocolConfig& cfg)
{
    cfg.validate();
    const double mass = target.delta();
    const std::uint64_t k_total = schedule::k_chebyshev(cfg.epsilon, cfg.delta, mass);
    const std::uint64_t n_each = schedule::nk_uniform(cfg.epsilon, cfg.delta, k_total, mass);
    const std::uint64_t p = target.space()->points();
    const double scale = target.beta() / static_cast<double>(p);
    return run_outer_loop(k_total, cfg, [&](RngStream& rng, std::uint64_t& nk) {
        const std::uint64_t pair = target.l1_distribution().draw(rng);
        nk = n_each;
        return sign(target.weight(pair)) * scale *
               mean_of(nk, [&] { return device.sample(pair % p, pair / p, rng).value; });
    });
}

EstimationResult estimate_clifford_fidelity(const ChannelTarget& target, ChannelSampler& device,
                                            const ProtocolConfig& cfg)
{
    cfg.validate();
    if (!target.is_clifford()) {
        throw PreconditionError("Clifford protocol needs a Clifford target unitary");
    }
    const std::uint64_t k_total = schedule::k_hoeffding(cfg.epsilon, cfg.delta);
    const std::uint64_t n_each = schedule::nk_uniform(cfg.epsilon, cfg.delta, k_total, 1.0);
    const std::uint64_t p = target.space()->points();
    return run_outer_loop(k_total, cfg, [&](RngStream& rng, std::uint64_t& nk) {
        const std::uint64_t pair = target.l1_distribution().draw(rng);
        nk = n_each;
        return mean_of(nk, [&] { return device.sample(pair % p, pair / p, rng).raw; });
    });
}

EstimationResult estimate(const StateTarget& target, StateSampler& device, const ProtocolConfig& cfg)
{
    switch (cfg.protocol) {
    case Protocol::state_l2:
        return estimate_state_fidelity_l2(target, device, cfg);
    case Protocol::state_l1:
        return estimate_state_fidelity_l1(target, device, cfg);
    case Protocol::state_stabilizer:
        return estimate_stabilizer_fidelity(target, device, cfg);
    default:
        throw DomainError("protocol " + to_string(cfg.protocol) + " needs a channel target");
    }
}

EstimationResult estimate(const ChannelTarget& target, ChannelSampler& device, const ProtocolConfig& cfg)
{
    switch (cfg.protocol) {
    case Protocol::channel_l2:
        return estimate_channel_fidelity_l2(target, device, cfg);
    case Protocol::channel_l1:
        return estimate_channel_fidelity_l1(target, device, cfg);
    case Protocol::channel_clifford:
        return estimate_clifford_fidelity(target, device, cfg);
    default:
        throw DomainError("protocol " + to_string(cfg.protocol) + " needs a state target");
    }
}

namespace {

double chebyshev_bound(const ProtocolConfig& cfg, double mass, double second, std::uint64_t k)
{
    const double e2 = cfg.epsilon * cfg.epsilon;
    return 1.0 + 8.0 * mass / (e2 * cfg.delta) + 8.0 * second * std::log(4.0 / cfg.delta) / e2 +
           static_cast<double>(k);
}

}  // namespace

std::uint64_t planned_k(const StateTarget& target, const ProtocolConfig& cfg)
{
    cfg.validate();
    switch (cfg.protocol) {
    case Protocol::state_l2:
        return schedule::k_chebyshev(cfg.epsilon, cfg.delta);
    case Protocol::state_l1:
        return schedule::k_chebyshev(cfg.epsilon, cfg.delta, target.l1());
    case Protocol::state_stabilizer:
        return schedule::k_hoeffding(cfg.epsilon, cfg.delta);
    default:
        throw DomainError("protocol " + to_string(cfg.protocol) + " needs a channel target");
    }
}

std::uint64_t planned_k(const ChannelTarget& target, const ProtocolConfig& cfg)
{
    cfg.validate();
    switch (cfg.protocol) {
    case Protocol::channel_l2:
        return schedule::k_chebyshev(cfg.epsilon, cfg.delta);
    case Protocol::channel_l1:
        return schedule::k_chebyshev(cfg.epsilon, cfg.delta, target.delta());
    case Protocol::channel_clifford:
        return schedule::k_hoeffding(cfg.epsilon, cfg.delta);
    default:
        throw DomainError("protocol " + to_string(cfg.protocol) + " needs a state target");
    }
}

double expected_samples_bound(const StateTarget& target, const ProtocolConfig& cfg)
{
    const std::uint64_t k = planned_k(target, cfg);
    switch (cfg.protocol) {
    case Protocol::state_l2:
        return chebyshev_bound(cfg, 1.0, std::exp2(target.chi_log()), k);
    case Protocol::state_l1:
        return chebyshev_bound(cfg, target.l1(), target.l1() * target.l1(), k);
    default:
        return static_cast<double>(k);
    }
}

double expected_samples_bound(const ChannelTarget& target, const ProtocolConfig& cfg)
{
    const std::uint64_t k = planned_k(target, cfg);
    switch (cfg.protocol) {
    case Protocol::channel_l2:
        return chebyshev_bound(cfg, 1.0, std::exp2(target.chi_log()), k);
    case Protocol::channel_l1:
        return chebyshev_bound(cfg, target.delta(), target.delta() * target.delta(), k);
    default:
        return static_cast<double>(k);
    }
}

}  // namespace wdfe
