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

#include "wdfe/device.hpp"
#include "wdfe/io.hpp"
#include "wdfe/protocols.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace wdfe {

/// One protocol run configuration, as read from the experiment JSON:
///   {"system":{"d":3,"n":1},"protocol":"state_l2","target":{...},
///    "noise":{...},"epsilon":0.1,"delta":0.05,"seed":42,"trials":200,
///    "backend":"bernoulli"}
/// Targets: {"kind":"stabilizer_index","index":i}, {"kind":"named","name":s},
/// {"kind":"file","path":p}, {"kind":"interpolated","t":x}.
struct Experiment {
    SystemSpec system{3, 1};
    ProtocolConfig cfg;
    Json target = Json{{"kind", "stabilizer_index"}, {"index", 0}};
    NoiseModel noise;
    /// Echo of the noise object for reports.
    Json noise_json = Json{{"kind", "none"}};
    std::size_t trials = 1;
};

/// ValidationError on malformed or inconsistent configs.
Experiment parse_experiment(const Json& j);
Json experiment_to_json(const Experiment& e);
NoiseModel parse_noise(const Json& j, const SystemSpec& system);

Vector resolve_state_target(const SystemSpec& system, const Json& target);
QuantumChannel resolve_channel_target(const SystemSpec& system, const Json& target);

/// Input of the wigner and magic tools:
///   {"system":{...},"object":"state"|"channel","target":{...},"noise":{...},
///    "threshold":1e-10}
/// State targets may also be density files; channel targets may be
/// multi-Kraus files. Noise, when present, is applied as for a device.
struct AnalysisInput {
    SystemSpec system{3, 1};
    bool is_channel = false;
    /// Set for noiseless pure states.
    std::optional<Vector> psi;
    Matrix rho;
    std::optional<QuantumChannel> channel;
    double threshold = 1e-10;
};

AnalysisInput parse_analysis(const Json& j);

/// Target, device and ground truth built once and shared by all trials.
class PreparedExperiment {
public:
    explicit PreparedExperiment(const Experiment& e);

    const Experiment& experiment() const noexcept { return experiment_; }
    bool is_channel() const noexcept { return channel_target_ != nullptr; }
    /// Simulator-only ground truth F(target, device).
    double exact() const noexcept { return exact_; }
    /// Delta (2^mana) and chi_log of the target.
    double magic_delta() const noexcept;
    double magic_chi_log() const noexcept;
    double bound_total_samples() const;
    std::uint64_t planned_k() const;

    const StateTarget& state_target() const { return *state_target_; }
    const ChannelTarget& channel_target() const { return *channel_target_; }
    const Matrix& device_state() const noexcept { return rho_; }

    /// A per-worker device; reusable across trials run by one thread.
    class Worker {
    public:
        explicit Worker(const PreparedExperiment& owner);
        EstimationResult run(std::uint64_t seed);

    private:
        const PreparedExperiment& owner_;
        std::unique_ptr<StateSampler> state_;
        std::unique_ptr<ChannelSampler> channel_;
    };

private:
    Experiment experiment_;
    std::shared_ptr<const PhaseSpace> space_;
    std::shared_ptr<const StateTarget> state_target_;
    std::shared_ptr<const ChannelTarget> channel_target_;
    Matrix rho_;
    std::unique_ptr<QuantumChannel> lambda_;
    double exact_ = 0.0;
};

struct TrialRow {
    std::size_t trial = 0;
    double estimate = 0.0;
    double exact = 0.0;
    double abs_error = 0.0;
    bool within_epsilon = false;
    std::uint64_t K = 0;
    std::uint64_t total_samples = 0;
    std::uint64_t seed = 0;
};

/// Seed of the trial at `stream` below the experiment's master seed.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t stream);

/// Runs `count` trials with seeds trial_seed(master, first_stream + t).
/// Output is independent of `workers`.
std::vector<TrialRow> run_trials(const PreparedExperiment& prepared, std::size_t count, std::uint64_t first_stream,
                                 std::size_t workers);
std::vector<TrialRow> run_trials(const Experiment& e, std::size_t workers);

enum class SweepAxis { epsilon, delta, noise_p, magic_interpolation };
std::string to_string(SweepAxis axis);
SweepAxis parse_sweep_axis(const std::string& name);

/// Experiment JSON plus
///   "sweep":{"axis":"epsilon","values":[...],"trials_per_point":50,
///            "slack":0.05,"budget":1e9}
struct SweepSpec {
    Experiment base;
    SweepAxis axis = SweepAxis::epsilon;
    std::vector<double> values;
    std::size_t trials_per_point = 1;
    double slack = 0.05;
    /// Maximum estimated device samples over the whole sweep.
    double budget = 1e9;

    /// ValidationError unless values are non-empty and strictly monotone and
    /// trials_per_point >= 1.
    void validate() const;
};

SweepSpec parse_sweep(const Json& j);
Json sweep_to_json(const SweepSpec& s);

/// The experiment for one axis value.
Experiment sweep_point(const SweepSpec& s, double value);

struct SweepRow {
    double axis_value = 0.0;
    double mean_abs_error = 0.0;
    double coverage_fraction = 0.0;
    double mean_total_samples = 0.0;
    double bound_total_samples = 0.0;
    double magic_delta = 0.0;
    double magic_chi_log = 0.0;
    /// mean_total_samples <= bound_total_samples * (1 + slack).
    bool within_bound = false;
};

/// One row per axis value; point a uses trial streams a * T + t. Throws
/// ResourceError before running anything if the estimated sample count
/// exceeds the budget.
std::vector<SweepRow> run_sweep(const SweepSpec& s, std::size_t workers);

enum class OutputFormat { csv, json };
OutputFormat parse_output_format(const std::string& name);

/// trial,estimate,exact,abs_error,within_epsilon,K,total_samples,seed
std::string trials_csv(const std::vector<TrialRow>& rows);
Json trials_json(const std::vector<TrialRow>& rows, const Json& config);
/// axis_value,mean_abs_error,coverage_fraction,mean_total_samples,
/// bound_total_samples,magic_delta,magic_chi_log
std::string sweep_csv(const std::vector<SweepRow>& rows);
Json sweep_json(const std::vector<SweepRow>& rows, const Json& config);

void emit(const std::vector<TrialRow>& rows, const Json& config, OutputFormat format, const std::string& path);
void emit(const std::vector<SweepRow>& rows, const Json& config, OutputFormat format, const std::string& path);

}  // namespace wdfe
