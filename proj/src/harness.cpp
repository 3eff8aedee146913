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

#include "wdfe/harness.hpp"

#include "wdfe/errors.hpp"
#include "wdfe/targets.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace wdfe {
namespace {

template <typename T>
T field_or(const Json& j, const char* key, T fallback)
{
    return j.contains(key) ? j.at(key).get<T>() : fallback;
}

// Converts nlohmann type errors into ValidationError with context.
template <typename F>
auto guarded(const char* what, F f) -> decltype(f())
{
    try {
        return f();
    } catch (const Json::exception& e) {
        throw ValidationError(std::string(what) + ": " + e.what());
    }
}

}  // namespace

NoiseModel parse_noise(const Json& j, const SystemSpec& system)
{
    return guarded("noise", [&] {
        if (j.is_null()) {
            return NoiseModel::none();
        }
        const NoiseKind kind = parse_noise_kind(field_or<std::string>(j, "kind", "none"));
        NoiseModel m;
        switch (kind) {
        case NoiseKind::none:
            break;
        case NoiseKind::depolarizing:
            m = NoiseModel::depolarizing(j.at("p").get<double>());
            break;
        case NoiseKind::dephasing:
            m = NoiseModel::dephasing(j.at("p").get<double>());
            break;
        case NoiseKind::unitary_perturbation:
            m = NoiseModel::unitary_perturbation(j.at("strength").get<double>(),
                                                 field_or<std::uint64_t>(j, "seed", 0));
            break;
        case NoiseKind::mixture_with: {
            const Json& sigma = j.at("sigma");
            const auto dim = static_cast<Eigen::Index>(system.dim());
            Matrix s;
            if (sigma.is_string() && sigma.get<std::string>() == "maximally_mixed") {
                s = Matrix::Identity(dim, dim) / static_cast<double>(dim);
            } else if (sigma.is_object() && sigma.value("kind", "") == "file") {
                const OperatorData data = read_operator_file(sigma.at("path").get<std::string>());
                if (!(data.system == system)) {
                    throw ValidationError("mixing state file is for " + data.system.to_string());
                }
                s = data.kind == "density" ? data.density : projector(data.state);
            } else {
                s = projector(resolve_state_target(system, sigma));
            }
            m = NoiseModel::mixture_with(std::move(s), j.at("p").get<double>());
            break;
        }
        }
        m.validate(system);
        return m;
    });
}

Vector resolve_state_target(const SystemSpec& system, const Json& target)
{
    return guarded("target", [&] {
        const std::string kind = target.at("kind").get<std::string>();
        if (kind == "stabilizer_index") {
            return stabilizer_state(system, target.at("index").get<std::size_t>());
        }
        if (kind == "named") {
            return named_state(system, target.at("name").get<std::string>());
        }
        if (kind == "interpolated") {
            return interpolated_state(system, target.at("t").get<double>());
        }
        if (kind == "file") {
            const OperatorData data = read_operator_file(target.at("path").get<std::string>());
            if (!(data.system == system)) {
                throw ValidationError("target file is for " + data.system.to_string() + ", config says " +
                                      system.to_string());
            }
            if (data.kind != "state_vector") {
                throw ValidationError("state targets must be pure: file kind must be state_vector");
            }
            return data.state;
        }
        throw ValidationError("unknown target kind '" + kind + "'");
    });
}

QuantumChannel resolve_channel_target(const SystemSpec& system, const Json& target)
{
    return guarded("target", [&] {
        const std::string kind = target.at("kind").get<std::string>();
        if (kind == "named") {
            return QuantumChannel::unitary(system, named_unitary(system, target.at("name").get<std::string>()));
        }
        if (kind == "file") {
            const OperatorData data = read_operator_file(target.at("path").get<std::string>());
            if (!(data.system == system)) {
                throw ValidationError("target file is for " + data.system.to_string() + ", config says " +
                                      system.to_string());
            }
            if (data.kind != "kraus" || data.kraus.size() != 1) {
                throw ValidationError("channel targets must be unitary: one Kraus operator");
            }
            return QuantumChannel::unitary(system, data.kraus.front());
        }
        throw ValidationError("target kind '" + kind + "' is not available for channels");
    });
}

AnalysisInput parse_analysis(const Json& j)
{
    return guarded("config", [&] {
        AnalysisInput in;
        const Json& sys = j.at("system");
        in.system = SystemSpec(sys.at("d").get<int>(), sys.at("n").get<int>());
        const std::string object = field_or<std::string>(j, "object", "state");
        if (object != "state" && object != "channel") {
            throw ValidationError("object must be 'state' or 'channel'");
        }
        in.is_channel = object == "channel";
        in.threshold = field_or<double>(j, "threshold", in.threshold);
        if (!(in.threshold > 0.0)) {
            throw ValidationError("threshold must be positive");
        }
        const Json& target = j.at("target");
        const NoiseModel noise = parse_noise(j.contains("noise") ? j.at("noise") : Json(), in.system);

        // Files may carry mixed states and non-unitary channels here.
        std::optional<OperatorData> file;
        if (target.value("kind", "") == "file") {
            file = read_operator_file(target.at("path").get<std::string>());
            if (!(file->system == in.system)) {
                throw ValidationError("target file is for " + file->system.to_string() + ", config says " +
                                      in.system.to_string());
            }
        }

        if (in.is_channel) {
            if (file && file->kind != "kraus") {
                throw ValidationError("channel file must be kraus");
            }
            QuantumChannel base =
                file ? QuantumChannel(in.system, file->kraus) : resolve_channel_target(in.system, target);
            in.channel = noise.kind == NoiseKind::none ? std::move(base) : prepare_channel(base, noise);
            return in;
        }
        if (file && file->kind == "density") {
            if (noise.kind != NoiseKind::none) {
                throw ValidationError("noise applies to pure targets only");
            }
            check_density_matrix(file->density);
            in.rho = file->density;
            return in;
        }
        if (file && file->kind != "state_vector") {
            throw ValidationError("state file must be state_vector or density");
        }
        Vector psi = file ? file->state : resolve_state_target(in.system, target);
        in.rho = prepare_state(in.system, psi, noise);
        if (noise.kind == NoiseKind::none) {
            in.psi = std::move(psi);
        }
        return in;
    });
}

Experiment parse_experiment(const Json& j)
{
    return guarded("config", [&] {
        Experiment e;
        const Json& sys = j.at("system");
        e.system = SystemSpec(sys.at("d").get<int>(), sys.at("n").get<int>());
        e.cfg.protocol = parse_protocol(j.at("protocol").get<std::string>());
        e.cfg.epsilon = field_or<double>(j, "epsilon", e.cfg.epsilon);
        e.cfg.delta = field_or<double>(j, "delta", e.cfg.delta);
        e.cfg.seed = field_or<std::uint64_t>(j, "seed", 0);
        e.cfg.backend = parse_backend(field_or<std::string>(j, "backend", "bernoulli"));
        e.cfg.validate();
        if (j.contains("target")) {
            e.target = j.at("target");
        } else if (is_channel_protocol(e.cfg.protocol)) {
            e.target = Json{{"kind", "named"}, {"name", "identity"}};
        }
        if (j.contains("noise")) {
            e.noise_json = j.at("noise");
        }
        e.noise = parse_noise(e.noise_json, e.system);
        const long long trials = field_or<long long>(j, "trials", 1);
        if (trials < 1) {
            throw ValidationError("trials must be >= 1");
        }
        e.trials = static_cast<std::size_t>(trials);
        return e;
    });
}

Json experiment_to_json(const Experiment& e)
{
    Json j{{"system", {{"d", e.system.d()}, {"n", e.system.n()}}},
           {"protocol", to_string(e.cfg.protocol)},
           {"target", e.target},
           {"noise", e.noise_json},
           {"epsilon", rounded_number(e.cfg.epsilon)},
           {"delta", rounded_number(e.cfg.delta)},
           {"seed", e.cfg.seed},
           {"trials", e.trials}};
    if (is_channel_protocol(e.cfg.protocol)) {
        j["backend"] = to_string(e.cfg.backend);
    }
    return j;
}

PreparedExperiment::PreparedExperiment(const Experiment& e)
    : experiment_(e), space_(PhaseSpace::shared(e.system))
{
    experiment_.cfg.validate();
    if (is_channel_protocol(e.cfg.protocol)) {
        QuantumChannel target = resolve_channel_target(e.system, e.target);
        lambda_ = std::make_unique<QuantumChannel>(prepare_channel(target, e.noise));
        exact_ = exact_channel_fidelity_kraus(target, *lambda_);
        channel_target_ = std::make_shared<const ChannelTarget>(space_, std::move(target));
    } else {
        Vector psi = resolve_state_target(e.system, e.target);
        rho_ = prepare_state(e.system, psi, e.noise);
        exact_ = exact_state_fidelity(psi, rho_);
        state_target_ = std::make_shared<const StateTarget>(space_, std::move(psi));
    }
    // Surface precondition failures before any trial runs.
    if (e.cfg.protocol == Protocol::state_stabilizer && !state_target_->is_stabilizer()) {
        throw PreconditionError("stabilizer protocol needs a stabilizer target state");
    }
    if (e.cfg.protocol == Protocol::channel_clifford && !channel_target_->is_clifford()) {
        throw PreconditionError("Clifford protocol needs a Clifford target unitary");
    }
}

double PreparedExperiment::magic_delta() const noexcept
{
    return is_channel() ? channel_target_->delta() : state_target_->l1();
}

double PreparedExperiment::magic_chi_log() const noexcept
{
    return is_channel() ? channel_target_->chi_log() : state_target_->chi_log();
}

double PreparedExperiment::bound_total_samples() const
{
    return is_channel() ? expected_samples_bound(*channel_target_, experiment_.cfg)
                        : expected_samples_bound(*state_target_, experiment_.cfg);
}

std::uint64_t PreparedExperiment::planned_k() const
{
    return is_channel() ? wdfe::planned_k(*channel_target_, experiment_.cfg)
                        : wdfe::planned_k(*state_target_, experiment_.cfg);
}

PreparedExperiment::Worker::Worker(const PreparedExperiment& owner) : owner_(owner)
{
    if (owner_.is_channel()) {
        channel_ = std::make_unique<ChannelSampler>(owner_.space_, *owner_.lambda_, owner_.experiment_.cfg.backend);
    } else {
        state_ = std::make_unique<StateSampler>(owner_.space_, owner_.rho_);
    }
}

EstimationResult PreparedExperiment::Worker::run(std::uint64_t seed)
{
    ProtocolConfig cfg = owner_.experiment_.cfg;
    cfg.seed = seed;
    EstimationResult r = channel_ ? estimate(*owner_.channel_target_, *channel_, cfg)
                                  : estimate(*owner_.state_target_, *state_, cfg);
    r.exact = owner_.exact_;
    return r;
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t stream) { return derive_seed(master, {stream}); }

std::vector<TrialRow> run_trials(const PreparedExperiment& prepared, std::size_t count, std::uint64_t first_stream,
                                 std::size_t workers)
{
    std::vector<TrialRow> rows(count);
    const std::uint64_t master = prepared.experiment().cfg.seed;
    const double epsilon = prepared.experiment().cfg.epsilon;
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto work = [&] {
        try {
            PreparedExperiment::Worker worker(prepared);
            for (std::size_t t = next++; t < count; t = next++) {
                const std::uint64_t seed = trial_seed(master, first_stream + t);
                const EstimationResult r = worker.run(seed);
                TrialRow& row = rows[t];
                row.trial = t;
                row.estimate = r.estimate;
                row.exact = *r.exact;
                row.abs_error = std::abs(r.estimate - *r.exact);
                row.within_epsilon = row.abs_error <= epsilon;
                row.K = r.K;
                row.total_samples = r.total_samples;
                row.seed = seed;
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) {
                failure = std::current_exception();
            }
            next = count;
        }
    };

    const std::size_t threads = std::max<std::size_t>(1, std::min(workers, count));
    if (threads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (std::size_t i = 0; i < threads; ++i) {
            pool.emplace_back(work);
        }
        for (std::thread& t : pool) {
            t.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return rows;
}

std::vector<TrialRow> run_trials(const Experiment& e, std::size_t workers)
{
    const PreparedExperiment prepared(e);
    return run_trials(prepared, e.trials, 0, workers);
}

std::string to_string(SweepAxis axis)
{
    switch (axis) {
    case SweepAxis::epsilon:
        return "epsilon";
    case SweepAxis::delta:
        return "delta";
    case SweepAxis::noise_p:
        return "noise_p";
    case SweepAxis::magic_interpolation:
        return "magic_interpolation";
    }
    return "unknown";
}

SweepAxis parse_sweep_axis(const std::string& name)
{
    for (SweepAxis a : {SweepAxis::epsilon, SweepAxis::delta, SweepAxis::noise_p, SweepAxis::magic_interpolation}) {
        if (to_string(a) == name) {
            return a;
        }
    }
    throw ValidationError("unknown sweep axis '" + name + "'");
}

void SweepSpec::validate() const
{
    if (values.empty()) {
        throw ValidationError("sweep needs at least one axis value");
    }
    const bool increasing = values.size() < 2 || values[1] > values[0];
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (increasing ? !(values[i] > values[i - 1]) : !(values[i] < values[i - 1])) {
            throw ValidationError("sweep values must be strictly monotone");
        }
    }
    if (trials_per_point < 1) {
        throw ValidationError("trials_per_point must be >= 1");
    }
    if (!(slack >= 0.0)) {
        throw ValidationError("slack must be >= 0");
    }
    if (!(budget > 0.0)) {
        throw ValidationError("budget must be positive");
    }
    if (axis == SweepAxis::magic_interpolation && is_channel_protocol(base.cfg.protocol)) {
        throw ValidationError("magic_interpolation sweeps need a state protocol");
    }
    if (axis == SweepAxis::noise_p && (base.noise.kind == NoiseKind::none ||
                                       base.noise.kind == NoiseKind::unitary_perturbation)) {
        throw ValidationError("noise_p sweeps need a noise model with a p parameter");
    }
}

SweepSpec parse_sweep(const Json& j)
{
    SweepSpec s;
    s.base = parse_experiment(j);
    guarded("sweep", [&] {
        const Json& sw = j.at("sweep");
        s.axis = parse_sweep_axis(sw.at("axis").get<std::string>());
        s.values = sw.at("values").get<std::vector<double>>();
        const long long trials = field_or<long long>(sw, "trials_per_point", 1);
        if (trials < 1) {
            throw ValidationError("trials_per_point must be >= 1");
        }
        s.trials_per_point = static_cast<std::size_t>(trials);
        s.slack = field_or<double>(sw, "slack", s.slack);
        s.budget = field_or<double>(sw, "budget", s.budget);
        return 0;
    });
    s.validate();
    return s;
}

Json sweep_to_json(const SweepSpec& s)
{
    Json j = experiment_to_json(s.base);
    j.erase("trials");
    Json values = Json::array();
    for (double v : s.values) {
        values.push_back(rounded_number(v));
    }
    j["sweep"] = Json{{"axis", to_string(s.axis)},
                      {"values", values},
                      {"trials_per_point", s.trials_per_point},
                      {"slack", rounded_number(s.slack)},
                      {"budget", rounded_number(s.budget)}};
    return j;
}

Experiment sweep_point(const SweepSpec& s, double value)
{
    Experiment e = s.base;
    e.trials = s.trials_per_point;
    switch (s.axis) {
    case SweepAxis::epsilon:
        e.cfg.epsilon = value;
        break;
    case SweepAxis::delta:
        e.cfg.delta = value;
        break;
    case SweepAxis::noise_p:
        e.noise.p = value;
        e.noise_json["p"] = value;
        e.noise.validate(e.system);
        break;
    case SweepAxis::magic_interpolation:
        e.target = Json{{"kind", "interpolated"}, {"t", value}};
        break;
    }
    e.cfg.validate();
    return e;
}

std::vector<SweepRow> run_sweep(const SweepSpec& s, std::size_t workers)
{
    s.validate();
    std::vector<std::unique_ptr<PreparedExperiment>> points;
    double estimate = 0.0;
    for (double v : s.values) {
        points.push_back(std::make_unique<PreparedExperiment>(sweep_point(s, v)));
        estimate += points.back()->bound_total_samples() * static_cast<double>(s.trials_per_point);
    }
    if (estimate > s.budget) {
        std::ostringstream msg;
        msg << "sweep needs an estimated " << format_number(estimate) << " device samples, budget is "
            << format_number(s.budget);
        throw ResourceError(msg.str());
    }

    std::vector<SweepRow> rows;
    for (std::size_t a = 0; a < points.size(); ++a) {
        const PreparedExperiment& p = *points[a];
        const auto trials = run_trials(p, s.trials_per_point, a * s.trials_per_point, workers);
        SweepRow row;
        row.axis_value = s.values[a];
        double within = 0.0;
        for (const TrialRow& t : trials) {
            row.mean_abs_error += t.abs_error;
            row.mean_total_samples += static_cast<double>(t.total_samples);
            within += t.within_epsilon ? 1.0 : 0.0;
        }
        const auto count = static_cast<double>(trials.size());
        row.mean_abs_error /= count;
        row.mean_total_samples /= count;
        row.coverage_fraction = within / count;
        row.bound_total_samples = p.bound_total_samples();
        row.magic_delta = p.magic_delta();
        row.magic_chi_log = p.magic_chi_log();
        row.within_bound = row.mean_total_samples <= row.bound_total_samples * (1.0 + s.slack);
        rows.push_back(row);
    }
    return rows;
}

OutputFormat parse_output_format(const std::string& name)
{
    if (name == "csv") {
        return OutputFormat::csv;
    }
    if (name == "json") {
        return OutputFormat::json;
    }
    throw ValidationError("unknown output format '" + name + "'");
}

std::string trials_csv(const std::vector<TrialRow>& rows)
{
    std::ostringstream out;
    out << "trial,estimate,exact,abs_error,within_epsilon,K,total_samples,seed\n";
    for (const TrialRow& r : rows) {
        out << r.trial << ',' << format_number(r.estimate) << ',' << format_number(r.exact) << ','
            << format_number(r.abs_error) << ',' << (r.within_epsilon ? 1 : 0) << ',' << r.K << ','
            << r.total_samples << ',' << r.seed << '\n';
    }
    return out.str();
}

Json trials_json(const std::vector<TrialRow>& rows, const Json& config)
{
    Json list = Json::array();
    for (const TrialRow& r : rows) {
        list.push_back(Json{{"trial", r.trial},
                            {"estimate", rounded_number(r.estimate)},
                            {"exact", rounded_number(r.exact)},
                            {"abs_error", rounded_number(r.abs_error)},
                            {"within_epsilon", r.within_epsilon},
                            {"K", r.K},
                            {"total_samples", r.total_samples},
                            {"seed", r.seed}});
    }
    return Json{{"config", config}, {"rows", std::move(list)}};
}

std::string sweep_csv(const std::vector<SweepRow>& rows)
{
    std::ostringstream out;
    out << "axis_value,mean_abs_error,coverage_fraction,mean_total_samples,bound_total_samples,magic_delta,"
           "magic_chi_log\n";
    for (const SweepRow& r : rows) {
        out << format_number(r.axis_value) << ',' << format_number(r.mean_abs_error) << ','
            << format_number(r.coverage_fraction) << ',' << format_number(r.mean_total_samples) << ','
            << format_number(r.bound_total_samples) << ',' << format_number(r.magic_delta) << ','
            << format_number(r.magic_chi_log) << '\n';
    }
    return out.str();
}

Json sweep_json(const std::vector<SweepRow>& rows, const Json& config)
{
    Json list = Json::array();
    for (const SweepRow& r : rows) {
        list.push_back(Json{{"axis_value", rounded_number(r.axis_value)},
                            {"mean_abs_error", rounded_number(r.mean_abs_error)},
                            {"coverage_fraction", rounded_number(r.coverage_fraction)},
                            {"mean_total_samples", rounded_number(r.mean_total_samples)},
                            {"bound_total_samples", rounded_number(r.bound_total_samples)},
                            {"magic_delta", rounded_number(r.magic_delta)},
                            {"magic_chi_log", rounded_number(r.magic_chi_log)},
                            {"within_bound", r.within_bound}});
    }
    return Json{{"config", config}, {"rows", std::move(list)}};
}

void emit(const std::vector<TrialRow>& rows, const Json& config, OutputFormat format, const std::string& path)
{
    write_text_file(path, format == OutputFormat::csv ? trials_csv(rows) : trials_json(rows, config).dump(2) + "\n");
}

void emit(const std::vector<SweepRow>& rows, const Json& config, OutputFormat format, const std::string& path)
{
    write_text_file(path, format == OutputFormat::csv ? sweep_csv(rows) : sweep_json(rows, config).dump(2) + "\n");
}

}  // namespace wdfe
