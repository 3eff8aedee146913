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
#include "wdfe/phase_space.hpp"
#include "wdfe/rng.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace wdfe {

enum class NoiseKind { none, depolarizing, dephasing, unitary_perturbation, mixture_with };

std::string to_string(NoiseKind kind);
/// Throws ValidationError for unknown names.
NoiseKind parse_noise_kind(const std::string& name);

/// How the simulated device deviates from the target.
struct NoiseModel {
    NoiseKind kind = NoiseKind::none;
    /// Strength in [0,1] for depolarizing, dephasing and mixture_with.
    double p = 0.0;
    /// Perturbation angle (>= 0) for unitary_perturbation: V = exp(i s H)
    /// with H drawn from the GUE seeded by `seed`.
    double strength = 0.0;
    std::uint64_t seed = 0;
    /// Mixing state for mixture_with; must be a density matrix.
    Matrix sigma;

    static NoiseModel none() { return {}; }
    static NoiseModel depolarizing(double p);
    static NoiseModel dephasing(double p);
    static NoiseModel unitary_perturbation(double strength, std::uint64_t seed);
    static NoiseModel mixture_with(Matrix sigma, double p);

    /// ValidationError on out-of-range parameters.
    void validate(const SystemSpec& system) const;
};

/// Checks PSD (eigenvalues >= -1e-10), Hermiticity and unit trace.
/// Throws ValidationError.
void check_density_matrix(const Matrix& rho, Tolerances tol = default_tolerances);

/// Noisy preparation of a pure target state.
Matrix prepare_state(const SystemSpec& system, const Vector& target, const NoiseModel& noise);
/// Noisy implementation of a target channel. Channel noise acts after the
/// target.
QuantumChannel prepare_channel(const QuantumChannel& target, const NoiseModel& noise);

enum class Backend { physical, bernoulli };

std::string to_string(Backend backend);
/// Throws DomainError for unknown names.
Backend parse_backend(const std::string& name);

struct MeasurementSample {
    double value = 0.0;
    /// Unscaled outcome: the A_u eigenvalue for state samples, equal to
    /// `value` for channel samples.
    double raw = 0.0;
    /// Measured point (states) or input point u (channels).
    std::uint32_t point = 0;
    /// Output point v; equals `point` for state samples.
    std::uint32_t output_point = 0;
    Backend backend = Backend::physical;
};

/// Born sampling of a fixed density matrix in the A_u eigenbases. Born
/// tables are memoized per point, so one sampler must not be shared between
/// threads; streams and the phase-space cache may be.
class StateSampler {
public:
    StateSampler(std::shared_ptr<const PhaseSpace> space, Matrix rho);

    /// value = lambda_i / D with i drawn with probability <e_i|rho|e_i>.
    MeasurementSample measure(std::size_t u, RngStream& rng);

    const Matrix& rho() const noexcept { return rho_; }

private:
    const std::vector<double>& cumulative(std::size_t u);

    std::shared_ptr<const PhaseSpace> space_;
    Matrix rho_;
    std::unordered_map<std::size_t, std::vector<double>> tables_;
};

/// Samples unbiased, [-1,1]-bounded estimates of W_Lambda(v|u). Same
/// threading rule as StateSampler.
class ChannelSampler {
public:
    ChannelSampler(std::shared_ptr<const PhaseSpace> space, QuantumChannel channel, Backend backend);

    MeasurementSample sample(std::size_t u, std::size_t v, RngStream& rng);

    /// W_Lambda(v|u) computed exactly (memoized per u).
    double exact(std::size_t u, std::size_t v);

    Backend backend() const noexcept { return backend_; }
    const QuantumChannel& channel() const noexcept { return channel_; }

private:
    struct PairTable {
        /// Column i: cumulative Born distribution over output index j.
        std::vector<double> output_cdf;
    };
    const PairTable& pair_table(std::size_t u, std::size_t v);
    const Matrix& image(std::size_t u);

    std::shared_ptr<const PhaseSpace> space_;
    QuantumChannel channel_;
    Backend backend_;
    /// Cumulative |lambda_i| over input eigenvectors.
    std::vector<double> input_cdf_;
    std::unordered_map<std::uint64_t, PairTable> pairs_;
    std::unordered_map<std::size_t, Matrix> images_;
};

/// One-shot conveniences over the samplers.
MeasurementSample measure_phase_point(const PhaseSpace& space, const Matrix& rho, std::size_t u, RngStream& rng);
MeasurementSample sample_channel_wigner(const PhaseSpace& space, const QuantumChannel& channel, std::size_t u,
                                        std::size_t v, Backend backend, RngStream& rng);

}  // namespace wdfe
