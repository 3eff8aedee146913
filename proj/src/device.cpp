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

#include "wdfe/device.hpp"

#include "wdfe/errors.hpp"

#include <algorithm>
#include <cmath>

namespace wdfe {

std::string to_string(NoiseKind kind)
{
    switch (kind) {
    case NoiseKind::none:
        return "none";
    case NoiseKind::depolarizing:
        return "depolarizing";
    case NoiseKind::dephasing:
        return "dephasing";
    case NoiseKind::unitary_perturbation:
        return "unitary_perturbation";
    case NoiseKind::mixture_with:
        return "mixture_with";
    }
    return "unknown";
}

NoiseKind parse_noise_kind(const std::string& name)
{
    for (NoiseKind k : {NoiseKind::none, NoiseKind::depolarizing, NoiseKind::dephasing,
                        NoiseKind::unitary_perturbation, NoiseKind::mixture_with}) {
        if (to_string(k) == name) {
            return k;
        }
    }
    throw ValidationError("unknown noise kind '" + name + "'");
}

NoiseModel NoiseModel::depolarizing(double p)
{
    NoiseModel m;
    m.kind = NoiseKind::depolarizing;
    m.p = p;
    return m;
}

NoiseModel NoiseModel::dephasing(double p)
{
    NoiseModel m;
    m.kind = NoiseKind::dephasing;
    m.p = p;
    return m;
}

NoiseModel NoiseModel::unitary_perturbation(double strength, std::uint64_t seed)
{
    NoiseModel m;
    m.kind = NoiseKind::unitary_perturbation;
    m.strength = strength;
    m.seed = seed;
    return m;
}

NoiseModel NoiseModel::mixture_with(Matrix sigma, double p)
{
    NoiseModel m;
    m.kind = NoiseKind::mixture_with;
    m.sigma = std::move(sigma);
    m.p = p;
    return m;
}

void NoiseModel::validate(const SystemSpec& system) const
{
    switch (kind) {
    case NoiseKind::none:
        return;
    case NoiseKind::unitary_perturbation:
        if (!(strength >= 0.0) || !std::isfinite(strength)) {
            throw ValidationError("unitary perturbation strength must be finite and >= 0");
        }
        return;
    case NoiseKind::mixture_with: {
        const auto dim = static_cast<Eigen::Index>(system.dim());
        if (sigma.rows() != dim || sigma.cols() != dim) {
            throw ValidationError("mixing state has the wrong dimension for " + system.to_string());
        }
        check_density_matrix(sigma);
        break;
    }
    default:
        break;
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ValidationError(to_string(kind) + " noise needs p in [0,1], got " + std::to_string(p));
    }
}

void check_density_matrix(const Matrix& rho, Tolerances tol)
{
    if (rho.rows() != rho.cols()) {
        throw ValidationError("density matrix is not square");
    }
    if (hermiticity_residual(rho) > tol.structural) {
        throw ValidationError("density matrix is not Hermitian");
    }
    const double tr = rho.trace().real();
    if (std::abs(tr - 1.0) > tol.derived) {
        throw ValidationError("density matrix has trace " + std::to_string(tr));
    }
    Eigen::SelfAdjointEigenSolver<Matrix> eig(rho, Eigen::EigenvaluesOnly);
    if (eig.eigenvalues().minCoeff() < -tol.structural) {
        throw ValidationError("density matrix is not positive semidefinite (min eigenvalue " +
                              std::to_string(eig.eigenvalues().minCoeff()) + ")");
    }
}

namespace {

Matrix perturbation_unitary(std::size_t dim, double strength, std::uint64_t seed)
{
    RngStream rng(seed);
    const Matrix h = random_hermitian(dim, rng);
    Eigen::SelfAdjointEigenSolver<Matrix> eig(h);
    const Vector phases = (Complex(0.0, strength) * eig.eigenvalues().cast<Complex>()).array().exp().matrix();
    return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

}  // namespace

Matrix prepare_state(const SystemSpec& system, const Vector& target, const NoiseModel& noise)
{
    const auto dim = static_cast<Eigen::Index>(system.dim());
    if (target.size() != dim) {
        throw DomainError("target state dimension does not match " + system.to_string());
    }
    if (std::abs(target.norm() - 1.0) > 1e-9) {
        throw ValidationError("target state is not normalized");
    }
    noise.validate(system);
    const Matrix psi = projector(target);
    Matrix rho;
    switch (noise.kind) {
    case NoiseKind::none:
        rho = psi;
        break;
    case NoiseKind::depolarizing:
        rho = (1.0 - noise.p) * psi + (noise.p / static_cast<double>(dim)) * Matrix::Identity(dim, dim);
        break;
    case NoiseKind::dephasing:
        rho = (1.0 - noise.p) * psi;
        rho.diagonal() += noise.p * psi.diagonal();
        break;
    case NoiseKind::unitary_perturbation: {
        const Matrix v = perturbation_unitary(system.dim(), noise.strength, noise.seed);
        rho = v * psi * v.adjoint();
        break;
    }
    case NoiseKind::mixture_with:
        rho = (1.0 - noise.p) * psi + noise.p * noise.sigma;
        break;
    }
    check_density_matrix(rho);
    return rho;
}

QuantumChannel prepare_channel(const QuantumChannel& target, const NoiseModel& noise)
{
    const SystemSpec& system = target.system();
    noise.validate(system);
    switch (noise.kind) {
    case NoiseKind::none:
        return target;
    case NoiseKind::depolarizing:
        return compose(QuantumChannel::depolarizing(system, noise.p), target);
    case NoiseKind::dephasing:
        return compose(QuantumChannel::dephasing(system, noise.p), target);
    case NoiseKind::unitary_perturbation:
        return compose(QuantumChannel::unitary(system, perturbation_unitary(system.dim(), noise.strength, noise.seed)),
                       target);
    case NoiseKind::mixture_with:
        return compose(QuantumChannel::replacement(system, noise.sigma, noise.p), target);
    }
    return target;
}

std::string to_string(Backend backend) { return backend == Backend::physical ? "physical" : "bernoulli"; }

Backend parse_backend(const std::string& name)
{
    if (name == "physical") {
        return Backend::physical;
    }
    if (name == "bernoulli") {
        return Backend::bernoulli;
    }
    throw DomainError("unknown backend '" + name + "'");
}

namespace {

// Running sum of Born probabilities; each must lie in [-1e-10, 1 + 1e-10].
void append_probability(std::vector<double>& cdf, double p)
{
    if (!(p >= -1e-10 && p <= 1.0 + 1e-10)) {
        throw NumericalError("Born probability " + std::to_string(p) + " outside [0,1]");
    }
    cdf.push_back((cdf.empty() ? 0.0 : cdf.back()) + std::max(p, 0.0));
}

std::size_t draw(const double* cdf, std::size_t count, RngStream& rng)
{
    const double r = rng.uniform() * cdf[count - 1];
    const double* hit = std::upper_bound(cdf, cdf + count, r);
    return std::min(static_cast<std::size_t>(hit - cdf), count - 1);
}

}  // namespace

StateSampler::StateSampler(std::shared_ptr<const PhaseSpace> space, Matrix rho)
    : space_(std::move(space)), rho_(std::move(rho))
{
    const auto dim = static_cast<Eigen::Index>(space_->dim());
    if (rho_.rows() != dim || rho_.cols() != dim) {
        throw DomainError("density matrix dimension does not match " + space_->system().to_string());
    }
}

const std::vector<double>& StateSampler::cumulative(std::size_t u)
{
    auto it = tables_.find(u);
    if (it != tables_.end()) {
        return it->second;
    }
    const Matrix basis = space_->eigenbasis(u);
    const Matrix rho_basis = rho_ * basis;
    std::vector<double> cdf;
    cdf.reserve(space_->dim());
    for (Eigen::Index i = 0; i < basis.cols(); ++i) {
        const Complex p = basis.col(i).dot(rho_basis.col(i));
        append_probability(cdf, p.real());
    }
    return tables_.emplace(u, std::move(cdf)).first->second;
}

MeasurementSample StateSampler::measure(std::size_t u, RngStream& rng)
{
    if (u >= space_->points()) {
        throw DomainError("phase point index out of range");
    }
    const std::vector<double>& cdf = cumulative(u);
    const std::size_t i = draw(cdf.data(), cdf.size(), rng);
    const auto point = static_cast<std::uint32_t>(u);
    const double lambda = space_->spectrum()(static_cast<Eigen::Index>(i));
    return {lambda / static_cast<double>(space_->dim()), lambda, point, point, Backend::physical};
}

ChannelSampler::ChannelSampler(std::shared_ptr<const PhaseSpace> space, QuantumChannel channel, Backend backend)
    : space_(std::move(space)), channel_(std::move(channel)), backend_(backend)
{
    if (!(channel_.system() == space_->system())) {
        throw DomainError("channel system does not match phase space");
    }
    for (Eigen::Index i = 0; i < space_->spectrum().size(); ++i) {
        input_cdf_.push_back((input_cdf_.empty() ? 0.0 : input_cdf_.back()) + std::abs(space_->spectrum()(i)));
    }
}

const Matrix& ChannelSampler::image(std::size_t u)
{
    auto it = images_.find(u);
    if (it != images_.end()) {
        return it->second;
    }
    Matrix out = channel_image(*space_, channel_, u);
    return images_.emplace(u, std::move(out)).first->second;
}

double ChannelSampler::exact(std::size_t u, std::size_t v)
{
    if (u >= space_->points() || v >= space_->points()) {
        throw DomainError("phase point index out of range");
    }
    const Complex tr = space_->trace_with(v, image(u));
    return tr.real() / static_cast<double>(space_->dim());
}

const ChannelSampler::PairTable& ChannelSampler::pair_table(std::size_t u, std::size_t v)
{
    const std::uint64_t key = static_cast<std::uint64_t>(u) * space_->points() + v;
    auto it = pairs_.find(key);
    if (it != pairs_.end()) {
        return it->second;
    }
    const Matrix in_basis = space_->eigenbasis(u);
    const Matrix out_basis_dag = space_->eigenbasis(v).adjoint();
    const auto dim = static_cast<Eigen::Index>(space_->dim());
    // prob(j | i) = sum_m |f_j^dagger K_m e_i|^2
    RealMatrix probs = RealMatrix::Zero(dim, dim);
    for (const Matrix& k : channel_.core_kraus()) {
        probs += (out_basis_dag * k * in_basis).cwiseAbs2();
    }
    const double q = channel_.depolarizing_weight();
    if (q > 0.0) {
        probs = (1.0 - q) * probs.array() + q / static_cast<double>(dim);
    }
    PairTable table;
    table.output_cdf.reserve(static_cast<std::size_t>(dim * dim));
    for (Eigen::Index i = 0; i < dim; ++i) {
        std::vector<double> column;
        column.reserve(static_cast<std::size_t>(dim));
        for (Eigen::Index j = 0; j < dim; ++j) {
            append_probability(column, probs(j, i));
        }
        table.output_cdf.insert(table.output_cdf.end(), column.begin(), column.end());
    }
    return pairs_.emplace(key, std::move(table)).first->second;
}

MeasurementSample ChannelSampler::sample(std::size_t u, std::size_t v, RngStream& rng)
{
    if (u >= space_->points() || v >= space_->points()) {
        throw DomainError("phase point index out of range");
    }
    MeasurementSample s{0.0, 0.0, static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v), backend_};
    if (backend_ == Backend::bernoulli) {
        const double w = exact(u, v);
        if (std::abs(w) > 1.0 + 1e-12) {
            throw NumericalError("channel Wigner value " + std::to_string(w) + " outside [-1,1]");
        }
        s.value = rng.uniform() < 0.5 * (1.0 + w) ? 1.0 : -1.0;
        s.raw = s.value;
        return s;
    }
    const PairTable& table = pair_table(u, v);
    const auto dim = space_->dim();
    const std::size_t i = draw(input_cdf_.data(), dim, rng);
    const std::size_t j = draw(table.output_cdf.data() + i * dim, dim, rng);
    const RealVector& spectrum = space_->spectrum();
    const double lambda = spectrum(static_cast<Eigen::Index>(i));
    const double mu = spectrum(static_cast<Eigen::Index>(j));
    // sgn(lambda) * L * mu / D; L = D whenever the spectrum is +-1.
    s.value = (lambda < 0.0 ? -1.0 : 1.0) * space_->spectrum_l1() * mu / static_cast<double>(dim);
    s.raw = s.value;
    return s;
}

MeasurementSample measure_phase_point(const PhaseSpace& space, const Matrix& rho, std::size_t u, RngStream& rng)
{
    StateSampler sampler(std::shared_ptr<const PhaseSpace>(std::shared_ptr<const PhaseSpace>{}, &space), rho);
    return sampler.measure(u, rng);
}

MeasurementSample sample_channel_wigner(const PhaseSpace& space, const QuantumChannel& channel, std::size_t u,
                                        std::size_t v, Backend backend, RngStream& rng)
{
    ChannelSampler sampler(std::shared_ptr<const PhaseSpace>(std::shared_ptr<const PhaseSpace>{}, &space), channel,
                           backend);
    return sampler.sample(u, v, rng);
}

}  // namespace wdfe
