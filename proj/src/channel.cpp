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

#include "wdfe/channel.hpp"

#include "wdfe/errors.hpp"

#include <cmath>
#include <string>

namespace wdfe {
namespace {

void check_probability(double p, const char* what)
{
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ValidationError(std::string(what) + " parameter must lie in [0,1], got " + std::to_string(p));
    }
}

// Tensor power of single-qudit operators picked per qudit by `pick(q)`.
template <typename Pick>
Matrix tensor_over_qudits(const SystemSpec& system, Pick pick)
{
    Matrix out = pick(0);
    for (int q = 1; q < system.n(); ++q) {
        out = kron(out, pick(q));
    }
    return out;
}

}  // namespace

QuantumChannel::QuantumChannel(SystemSpec system, std::vector<Matrix> kraus, double depolarizing_weight,
                               Tolerances tol)
    : system_(system), kraus_(std::move(kraus)), q_(depolarizing_weight)
{
    if (kraus_.empty()) {
        throw ValidationError("channel needs at least one Kraus operator");
    }
    check_probability(q_, "depolarizing weight");
    const auto dim = static_cast<Eigen::Index>(system_.dim());
    Matrix sum = Matrix::Zero(dim, dim);
    for (const Matrix& k : kraus_) {
        if (k.rows() != dim || k.cols() != dim) {
            throw DomainError("Kraus operator is " + std::to_string(k.rows()) + "x" + std::to_string(k.cols()) +
                              ", system " + system_.to_string() + " needs " + std::to_string(dim) + "x" +
                              std::to_string(dim));
        }
        sum.noalias() += k.adjoint() * k;
    }
    const double residual = max_abs(sum - Matrix::Identity(dim, dim));
    if (residual > tol.derived) {
        throw ValidationError("channel is not trace preserving: max|sum K^dagger K - I| = " +
                              std::to_string(residual));
    }
}

QuantumChannel QuantumChannel::identity(const SystemSpec& system)
{
    const auto dim = static_cast<Eigen::Index>(system.dim());
    return QuantumChannel(system, {Matrix::Identity(dim, dim)});
}

QuantumChannel QuantumChannel::unitary(const SystemSpec& system, const Matrix& u)
{
    if (u.rows() != static_cast<Eigen::Index>(system.dim()) || !wdfe::is_unitary(u, default_tolerances.derived)) {
        throw ValidationError("unitary channel needs a " + std::to_string(system.dim()) + "-dimensional unitary");
    }
    return QuantumChannel(system, {u});
}

QuantumChannel QuantumChannel::depolarizing(const SystemSpec& system, double p)
{
    check_probability(p, "depolarizing");
    const auto dim = static_cast<Eigen::Index>(system.dim());
    return QuantumChannel(system, {Matrix::Identity(dim, dim)}, p);
}

std::vector<Matrix> QuantumChannel::kraus_operators() const
{
    std::vector<Matrix> out;
    const double core_weight = std::sqrt(1.0 - q_);
    if (core_weight > 0.0) {
        for (const Matrix& k : kraus_) {
            out.push_back(core_weight * k);
        }
    }
    if (q_ == 0.0) {
        return out;
    }
    const int d = system_.d();
    const double twirl_weight = std::sqrt(q_ / static_cast<double>(system_.points()));
    const Matrix x = shift_matrix(d);
    const Matrix z = boost_matrix(d);
    // (1/D^2) sum over all X^a Z^b of P rho P^dagger = tr(rho) I / D.
    for (std::size_t idx = 0; idx < system_.points(); ++idx) {
        const PhasePoint pt = phase_point(system_, idx);
        Matrix op = tensor_over_qudits(system_, [&](int q) {
            const int a = pt.coords[static_cast<std::size_t>(2 * q)];
            const int b = pt.coords[static_cast<std::size_t>(2 * q + 1)];
            Matrix single = Matrix::Identity(d, d);
            for (int i = 0; i < a; ++i) {
                single = x * single;
            }
            for (int i = 0; i < b; ++i) {
                single = single * z;
            }
            return single;
        });
        out.push_back(twirl_weight * op);
    }
    return out;
}

QuantumChannel QuantumChannel::dephasing(const SystemSpec& system, double p)
{
    check_probability(p, "dephasing");
    const auto dim = static_cast<Eigen::Index>(system.dim());
    std::vector<Matrix> kraus;
    if (p < 1.0) {
        kraus.push_back(std::sqrt(1.0 - p) * Matrix::Identity(dim, dim));
    }
    if (p > 0.0) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            Matrix proj = Matrix::Zero(dim, dim);
            proj(j, j) = std::sqrt(p);
            kraus.push_back(std::move(proj));
        }
    }
    return QuantumChannel(system, std::move(kraus));
}

QuantumChannel QuantumChannel::replacement(const SystemSpec& system, const Matrix& sigma, double p)
{
    check_probability(p, "replacement");
    const auto dim = static_cast<Eigen::Index>(system.dim());
    if (sigma.rows() != dim || sigma.cols() != dim) {
        throw DomainError("replacement state has the wrong dimension");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> eig(0.5 * (sigma + sigma.adjoint()));
    std::vector<Matrix> kraus;
    if (p < 1.0) {
        kraus.push_back(std::sqrt(1.0 - p) * Matrix::Identity(dim, dim));
    }
    if (p > 0.0) {
        for (Eigen::Index i = 0; i < dim; ++i) {
            const double lambda = eig.eigenvalues()(i);
            if (lambda < -default_tolerances.structural) {
                throw ValidationError("replacement state is not positive semidefinite");
            }
            if (lambda <= 0.0) {
                continue;
            }
            for (Eigen::Index j = 0; j < dim; ++j) {
                Matrix k = Matrix::Zero(dim, dim);
                k.col(j) = std::sqrt(p * lambda) * eig.eigenvectors().col(i);
                kraus.push_back(std::move(k));
            }
        }
    }
    return QuantumChannel(system, std::move(kraus));
}

bool QuantumChannel::is_unitary(double tol) const
{
    return q_ == 0.0 && kraus_.size() == 1 && wdfe::is_unitary(kraus_.front(), tol);
}

const Matrix& QuantumChannel::unitary_matrix() const
{
    if (!is_unitary(default_tolerances.derived)) {
        throw ValidationError("channel is not unitary");
    }
    return kraus_.front();
}

bool QuantumChannel::core_is_unital(double tol) const
{
    const auto dim = static_cast<Eigen::Index>(system_.dim());
    Matrix sum = Matrix::Zero(dim, dim);
    for (const Matrix& k : kraus_) {
        sum.noalias() += k * k.adjoint();
    }
    return max_abs(sum - Matrix::Identity(dim, dim)) <= tol;
}

Matrix QuantumChannel::apply(const Matrix& rho) const
{
    const auto dim = static_cast<Eigen::Index>(system_.dim());
    if (rho.rows() != dim || rho.cols() != dim) {
        throw DomainError("channel input has the wrong dimension");
    }
    Matrix out = Matrix::Zero(dim, dim);
    Matrix tmp(dim, dim);
    for (const Matrix& k : kraus_) {
        tmp.noalias() = k * rho;
        out.noalias() += tmp * k.adjoint();
    }
    if (q_ > 0.0) {
        out *= 1.0 - q_;
        out.diagonal().array() += q_ * rho.trace() / static_cast<double>(dim);
    }
    return out;
}

Matrix QuantumChannel::choi() const
{
    const auto dim = static_cast<Eigen::Index>(system_.dim());
    Matrix j = Matrix::Zero(dim * dim, dim * dim);
    for (Eigen::Index a = 0; a < dim; ++a) {
        for (Eigen::Index b = 0; b < dim; ++b) {
            Matrix e = Matrix::Zero(dim, dim);
            e(a, b) = 1.0;
            j.block(a * dim, b * dim, dim, dim) = apply(e);
        }
    }
    return j;
}

namespace {

std::vector<Matrix> products(const std::vector<Matrix>& outer, const std::vector<Matrix>& inner)
{
    std::vector<Matrix> out;
    out.reserve(outer.size() * inner.size());
    for (const Matrix& a : outer) {
        for (const Matrix& b : inner) {
            out.push_back(a * b);
        }
    }
    return out;
}

}  // namespace

QuantumChannel compose(const QuantumChannel& outer, const QuantumChannel& inner)
{
    if (!(outer.system() == inner.system())) {
        throw DomainError("cannot compose channels on different systems");
    }
    const double qo = outer.depolarizing_weight();
    const double qi = inner.depolarizing_weight();
    if (qi == 0.0) {
        return QuantumChannel(outer.system(), products(outer.core_kraus(), inner.core_kraus()), qo);
    }
    // A unital outer core maps I/D to I/D, so the two weights merge.
    if (outer.core_is_unital()) {
        return QuantumChannel(outer.system(), products(outer.core_kraus(), inner.core_kraus()),
                              1.0 - (1.0 - qo) * (1.0 - qi));
    }
    return QuantumChannel(outer.system(), products(outer.core_kraus(), inner.kraus_operators()), qo);
}

QuantumChannel tensor(const QuantumChannel& a, const QuantumChannel& b)
{
    if (a.system().d() != b.system().d()) {
        throw DomainError("tensor product needs equal qudit dimension");
    }
    const SystemSpec joint(a.system().d(), a.system().n() + b.system().n());
    const bool plain = a.depolarizing_weight() == 0.0 && b.depolarizing_weight() == 0.0;
    const std::vector<Matrix> ka = plain ? a.core_kraus() : a.kraus_operators();
    const std::vector<Matrix> kb = plain ? b.core_kraus() : b.kraus_operators();
    std::vector<Matrix> kraus;
    kraus.reserve(ka.size() * kb.size());
    for (const Matrix& x : ka) {
        for (const Matrix& y : kb) {
            kraus.push_back(kron(x, y));
        }
    }
    return QuantumChannel(joint, std::move(kraus));
}

double entanglement_fidelity_kraus(const Matrix& u, const QuantumChannel& lambda)
{
    const auto dim = static_cast<double>(lambda.system().dim());
    double sum = 0.0;
    for (const Matrix& k : lambda.core_kraus()) {
        sum += std::norm(hilbert_schmidt(u, k));
    }
    const double q = lambda.depolarizing_weight();
    return (1.0 - q) * sum / (dim * dim) + q / (dim * dim);
}

}  // namespace wdfe
