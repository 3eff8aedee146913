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

#include "wdfe/phase_space.hpp"

#include "wdfe/errors.hpp"
#include "wdfe/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <span>
#include <string>
#include <utility>

namespace wdfe {

Matrix MonomialMatrix::dense() const
{
    const auto n = static_cast<Eigen::Index>(dim());
    Matrix m = Matrix::Zero(n, n);
    for (std::size_t j = 0; j < dim(); ++j) {
        m(target[j], static_cast<Eigen::Index>(j)) = coeff[j];
    }
    return m;
}

MonomialMatrix MonomialMatrix::adjoint() const
{
    MonomialMatrix out;
    out.target.resize(dim());
    out.coeff.resize(dim());
    for (std::size_t j = 0; j < dim(); ++j) {
        out.target[target[j]] = static_cast<std::uint32_t>(j);
        out.coeff[target[j]] = std::conj(coeff[j]);
    }
    return out;
}

Matrix MonomialMatrix::times(const Matrix& y) const
{
    Matrix out(y.rows(), y.cols());
    for (std::size_t j = 0; j < dim(); ++j) {
        out.row(target[j]) = coeff[j] * y.row(static_cast<Eigen::Index>(j));
    }
    return out;
}

Matrix MonomialMatrix::times_left(const Matrix& y) const
{
    Matrix out(y.rows(), y.cols());
    for (std::size_t j = 0; j < dim(); ++j) {
        out.col(static_cast<Eigen::Index>(j)) = y.col(target[j]) * coeff[j];
    }
    return out;
}

Vector MonomialMatrix::times(const Vector& v) const
{
    Vector out(v.size());
    for (std::size_t j = 0; j < dim(); ++j) {
        out(target[j]) = coeff[j] * v(static_cast<Eigen::Index>(j));
    }
    return out;
}

MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b)
{
    MonomialMatrix out;
    out.target.resize(b.dim());
    out.coeff.resize(b.dim());
    for (std::size_t j = 0; j < b.dim(); ++j) {
        const std::uint32_t mid = b.target[j];
        out.target[j] = a.target[mid];
        out.coeff[j] = a.coeff[mid] * b.coeff[j];
    }
    return out;
}

namespace {

// Phase factors e^{i pi k / d}, k in [0, 2d).
std::vector<Complex> half_phase_table(int d)
{
    std::vector<Complex> table(static_cast<std::size_t>(2 * d));
    for (int k = 0; k < 2 * d; ++k) {
        table[static_cast<std::size_t>(k)] = std::polar(1.0, std::numbers::pi * k / d);
    }
    return table;
}

MonomialMatrix build_translation(const SystemSpec& system, std::size_t u, const std::vector<Complex>& phases)
{
    const int d = system.d();
    const int n = system.n();
    const PhasePoint pt = phase_point(system, u);
    MonomialMatrix t;
    t.target.resize(system.dim());
    t.coeff.resize(system.dim());
    std::vector<int> digits(static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < system.dim(); ++j) {
        std::size_t rest = j;
        for (int q = n - 1; q >= 0; --q) {
            digits[static_cast<std::size_t>(q)] = static_cast<int>(rest % static_cast<std::size_t>(d));
            rest /= static_cast<std::size_t>(d);
        }
        // Exponent in units of pi/d: tau^{-a1 a2} = e^{-i pi (d+1) a1 a2 / d},
        // omega^{a1 (j + a2)} = e^{i pi 2 a1 (j + a2) / d}.
        long exponent = 0;
        std::size_t image = 0;
        for (int q = 0; q < n; ++q) {
            const long a1 = pt.coords[static_cast<std::size_t>(2 * q)];
            const long a2 = pt.coords[static_cast<std::size_t>(2 * q + 1)];
            const long shifted = (digits[static_cast<std::size_t>(q)] + a2) % d;
            exponent += 2 * a1 * shifted - (d + 1) * a1 * a2;
            image = image * static_cast<std::size_t>(d) + static_cast<std::size_t>(shifted);
        }
        const long period = 2L * d;
        exponent = ((exponent % period) + period) % period;
        t.target[j] = static_cast<std::uint32_t>(image);
        t.coeff[j] = phases[static_cast<std::size_t>(exponent)];
    }
    return t;
}

// Canonical phase: first entry of magnitude > 1e-8 made real positive.
void canonicalize_phase(Eigen::Ref<Vector> v)
{
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double mag = std::abs(v(i));
        if (mag > 1e-8) {
            v *= std::conj(v(i)) / mag;
            return;
        }
    }
}

bool lexicographically_less(const Vector& a, const Vector& b)
{
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (std::abs(a(i).real() - b(i).real()) > 1e-9) {
            return a(i).real() < b(i).real();
        }
        if (std::abs(a(i).imag() - b(i).imag()) > 1e-9) {
            return a(i).imag() < b(i).imag();
        }
    }
    return false;
}

}  // namespace

PhaseSpace::PhaseSpace(const SystemSpec& system, Tolerances tol) : system_(system), tol_(tol)
{
    const std::size_t dim = system_.dim();
    const std::size_t count = system_.points();
    const auto phases = half_phase_table(system_.d());

    translations_.reserve(count);
    for (std::size_t u = 0; u < count; ++u) {
        translations_.push_back(build_translation(system_, u, phases));
    }

    // A_0 = D^{-1} sum_u T_u
    const auto n = static_cast<Eigen::Index>(dim);
    Matrix a0 = Matrix::Zero(n, n);
    for (const MonomialMatrix& t : translations_) {
        for (std::size_t j = 0; j < dim; ++j) {
            a0(t.target[j], static_cast<Eigen::Index>(j)) += t.coeff[j];
        }
    }
    a0 /= static_cast<double>(dim);

    MonomialMatrix a0_mono;
    a0_mono.target.resize(dim);
    a0_mono.coeff.resize(dim);
    for (Eigen::Index j = 0; j < n; ++j) {
        Eigen::Index row = -1;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (std::abs(a0(i, j)) > 1e-6) {
                if (row >= 0) {
                    throw NumericalError("A_0 has more than one nonzero in column " + std::to_string(j) + " for " +
                                         system_.to_string());
                }
                row = i;
            } else if (std::abs(a0(i, j)) > tol_.structural) {
                throw NumericalError("A_0 has a non-negligible residue for " + system_.to_string());
            }
        }
        if (row < 0 || std::abs(std::abs(a0(row, j)) - 1.0) > tol_.structural) {
            throw NumericalError("A_0 column " + std::to_string(j) + " is not a unit monomial for " +
                                 system_.to_string());
        }
        a0_mono.target[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(row);
        a0_mono.coeff[static_cast<std::size_t>(j)] = a0(row, j);
    }
    if (hermiticity_residual(a0) > tol_.structural) {
        throw NumericalError("A_0 is not Hermitian for " + system_.to_string());
    }

    points_.reserve(count);
    trace_offsets_.resize(count * dim);
    trace_coeffs_.resize(count * dim);
    for (std::size_t u = 0; u < count; ++u) {
        const MonomialMatrix& t = translations_[u];
        points_.push_back(t * a0_mono * t.adjoint());
        const MonomialMatrix& a = points_.back();
        for (std::size_t k = 0; k < dim; ++k) {
            // tr[A Y] = sum_k A(target[k], k) Y(k, target[k]); column-major.
            trace_offsets_[u * dim + k] = static_cast<std::uint32_t>(a.target[k] * dim + k);
            trace_coeffs_[u * dim + k] = a.coeff[k];
        }
    }

    Eigen::SelfAdjointEigenSolver<Matrix> eig(a0);
    if (eig.info() != Eigen::Success) {
        throw NumericalError("eigendecomposition of A_0 failed for " + system_.to_string());
    }
    std::vector<Eigen::Index> order(dim);
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    Matrix vecs = eig.eigenvectors();
    for (Eigen::Index i = 0; i < n; ++i) {
        canonicalize_phase(vecs.col(i));
    }
    const RealVector& vals = eig.eigenvalues();
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        if (std::abs(vals(a) - vals(b)) > 1e-8) {
            return vals(a) < vals(b);
        }
        return lexicographically_less(vecs.col(a), vecs.col(b));
    });
    spectrum_.resize(n);
    zero_eigenbasis_.resize(n, n);
    pm_one_ = true;
    for (Eigen::Index i = 0; i < n; ++i) {
        const Eigen::Index src = order[static_cast<std::size_t>(i)];
        spectrum_(i) = vals(src);
        zero_eigenbasis_.col(i) = vecs.col(src);
        if (std::abs(std::abs(vals(src)) - 1.0) > tol_.structural) {
            pm_one_ = false;
        }
    }
    if (pm_one_) {
        for (Eigen::Index i = 0; i < n; ++i) {
            spectrum_(i) = spectrum_(i) < 0.0 ? -1.0 : 1.0;
        }
    }
    spectrum_l1_ = spectrum_.cwiseAbs().sum();
}

std::shared_ptr<const PhaseSpace> PhaseSpace::shared(const SystemSpec& system)
{
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::shared_ptr<const PhaseSpace>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[{system.d(), system.n()}];
    if (!slot) {
        slot = std::make_shared<const PhaseSpace>(system);
    }
    return slot;
}

Complex PhaseSpace::trace_with(std::size_t u, const Matrix& y) const
{
    const std::size_t dim = system_.dim();
    if (u >= points()) {
        throw DomainError("phase point index out of range");
    }
    if (static_cast<std::size_t>(y.rows()) != dim || static_cast<std::size_t>(y.cols()) != dim) {
        throw DomainError("operator dimension does not match " + system_.to_string());
    }
    return kernels::gather_dot(std::span<const Complex>(trace_coeffs_.data() + u * dim, dim),
                               std::span<const std::uint32_t>(trace_offsets_.data() + u * dim, dim), y.data());
}

Matrix PhaseSpace::eigenbasis(std::size_t u) const { return translation(u).times(zero_eigenbasis_); }

Matrix heisenberg_weyl(const SystemSpec& system, const PhasePoint& u)
{
    return PhaseSpace::shared(system)->translation(flat_index(system, u)).dense();
}

Matrix phase_point_operator(const SystemSpec& system, const PhasePoint& u)
{
    return PhaseSpace::shared(system)->point_operator(flat_index(system, u)).dense();
}

namespace {

void check_square(const PhaseSpace& space, const Matrix& x)
{
    const auto dim = static_cast<Eigen::Index>(space.dim());
    if (x.rows() != dim || x.cols() != dim) {
        throw DomainError("operator is " + std::to_string(x.rows()) + "x" + std::to_string(x.cols()) + ", system " +
                          space.system().to_string() + " needs " + std::to_string(dim) + "x" + std::to_string(dim));
    }
}

}  // namespace

WignerFunction wigner_of_operator(const PhaseSpace& space, const Matrix& x)
{
    check_square(space, x);
    const double scale = std::max(1.0, max_abs(x));
    const double herm = hermiticity_residual(x);
    if (herm > space.tolerances().structural * scale) {
        throw ValidationError("operator is not Hermitian: max|X - X^dagger| = " + std::to_string(herm));
    }
    const auto dim = static_cast<double>(space.dim());
    WignerFunction w{space.system(), RealVector(static_cast<Eigen::Index>(space.points())), x.trace().real()};
    for (std::size_t u = 0; u < space.points(); ++u) {
        const Complex tr = space.trace_with(u, x);
        if (std::abs(tr.imag()) / dim > space.tolerances().structural * scale) {
            throw NumericalError("Wigner coefficient at point " + std::to_string(u) + " has imaginary residue " +
                                 std::to_string(tr.imag() / dim));
        }
        w.values(static_cast<Eigen::Index>(u)) = tr.real() / dim;
    }
    return w;
}

WignerFunction wigner_of_state(const PhaseSpace& space, const Vector& psi)
{
    if (psi.size() != static_cast<Eigen::Index>(space.dim())) {
        throw DomainError("state dimension does not match " + space.system().to_string());
    }
    return wigner_of_operator(space, projector(psi));
}

Matrix reconstruct(const PhaseSpace& space, const WignerFunction& w)
{
    if (w.values.size() != static_cast<Eigen::Index>(space.points()) || !(w.system == space.system())) {
        throw DomainError("Wigner function has " + std::to_string(w.values.size()) + " values, system " +
                          space.system().to_string() + " has " + std::to_string(space.points()) + " points");
    }
    const auto n = static_cast<Eigen::Index>(space.dim());
    Matrix x = Matrix::Zero(n, n);
    for (std::size_t u = 0; u < space.points(); ++u) {
        const double weight = w.values(static_cast<Eigen::Index>(u));
        if (weight == 0.0) {
            continue;
        }
        const MonomialMatrix& a = space.point_operator(u);
        for (std::size_t k = 0; k < a.dim(); ++k) {
            x(a.target[k], static_cast<Eigen::Index>(k)) += weight * a.coeff[k];
        }
    }
    return x;
}

double wigner_inner_product(const WignerFunction& m, const WignerFunction& n)
{
    if (!(m.system == n.system) || m.values.size() != n.values.size()) {
        throw DomainError("Wigner functions live on different systems");
    }
    const auto len = static_cast<std::size_t>(m.values.size());
    const double s =
        kernels::dot(std::span<const double>(m.values.data(), len), std::span<const double>(n.values.data(), len));
    return static_cast<double>(m.system.dim()) * s;
}

Matrix channel_image(const PhaseSpace& space, const QuantumChannel& channel, std::size_t u)
{
    const MonomialMatrix& a = space.point_operator(u);
    const auto n = static_cast<Eigen::Index>(space.dim());
    Matrix out = Matrix::Zero(n, n);
    for (const Matrix& k : channel.core_kraus()) {
        out.noalias() += k * a.times(Matrix(k.adjoint()));
    }
    const double q = channel.depolarizing_weight();
    if (q > 0.0) {
        // tr A_u = 1
        out *= 1.0 - q;
        out.diagonal().array() += q / static_cast<double>(space.dim());
    }
    return out;
}

ChannelWigner wigner_of_channel(const PhaseSpace& space, const QuantumChannel& channel)
{
    if (!(channel.system() == space.system())) {
        throw DomainError("channel acts on " + channel.system().to_string() + ", phase space is " +
                          space.system().to_string());
    }
    const std::size_t count = space.points();
    const auto dim = static_cast<double>(space.dim());
    const auto n = static_cast<Eigen::Index>(space.dim());
    const Tolerances& tol = space.tolerances();
    ChannelWigner cw{space.system(), RealMatrix(static_cast<Eigen::Index>(count), static_cast<Eigen::Index>(count))};

    Matrix image(n, n);
    for (std::size_t u = 0; u < count; ++u) {
        image = channel_image(space, channel, u);
        double column_sum = 0.0;
        for (std::size_t v = 0; v < count; ++v) {
            const Complex tr = space.trace_with(v, image);
            if (std::abs(tr.imag()) / dim > tol.structural) {
                throw NumericalError("channel Wigner coefficient has imaginary residue " +
                                     std::to_string(tr.imag() / dim));
            }
            const double value = tr.real() / dim;
            cw.values(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(u)) = value;
            column_sum += value;
        }
        if (std::abs(column_sum - 1.0) > tol.derived) {
            throw NumericalError("channel Wigner column " + std::to_string(u) + " sums to " +
                                 std::to_string(column_sum));
        }
    }
    return cw;
}

void check_density_wigner(const WignerFunction& w, Tolerances tol)
{
    const double sum = w.values.sum();
    if (std::abs(sum - 1.0) > tol.derived) {
        throw ValidationError("Wigner function of a density matrix must sum to 1, got " + std::to_string(sum));
    }
    const double bound = 1.0 / static_cast<double>(w.system.dim()) + 1e-12;
    if (w.values.cwiseAbs().maxCoeff() > bound) {
        throw ValidationError("Wigner coefficient exceeds 1/D in magnitude");
    }
}

}  // namespace wdfe
