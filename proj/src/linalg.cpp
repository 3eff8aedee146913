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

#include "wdfe/linalg.hpp"

#include "wdfe/errors.hpp"
#include "wdfe/kernels.hpp"

#include <cmath>
#include <numbers>
#include <span>

namespace wdfe {

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double hermiticity_residual(const Matrix& m)
{
    if (m.rows() != m.cols()) {
        throw DomainError("matrix is not square");
    }
    return max_abs(m - m.adjoint());
}

double unitarity_residual(const Matrix& m)
{
    if (m.rows() != m.cols()) {
        throw DomainError("matrix is not square");
    }
    return max_abs(m.adjoint() * m - Matrix::Identity(m.rows(), m.cols()));
}

bool is_hermitian(const Matrix& m, double tol) { return m.rows() == m.cols() && hermiticity_residual(m) <= tol; }

bool is_unitary(const Matrix& m, double tol) { return m.rows() == m.cols() && unitarity_residual(m) <= tol; }

Complex trace_product_hermitian(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DomainError("trace product of mismatched matrices");
    }
    const auto n = static_cast<std::size_t>(a.size());
    return kernels::dot_conj(std::span<const Complex>(a.data(), n), std::span<const Complex>(b.data(), n));
}

Complex hilbert_schmidt(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DomainError("Hilbert-Schmidt product of mismatched matrices");
    }
    const auto n = static_cast<std::size_t>(a.size());
    // sum_ij conj(a_ij) b_ij = conj(sum_ij a_ij conj(b_ij))
    return std::conj(kernels::dot_conj(std::span<const Complex>(a.data(), n), std::span<const Complex>(b.data(), n)));
}

Matrix kron(const Matrix& a, const Matrix& b)
{
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Vector kron(const Vector& a, const Vector& b)
{
    Vector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

Matrix projector(const Vector& psi) { return psi * psi.adjoint(); }

namespace {

Matrix ginibre(std::size_t dim, RngStream& rng)
{
    const auto n = static_cast<Eigen::Index>(dim);
    Matrix g(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            const double re = rng.normal();
            const double im = rng.normal();
            g(i, j) = Complex(re, im) / std::sqrt(2.0);
        }
    }
    return g;
}

}  // namespace

Matrix random_unitary(std::size_t dim, RngStream& rng)
{
    const Matrix g = ginibre(dim, rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
        const Complex diag = r(j, j);
        const double mag = std::abs(diag);
        if (mag > 0.0) {
            q.col(j) *= diag / mag;
        }
    }
    return q;
}

Vector random_state(std::size_t dim, RngStream& rng)
{
    const auto n = static_cast<Eigen::Index>(dim);
    Vector v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double re = rng.normal();
        const double im = rng.normal();
        v(i) = Complex(re, im);
    }
    return v / v.norm();
}

Matrix random_density(std::size_t dim, RngStream& rng)
{
    const Matrix g = ginibre(dim, rng);
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return 0.5 * (rho + rho.adjoint());
}

Matrix random_hermitian(std::size_t dim, RngStream& rng)
{
    const Matrix g = ginibre(dim, rng);
    return 0.5 * (g + g.adjoint());
}

bool equal_up_to_phase(const Vector& phi, const Vector& psi, double tol)
{
    if (phi.size() != psi.size()) {
        return false;
    }
    return std::abs(std::abs(phi.dot(psi)) - 1.0) <= tol;
}

Matrix shift_matrix(int d)
{
    Matrix x = Matrix::Zero(d, d);
    for (int j = 0; j < d; ++j) {
        x((j + 1) % d, j) = 1.0;
    }
    return x;
}

Matrix boost_matrix(int d)
{
    Matrix z = Matrix::Zero(d, d);
    for (int j = 0; j < d; ++j) {
        z(j, j) = std::polar(1.0, 2.0 * std::numbers::pi * j / d);
    }
    return z;
}

}  // namespace wdfe
