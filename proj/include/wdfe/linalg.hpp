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

#include "wdfe/rng.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstddef>

namespace wdfe {

using Complex = std::complex<double>;
/// Dense complex matrix, column-major.
using Matrix = Eigen::MatrixXcd;
/// Dense complex column vector (pure states).
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

double max_abs(const Matrix& m);
/// max |m - m^dagger|
double hermiticity_residual(const Matrix& m);
/// max |m^dagger m - I|
double unitarity_residual(const Matrix& m);

bool is_hermitian(const Matrix& m, double tol);
bool is_unitary(const Matrix& m, double tol);

/// tr[a b] via the active conj-dot kernel (b is taken as Hermitian, so
/// tr[a b] = sum_ij a_ij conj(b_ij)).
Complex trace_product_hermitian(const Matrix& a, const Matrix& b);

/// tr[a^dagger b] for arbitrary square matrices.
Complex hilbert_schmidt(const Matrix& a, const Matrix& b);

Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

Matrix projector(const Vector& psi);

/// Haar-random unitary (QR of a Ginibre matrix with the R-diagonal phase fix).
Matrix random_unitary(std::size_t dim, RngStream& rng);
/// Haar-random pure state.
Vector random_state(std::size_t dim, RngStream& rng);
/// Random full-rank density matrix G G^dagger / tr (Ginibre ensemble).
Matrix random_density(std::size_t dim, RngStream& rng);
/// Random Hermitian matrix with Gaussian entries (GUE scaling).
Matrix random_hermitian(std::size_t dim, RngStream& rng);

/// True when the states agree up to a global phase: |<phi|psi>| = 1 within tol.
bool equal_up_to_phase(const Vector& phi, const Vector& psi, double tol);

/// Cyclic shift X|j> = |j+1 mod d>.
Matrix shift_matrix(int d);
/// Boost Z|j> = omega^j |j>.
Matrix boost_matrix(int d);

}  // namespace wdfe
