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
#include "wdfe/linalg.hpp"
#include "wdfe/system.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace wdfe {

/// A matrix with exactly one nonzero entry per column:
/// M|j> = coeff[j] |target[j]>. Heisenberg-Weyl operators and phase-point
/// operators of odd prime dimension all have this form.
struct MonomialMatrix {
    std::vector<std::uint32_t> target;
    std::vector<Complex> coeff;

    std::size_t dim() const noexcept { return target.size(); }
    Matrix dense() const;
    MonomialMatrix adjoint() const;
    /// this * y for dense y.
    Matrix times(const Matrix& y) const;
    /// y * this for dense y.
    Matrix times_left(const Matrix& y) const;
    Vector times(const Vector& v) const;

    friend MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b);
};

/// The phase-point operator family A_u for one system, with the shared
/// eigendecomposition. Immutable after construction; share freely across
/// threads.
class PhaseSpace {
public:
    explicit PhaseSpace(const SystemSpec& system, Tolerances tol = default_tolerances);

    /// Process-wide cache, built on first request per system.
    static std::shared_ptr<const PhaseSpace> shared(const SystemSpec& system);

    const SystemSpec& system() const noexcept { return system_; }
    const Tolerances& tolerances() const noexcept { return tol_; }
    std::size_t dim() const noexcept { return system_.dim(); }
    std::size_t points() const noexcept { return system_.points(); }

    /// T_u = tau^{-a1 a2} Z^{a1} X^{a2}, tensored over qudits.
    const MonomialMatrix& translation(std::size_t u) const { return translations_.at(u); }
    /// A_u = T_u A_0 T_u^dagger.
    const MonomialMatrix& point_operator(std::size_t u) const { return points_.at(u); }

    /// tr[A_u Y] for dense Y in O(D).
    Complex trace_with(std::size_t u, const Matrix& y) const;

    /// Eigenvalues shared by every A_u, ascending; snapped to exactly +-1
    /// when the numerical spectrum is within tolerance of +-1.
    const RealVector& spectrum() const noexcept { return spectrum_; }
    bool spectrum_is_pm_one() const noexcept { return pm_one_; }
    /// sum |lambda_i| over the spectrum (equals D when the spectrum is +-1).
    double spectrum_l1() const noexcept { return spectrum_l1_; }
    /// Orthonormal eigenvectors of A_u as columns, ordered like spectrum().
    Matrix eigenbasis(std::size_t u) const;

private:
    SystemSpec system_;
    Tolerances tol_;
    std::vector<MonomialMatrix> translations_;
    std::vector<MonomialMatrix> points_;
    // Per point: coefficients and column-major offsets for trace_with.
    std::vector<std::uint32_t> trace_offsets_;
    std::vector<Complex> trace_coeffs_;
    RealVector spectrum_;
    Matrix zero_eigenbasis_;
    bool pm_one_ = false;
    double spectrum_l1_ = 0.0;
};

/// Discrete Wigner representation of a Hermitian operator.
struct WignerFunction {
    SystemSpec system;
    RealVector values;
    /// Trace of the represented operator.
    double source_trace = 0.0;
};

/// Channel Wigner function W(v|u) stored as values(v, u).
struct ChannelWigner {
    SystemSpec system;
    RealMatrix values;
};

Matrix heisenberg_weyl(const SystemSpec& system, const PhasePoint& u);
Matrix phase_point_operator(const SystemSpec& system, const PhasePoint& u);

/// W_X(u) = tr[A_u X] / D. Throws ValidationError for non-Hermitian X and
/// NumericalError if an imaginary residue exceeds tolerance.
WignerFunction wigner_of_operator(const PhaseSpace& space, const Matrix& x);
WignerFunction wigner_of_state(const PhaseSpace& space, const Vector& psi);

/// sum_u W(u) A_u
Matrix reconstruct(const PhaseSpace& space, const WignerFunction& w);

/// D * sum_u W_M(u) W_N(u) = tr[M N]
double wigner_inner_product(const WignerFunction& m, const WignerFunction& n);

/// N(A_u) as a dense matrix.
Matrix channel_image(const PhaseSpace& space, const QuantumChannel& channel, std::size_t u);

/// W(v|u) = tr[A_v N(A_u)] / D, checked column-stochastic.
ChannelWigner wigner_of_channel(const PhaseSpace& space, const QuantumChannel& channel);

/// Checks the density-matrix invariants of a Wigner function (unit sum,
/// |W| <= 1/D). Throws ValidationError.
void check_density_wigner(const WignerFunction& w, Tolerances tol = default_tolerances);

}  // namespace wdfe
