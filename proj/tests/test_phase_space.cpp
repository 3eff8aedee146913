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

#include "doctest.h"

#include "oracle.hpp"

#include "wdfe/errors.hpp"
#include "wdfe/kernels.hpp"
#include "wdfe/phase_space.hpp"
#include "wdfe/rng.hpp"
#include "wdfe/targets.hpp"

#include <algorithm>
#include <cmath>

using namespace wdfe;

TEST_CASE("system sys validation and phase-point indexing")
{
    CHECK_THROWS_AS(SystemSpec(2, 1), ValidationError);
    CHECK_THROWS_AS(SystemSpec(9, 1), ValidationError);
    CHECK_THROWS_AS(SystemSpec(3, 0), ValidationError);
    CHECK_THROWS_AS(SystemSpec(3, 40), ValidationError);
    const SystemSpec s(3, 2);
    CHECK(s.dim() == 9);
    CHECK(s.points() == 81);
    for (std::size_t i = 0; i < s.points(); ++i) {
        CHECK(flat_index(s, phase_point(s, i)) == i);
    }
    // (a1,a2) per qudit, qudit 0 most significant.
    CHECK(flat_index(s, PhasePoint{{1, 2, 0, 1}}) == (1 * 3 + 2) * 9 + 1);
    CHECK_THROWS_AS(flat_index(s, PhasePoint{{3, 0, 0, 0}}), DomainError);
    CHECK_THROWS_AS(flat_index(s, PhasePoint{{0, 0}}), DomainError);

    const SystemSpec one(3, 1);
    const PhasePoint a = phase_point(one, 5);
    const PhasePoint b = phase_point(one, 7);
    CHECK(flat_index(s, concat(a, b)) == 5 * 9 + 7);
}

TEST_CASE("Heisenberg-Weyl operators")
{
    const SystemSpec s(3, 1);
    CHECK(max_abs(heisenberg_weyl(s, PhasePoint{{0, 0}}) - Matrix::Identity(3, 3)) < 1e-12);
    CHECK(max_abs(heisenberg_weyl(s, PhasePoint{{0, 1}}) - shift_matrix(3)) < 1e-12);
    const Matrix t11 = heisenberg_weyl(s, PhasePoint{{1, 1}});
    const Complex tau = std::polar(1.0, 4.0 * oracle::pi / 3.0);
    CHECK(max_abs(t11 - std::pow(tau, -1) * boost_matrix(3) * shift_matrix(3)) < 1e-12);
    CHECK(unitarity_residual(t11) < 1e-12);

    for (auto [d, n] : {std::pair{3, 1}, std::pair{5, 1}, std::pair{3, 2}}) {
        const SystemSpec sys(d, n);
        for (std::size_t u = 0; u < sys.points(); ++u) {
            CHECK(max_abs(heisenberg_weyl(sys, phase_point(sys, u)) - oracle::hw(d, n, u)) < 1e-12);
        }
    }
}

TEST_CASE("phase-point operators match the dense construction")
{
    for (auto [d, n] : {std::pair{3, 1}, std::pair{5, 1}, std::pair{7, 1}, std::pair{3, 2}}) {
        const SystemSpec sys(d, n);
        const oracle::DensePhaseSpace ref(d, n);
        const PhaseSpace space(sys);
        for (std::size_t u = 0; u < sys.points(); ++u) {
            CHECK(max_abs(space.point_operator(u).dense() - ref.A[u]) < 1e-10);
            CHECK(max_abs(phase_point_operator(sys, phase_point(sys, u)) - ref.A[u]) < 1e-10);
        }
    }
}

TEST_CASE("phase-point spectrum and eigenbasis")
{
    const SystemSpec s(3, 1);
    const PhaseSpace space(s);
    REQUIRE(space.spectrum().size() == 3);
    CHECK(space.spectrum()(0) == -1.0);
    CHECK(space.spectrum()(1) == 1.0);
    CHECK(space.spectrum()(2) == 1.0);
    CHECK(space.spectrum_is_pm_one());
    CHECK(space.spectrum_l1() == 3.0);
    for (std::size_t u = 0; u < s.points(); ++u) {
        const Matrix e = space.eigenbasis(u);
        CHECK(unitarity_residual(e) < 1e-12);
        const Matrix diag = e.adjoint() * space.point_operator(u).dense() * e;
        for (int i = 0; i < 3; ++i) {
            CHECK(std::abs(diag(i, i) - space.spectrum()(i)) < 1e-10);
        }
    }
    CHECK(PhaseSpace::shared(s).get() == PhaseSpace::shared(s).get());
}

TEST_CASE("Lemma 1 identities for every desk-scale system")
{
    for (auto [d, n] : {std::pair{3, 1}, std::pair{5, 1}, std::pair{7, 1}, std::pair{3, 2}}) {
        const SystemSpec sys(d, n);
        const PhaseSpace& space = *PhaseSpace::shared(sys);
        const auto D = static_cast<double>(sys.dim());
        for (std::size_t u = 0; u < sys.points(); ++u) {
            const Matrix a = space.point_operator(u).dense();
            CHECK(hermiticity_residual(a) < 1e-10);
            CHECK(std::abs(a.trace() - Complex(1.0)) < 1e-10);
            for (std::size_t v = 0; v < sys.points(); v += 1 + sys.points() / 17) {
                const Complex t = space.trace_with(u, space.point_operator(v).dense());
                CHECK(std::abs(t - Complex(u == v ? D : 0.0)) < 1e-10);
            }
        }
    }
}

TEST_CASE("Wigner functions of states")
{
    const SystemSpec s(3, 1);
    const PhaseSpace& space = *PhaseSpace::shared(s);
    const WignerFunction mixed = wigner_of_operator(space, Matrix::Identity(3, 3) / 3.0);
    for (Eigen::Index u = 0; u < 9; ++u) {
        CHECK(std::abs(mixed.values(u) - 1.0 / 9.0) < 1e-12);
    }
    const WignerFunction zero = wigner_of_state(space, named_state(s, "zero"));
    int third = 0, nil = 0;
    for (Eigen::Index u = 0; u < 9; ++u) {
        third += std::abs(zero.values(u) - 1.0 / 3.0) < 1e-12;
        nil += std::abs(zero.values(u)) < 1e-12;
    }
    CHECK(third == 3);
    CHECK(nil == 6);
    // The support of |0> is the line a2 = 0.
    for (int a1 = 0; a1 < 3; ++a1) {
        CHECK(std::abs(zero.values(3 * a1) - 1.0 / 3.0) < 1e-12);
    }

    RngStream rng(7);
    const oracle::DensePhaseSpace ref(3, 2);
    const SystemSpec s2(3, 2);
    const PhaseSpace& space2 = *PhaseSpace::shared(s2);
    for (int trial = 0; trial < 10; ++trial) {
        const Vector psi = random_state(9, rng);
        const WignerFunction w = wigner_of_state(space2, psi);
        const auto expect = ref.wigner(projector(psi));
        for (std::size_t u = 0; u < 81; ++u) {
            CHECK(std::abs(w.values(static_cast<Eigen::Index>(u)) - expect[u]) < 1e-12);
        }
        CHECK(std::abs(9.0 * w.values.squaredNorm() - 1.0) < 1e-9);
        CHECK(std::abs(w.values.sum() - 1.0) < 1e-9);
        CHECK_NOTHROW(check_density_wigner(w));
    }

    Matrix non_hermitian = Matrix::Zero(3, 3);
    non_hermitian(0, 1) = 1.0;
    CHECK_THROWS_AS(wigner_of_operator(space, non_hermitian), ValidationError);
    CHECK_THROWS_AS(wigner_of_operator(space, Matrix::Identity(9, 9)), DomainError);
}

TEST_CASE("reconstruction and the overlap formula")
{
    const SystemSpec s(3, 2);
    const PhaseSpace& space = *PhaseSpace::shared(s);
    RngStream rng(11);

    WignerFunction delta{s, RealVector::Zero(81), 1.0};
    delta.values(17) = 1.0;
    CHECK(max_abs(reconstruct(space, delta) - space.point_operator(17).dense()) < 1e-12);

    WignerFunction flat{s, RealVector::Constant(81, 1.0 / 81.0), 1.0};
    CHECK(max_abs(reconstruct(space, flat) - Matrix::Identity(9, 9) / 9.0) < 1e-12);

    for (int trial = 0; trial < 20; ++trial) {
        const Matrix h = random_hermitian(9, rng);
        CHECK(max_abs(reconstruct(space, wigner_of_operator(space, h)) - h) < 1e-9);
        const Matrix rho = random_density(9, rng);
        const Matrix sigma = random_density(9, rng);
        const double dense = (rho * sigma).trace().real();
        const double via = wigner_inner_product(wigner_of_operator(space, rho), wigner_of_operator(space, sigma));
        CHECK(std::abs(dense - via) < 1e-9);
    }

    const PhaseSpace& one = *PhaseSpace::shared(SystemSpec(3, 1));
    const WignerFunction psi = wigner_of_state(one, named_state(SystemSpec(3, 1), "zero"));
    CHECK(std::abs(wigner_inner_product(psi, psi) - 1.0) < 1e-9);
    CHECK(std::abs(wigner_inner_product(psi, wigner_of_operator(one, Matrix::Identity(3, 3) / 3.0)) - 1.0 / 3.0) <
          1e-12);
    CHECK_THROWS_AS(wigner_inner_product(psi, delta), DomainError);
    WignerFunction short_w{s, RealVector::Zero(5), 0.0};
    CHECK_THROWS_AS(reconstruct(space, short_w), DomainError);
}

TEST_CASE("channel Wigner functions")
{
    const SystemSpec s(3, 1);
    const PhaseSpace& space = *PhaseSpace::shared(s);
    const oracle::DensePhaseSpace ref(3, 1);

    const ChannelWigner id = wigner_of_channel(space, QuantumChannel::identity(s));
    CHECK((id.values - RealMatrix::Identity(9, 9)).cwiseAbs().maxCoeff() < 1e-12);

    const ChannelWigner dep = wigner_of_channel(space, QuantumChannel::depolarizing(s, 0.1));
    for (int v = 0; v < 9; ++v) {
        for (int u = 0; u < 9; ++u) {
            CHECK(std::abs(dep.values(v, u) - ((u == v ? 0.9 : 0.0) + 0.1 / 9.0)) < 1e-12);
        }
    }

    RngStream rng(5);
    const Matrix uni = random_unitary(3, rng);
    std::vector<Matrix> kraus;
    {
        // Random Kraus channel: slices of a Haar isometry.
        const Matrix big = random_unitary(9, rng);
        for (int k = 0; k < 3; ++k) {
            kraus.push_back(big.block(3 * k, 0, 3, 3));
        }
    }
    for (const QuantumChannel& ch :
         {QuantumChannel::unitary(s, uni), QuantumChannel(s, kraus), QuantumChannel(s, kraus, 0.3),
          QuantumChannel::dephasing(s, 0.4)}) {
        const ChannelWigner cw = wigner_of_channel(space, ch);
        const auto expect = ref.channel_wigner(ch.kraus_operators());
        for (int u = 0; u < 9; ++u) {
            CHECK(std::abs(cw.values.col(u).sum() - 1.0) < 1e-9);
            for (int v = 0; v < 9; ++v) {
                CHECK(std::abs(cw.values(v, u) - expect[v][u]) < 1e-12);
            }
        }
    }

    const ChannelWigner four = wigner_of_channel(space, QuantumChannel::unitary(s, named_unitary(s, "fourier")));
    for (int u = 0; u < 9; ++u) {
        int ones = 0;
        for (int v = 0; v < 9; ++v) {
            const double x = four.values(v, u);
            CHECK((std::abs(x) < 1e-9 || std::abs(x - 1.0) < 1e-9));
            ones += std::abs(x - 1.0) < 1e-9;
        }
        CHECK(ones == 1);
    }
}
