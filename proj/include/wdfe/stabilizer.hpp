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

#include "wdfe/linalg.hpp"
#include "wdfe/phase_space.hpp"
#include "wdfe/system.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wdfe {

/// Qudit Fourier gate F|j> = d^{-1/2} sum_k omega^{jk} |k>.
Matrix fourier_gate(int d);
/// Quadratic phase gate S|j> = omega^{j(j-1)/2} |j>.
Matrix phase_gate(int d);
/// Two-qudit SUM |a,b> -> |a, a+b>.
Matrix sum_gate(int d);
/// Places a gate acting on consecutive qudits starting at `first` into the
/// full system.
Matrix embed(const SystemSpec& system, const Matrix& gate, int first);

struct NamedGate {
    std::string name;
    Matrix matrix;
};

/// F, S and X on every qudit, plus SUM on neighbouring pairs.
std::vector<NamedGate> default_generators(const SystemSpec& system);

/// The induced permutation u -> u' with U T_u U^dagger = e^{i theta} T_u',
/// or nullopt if some conjugate is not a Heisenberg-Weyl operator up to
/// phase (residual > tol after best-phase alignment). Throws
/// ValidationError if U is not unitary to 1e-9.
std::optional<std::vector<std::uint32_t>> clifford_point_map(const PhaseSpace& space, const Matrix& u,
                                                             double tol = 1e-9);
bool is_clifford(const PhaseSpace& space, const Matrix& u, double tol = 1e-9);

/// The action U A_u U^dagger = A_u' on phase points, which is affine,
/// u' = F u + a. clifford_point_map gives only the linear part F because
/// translations change Heisenberg-Weyl phases, not labels. nullopt for
/// non-Clifford U.
std::optional<std::vector<std::uint32_t>> phase_point_action(const PhaseSpace& space, const Matrix& u,
                                                             double tol = 1e-9);

struct CliffordElement {
    Matrix matrix;
    /// Generator names, rightmost applied first.
    std::vector<std::string> word;
};

inline constexpr std::size_t default_group_cap = 1'000'000;
inline constexpr std::size_t default_state_cap = 100'000;

/// Closure of the generators modulo global phase. Throws ValidationError
/// for non-Clifford generators and ResourceError past `cap` elements.
std::vector<CliffordElement> clifford_group(const SystemSpec& system, const std::vector<NamedGate>& generators,
                                            std::size_t cap = default_group_cap);

struct StabilizerState {
    Vector vector;
    /// Flat indices of the D phase points carrying weight 1/D, ascending.
    std::vector<std::uint32_t> support;
};

/// Orbit of |0...0> under the generators, deduplicated up to phase. Every
/// state is checked to have a uniform D-point Wigner support.
std::vector<StabilizerState> enumerate_stabilizer_states(const SystemSpec& system,
                                                         const std::vector<NamedGate>& generators,
                                                         std::size_t cap = default_state_cap);
std::vector<StabilizerState> enumerate_stabilizer_states(const SystemSpec& system);

/// Wigner positivity of a pure state, cross-checked against the uniform
/// support pattern. ValidationError if psi is not normalized.
bool is_stabilizer_state(const PhaseSpace& space, const Vector& psi);

}  // namespace wdfe
