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
#include "wdfe/system.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace wdfe {

/// diag(1, ..., 1, e^{2 pi i / d^2}); not Clifford.
Matrix t_gate(int d);

/// Single-qudit states, tensored over all qudits:
///   zero           |0>
///   plus           F|0>, the uniform superposition
///   strange_state  (|1> - |d-1>) / sqrt 2
///   t_state        t_gate |plus>
/// DomainError for unknown names.
Vector named_state(const SystemSpec& system, const std::string& name);
std::vector<std::string> named_state_names();

/// identity, fourier, phase, shift and t_gate act on every qudit; sum acts
/// on qudits 0 and 1 (n >= 2).
Matrix named_unitary(const SystemSpec& system, const std::string& name);
std::vector<std::string> named_unitary_names();

/// Normalized (1 - t)|0...0> + t |strange_state>, t in [0, 1].
Vector interpolated_state(const SystemSpec& system, double t);

/// The index-th state of the stabilizer enumeration.
Vector stabilizer_state(const SystemSpec& system, std::size_t index);

}  // namespace wdfe
