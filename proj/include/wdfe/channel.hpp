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

#include <vector>

namespace wdfe {

/// A CPTP map on the n-qudit system, stored as a core Kraus list plus a
/// depolarizing weight q:
///   N(X) = (1 - q) sum_k K_k X K_k^dagger + q tr(X) I / D.
/// Keeping q separate avoids the d^{2n} Kraus operators of the explicit
/// twirl. Input and output systems are the same.
class QuantumChannel {
public:
    /// Validates dimensions, q in [0,1] and trace preservation of the core
    /// (sum K^dagger K = I within tol.derived). Throws ValidationError.
    QuantumChannel(SystemSpec system, std::vector<Matrix> kraus, double depolarizing_weight = 0.0,
                   Tolerances tol = default_tolerances);

    static QuantumChannel identity(const SystemSpec& system);
    static QuantumChannel unitary(const SystemSpec& system, const Matrix& u);
    /// rho -> (1-p) rho + p tr(rho) I/D.
    static QuantumChannel depolarizing(const SystemSpec& system, double p);
    /// rho -> (1-p) rho + p diag(rho) in the computational basis.
    static QuantumChannel dephasing(const SystemSpec& system, double p);
    /// rho -> (1-p) rho + p tr(rho) sigma.
    static QuantumChannel replacement(const SystemSpec& system, const Matrix& sigma, double p);

    const SystemSpec& system() const noexcept { return system_; }
    const std::vector<Matrix>& core_kraus() const noexcept { return kraus_; }
    double depolarizing_weight() const noexcept { return q_; }

    /// Full Kraus list including the explicit Heisenberg-Weyl twirl when
    /// q > 0 (d^{2n} extra operators).
    std::vector<Matrix> kraus_operators() const;

    bool is_unitary(double tol = default_tolerances.structural) const;
    /// The single Kraus operator of a unitary channel.
    const Matrix& unitary_matrix() const;
    /// sum_k K_k K_k^dagger = I for the core.
    bool core_is_unital(double tol = default_tolerances.derived) const;

    Matrix apply(const Matrix& rho) const;

    /// sum_ij |i><j| (x) N(|i><j|)
    Matrix choi() const;

private:
    SystemSpec system_;
    std::vector<Matrix> kraus_;
    double q_ = 0.0;
};

/// outer o inner: apply `inner` first.
QuantumChannel compose(const QuantumChannel& outer, const QuantumChannel& inner);
/// Channel on the concatenated system; requires equal qudit dimension.
QuantumChannel tensor(const QuantumChannel& a, const QuantumChannel& b);

/// Entanglement fidelity tr[U^dagger Lambda]/d^{2n} from the Kraus form:
/// sum_k |tr[U^dagger K_k]|^2 / D^2 (the depolarizing part contributes
/// q / D^2).
double entanglement_fidelity_kraus(const Matrix& u, const QuantumChannel& lambda);

}  // namespace wdfe
