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

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace wdfe {

/// Numerical tolerances shared across modules. Structural identities
/// (Hermiticity, orthogonality, unitarity) use `structural`; quantities
/// accumulated over D-sized contractions use `derived`.
struct Tolerances {
    double structural = 1e-10;
    double derived = 1e-9;
};

inline constexpr Tolerances default_tolerances{};

/// n qudits of odd prime dimension d.
class SystemSpec {
public:
    /// Throws ValidationError unless d is an odd prime, n >= 1 and d^{2n}
    /// fits in 32 bits.
    SystemSpec(int d, int n);

    int d() const noexcept { return d_; }
    int n() const noexcept { return n_; }
    /// Hilbert dimension d^n.
    std::size_t dim() const noexcept { return dim_; }
    /// Number of phase points d^{2n}.
    std::size_t points() const noexcept { return points_; }

    std::complex<double> omega() const;
    std::complex<double> tau() const;

    std::string to_string() const;

    friend bool operator==(const SystemSpec&, const SystemSpec&) = default;

private:
    int d_;
    int n_;
    std::size_t dim_;
    std::size_t points_;
};

bool is_prime(int value);

/// A point of Z_d^n x Z_d^n laid out as (a1, a2) per qudit, qudits
/// concatenated in order.
struct PhasePoint {
    std::vector<int> coords;

    friend bool operator==(const PhasePoint&, const PhasePoint&) = default;
};

/// Row-major over qudits with (a1, a2) inside each qudit:
/// index = sum_q (a1_q * d + a2_q) * d^{2(n-1-q)}.
std::size_t flat_index(const SystemSpec& sys, const PhasePoint& u);
PhasePoint phase_point(const SystemSpec& sys, std::size_t index);

/// Concatenates subsystem points; the flat index of the result is
/// index(a) * points(b) + index(b).
PhasePoint concat(const PhasePoint& a, const PhasePoint& b);

std::string format_coords(const PhasePoint& u, char sep = ';');

}  // namespace wdfe
