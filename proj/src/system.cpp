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

#include "wdfe/system.hpp"

#include "wdfe/errors.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

namespace wdfe {

bool is_prime(int value)
{
    if (value < 2) {
        return false;
    }
    for (int f = 2; f * f <= value; ++f) {
        if (value % f == 0) {
            return false;
        }
    }
    return true;
}

SystemSpec::SystemSpec(int d, int n) : d_(d), n_(n), dim_(1), points_(1)
{
    if (d < 3 || !is_prime(d)) {
        throw ValidationError("qudit dimension must be an odd prime, got " + std::to_string(d));
    }
    if (n < 1) {
        throw ValidationError("qudit count must be >= 1, got " + std::to_string(n));
    }
    constexpr std::uint64_t limit = std::numeric_limits<std::uint32_t>::max();
    std::uint64_t dim = 1;
    for (int q = 0; q < n; ++q) {
        dim *= static_cast<std::uint64_t>(d);
        if (dim * dim > limit) {
            throw ValidationError("system " + std::to_string(d) + "^" + std::to_string(n) +
                                  " has too many phase points");
        }
    }
    dim_ = static_cast<std::size_t>(dim);
    points_ = static_cast<std::size_t>(dim * dim);
}

std::complex<double> SystemSpec::omega() const { return std::polar(1.0, 2.0 * std::numbers::pi / d_); }

std::complex<double> SystemSpec::tau() const { return std::polar(1.0, (d_ + 1) * std::numbers::pi / d_); }

std::string SystemSpec::to_string() const { return "d=" + std::to_string(d_) + ",n=" + std::to_string(n_); }

std::size_t flat_index(const SystemSpec& sys, const PhasePoint& u)
{
    const auto len = static_cast<std::size_t>(2 * sys.n());
    if (u.coords.size() != len) {
        throw DomainError("phase point has " + std::to_string(u.coords.size()) + " coordinates, expected " +
                          std::to_string(len));
    }
    std::size_t index = 0;
    for (int c : u.coords) {
        if (c < 0 || c >= sys.d()) {
            throw DomainError("phase point coordinate " + std::to_string(c) + " outside [0," +
                              std::to_string(sys.d()) + ")");
        }
        index = index * static_cast<std::size_t>(sys.d()) + static_cast<std::size_t>(c);
    }
    return index;
}

PhasePoint phase_point(const SystemSpec& sys, std::size_t index)
{
    if (index >= sys.points()) {
        throw DomainError("phase point index " + std::to_string(index) + " outside [0," +
                          std::to_string(sys.points()) + ")");
    }
    PhasePoint u;
    u.coords.assign(static_cast<std::size_t>(2 * sys.n()), 0);
    const auto d = static_cast<std::size_t>(sys.d());
    for (std::size_t k = u.coords.size(); k-- > 0;) {
        u.coords[k] = static_cast<int>(index % d);
        index /= d;
    }
    return u;
}

PhasePoint concat(const PhasePoint& a, const PhasePoint& b)
{
    PhasePoint out = a;
    out.coords.insert(out.coords.end(), b.coords.begin(), b.coords.end());
    return out;
}

std::string format_coords(const PhasePoint& u, char sep)
{
    std::string out;
    for (std::size_t k = 0; k < u.coords.size(); ++k) {
        if (k != 0) {
            out.push_back(sep);
        }
        out += std::to_string(u.coords[k]);
    }
    return out;
}

}  // namespace wdfe
