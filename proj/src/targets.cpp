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

#include "wdfe/targets.hpp"

#include "wdfe/errors.hpp"
#include "wdfe/stabilizer.hpp"

#include <cmath>
#include <numbers>

namespace wdfe {
namespace {

Vector tensor_power(const SystemSpec& system, const Vector& single)
{
    Vector out = single;
    for (int q = 1; q < system.n(); ++q) {
        out = kron(out, single);
    }
    return out;
}

Matrix tensor_power(const SystemSpec& system, const Matrix& single)
{
    Matrix out = single;
    for (int q = 1; q < system.n(); ++q) {
        out = kron(out, single);
    }
    return out;
}

Vector basis(int d, int j)
{
    Vector v = Vector::Zero(d);
    v(j) = 1.0;
    return v;
}

}  // namespace

Matrix t_gate(int d)
{
    Matrix t = Matrix::Identity(d, d);
    t(d - 1, d - 1) = std::polar(1.0, 2.0 * std::numbers::pi / (d * d));
    return t;
}

Vector named_state(const SystemSpec& system, const std::string& name)
{
    const int d = system.d();
    if (name == "zero") {
        return tensor_power(system, basis(d, 0));
    }
    if (name == "plus") {
        return tensor_power(system, Vector(fourier_gate(d) * basis(d, 0)));
    }
    if (name == "strange_state") {
        return tensor_power(system, Vector((basis(d, 1) - basis(d, d - 1)) / std::sqrt(2.0)));
    }
    if (name == "t_state") {
        return tensor_power(system, Vector(t_gate(d) * fourier_gate(d) * basis(d, 0)));
    }
    throw DomainError("unknown named state '" + name + "'");
}

std::vector<std::string> named_state_names() { return {"zero", "plus", "strange_state", "t_state"}; }

Matrix named_unitary(const SystemSpec& system, const std::string& name)
{
    const int d = system.d();
    if (name == "identity") {
        const auto dim = static_cast<Eigen::Index>(system.dim());
        return Matrix::Identity(dim, dim);
    }
    if (name == "fourier") {
        return tensor_power(system, fourier_gate(d));
    }
    if (name == "phase") {
        return tensor_power(system, phase_gate(d));
    }
    if (name == "shift") {
        return tensor_power(system, shift_matrix(d));
    }
    if (name == "t_gate") {
        return tensor_power(system, t_gate(d));
    }
    if (name == "sum") {
        if (system.n() < 2) {
            throw DomainError("sum needs at least two qudits");
        }
        return embed(system, sum_gate(d), 0);
    }
    throw DomainError("unknown named unitary '" + name + "'");
}

std::vector<std::string> named_unitary_names() { return {"identity", "fourier", "phase", "shift", "sum", "t_gate"}; }

Vector interpolated_state(const SystemSpec& system, double t)
{
    if (!(t >= 0.0 && t <= 1.0)) {
        throw ValidationError("interpolation parameter must lie in [0,1], got " + std::to_string(t));
    }
    Vector v = (1.0 - t) * named_state(system, "zero") + t * named_state(system, "strange_state");
    return v / v.norm();
}

Vector stabilizer_state(const SystemSpec& system, std::size_t index)
{
    const auto states = enumerate_stabilizer_states(system);
    if (index >= states.size()) {
        throw DomainError("stabilizer index " + std::to_string(index) + " out of range; " + system.to_string() +
                          " has " + std::to_string(states.size()) + " states");
    }
    return states[index].vector;
}

}  // namespace wdfe
