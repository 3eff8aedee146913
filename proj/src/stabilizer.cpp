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

#include "wdfe/stabilizer.hpp"

#include "wdfe/errors.hpp"

#include <cmath>
#include <cstring>
#include <deque>
#include <numbers>
#include <string>
#include <unordered_map>

namespace wdfe {

Matrix fourier_gate(int d)
{
    Matrix f(d, d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) {
            f(k, j) = std::polar(norm, 2.0 * std::numbers::pi * ((j * k) % d) / d);
        }
    }
    return f;
}

Matrix phase_gate(int d)
{
    Matrix s = Matrix::Zero(d, d);
    for (int j = 0; j < d; ++j) {
        const int e = ((j * (j - 1)) / 2) % d;
        s(j, j) = std::polar(1.0, 2.0 * std::numbers::pi * e / d);
    }
    return s;
}

Matrix sum_gate(int d)
{
    Matrix g = Matrix::Zero(d * d, d * d);
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            g(a * d + (a + b) % d, a * d + b) = 1.0;
        }
    }
    return g;
}

Matrix embed(const SystemSpec& system, const Matrix& gate, int first)
{
    const auto d = static_cast<Eigen::Index>(system.d());
    Eigen::Index span = 1;
    int width = 0;
    while (span < gate.rows()) {
        span *= d;
        ++width;
    }
    if (span != gate.rows() || gate.rows() != gate.cols() || first < 0 || first + width > system.n()) {
        throw DomainError("gate of size " + std::to_string(gate.rows()) + " does not fit at qudit " +
                          std::to_string(first) + " of " + system.to_string());
    }
    Eigen::Index left = 1;
    for (int q = 0; q < first; ++q) {
        left *= d;
    }
    const Eigen::Index right = static_cast<Eigen::Index>(system.dim()) / (left * span);
    return kron(kron(Matrix::Identity(left, left), gate), Matrix::Identity(right, right));
}

std::vector<NamedGate> default_generators(const SystemSpec& system)
{
    const int d = system.d();
    std::vector<NamedGate> gens;
    for (int q = 0; q < system.n(); ++q) {
        const std::string tag = std::to_string(q);
        gens.push_back({"F" + tag, embed(system, fourier_gate(d), q)});
        gens.push_back({"S" + tag, embed(system, phase_gate(d), q)});
        gens.push_back({"X" + tag, embed(system, shift_matrix(d), q)});
    }
    for (int q = 0; q + 1 < system.n(); ++q) {
        gens.push_back({"SUM" + std::to_string(q) + std::to_string(q + 1), embed(system, sum_gate(d), q)});
    }
    return gens;
}

std::optional<std::vector<std::uint32_t>> clifford_point_map(const PhaseSpace& space, const Matrix& u, double tol)
{
    const auto dim = static_cast<Eigen::Index>(space.dim());
    if (u.rows() != dim || u.cols() != dim) {
        throw DomainError("unitary dimension does not match " + space.system().to_string());
    }
    if (!is_unitary(u, 1e-9)) {
        throw ValidationError("Clifford check needs a unitary; max|U^dagger U - I| = " +
                              std::to_string(unitarity_residual(u)));
    }
    // Candidates grouped by the image of |0>: D translations share each row.
    std::vector<std::vector<std::uint32_t>> by_row(space.dim());
    for (std::size_t w = 0; w < space.points(); ++w) {
        by_row[space.translation(w).target[0]].push_back(static_cast<std::uint32_t>(w));
    }
    const Matrix u_dag = u.adjoint();
    std::vector<std::uint32_t> image(space.points());
    Matrix conj(dim, dim);
    for (std::size_t p = 0; p < space.points(); ++p) {
        conj.noalias() = space.translation(p).times_left(u) * u_dag;
        Eigen::Index row = 0;
        conj.col(0).cwiseAbs().maxCoeff(&row);
        Complex best{0.0, 0.0};
        std::uint32_t best_w = 0;
        for (std::uint32_t w : by_row[static_cast<std::size_t>(row)]) {
            const MonomialMatrix& t = space.translation(w);
            Complex overlap{0.0, 0.0};
            for (std::size_t k = 0; k < t.dim(); ++k) {
                overlap += std::conj(t.coeff[k]) * conj(t.target[k], static_cast<Eigen::Index>(k));
            }
            if (std::abs(overlap) > std::abs(best)) {
                best = overlap;
                best_w = w;
            }
        }
        if (std::abs(best) < 1e-6) {
            return std::nullopt;
        }
        const Complex phase = best / std::abs(best);
        const MonomialMatrix& t = space.translation(best_w);
        for (std::size_t k = 0; k < t.dim(); ++k) {
            conj(t.target[k], static_cast<Eigen::Index>(k)) -= phase * t.coeff[k];
        }
        if (max_abs(conj) > tol) {
            return std::nullopt;
        }
        image[p] = best_w;
    }
    return image;
}

bool is_clifford(const PhaseSpace& space, const Matrix& u, double tol)
{
    return clifford_point_map(space, u, tol).has_value();
}

std::optional<std::vector<std::uint32_t>> phase_point_action(const PhaseSpace& space, const Matrix& u, double tol)
{
    if (!clifford_point_map(space, u, tol)) {
        return std::nullopt;
    }
    std::vector<std::uint32_t> image(space.points());
    for (std::size_t p = 0; p < space.points(); ++p) {
        const Matrix x = space.point_operator(p).times_left(u) * u.adjoint();
        // U A_p U^dagger = A_v exactly when tr[A_v X] = D.
        std::size_t best = 0;
        double best_re = -1.0;
        for (std::size_t v = 0; v < space.points(); ++v) {
            const double re = space.trace_with(v, x).real();
            if (re > best_re) {
                best_re = re;
                best = v;
            }
        }
        if (max_abs(x - space.point_operator(best).dense()) > tol) {
            return std::nullopt;
        }
        image[p] = static_cast<std::uint32_t>(best);
    }
    return image;
}

namespace {

// Phase-insensitive hash key: rotate so the first significant entry is real
// positive, then quantize.
std::string phase_key(const Complex* data, Eigen::Index size)
{
    Complex rot{1.0, 0.0};
    for (Eigen::Index i = 0; i < size; ++i) {
        const double mag = std::abs(data[i]);
        if (mag > 1e-6) {
            rot = std::conj(data[i]) / mag;
            break;
        }
    }
    std::string key(static_cast<std::size_t>(size) * 2 * sizeof(std::int64_t), '\0');
    char* out = key.data();
    for (Eigen::Index i = 0; i < size; ++i) {
        const Complex z = data[i] * rot;
        const std::int64_t q[2] = {std::llround(z.real() * 1e7), std::llround(z.imag() * 1e7)};
        std::memcpy(out, q, sizeof(q));
        out += sizeof(q);
    }
    return key;
}

}  // namespace

std::vector<CliffordElement> clifford_group(const SystemSpec& system, const std::vector<NamedGate>& generators,
                                            std::size_t cap)
{
    const auto space = PhaseSpace::shared(system);
    for (const NamedGate& g : generators) {
        if (!is_clifford(*space, g.matrix)) {
            throw ValidationError("generator " + g.name + " is not a Clifford unitary");
        }
    }
    const auto dim = static_cast<Eigen::Index>(system.dim());
    const double dim_d = static_cast<double>(system.dim());
    std::vector<CliffordElement> group;
    std::unordered_map<std::string, std::size_t> seen;
    group.push_back({Matrix::Identity(dim, dim), {}});
    seen.emplace(phase_key(group[0].matrix.data(), group[0].matrix.size()), 0);

    for (std::size_t head = 0; head < group.size(); ++head) {
        for (const NamedGate& g : generators) {
            Matrix next = g.matrix * group[head].matrix;
            std::string key = phase_key(next.data(), next.size());
            auto it = seen.find(key);
            if (it != seen.end()) {
                if (std::abs(std::abs(hilbert_schmidt(group[it->second].matrix, next)) - dim_d) > 1e-8) {
                    throw NumericalError("phase-insensitive key collision in Clifford enumeration");
                }
                continue;
            }
            if (group.size() >= cap) {
                throw ResourceError("Clifford group of " + system.to_string() + " exceeds the cap of " +
                                    std::to_string(cap) + " elements");
            }
            std::vector<std::string> word = group[head].word;
            word.insert(word.begin(), g.name);
            seen.emplace(std::move(key), group.size());
            group.push_back({std::move(next), std::move(word)});
        }
    }
    return group;
}

std::vector<StabilizerState> enumerate_stabilizer_states(const SystemSpec& system,
                                                         const std::vector<NamedGate>& generators, std::size_t cap)
{
    const auto space = PhaseSpace::shared(system);
    for (const NamedGate& g : generators) {
        if (!is_clifford(*space, g.matrix)) {
            throw ValidationError("generator " + g.name + " is not a Clifford unitary");
        }
    }
    const auto dim = static_cast<Eigen::Index>(system.dim());
    std::vector<Vector> orbit;
    std::unordered_map<std::string, std::size_t> seen;
    Vector zero = Vector::Zero(dim);
    zero(0) = 1.0;
    seen.emplace(phase_key(zero.data(), zero.size()), 0);
    orbit.push_back(std::move(zero));

    for (std::size_t head = 0; head < orbit.size(); ++head) {
        for (const NamedGate& g : generators) {
            Vector next = g.matrix * orbit[head];
            std::string key = phase_key(next.data(), next.size());
            auto it = seen.find(key);
            if (it != seen.end()) {
                if (std::abs(std::abs(orbit[it->second].dot(next)) - 1.0) > 1e-9) {
                    throw NumericalError("phase-insensitive key collision in stabilizer enumeration");
                }
                continue;
            }
            if (orbit.size() >= cap) {
                throw ResourceError("stabilizer states of " + system.to_string() + " exceed the cap of " +
                                    std::to_string(cap));
            }
            seen.emplace(std::move(key), orbit.size());
            orbit.push_back(std::move(next));
        }
    }

    const double weight = 1.0 / static_cast<double>(system.dim());
    const double tol = space->tolerances().structural;
    std::vector<StabilizerState> states;
    states.reserve(orbit.size());
    for (Vector& psi : orbit) {
        const WignerFunction w = wigner_of_state(*space, psi);
        StabilizerState s{std::move(psi), {}};
        for (Eigen::Index i = 0; i < w.values.size(); ++i) {
            const double value = w.values(i);
            if (std::abs(value - weight) <= tol) {
                s.support.push_back(static_cast<std::uint32_t>(i));
            } else if (std::abs(value) > tol) {
                throw NumericalError("enumerated state has a Wigner value outside {0, 1/D}");
            }
        }
        if (s.support.size() != system.dim()) {
            throw NumericalError("enumerated state has a support of size " + std::to_string(s.support.size()));
        }
        states.push_back(std::move(s));
    }
    return states;
}

std::vector<StabilizerState> enumerate_stabilizer_states(const SystemSpec& system)
{
    return enumerate_stabilizer_states(system, default_generators(system));
}

bool is_stabilizer_state(const PhaseSpace& space, const Vector& psi)
{
    if (psi.size() != static_cast<Eigen::Index>(space.dim())) {
        throw DomainError("state dimension does not match " + space.system().to_string());
    }
    const double norm = psi.norm();
    if (std::abs(norm - 1.0) > 1e-9) {
        throw ValidationError("state is not normalized: |psi| = " + std::to_string(norm));
    }
    const WignerFunction w = wigner_of_state(space, psi);
    const double tol = space.tolerances().structural;
    const double weight = 1.0 / static_cast<double>(space.dim());
    bool positive = true;
    bool uniform = true;
    std::size_t hits = 0;
    for (Eigen::Index i = 0; i < w.values.size(); ++i) {
        const double value = w.values(i);
        positive = positive && value >= -tol;
        if (std::abs(value - weight) <= tol) {
            ++hits;
        } else if (std::abs(value) > tol) {
            uniform = false;
        }
    }
    uniform = uniform && hits == space.dim();
    if (positive != uniform) {
        throw NumericalError("Wigner positivity and uniform-support checks disagree");
    }
    return positive;
}

}  // namespace wdfe
