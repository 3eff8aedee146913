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

#include "wdfe/io.hpp"

#include "wdfe/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace wdfe {
namespace {

Complex parse_complex(const Json& j)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ValidationError("complex entries must be [re, im] pairs");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

Json complex_json(Complex z) { return Json::array({rounded_number(z.real()), rounded_number(z.imag())}); }

Matrix parse_matrix(const Json& j, Eigen::Index dim)
{
    if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != dim) {
        throw ValidationError("matrix must have " + std::to_string(dim) + " rows");
    }
    Matrix m(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        const Json& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
            throw ValidationError("matrix row " + std::to_string(r) + " must have " + std::to_string(dim) +
                                  " entries");
        }
        for (Eigen::Index c = 0; c < dim; ++c) {
            m(r, c) = parse_complex(row[static_cast<std::size_t>(c)]);
        }
    }
    return m;
}

Json matrix_json(const Matrix& m)
{
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back(complex_json(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json vector_json(const Vector& v)
{
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out.push_back(complex_json(v(i)));
    }
    return out;
}

Json header(const SystemSpec& system, const char* kind)
{
    return Json{{"d", system.d()}, {"n", system.n()}, {"kind", kind}};
}

}  // namespace

OperatorData parse_operator(const Json& j)
{
    if (!j.is_object() || !j.contains("d") || !j.contains("n") || !j.contains("kind") || !j.contains("data")) {
        throw ValidationError("operator JSON needs d, n, kind and data");
    }
    OperatorData out{SystemSpec(j.at("d").get<int>(), j.at("n").get<int>()), j.at("kind").get<std::string>(), {}, {},
                     {}};
    const auto dim = static_cast<Eigen::Index>(out.system.dim());
    const Json& data = j.at("data");
    if (out.kind == "state_vector") {
        if (!data.is_array() || static_cast<Eigen::Index>(data.size()) != dim) {
            throw ValidationError("state_vector data must have " + std::to_string(dim) + " entries");
        }
        out.state.resize(dim);
        for (Eigen::Index i = 0; i < dim; ++i) {
            out.state(i) = parse_complex(data[static_cast<std::size_t>(i)]);
        }
    } else if (out.kind == "density") {
        out.density = parse_matrix(data, dim);
    } else if (out.kind == "kraus") {
        if (!data.is_array() || data.empty()) {
            throw ValidationError("kraus data must be a non-empty array of matrices");
        }
        for (const Json& m : data) {
            out.kraus.push_back(parse_matrix(m, dim));
        }
    } else {
        throw ValidationError("unknown operator kind '" + out.kind + "'");
    }
    return out;
}

OperatorData read_operator_file(const std::string& path)
{
    try {
        return parse_operator(read_json_file(path));
    } catch (const Json::exception& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

Json state_to_json(const SystemSpec& system, const Vector& psi)
{
    Json j = header(system, "state_vector");
    j["data"] = vector_json(psi);
    return j;
}

Json density_to_json(const SystemSpec& system, const Matrix& rho)
{
    Json j = header(system, "density");
    j["data"] = matrix_json(rho);
    return j;
}

Json kraus_to_json(const SystemSpec& system, const std::vector<Matrix>& kraus)
{
    Json j = header(system, "kraus");
    j["data"] = Json::array();
    for (const Matrix& k : kraus) {
        j["data"].push_back(matrix_json(k));
    }
    return j;
}

std::vector<NamedGate> read_generators(const std::string& path)
{
    const OperatorData data = read_operator_file(path);
    if (data.kind != "kraus") {
        throw ValidationError(path + ": generator files use kind \"kraus\"");
    }
    std::vector<NamedGate> gens;
    for (std::size_t i = 0; i < data.kraus.size(); ++i) {
        gens.push_back({"G" + std::to_string(i), data.kraus[i]});
    }
    return gens;
}

Json stabilizer_states_to_json(const SystemSpec& system, const std::vector<StabilizerState>& states)
{
    Json list = Json::array();
    for (const StabilizerState& s : states) {
        list.push_back(Json{{"vector", vector_json(s.vector)}, {"support", s.support}});
    }
    return Json{{"d", system.d()}, {"n", system.n()}, {"states", std::move(list)}};
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path);
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path + " for writing");
    }
    out << content;
    out.flush();
    if (!out) {
        throw IoError("write to " + path + " failed");
    }
}

std::string format_number(double value)
{
    if (value == 0.0) {
        return "0";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

double rounded_number(double value)
{
    const std::string s = format_number(value);
    double out = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), out);
    return out;
}

std::string wigner_csv(const WignerFunction& w)
{
    std::ostringstream out;
    out << "flat_index,coords,value\n";
    for (Eigen::Index i = 0; i < w.values.size(); ++i) {
        out << i << ',' << format_coords(phase_point(w.system, static_cast<std::size_t>(i))) << ','
            << format_number(w.values(i)) << '\n';
    }
    return out.str();
}

std::string wigner_csv(const ChannelWigner& cw)
{
    std::ostringstream out;
    out << "flat_index,coords,value\n";
    const auto p = cw.values.rows();
    for (Eigen::Index v = 0; v < p; ++v) {
        const std::string vc = format_coords(phase_point(cw.system, static_cast<std::size_t>(v)));
        for (Eigen::Index u = 0; u < p; ++u) {
            out << v * p + u << ',' << vc << '|' << format_coords(phase_point(cw.system, static_cast<std::size_t>(u)))
                << ',' << format_number(cw.values(v, u)) << '\n';
        }
    }
    return out.str();
}

}  // namespace wdfe
