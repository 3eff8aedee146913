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
#include "wdfe/stabilizer.hpp"
#include "wdfe/system.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace wdfe {

using Json = nlohmann::json;

/// Contents of an operator file:
///   {"d":3,"n":1,"kind":"state_vector"|"density"|"kraus","data":...}
/// with complex entries as [re, im] pairs, matrices row-major.
struct OperatorData {
    SystemSpec system;
    std::string kind;
    Vector state;
    Matrix density;
    std::vector<Matrix> kraus;
};

/// ValidationError on malformed content.
OperatorData parse_operator(const Json& j);
OperatorData read_operator_file(const std::string& path);

Json state_to_json(const SystemSpec& system, const Vector& psi);
Json density_to_json(const SystemSpec& system, const Matrix& rho);
Json kraus_to_json(const SystemSpec& system, const std::vector<Matrix>& kraus);

/// Generators from a "kraus"-kind file; names are G0, G1, ...
std::vector<NamedGate> read_generators(const std::string& path);

/// {"d":..,"n":..,"states":[{"vector":[[re,im],...],"support":[...]}, ...]}
Json stabilizer_states_to_json(const SystemSpec& system, const std::vector<StabilizerState>& states);

/// IoError with the path on failure; ValidationError on bad JSON.
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// 12 significant digits, '.' separator, shortest form.
std::string format_number(double value);
/// The value after a round trip through format_number, for JSON emission.
double rounded_number(double value);

/// flat_index,coords,value
std::string wigner_csv(const WignerFunction& w);
/// Channel rows use flat index v * P + u and coords "v|u".
std::string wigner_csv(const ChannelWigner& cw);

}  // namespace wdfe
