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

// stabilizer: enumerate stabilizer states and export them as JSON.

#include "cli_common.hpp"

#include "wdfe/stabilizer.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    CLI::App app{"Stabilizer states of odd-prime qudit systems"};
    app.require_subcommand(1);

    int d = 3;
    int n = 1;
    std::string generators;
    std::string out;
    CLI::App* list = app.add_subcommand("enumerate", "Enumerate the orbit of |0...0> under Clifford generators");
    list->add_option("--d", d, "Qudit dimension (odd prime)")->required();
    list->add_option("--n", n, "Number of qudits")->required();
    list->add_option("--generators", generators, "Kraus-format generator file (default set when omitted)")
        ->check(CLI::ExistingFile);
    list->add_option("--out", out, "Output JSON (stdout when omitted)");

    CLI11_PARSE(app, argc, argv);

    return wdfe::cli::guarded_main([&] {
        const wdfe::SystemSpec system(d, n);
        const auto gens = generators.empty() ? wdfe::default_generators(system) : wdfe::read_generators(generators);
        const auto states = wdfe::enumerate_stabilizer_states(system, gens);
        const std::string text = wdfe::stabilizer_states_to_json(system, states).dump(2) + "\n";
        if (out.empty()) {
            std::cout << text;
        } else {
            wdfe::write_text_file(out, text);
        }
    });
}
