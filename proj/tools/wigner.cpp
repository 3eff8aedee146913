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

// wigner: dump the discrete Wigner function of a state or channel as CSV.

#include "cli_common.hpp"

#include "wdfe/harness.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    CLI::App app{"Discrete Wigner functions of qudit states and channels"};
    app.require_subcommand(1);

    std::string config;
    std::string out;
    CLI::App* dump = app.add_subcommand("dump", "Write flat_index,coords,value rows");
    dump->add_option("--config", config, "Analysis JSON")->required()->check(CLI::ExistingFile);
    dump->add_option("--out", out, "Output CSV (stdout when omitted)");

    CLI11_PARSE(app, argc, argv);

    return wdfe::cli::guarded_main([&] {
        const wdfe::AnalysisInput in = wdfe::parse_analysis(wdfe::read_json_file(config));
        const auto space = wdfe::PhaseSpace::shared(in.system);
        const std::string csv = in.is_channel ? wdfe::wigner_csv(wdfe::wigner_of_channel(*space, *in.channel))
                                              : wdfe::wigner_csv(wdfe::wigner_of_operator(*space, in.rho));
        if (out.empty()) {
            std::cout << csv;
        } else {
            wdfe::write_text_file(out, csv);
        }
    });
}
