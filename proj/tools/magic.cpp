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

// magic: mana and Wigner rank of a state or channel, printed as JSON.

#include "cli_common.hpp"

#include "wdfe/harness.hpp"
#include "wdfe/magic.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    CLI::App app{"Magic measures from discrete Wigner functions"};
    app.require_subcommand(1);

    std::string config;
    std::string out;
    CLI::App* report = app.add_subcommand("report", "Print mana, Wigner rank and support size");
    report->add_option("--config", config, "Analysis JSON")->required()->check(CLI::ExistingFile);
    report->add_option("--out", out, "Output JSON (stdout when omitted)");

    CLI11_PARSE(app, argc, argv);

    return wdfe::cli::guarded_main([&] {
        using wdfe::Json;
        const wdfe::AnalysisInput in = wdfe::parse_analysis(wdfe::read_json_file(config));
        const auto space = wdfe::PhaseSpace::shared(in.system);
        Json j;
        if (in.is_channel) {
            const wdfe::ChannelWigner cw = wdfe::wigner_of_channel(*space, *in.channel);
            j["mana"] = wdfe::rounded_number(wdfe::mana_channel(cw));
            const auto& k = in.channel->kraus_operators();
            if (k.size() == 1) {
                const wdfe::MagicReport r = wdfe::wigner_rank_channel(cw, in.threshold);
                j["wigner_rank"] = r.wigner_rank;
                j["log_wigner_rank"] = wdfe::rounded_number(r.log_wigner_rank);
                j["support_size"] = r.support.size();
                j["unstable"] = r.unstable;
            }
        } else {
            const wdfe::WignerFunction w = wdfe::wigner_of_operator(*space, in.rho);
            j["mana"] = wdfe::rounded_number(wdfe::mana_state(w));
            if (in.psi) {
                const wdfe::MagicReport r = wdfe::wigner_rank_state(w, in.threshold);
                j["wigner_rank"] = r.wigner_rank;
                j["log_wigner_rank"] = wdfe::rounded_number(r.log_wigner_rank);
                j["support_size"] = r.support.size();
                j["unstable"] = r.unstable;
            }
        }
        // Wigner rank is defined for pure states and unitary channels only.
        for (const char* key : {"wigner_rank", "log_wigner_rank", "support_size"}) {
            if (!j.contains(key)) {
                j[key] = nullptr;
            }
        }
        j["threshold"] = wdfe::rounded_number(in.threshold);
        const std::string text = j.dump(2) + "\n";
        if (out.empty()) {
            std::cout << text;
        } else {
            wdfe::write_text_file(out, text);
        }
    });
}
