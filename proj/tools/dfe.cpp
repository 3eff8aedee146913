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

// dfe: run direct fidelity estimation trials and parameter sweeps.

#include "cli_common.hpp"

#include "wdfe/harness.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"Direct fidelity estimation through discrete Wigner functions"};
    app.require_subcommand(1);

    std::string config;
    std::string out;
    std::string format = "csv";
    unsigned workers = wdfe::cli::default_workers();

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config, "Experiment JSON")->required()->check(CLI::ExistingFile);
        sub->add_option("--out", out, "Output path")->required();
        sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
    };
    CLI::App* run = app.add_subcommand("run", "Run independent trials of one experiment");
    add_common(run);
    CLI::App* sweep = app.add_subcommand("sweep", "Sweep one parameter and aggregate per point");
    add_common(sweep);

    CLI11_PARSE(app, argc, argv);

    return wdfe::cli::guarded_main([&] {
        const wdfe::Json j = wdfe::read_json_file(config);
        const wdfe::OutputFormat fmt = wdfe::parse_output_format(format);
        if (run->parsed()) {
            const wdfe::Experiment e = wdfe::parse_experiment(j);
            const auto rows = wdfe::run_trials(e, workers);
            wdfe::emit(rows, wdfe::experiment_to_json(e), fmt, out);
        } else {
            const wdfe::SweepSpec s = wdfe::parse_sweep(j);
            const auto rows = wdfe::run_sweep(s, workers);
            wdfe::emit(rows, wdfe::sweep_to_json(s), fmt, out);
        }
    });
}
