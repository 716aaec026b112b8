// Copyright 2026 The holocomp Authors
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

// holocomp: build composite holonomic gates, check holonomy conditions, run
// error sweeps and DFS dephasing experiments from a JSON config.
//
//   holocomp gate           --config run.json --out results/
//   holocomp sweep          --config run.json --out results/
//   holocomp check-holonomy --config run.json --tolerance 1e-8
//   holocomp dfs            --config run.json --seed 42
//
// Exit codes: 0 success, 2 config/validation error, 3 numerical failure.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "holocomp/cli.hpp"

namespace {

struct Flags {
    std::string config_path;
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed;
    std::optional<double> tolerance;
};

void add_common_flags(CLI::App* sub, Flags& flags) {
    sub->add_option("--config", flags.config_path, "JSON run configuration")->check(CLI::ExistingFile);
    sub->add_option("--out", flags.out_dir, "output directory for the result record and CSV");
    sub->add_option("--seed", flags.seed, "random seed for Monte-Carlo dephasing runs");
    sub->add_option("--tolerance", flags.tolerance, "tolerance override (gate match and holonomy checks)");
}

}  // namespace

int main(int argc, char** argv) {
    using namespace holocomp;
    CLI::App app{"Composite nonadiabatic holonomic gate simulator"};
    app.require_subcommand(1);
    Flags flags;
    for (const char* name : {"gate", "sweep", "check-holonomy", "dfs"}) {
        auto* sub = app.add_subcommand(name);
        add_common_flags(sub, flags);
    }
    app.get_subcommand("gate")->description("Build an ideal (and optionally error-affected) gate");
    app.get_subcommand("sweep")->description("Sweep error magnitude and fit the infidelity scaling order");
    app.get_subcommand("check-holonomy")->description("Verify the holonomy conditions for a pulse schedule");
    app.get_subcommand("dfs")->description("Logical composite gates under collective dephasing");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::kConfigError;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        cli::RunConfig config = flags.config_path.empty() ? cli::RunConfig{} : cli::load_config(flags.config_path);
        if (flags.seed) config.dfs.seed = *flags.seed;
        if (flags.tolerance) {
            config.tolerance = *flags.tolerance;
            config.holonomy.tolerance = *flags.tolerance;
        }
        const auto result = cli::run_command(command, config);
        cli::write_outputs(command, result, flags.out_dir);
        std::cout << result.record.outputs().dump(2) << "\n";
        return cli::kSuccess;
    } catch (const InvalidArgument& e) {
        std::cerr << "holocomp " << command << ": invalid configuration: " << e.what() << "\n";
        return cli::kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "holocomp " << command << ": numerical failure: " << e.what() << "\n";
        return cli::kNumericalError;
    }
}
