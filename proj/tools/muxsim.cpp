// Copyright 2026 The muxsim Authors
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


#include <cstdlib>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "mux/scenario/builtins.hpp"
#include "mux/scenario/runner.hpp"

namespace {

using namespace mux::scenario;

std::string usage(const CLI::App &app) {
    return app.help() + "\nBuilt-in scenarios:\n" + list_scenarios();
}

Scenario load(const std::string &target) {
    if (std::filesystem::is_regular_file(target)) return load_scenario_file(target);
    if (auto builtin = find_builtin(target)) return *builtin;
    throw ScenarioError("no scenario file or built-in named '" + target + "'");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Multiplexed heralded single-photon source simulator."};
    app.name("muxsim");

    auto *list = app.add_subcommand("list", "List the built-in scenarios.");

    auto *run = app.add_subcommand("run", "Run a scenario file or built-in scenario and write a CSV.");
    std::string target;
    std::optional<std::uint64_t> seed, pulses;
    std::optional<int> cutoff;
    std::optional<std::string> out;
    unsigned threads = 0;
    run->add_option("scenario", target, "Scenario file or built-in name")->required();
    run->add_option("--seed", seed, "Random seed (Monte Carlo scenarios)");
    run->add_option("--pulses", pulses, "Pulses per row (Monte Carlo scenarios)")->check(CLI::PositiveNumber);
    run->add_option("--out", out, "Output CSV path");
    run->add_option("--cutoff", cutoff, "Photon-number cutoff (heralding scenarios)")->check(CLI::PositiveNumber);
    run->add_option("--threads", threads, "Worker threads, 0 for all cores");
    app.footer("Output goes to $MUXSIM_OUTPUT_DIR/<name>.csv unless --out is given.");

    if (argc <= 1) {
        std::cout << usage(app);
        return 0;
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e);
    }

    if (*list) {
        std::cout << list_scenarios();
        return 0;
    }
    if (!*run) {
        std::cout << usage(app);
        return 0;
    }

    try {
        RunOptions options;
        options.seed = seed;
        options.pulses = pulses;
        options.cutoff = cutoff;
        if (out) options.output = *out;
        if (const char *dir = std::getenv("MUXSIM_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
            options.output_dir = dir;
        }
        options.threads = threads;
        const auto scenario = with_overrides(load(target), options);
        const auto result = run_scenario(scenario, options);
        std::cout << summary_line(scenario, result) << "\n";
    } catch (const std::exception &e) {
        std::cerr << "muxsim: error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
