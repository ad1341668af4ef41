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


#ifndef MUX_SCENARIO_RUNNER_HPP
#define MUX_SCENARIO_RUNNER_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "mux/analytic/array_model.hpp"
#include "mux/analytic/rates.hpp"
#include "mux/montecarlo/hom.hpp"
#include "mux/montecarlo/simulator.hpp"
#include "mux/scenario/csv.hpp"
#include "mux/scenario/scenario.hpp"

namespace mux::scenario {

struct RunOptions {
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> pulses;
    std::optional<int> cutoff;
    /// Overrides the scenario's own output path.
    std::optional<std::filesystem::path> output;
    /// Where `<name>.csv` goes when neither the options nor the scenario name a path.
    std::filesystem::path output_dir = ".";
    /// 0 picks the hardware concurrency.
    unsigned threads = 0;
};

struct RunResult {
    std::filesystem::path output;
    std::size_t rows = 0;
    double seconds = 0.0;
};

analytic::ArrayConfig array_config(const ParameterSet &params);
montecarlo::SimulationConfig simulation_config(const ParameterSet &params);
analytic::RateBudget rate_budget(const ParameterSet &params);
montecarlo::HomSettings hom_settings(const ParameterSet &params);

/// Seed for row `row` of a Monte Carlo scenario.
std::uint64_t row_seed(std::uint64_t seed, std::size_t row);

Scenario with_overrides(Scenario scenario, const RunOptions &options);

/// Throws ScenarioError on the first problem; nothing is computed.
void validate(const Scenario &scenario);

/// Validates, then computes every row.
Table compute_table(const Scenario &scenario, unsigned threads = 0);

std::filesystem::path output_path_for(const Scenario &scenario, const RunOptions &options);

/// Applies the overrides, validates, computes and writes the CSV.
RunResult run_scenario(const Scenario &scenario, const RunOptions &options);

std::string summary_line(const Scenario &scenario, const RunResult &result);

}  // namespace mux::scenario

#endif
