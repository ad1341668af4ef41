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


#ifndef MUX_SCENARIO_SCENARIO_HPP
#define MUX_SCENARIO_SCENARIO_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mux/errors.hpp"

namespace mux::scenario {

enum class Engine { Analytic, Fock, MonteCarlo };
enum class Kind { Gain, Rates, Heralding, Tally, Hom };

std::string_view to_string(Engine engine);
std::string_view to_string(Kind kind);
Engine engine_for(Kind kind);

class ScenarioError : public InvalidArgument {
   public:
    using InvalidArgument::InvalidArgument;
};

enum class ValueType { Real, Integer, Choice, RealList, ChoiceList };

struct ParameterInfo {
    std::string_view key;
    ValueType type;
    std::string_view default_value;
    /// Bit i set when the parameter applies to Kind(i).
    unsigned kinds;
    std::vector<std::string_view> choices;
    std::string_view description;

    bool applies_to(Kind kind) const { return (kinds >> static_cast<unsigned>(kind)) & 1u; }
};

/// In display order.
const std::vector<ParameterInfo> &parameter_registry();
const ParameterInfo *find_parameter(std::string_view key);

struct Sweep {
    std::string parameter;
    std::vector<double> values;
};

struct Scenario {
    std::string name;
    Engine engine = Engine::Analytic;
    Kind kind = Kind::Gain;
    std::string description;
    /// Outermost first.
    std::vector<Sweep> sweeps;
    std::map<std::string, std::string> fixed;
    std::string output_path;
    std::uint64_t seed = 1;
    std::uint64_t pulses = 1'000'000;
    bool seed_set = false;
    bool pulses_set = false;
};

/// "start:stop:step" or a comma-separated list. Empty text gives an empty grid.
std::vector<double> parse_grid(std::string_view text);

/// Flat `key = value` lines; `#` starts a comment line.
Scenario parse_scenario(std::string_view text);
Scenario load_scenario_file(const std::filesystem::path &path);

/// Parameter values for one point of the sweep grid.
class ParameterSet {
   public:
    void set(std::string_view key, std::string value);
    const std::string &text(std::string_view key) const;
    double real(std::string_view key) const;
    int integer(std::string_view key) const;
    std::vector<double> real_list(std::string_view key) const;
    std::vector<std::string> choice_list(std::string_view key) const;

   private:
    std::map<std::string, std::string, std::less<>> values_;
};

/// Defaults for the scenario kind, then fixed values, then the sweep point.
ParameterSet resolve(const Scenario &scenario, const std::vector<double> &point);

/// Every point of the sweep grid, outermost parameter varying slowest.
std::vector<std::vector<double>> grid_points(const Scenario &scenario);

std::string format_number(double value);

}  // namespace mux::scenario

#endif
