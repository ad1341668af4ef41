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


#ifndef MUX_SCENARIO_BUILTINS_HPP
#define MUX_SCENARIO_BUILTINS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mux/scenario/scenario.hpp"

namespace mux::scenario {

struct BuiltinScenario {
    std::string_view name;
    std::string_view description;
    /// Scenario file text.
    std::string_view source;
};

/// Alphabetical.
const std::vector<BuiltinScenario> &builtin_scenarios();

std::optional<Scenario> find_builtin(std::string_view name);

/// One line per built-in: name, padding, description.
std::string list_scenarios();

}  // namespace mux::scenario

#endif
