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


#include "mux/scenario/builtins.hpp"

#include <algorithm>

namespace mux::scenario {

namespace {

constexpr std::string_view kFig1c = R"(name = fig1c
kind = gain
description = gain versus number of sources at mean 0.1, with lossy routers
dist.kind = poisson
dist.mean = 0.1
router.t0 = 0.95
router.t_pol = 0.97
sweep.param = array.m
sweep.values = 1:30:1
)";

constexpr std::string_view kFig1d = R"(name = fig1d
kind = gain
description = gain over mean pair number and number of sources
dist.kind = poisson
sweep.param = dist.mean
sweep.values = 0.02:1:0.02
sweep.inner.param = array.m
sweep.inner.values = 1:10:1
)";

// Couplings chosen so the overall detection efficiency is about 0.1.
constexpr std::string_view kFig3 = R"(name = fig3
kind = tally
description = sampled g2 and output counts for 1, 2 and 4 sources
seed = 12345
pulses = 10000000
dist.kind = poisson
array.scheme = hybrid
trigger.coupling = 0.13
trigger.efficiency = 0.6
output.coupling = 0.1
analysis.efficiency = 1
sweep.param = dist.mean
sweep.values = 0.0062, 0.0155, 0.031, 0.062
sweep.inner.param = array.m
sweep.inner.values = 1, 2, 4
)";

constexpr std::string_view kFig4 = R"(name = fig4
kind = heralding
description = exact output probability and g2 of three heralding schemes
fock.cutoff = 4
fock.scheme = bucket60_1spdc, pnrd95_1spdc, bucket60_4spdc_t95
sweep.param = fock.epsilon
sweep.values = 0.01:0.5:0.01
)";

// Peak overlap 0.942 gives a dip visibility of 0.887.
constexpr std::string_view kHom = R"(name = hom
kind = hom
description = two-photon interference through the router at phase 0 and pi/2
seed = 7
pulses = 1000000
router.visibility = 0.95
hom.coherence = 1e-12
hom.overlap = 0.942
sweep.param = hom.phase
sweep.values = 0, 1.5707963267948966
sweep.inner.param = hom.delay
sweep.inner.values = -3e-12:3e-12:0.25e-12
)";

constexpr std::string_view kRates = R"(name = rates
kind = rates
description = maximum repetition rate versus driver recharge time
rate.rise = 5.6e-9
rate.fall = 5.6e-9
rate.cable = 5.5e-9
rate.dead_time = 0
sweep.param = rate.recharge
sweep.values = 10e-9:100e-9:5e-9
)";

}  // namespace

const std::vector<BuiltinScenario> &builtin_scenarios() {
    static const std::vector<BuiltinScenario> builtins{
        {"fig1c", "gain versus number of sources, lossless and lossy routers", kFig1c},
        {"fig1d", "gain over mean pair number and number of sources", kFig1d},
        {"fig3", "Monte Carlo counts and g2 for 1, 2 and 4 sources", kFig3},
        {"fig4", "exact g2 versus output probability for three heralding schemes", kFig4},
        {"hom", "Monte Carlo two-photon interference scan through the router", kHom},
        {"rates", "repetition-rate budget of the router driver", kRates},
    };
    return builtins;
}

std::optional<Scenario> find_builtin(std::string_view name) {
    for (const auto &b : builtin_scenarios()) {
        if (b.name == name) return parse_scenario(b.source);
    }
    return std::nullopt;
}

std::string list_scenarios() {
    std::string out;
    for (const auto &b : builtin_scenarios()) {
        std::string line(b.name);
        line.resize(std::max<std::size_t>(line.size() + 2, 8), ' ');
        out += "  " + line + std::string(b.description) + "\n";
    }
    return out;
}

}  // namespace mux::scenario
