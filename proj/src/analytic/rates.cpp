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

#include "mux/analytic/rates.hpp"

#include <limits>

#include "mux/errors.hpp"

namespace mux::analytic {

std::string_view to_string(RateLimit limit) { return limit == RateLimit::Router ? "router" : "detector"; }

RateReport max_repetition_rate(const RateBudget &budget, int trigger_detectors_per_source) {
    for (double d : {budget.rise_time, budget.fall_time, budget.recharge_time, budget.cable_delay,
                     budget.trigger_dead_time}) {
        require(d >= 0.0, "rate budget durations must be >= 0");
    }
    require(trigger_detectors_per_source >= 1, "need at least one trigger detector per source");
    const double cycle = budget.rise_time + budget.fall_time + budget.recharge_time + budget.cable_delay;
    if (cycle == 0.0 && budget.trigger_dead_time == 0.0) {
        throw InvalidArgument("all-zero rate budget: repetition rate is unbounded");
    }
    constexpr double inf = std::numeric_limits<double>::infinity();
    RateReport report{};
    report.router_limited_hz = cycle > 0.0 ? 1.0 / cycle : inf;
    report.detector_limited_hz =
        budget.trigger_dead_time > 0.0 ? trigger_detectors_per_source / budget.trigger_dead_time : inf;
    report.binding = report.router_limited_hz <= report.detector_limited_hz ? RateLimit::Router : RateLimit::Detector;
    return report;
}

}  // namespace mux::analytic
