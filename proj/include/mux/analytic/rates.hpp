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

#ifndef MUX_ANALYTIC_RATES_HPP
#define MUX_ANALYTIC_RATES_HPP

#include <string_view>

namespace mux::analytic {

/// Switching-cycle durations of a feed-forward router, in seconds.
struct RateBudget {
    double rise_time = 0;
    double fall_time = 0;
    double recharge_time = 0;
    double cable_delay = 0;
    double trigger_dead_time = 0;
};

enum class RateLimit { Router, Detector };

std::string_view to_string(RateLimit limit);

struct RateReport {
    /// 1 / (rise + fall + recharge + cable); +inf when the cycle is zero.
    double router_limited_hz;
    /// detectors / dead_time; +inf when there is no dead time.
    double detector_limited_hz;
    RateLimit binding;

    double max_rate_hz() const { return binding == RateLimit::Router ? router_limited_hz : detector_limited_hz; }
};

/// Throws InvalidArgument on negative durations and when every duration is
/// zero (the rate would be unbounded).
RateReport max_repetition_rate(const RateBudget &budget, int trigger_detectors_per_source = 1);

}  // namespace mux::analytic

#endif
