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

#include "mux/montecarlo/tally.hpp"

#include <algorithm>
#include <cmath>

#include "mux/errors.hpp"

namespace mux::montecarlo {

namespace {

double relative_variance(std::uint64_t count, std::uint64_t pulses) {
    const double c = static_cast<double>(count);
    const double p = static_cast<double>(pulses);
    return (1.0 - c / p) / c;
}

}  // namespace

CoincidenceTally &CoincidenceTally::operator+=(const CoincidenceTally &other) {
    pulses += other.pulses;
    triggers += other.triggers;
    transmitted += other.transmitted;
    reflected += other.reflected;
    both += other.both;
    return *this;
}

bool CoincidenceTally::is_consistent() const {
    return both <= std::min(transmitted, reflected) && std::max(transmitted, reflected) <= triggers &&
           triggers <= pulses;
}

G2Estimate estimate_g2(const CoincidenceTally &tally) {
    if (tally.transmitted == 0 || tally.reflected == 0) {
        throw UndefinedCorrelation("g2 estimate needs counts in both analysis arms");
    }
    const double nt = static_cast<double>(tally.triggers);
    const double nt_t = static_cast<double>(tally.transmitted);
    const double nt_r = static_cast<double>(tally.reflected);
    const double value = static_cast<double>(tally.both) * nt / (nt_t * nt_r);
    double rel_var = relative_variance(tally.triggers, tally.pulses) + relative_variance(tally.transmitted, tally.pulses) +
                     relative_variance(tally.reflected, tally.pulses);
    if (tally.both == 0) {
        return {0.0, nt / (nt_t * nt_r) * std::sqrt(1.0 + rel_var)};
    }
    rel_var += relative_variance(tally.both, tally.pulses);
    return {value, value * std::sqrt(rel_var)};
}

double heralding_output_probability(const CoincidenceTally &tally) {
    if (tally.pulses == 0) {
        return 0.0;
    }
    return static_cast<double>(tally.output_counts()) / static_cast<double>(tally.pulses);
}

double heralding_output_std_error(const CoincidenceTally &tally) {
    if (tally.pulses == 0) {
        return 0.0;
    }
    const double p = heralding_output_probability(tally);
    return std::sqrt(std::max(p * (1.0 - p), 1.0 / static_cast<double>(tally.pulses)) / static_cast<double>(tally.pulses));
}

}  // namespace mux::montecarlo
