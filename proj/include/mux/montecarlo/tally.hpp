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

#ifndef MUX_MONTECARLO_TALLY_HPP
#define MUX_MONTECARLO_TALLY_HPP

#include <cstdint>

namespace mux::montecarlo {

/// Counters of a trigger + 50:50 analysis splitter measurement.
///   triggers      N_t    pulses on which the array heralded
///   transmitted   N_tT   trigger AND transmitted-arm click
///   reflected     N_tR   trigger AND reflected-arm click
///   both          N_tTR  trigger AND both arms
struct CoincidenceTally {
    std::uint64_t pulses = 0;
    std::uint64_t triggers = 0;
    std::uint64_t transmitted = 0;
    std::uint64_t reflected = 0;
    std::uint64_t both = 0;

    CoincidenceTally &operator+=(const CoincidenceTally &other);
    friend bool operator==(const CoincidenceTally &, const CoincidenceTally &) = default;

    /// N_tTR <= min(N_tT, N_tR) <= max(N_tT, N_tR) <= N_t <= pulses.
    bool is_consistent() const;

    /// Trigger-output twofold coincidences, N_tT + N_tR - N_tTR.
    std::uint64_t output_counts() const { return transmitted + reflected - both; }
};

struct G2Estimate {
    double value;
    double std_error;
};

/// g2(0) = N_tTR N_t / (N_tT N_tR).
///
/// The standard error propagates independent binomial errors of the four
/// counters (relative variance (1 - c/pulses) / c each). When N_tTR = 0 the
/// error is that of a single count. Throws UndefinedCorrelation when either
/// analysis arm is empty.
G2Estimate estimate_g2(const CoincidenceTally &tally);

/// Trigger-output coincidences per pulse; 0 for an empty tally.
double heralding_output_probability(const CoincidenceTally &tally);
double heralding_output_std_error(const CoincidenceTally &tally);

}  // namespace mux::montecarlo

#endif
