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

#ifndef MUX_MONTECARLO_SIMULATOR_HPP
#define MUX_MONTECARLO_SIMULATOR_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "mux/analytic/array_model.hpp"
#include "mux/fock/detector.hpp"
#include "mux/montecarlo/tally.hpp"

namespace mux::montecarlo {

/// Everything the pulse-level simulation needs on top of the array model.
///
/// Per-source vectors, when non-empty, must have exactly m entries and
/// override the array-wide `trigger_coupling` / `array.output_coupling`.
struct SimulationConfig {
    analytic::ArrayConfig array;
    analytic::RouterScheme scheme = analytic::RouterScheme::Hybrid;
    double trigger_coupling = 1.0;
    std::vector<double> source_trigger_coupling;
    std::vector<double> source_output_coupling;
    fock::DetectorModel analysis_detector = fock::DetectorModel::bucket(1.0);
    /// Per trigger detector per pulse.
    double dark_count_probability = 0.0;
    /// Pulses a trigger detector stays blind after it fires.
    int trigger_dead_pulses = 0;

    void validate() const;
    double trigger_efficiency(int source) const;
    /// Per-photon probability of reaching the analysis splitter from `source`.
    double output_efficiency(int source) const;
};

struct PulseOutcome {
    std::vector<int> pairs_per_source;
    /// Lowest-index source whose trigger fired.
    std::optional<int> winning_source;
    int photons_at_output = 0;
    bool trigger_fired = false;
    bool transmitted_click = false;
    bool reflected_click = false;
};

/// Samples one pulse at a time. Holds the detector dead-time state, so a
/// sampler instance follows one pulse sequence.
class PulseSampler {
   public:
    explicit PulseSampler(const SimulationConfig &config);

    PulseOutcome sample(std::mt19937_64 &rng);
    void accumulate(const PulseOutcome &pulse, CoincidenceTally &tally) const;

   private:
    int draw_pairs(double u) const;

    SimulationConfig config_;
    std::vector<double> pair_cdf_;
    std::vector<double> trigger_efficiency_;
    std::vector<double> output_efficiency_;
    std::vector<int> dead_remaining_;
};

/// Pulses per RNG stream. Streams are keyed by (seed, batch index) and the
/// batch layout depends only on the pulse count, so results do not depend on
/// the number of worker threads.
inline constexpr std::uint64_t kPulsesPerBatch = std::uint64_t{1} << 16;

/// Deterministic generator for stream `stream` of `seed`.
std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream);
double uniform01(std::mt19937_64 &rng);

/// `threads` = 0 picks the hardware concurrency.
CoincidenceTally simulate_pulses(const SimulationConfig &config, std::uint64_t num_pulses, std::uint64_t seed,
                                 unsigned threads = 0);

}  // namespace mux::montecarlo

#endif
