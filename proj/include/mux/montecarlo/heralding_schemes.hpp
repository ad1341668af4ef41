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

#ifndef MUX_MONTECARLO_HERALDING_SCHEMES_HPP
#define MUX_MONTECARLO_HERALDING_SCHEMES_HPP

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mux/fock/detector.hpp"

namespace mux::montecarlo {

/// Heralded-source configurations compared in exact Fock-space arithmetic.
/// All arms see 70% source-to-detector coupling.
enum class HeraldingScheme {
    /// One source, 60% bucket trigger.
    Bucket60_1SPDC,
    /// One source, 95% number-resolving trigger, herald on exactly one count.
    PNRD95_1SPDC,
    /// Four sources with 60% bucket triggers, 95% transmission per router,
    /// two routers on every route.
    Bucket60_4SPDC_T95,
};

std::string_view to_string(HeraldingScheme scheme);
std::optional<HeraldingScheme> parse_heralding_scheme(std::string_view text);

struct SchemeParameters {
    int sources;
    fock::DetectorModel trigger;
    fock::HeraldCondition condition;
    double coupling;
    double router_transmission;
    int routers;
};

SchemeParameters scheme_parameters(HeraldingScheme scheme);

struct HeraldingPoint {
    HeraldingScheme scheme;
    double epsilon;
    double mean_pairs;
    /// Probability that one source heralds.
    double source_herald_probability;
    /// Herald AND at least one photon at the output, per pulse.
    double p_output;
    double g2;
};

/// Largest squeezing strength whose truncated tail weight tanh^{2(c+1)} stays
/// at or below the eps = 0.5, cutoff 4 value.
double max_valid_epsilon(int cutoff);

HeraldingPoint evaluate_heralding_scheme(HeraldingScheme scheme, double epsilon, int cutoff = 4);

/// One row per (scheme, epsilon), scheme-major. Throws InvalidArgument for
/// epsilon outside (0, max_valid_epsilon(cutoff)].
std::vector<HeraldingPoint> compare_heralding_schemes(std::span<const double> epsilon_grid,
                                                      std::span<const HeraldingScheme> schemes, int cutoff = 4);

struct MatchedPoint {
    double p_output;
    double g2_first;
    double g2_second;
};

/// Interpolates both curves (linear in epsilon order, which is monotone in
/// p_output) at `samples` output probabilities evenly spread across the
/// overlap of their p_output ranges.
std::vector<MatchedPoint> compare_at_matched_output(std::span<const HeraldingPoint> first,
                                                    std::span<const HeraldingPoint> second, int samples);

}  // namespace mux::montecarlo

#endif
