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

#ifndef MUX_MONTECARLO_HOM_HPP
#define MUX_MONTECARLO_HOM_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace mux::montecarlo {

/// Two single photons enter the router's inputs b and c with relative delay
/// tau. Their overlap is chi(tau) = chi0 exp(-tau^2 / (2 sigma^2)); a fraction
/// chi^2 of pulses interferes as indistinguishable photons, the rest as
/// distinguishable ones.
struct HomSettings {
    double mzi_phase = 0.0;
    /// sigma, seconds.
    double coherence_time = 1e-12;
    double routing_visibility = 1.0;
    /// chi0.
    double peak_overlap = 1.0;
    std::uint64_t pulses_per_point = 1'000'000;
    std::uint64_t seed = 1;

    void validate() const;
};

/// Exact two-photon output statistics of the router at one delay. Outputs are
/// ordered (b'', c'').
struct HomOutcomeProbabilities {
    double both_b;
    double coincidence;
    double both_c;
};

struct HomScanPoint {
    double delay;
    double mzi_phase;
    std::uint64_t pulses;
    std::uint64_t coincidences;
    std::uint64_t singles_b;
    std::uint64_t singles_c;
    /// Model coincidence probability, for reference next to the sampled counts.
    double coincidence_probability;
};

/// Probability that a photon entering b leaves through b'':
/// (1 - V cos phi) / 2, so phase 0 swaps the inputs and phase pi passes them.
double mzi_bar_probability(double phase, double routing_visibility);

double mode_overlap(double delay, const HomSettings &settings);

/// Evaluated through the truncated Fock-space beam splitter.
HomOutcomeProbabilities hom_outcome_probabilities(double delay, const HomSettings &settings);

/// Pulse-by-pulse sampling of every delay; point i uses RNG stream i of the seed.
std::vector<HomScanPoint> hom_scan(std::span<const double> delays, const HomSettings &settings);

/// Weighted least-squares fit C(tau) = B - A exp(-tau^2 / sigma^2) at known
/// sigma; visibility = A / B.
struct DipFit {
    double baseline;
    double depth;
    double visibility;
    double visibility_error;
};
DipFit fit_hom_dip(std::span<const HomScanPoint> points, double coherence_time);

/// Weighted straight line through the coincidences, with binomial weights.
struct LineFit {
    double intercept;
    double slope;
    double slope_error;
};
LineFit fit_coincidence_line(std::span<const HomScanPoint> points);

/// chi0 that reproduces a measured dip visibility V = chi0^2.
double overlap_for_visibility(double visibility);

}  // namespace mux::montecarlo

#endif
