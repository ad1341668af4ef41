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

#ifndef MUX_ANALYTIC_ARRAY_MODEL_HPP
#define MUX_ANALYTIC_ARRAY_MODEL_HPP

#include <optional>
#include <string_view>

#include "mux/analytic/pair_distribution.hpp"
#include "mux/fock/detector.hpp"

namespace mux::analytic {

/// How the sources are funnelled into one output.
///   PurePath: a binary tree of 2x1 path routers, log2(m) on every route.
///   Hybrid:   pairs of sources share a polarization router at the end, so a
///             photon crosses log2(m/2) path routers plus one polarization
///             router.
enum class RouterScheme { PurePath, Hybrid };

enum class GainApproximation {
    Exact,
    /// G ~ m, valid when m (1 - P0) << 1.
    SmallMean,
};

std::string_view to_string(RouterScheme scheme);
std::optional<RouterScheme> parse_router_scheme(std::string_view text);

struct ArrayConfig {
    int m = 1;
    PairNumberDistribution distribution = PairNumberDistribution::poisson(0.1);
    double path_router_transmission = 1.0;
    double polarization_router_transmission = 1.0;
    double routing_visibility = 1.0;
    fock::DetectorModel trigger_detector = fock::DetectorModel::bucket(1.0);
    double output_coupling = 1.0;

    /// Throws InvalidArgument on m < 1 or any transmission outside [0,1].
    void validate() const;
};

bool is_power_of_two(int m);

/// Path routers on each source-to-output route. Throws for non-power-of-two
/// m, and for the hybrid scheme with m < 2.
int path_router_count(int m, RouterScheme scheme);

/// Router transmission of the output photon: T0^n, times T_pol for Hybrid.
/// A single source has no routers.
double router_transmission(const ArrayConfig &config, RouterScheme scheme);

/// Sequential-priority array: the first source (in priority order) that
/// fires wins. Valid for any m >= 1.
double q_one(const ArrayConfig &config);
double q_gt_one(const ArrayConfig &config);

/// G = Q1 / P1 = (1 - P0^m) / (1 - P0); equals m when P0 = 1.
double gain(int m, const PairNumberDistribution &distribution);
/// Same series with an arbitrary per-source "nothing happened" probability.
double gain_from_p0(int m, double p0);
/// lim_{m -> inf} G = 1 / (1 - P0).
double gain_limit(const PairNumberDistribution &distribution);

double total_gain(const ArrayConfig &config, RouterScheme scheme,
                  GainApproximation approximation = GainApproximation::Exact);

/// T0 at which the small-mean total gain m * T(T0) equals 1, by bisection.
double break_even_path_transmission(int m, RouterScheme scheme, double polarization_transmission = 1.0,
                                    double tolerance = 1e-12);

/// Closed-form hybrid threshold T0 = 1 / (2 (2 T_pol)^{1/n}), n = log2(m/2) >= 1.
double hybrid_threshold(int m, double polarization_transmission);

/// Probability that a source's trigger fires when every photon of the
/// heralding arm is registered with probability `efficiency`.
double trigger_probability(const PairNumberDistribution &distribution, double efficiency);

/// Extra reach ln(m) L0 for a channel with 1/e decay length L0.
double distance_extension(int m, double decay_length);

/// V = (I_pi - I_0) / (I_pi + I_0).
double routing_visibility(double intensity_pi, double intensity_zero);
/// Probability that a photon leaves through the intended port, (1 + V) / 2.
double intended_port_probability(double visibility);

}  // namespace mux::analytic

#endif
