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

#ifndef MUX_ANALYTIC_PAIR_DISTRIBUTION_HPP
#define MUX_ANALYTIC_PAIR_DISTRIBUTION_HPP

#include <optional>
#include <string_view>
#include <vector>

namespace mux::analytic {

enum class DistributionKind { Poisson, Thermal };

std::string_view to_string(DistributionKind kind);
std::optional<DistributionKind> parse_distribution_kind(std::string_view text);

/// Pulse-wise photon-pair number statistics with mean N pairs per pulse.
///   Poisson: P_n = N^n e^{-N} / n!
///   Thermal: P_n = N^n / (1 + N)^{n+1}
class PairNumberDistribution {
   public:
    PairNumberDistribution(DistributionKind kind, double mean);

    static PairNumberDistribution poisson(double mean) { return {DistributionKind::Poisson, mean}; }
    static PairNumberDistribution thermal(double mean) { return {DistributionKind::Thermal, mean}; }

    DistributionKind kind() const { return kind_; }
    double mean() const { return mean_; }

    double prob_n(int n) const;
    double p0() const { return prob_n(0); }
    double p1() const { return prob_n(1); }
    /// 1 - P0 - P1, evaluated without cancellation at small N.
    double prob_gt_one() const;
    /// ln P0; exact for both kinds, used for the geometric gain series.
    double log_p0() const;

    /// P_0 .. P_{max_n}.
    std::vector<double> probabilities(int max_n) const;

   private:
    DistributionKind kind_;
    double mean_;
};

}  // namespace mux::analytic

#endif
