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

#include "mux/analytic/pair_distribution.hpp"

#include <cmath>
#include <string>

#include "mux/errors.hpp"

namespace mux::analytic {

std::string_view to_string(DistributionKind kind) { return kind == DistributionKind::Poisson ? "poisson" : "thermal"; }

std::optional<DistributionKind> parse_distribution_kind(std::string_view text) {
    if (text == "poisson") {
        return DistributionKind::Poisson;
    }
    if (text == "thermal") {
        return DistributionKind::Thermal;
    }
    return std::nullopt;
}

PairNumberDistribution::PairNumberDistribution(DistributionKind kind, double mean) : kind_(kind), mean_(mean) {
    require(mean >= 0.0 && std::isfinite(mean), "mean pair number must be finite and >= 0");
}

double PairNumberDistribution::prob_n(int n) const {
    require(n >= 0, "pair number must be >= 0, got " + std::to_string(n));
    if (mean_ == 0.0) {
        return n == 0 ? 1.0 : 0.0;
    }
    if (kind_ == DistributionKind::Poisson) {
        return std::exp(n * std::log(mean_) - mean_ - std::lgamma(n + 1.0));
    }
    return std::exp(n * std::log(mean_ / (1.0 + mean_))) / (1.0 + mean_);
}

double PairNumberDistribution::prob_gt_one() const {
    if (kind_ == DistributionKind::Thermal) {
        const double x = mean_ / (1.0 + mean_);
        return x * x;
    }
    if (mean_ > 0.5) {
        return 1.0 - p0() - p1();
    }
    double total = 0;
    for (int n = 2; n < 200; ++n) {
        const double term = prob_n(n);
        total += term;
        if (term < 1e-18 * total) {
            break;
        }
    }
    return total;
}

double PairNumberDistribution::log_p0() const {
    return kind_ == DistributionKind::Poisson ? -mean_ : -std::log1p(mean_);
}

std::vector<double> PairNumberDistribution::probabilities(int max_n) const {
    require(max_n >= 0, "max_n must be >= 0");
    std::vector<double> p(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) {
        p[static_cast<std::size_t>(n)] = prob_n(n);
    }
    return p;
}

}  // namespace mux::analytic
