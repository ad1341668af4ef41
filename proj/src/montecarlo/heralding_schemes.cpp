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

#include "mux/montecarlo/heralding_schemes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mux/analytic/array_model.hpp"
#include "mux/errors.hpp"
#include "mux/fock/operations.hpp"

namespace mux::montecarlo {

namespace {

constexpr double kSourceCoupling = 0.7;

double interpolate_g2(std::span<const HeraldingPoint> curve, double p_output) {
    for (std::size_t i = 1; i < curve.size(); ++i) {
        const auto &a = curve[i - 1];
        const auto &b = curve[i];
        if (p_output >= a.p_output && p_output <= b.p_output) {
            const double f = (p_output - a.p_output) / (b.p_output - a.p_output);
            return a.g2 + f * (b.g2 - a.g2);
        }
    }
    throw InvalidArgument("output probability outside the curve");
}

}  // namespace

std::string_view to_string(HeraldingScheme scheme) {
    switch (scheme) {
        case HeraldingScheme::Bucket60_1SPDC:
            return "bucket60_1spdc";
        case HeraldingScheme::PNRD95_1SPDC:
            return "pnrd95_1spdc";
        case HeraldingScheme::Bucket60_4SPDC_T95:
            return "bucket60_4spdc_t95";
    }
    return "unknown";
}

std::optional<HeraldingScheme> parse_heralding_scheme(std::string_view text) {
    for (auto s : {HeraldingScheme::Bucket60_1SPDC, HeraldingScheme::PNRD95_1SPDC, HeraldingScheme::Bucket60_4SPDC_T95}) {
        if (text == to_string(s)) {
            return s;
        }
    }
    return std::nullopt;
}

SchemeParameters scheme_parameters(HeraldingScheme scheme) {
    switch (scheme) {
        case HeraldingScheme::Bucket60_1SPDC:
            return {1, fock::DetectorModel::bucket(0.6), fock::HeraldCondition::ClickedAtLeastOnce, kSourceCoupling, 1.0, 0};
        case HeraldingScheme::PNRD95_1SPDC:
            return {1, fock::DetectorModel::number_resolving(0.95), fock::HeraldCondition::ExactlyOne, kSourceCoupling, 1.0,
                    0};
        case HeraldingScheme::Bucket60_4SPDC_T95:
            return {4, fock::DetectorModel::bucket(0.6), fock::HeraldCondition::ClickedAtLeastOnce, kSourceCoupling, 0.95,
                    2};
    }
    throw InvalidArgument("unknown heralding scheme");
}

double max_valid_epsilon(int cutoff) {
    require(cutoff >= 1, "cutoff must be >= 1");
    const double reference_tail = std::pow(std::tanh(0.5), 10);
    return std::atanh(std::pow(reference_tail, 1.0 / (2.0 * (cutoff + 1))));
}

HeraldingPoint evaluate_heralding_scheme(HeraldingScheme scheme, double epsilon, int cutoff) {
    require(epsilon > 0.0 && epsilon <= max_valid_epsilon(cutoff) * (1 + 1e-12),
            "epsilon " + std::to_string(epsilon) + " outside the validated range (0, " +
                std::to_string(max_valid_epsilon(cutoff)) + "] for cutoff " + std::to_string(cutoff));
    const auto params = scheme_parameters(scheme);

    // Mode 0 heralds, mode 1 is the output.
    auto source = fock::apply_loss(fock::two_mode_squeezed_vacuum(epsilon, cutoff), 0, params.coupling);
    source = fock::apply_loss(source, 1, params.coupling);
    const auto heralded = fock::herald(source, 0, params.trigger, params.condition);
    const auto output = fock::apply_loss(heralded.state, 0, std::pow(params.router_transmission, params.routers));

    // Sequential priority: the array heralds when any source does, and the
    // winner's conditional state is that of a lone source.
    const double array_herald =
        heralded.probability * analytic::gain_from_p0(params.sources, 1.0 - heralded.probability);
    const double non_vacuum = 1.0 - fock::number_distribution(output, 0)[0];
    return {scheme,
            epsilon,
            fock::mean_pairs_from_epsilon(epsilon),
            heralded.probability,
            array_herald * non_vacuum,
            fock::g2_zero(output, 0)};
}

std::vector<HeraldingPoint> compare_heralding_schemes(std::span<const double> epsilon_grid,
                                                      std::span<const HeraldingScheme> schemes, int cutoff) {
    require(!epsilon_grid.empty(), "epsilon grid is empty");
    std::vector<HeraldingPoint> rows;
    for (auto scheme : schemes) {
        for (double eps : epsilon_grid) {
            rows.push_back(evaluate_heralding_scheme(scheme, eps, cutoff));
        }
    }
    return rows;
}

std::vector<MatchedPoint> compare_at_matched_output(std::span<const HeraldingPoint> first,
                                                    std::span<const HeraldingPoint> second, int samples) {
    require(first.size() >= 2 && second.size() >= 2, "each curve needs at least two points");
    require(samples >= 1, "need at least one matched sample");
    auto sorted = [](std::span<const HeraldingPoint> c) {
        std::vector<HeraldingPoint> v(c.begin(), c.end());
        std::sort(v.begin(), v.end(), [](const auto &a, const auto &b) { return a.p_output < b.p_output; });
        return v;
    };
    const auto a = sorted(first);
    const auto b = sorted(second);
    const double lo = std::max(a.front().p_output, b.front().p_output);
    const double hi = std::min(a.back().p_output, b.back().p_output);
    require(lo < hi, "the two curves do not overlap in output probability");
    std::vector<MatchedPoint> matched;
    for (int i = 0; i < samples; ++i) {
        const double p = samples == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * i / (samples - 1);
        matched.push_back({p, interpolate_g2(a, p), interpolate_g2(b, p)});
    }
    return matched;
}

}  // namespace mux::montecarlo
