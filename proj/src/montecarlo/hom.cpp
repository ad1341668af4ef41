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

#include "mux/montecarlo/hom.hpp"

#include <algorithm>
#include <cmath>

#include "mux/errors.hpp"
#include "mux/fock/operations.hpp"
#include "mux/montecarlo/simulator.hpp"

namespace mux::montecarlo {

namespace {

double point_variance(const HomScanPoint &p) {
    const double n = static_cast<double>(p.pulses);
    const double q = static_cast<double>(p.coincidences) / n;
    return std::max(n * q * (1.0 - q), 1.0);
}

}  // namespace

void HomSettings::validate() const {
    require(std::isfinite(mzi_phase), "interferometer phase must be finite");
    require(coherence_time > 0.0 && std::isfinite(coherence_time), "HOM coherence time must be positive");
    require(routing_visibility >= 0.0 && routing_visibility <= 1.0, "routing visibility must lie in [0,1]");
    require(peak_overlap >= 0.0 && peak_overlap <= 1.0, "peak overlap must lie in [0,1]");
    require(pulses_per_point >= 1, "HOM scan needs at least one pulse per point");
}

double mzi_bar_probability(double phase, double routing_visibility) {
    return 0.5 * (1.0 - routing_visibility * std::cos(phase));
}

double mode_overlap(double delay, const HomSettings &settings) {
    settings.validate();
    const double x = delay / settings.coherence_time;
    return settings.peak_overlap * std::exp(-0.5 * x * x);
}

HomOutcomeProbabilities hom_outcome_probabilities(double delay, const HomSettings &settings) {
    settings.validate();
    const double t = mzi_bar_probability(settings.mzi_phase, settings.routing_visibility);

    const auto same = fock::apply_beamsplitter(fock::FockState::basis({1, 1}, 2), 0, 1, t);
    const HomOutcomeProbabilities indistinguishable{same.probability({2, 0}), same.probability({1, 1}),
                                                    same.probability({0, 2})};

    // Orthogonal temporal modes: (b'', c'') for each photon separately.
    auto apart = fock::apply_beamsplitter(fock::FockState::basis({1, 0, 0, 1}, 1), 0, 1, t);
    apart = fock::apply_beamsplitter(apart, 2, 3, t);
    HomOutcomeProbabilities distinguishable{0, 0, 0};
    for (std::size_t i = 0; i < apart.dimension(); ++i) {
        const double p = std::norm(apart.amplitudes()[i]);
        const int at_b = apart.occupation(i, 0) + apart.occupation(i, 2);
        const int at_c = apart.occupation(i, 1) + apart.occupation(i, 3);
        if (at_b == 2) {
            distinguishable.both_b += p;
        } else if (at_c == 2) {
            distinguishable.both_c += p;
        } else if (at_b == 1 && at_c == 1) {
            distinguishable.coincidence += p;
        }
    }

    const double chi = mode_overlap(delay, settings);
    const double w = chi * chi;
    return {w * indistinguishable.both_b + (1 - w) * distinguishable.both_b,
            w * indistinguishable.coincidence + (1 - w) * distinguishable.coincidence,
            w * indistinguishable.both_c + (1 - w) * distinguishable.both_c};
}

std::vector<HomScanPoint> hom_scan(std::span<const double> delays, const HomSettings &settings) {
    settings.validate();
    std::vector<HomScanPoint> points;
    points.reserve(delays.size());
    for (std::size_t i = 0; i < delays.size(); ++i) {
        const auto probs = hom_outcome_probabilities(delays[i], settings);
        const double edge_b = probs.both_b;
        const double edge_c = probs.both_b + probs.coincidence;
        auto rng = make_stream(settings.seed, i);
        HomScanPoint point{delays[i], settings.mzi_phase, settings.pulses_per_point, 0, 0, 0, probs.coincidence};
        for (std::uint64_t k = 0; k < settings.pulses_per_point; ++k) {
            const double u = uniform01(rng);
            if (u < edge_b) {
                ++point.singles_b;
            } else if (u < edge_c) {
                ++point.coincidences;
                ++point.singles_b;
                ++point.singles_c;
            } else {
                ++point.singles_c;
            }
        }
        points.push_back(point);
    }
    return points;
}

DipFit fit_hom_dip(std::span<const HomScanPoint> points, double coherence_time) {
    require(points.size() >= 2, "dip fit needs at least two points");
    require(coherence_time > 0.0, "coherence time must be positive");
    // Normal equations for C = B * 1 + A * (-g).
    double s11 = 0, s12 = 0, s22 = 0, r1 = 0, r2 = 0;
    for (const auto &p : points) {
        const double x = p.delay / coherence_time;
        const double g = -std::exp(-x * x);
        const double w = 1.0 / point_variance(p);
        const double c = static_cast<double>(p.coincidences);
        s11 += w;
        s12 += w * g;
        s22 += w * g * g;
        r1 += w * c;
        r2 += w * g * c;
    }
    const double det = s11 * s22 - s12 * s12;
    require(det > 0.0, "dip fit is degenerate; delays must span the dip");
    const double baseline = (s22 * r1 - s12 * r2) / det;
    const double depth = (s11 * r2 - s12 * r1) / det;
    const double var_b = s22 / det;
    const double var_a = s11 / det;
    const double cov = -s12 / det;
    const double v = depth / baseline;
    const double var_v =
        var_a / (baseline * baseline) + depth * depth * var_b / std::pow(baseline, 4) - 2 * depth * cov / std::pow(baseline, 3);
    return {baseline, depth, v, std::sqrt(std::max(var_v, 0.0))};
}

LineFit fit_coincidence_line(std::span<const HomScanPoint> points) {
    require(points.size() >= 2, "line fit needs at least two points");
    double sw = 0, sx = 0, sxx = 0, sy = 0, sxy = 0;
    for (const auto &p : points) {
        const double w = 1.0 / point_variance(p);
        const double y = static_cast<double>(p.coincidences);
        sw += w;
        sx += w * p.delay;
        sxx += w * p.delay * p.delay;
        sy += w * y;
        sxy += w * p.delay * y;
    }
    const double det = sw * sxx - sx * sx;
    require(det > 0.0, "line fit needs at least two distinct delays");
    return {(sxx * sy - sx * sxy) / det, (sw * sxy - sx * sy) / det, std::sqrt(sw / det)};
}

double overlap_for_visibility(double visibility) {
    require(visibility >= 0.0 && visibility <= 1.0, "dip visibility must lie in [0,1]");
    return std::sqrt(visibility);
}

}  // namespace mux::montecarlo
