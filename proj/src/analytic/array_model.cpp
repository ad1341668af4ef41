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

#include "mux/analytic/array_model.hpp"

#include <cmath>
#include <string>

#include "mux/errors.hpp"

namespace mux::analytic {

namespace {

void require_unit(double value, const char *what) {
    require(value >= 0.0 && value <= 1.0, std::string(what) + " must lie in [0,1]");
}

int log2_exact(int m) {
    int n = 0;
    while ((1 << n) < m) {
        ++n;
    }
    return n;
}

}  // namespace

std::string_view to_string(RouterScheme scheme) { return scheme == RouterScheme::PurePath ? "path" : "hybrid"; }

std::optional<RouterScheme> parse_router_scheme(std::string_view text) {
    if (text == "path") {
        return RouterScheme::PurePath;
    }
    if (text == "hybrid") {
        return RouterScheme::Hybrid;
    }
    return std::nullopt;
}

void ArrayConfig::validate() const {
    require(m >= 1, "array size m must be >= 1");
    require_unit(path_router_transmission, "path router transmission");
    require_unit(polarization_router_transmission, "polarization router transmission");
    require_unit(routing_visibility, "routing visibility");
    require_unit(output_coupling, "output coupling");
}

bool is_power_of_two(int m) { return m >= 1 && (m & (m - 1)) == 0; }

int path_router_count(int m, RouterScheme scheme) {
    require(is_power_of_two(m), "router-tree schemes need m to be a power of 2, got " + std::to_string(m));
    if (scheme == RouterScheme::Hybrid) {
        require(m >= 2, "the hybrid scheme needs m >= 2");
        return log2_exact(m) - 1;
    }
    return log2_exact(m);
}

double router_transmission(const ArrayConfig &config, RouterScheme scheme) {
    config.validate();
    if (config.m == 1) {
        return 1.0;
    }
    const int n = path_router_count(config.m, scheme);
    double t = std::pow(config.path_router_transmission, n);
    if (scheme == RouterScheme::Hybrid) {
        t *= config.polarization_router_transmission;
    }
    return t;
}

double gain_from_p0(int m, double p0) {
    require(m >= 1, "array size m must be >= 1");
    require(p0 >= 0.0 && p0 <= 1.0, "P0 must lie in [0,1]");
    if (p0 == 1.0) {
        return m;
    }
    if (p0 == 0.0) {
        return 1.0;
    }
    const double log_p0 = std::log(p0);
    return std::expm1(m * log_p0) / std::expm1(log_p0);
}

double gain(int m, const PairNumberDistribution &distribution) {
    require(m >= 1, "array size m must be >= 1");
    const double log_p0 = distribution.log_p0();
    if (log_p0 == 0.0) {
        return m;
    }
    return std::expm1(m * log_p0) / std::expm1(log_p0);
}

double gain_limit(const PairNumberDistribution &distribution) {
    require(distribution.mean() > 0.0, "gain saturation limit needs a nonzero mean pair number");
    return -1.0 / std::expm1(distribution.log_p0());
}

double q_one(const ArrayConfig &config) {
    config.validate();
    return config.distribution.p1() * gain(config.m, config.distribution);
}

double q_gt_one(const ArrayConfig &config) {
    config.validate();
    return config.distribution.prob_gt_one() * gain(config.m, config.distribution);
}

double total_gain(const ArrayConfig &config, RouterScheme scheme, GainApproximation approximation) {
    const double t = router_transmission(config, scheme);
    const double g = approximation == GainApproximation::Exact ? gain(config.m, config.distribution)
                                                               : static_cast<double>(config.m);
    return g * t;
}

double break_even_path_transmission(int m, RouterScheme scheme, double polarization_transmission, double tolerance) {
    require(m >= 2, "break-even needs at least two sources");
    require_unit(polarization_transmission, "polarization router transmission");
    ArrayConfig config;
    config.m = m;
    config.polarization_router_transmission = polarization_transmission;
    auto excess = [&](double t0) {
        config.path_router_transmission = t0;
        return total_gain(config, scheme, GainApproximation::SmallMean) - 1.0;
    };
    double lo = 0.0;
    double hi = 1.0;
    if (excess(hi) < 0.0) {
        throw InvalidArgument("total gain stays below 1 even with lossless path routers");
    }
    if (excess(lo) >= 0.0) {
        return 0.0;
    }
    while (hi - lo > tolerance) {
        const double mid = 0.5 * (lo + hi);
        (excess(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double hybrid_threshold(int m, double polarization_transmission) {
    const int n = path_router_count(m, RouterScheme::Hybrid);
    require(n >= 1, "closed-form hybrid threshold needs m >= 4");
    require(polarization_transmission > 0.0 && polarization_transmission <= 1.0,
            "polarization router transmission must lie in (0,1]");
    return 1.0 / (2.0 * std::pow(2.0 * polarization_transmission, 1.0 / n));
}

double trigger_probability(const PairNumberDistribution &distribution, double efficiency) {
    require_unit(efficiency, "trigger efficiency");
    const double x = efficiency * distribution.mean();
    // 1 - E[(1 - eta)^n]; thinning a Poisson (thermal) variable keeps it Poisson (thermal).
    if (distribution.kind() == DistributionKind::Poisson) {
        return -std::expm1(-x);
    }
    return x / (1.0 + x);
}

double distance_extension(int m, double decay_length) {
    require(m >= 1, "array size m must be >= 1");
    require(decay_length > 0.0, "decay length must be positive");
    return std::log(static_cast<double>(m)) * decay_length;
}

double routing_visibility(double intensity_pi, double intensity_zero) {
    require(intensity_pi >= 0.0 && intensity_zero >= 0.0, "intensities must be >= 0");
    require(intensity_pi + intensity_zero > 0.0, "routing visibility is undefined when both intensities are zero");
    return (intensity_pi - intensity_zero) / (intensity_pi + intensity_zero);
}

double intended_port_probability(double visibility) {
    require(visibility >= -1.0 && visibility <= 1.0, "visibility must lie in [-1,1]");
    return 0.5 * (1.0 + visibility);
}

}  // namespace mux::analytic
