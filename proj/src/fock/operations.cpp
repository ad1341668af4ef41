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

#include "mux/fock/operations.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mux/errors.hpp"

namespace mux::fock {

namespace {

Complex int_power(Complex z, int n) {
    Complex r = 1.0;
    for (int i = 0; i < n; ++i) {
        r *= z;
    }
    return r;
}

double factorial(int n) {
    double f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

double binomial(int n, int k) {
    double c = 1;
    for (int i = 1; i <= k; ++i) {
        c = c * (n - k + i) / i;
    }
    return c;
}

// n (n-1) ... (n-k+1)
double falling(int n, int k) {
    double f = 1;
    for (int i = 0; i < k; ++i) {
        f *= n - i;
    }
    return f;
}

// (n+1) (n+2) ... (n+k)
double rising(int n, int k) {
    double f = 1;
    for (int i = 1; i <= k; ++i) {
        f *= n + i;
    }
    return f;
}

void require_mode(const FockState &state, std::size_t mode) {
    require(mode < state.num_modes(),
            "mode index " + std::to_string(mode) + " out of range for " + std::to_string(state.num_modes()) + " modes");
}

void require_normalized(const FockState &state) {
    require(state.is_normalized(), "input state is not normalized (norm^2 = " + std::to_string(state.norm_squared()) + ")");
}

void require_unit_interval(double value, const char *what) {
    require(value >= 0.0 && value <= 1.0, std::string(what) + " must lie in [0,1]");
}

FockState renormalized(std::size_t modes, int cutoff, std::vector<Complex> amps) {
    double norm = 0;
    for (const auto &a : amps) {
        norm += std::norm(a);
    }
    if (norm <= 0.0) {
        throw ZeroProbabilityEvent("state has zero norm after projection");
    }
    const double s = 1.0 / std::sqrt(norm);
    for (auto &a : amps) {
        a *= s;
    }
    return FockState::from_amplitudes(modes, cutoff, std::move(amps));
}

// Branches lighter than this are dropped; renormalizing them would run into
// subnormal arithmetic.
constexpr double kNegligibleWeight = 1e-250;

}  // namespace

double mean_pairs_from_epsilon(double epsilon) {
    const double s = std::sinh(epsilon);
    return s * s;
}

double epsilon_from_mean_pairs(double mean_pairs) {
    require(mean_pairs >= 0.0 && std::isfinite(mean_pairs), "mean pair number must be finite and >= 0");
    return std::asinh(std::sqrt(mean_pairs));
}

FockState apply_spdc(const FockState &state, std::size_t mode_a, std::size_t mode_b, double epsilon) {
    require_mode(state, mode_a);
    require_mode(state, mode_b);
    require(mode_a != mode_b, "apply_spdc needs two distinct modes");
    require(epsilon >= 0.0 && std::isfinite(epsilon), "squeezing strength must be finite and >= 0");
    require_normalized(state);

    const int cutoff = state.cutoff();
    const std::size_t sa = state.stride(mode_a);
    const std::size_t sb = state.stride(mode_b);
    // exp(-i eps (K+ + K-)) = exp(-i t K+) cosh^{-2 K0} exp(-i t K-), t = tanh eps,
    // with K+ = a^dag b^dag, K- = a b, 2 K0 = n_a + n_b + 1.
    const Complex step(0.0, -std::tanh(epsilon));
    const double inv_cosh = 1.0 / std::cosh(epsilon);

    const auto in = state.amplitudes();
    std::vector<Complex> out(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) {
        if (in[i] == Complex{}) {
            continue;
        }
        const int na = state.occupation(i, mode_a);
        const int nb = state.occupation(i, mode_b);
        const std::size_t base = i - static_cast<std::size_t>(na) * sa - static_cast<std::size_t>(nb) * sb;
        for (int k = 0; k <= std::min(na, nb); ++k) {
            const int p = na - k;
            const int q = nb - k;
            const Complex lowered = in[i] * int_power(step, k) / factorial(k) * std::sqrt(falling(na, k) * falling(nb, k)) *
                                    std::pow(inv_cosh, p + q + 1);
            for (int j = 0; p + j <= cutoff && q + j <= cutoff; ++j) {
                const Complex raised = int_power(step, j) / factorial(j) * std::sqrt(rising(p, j) * rising(q, j));
                out[base + static_cast<std::size_t>(p + j) * sa + static_cast<std::size_t>(q + j) * sb] += lowered * raised;
            }
        }
    }
    return renormalized(state.num_modes(), cutoff, std::move(out));
}

FockState two_mode_squeezed_vacuum(double epsilon, int cutoff) { return apply_spdc(FockState(2, cutoff), 0, 1, epsilon); }

FockState apply_beamsplitter(const FockState &state, std::size_t mode_1, std::size_t mode_2, double transmissivity,
                             double phase) {
    require_mode(state, mode_1);
    require_mode(state, mode_2);
    require(mode_1 != mode_2, "apply_beamsplitter needs two distinct modes");
    require_unit_interval(transmissivity, "beam splitter transmissivity");
    require(std::isfinite(phase), "beam splitter phase must be finite");
    require_normalized(state);

    const FockState input = state.with_cutoff(std::max(state.cutoff(), state.max_pair_occupation(mode_1, mode_2)));
    const std::size_t s1 = input.stride(mode_1);
    const std::size_t s2 = input.stride(mode_2);
    const double t = std::sqrt(transmissivity);
    const double r = std::sqrt(1.0 - transmissivity);
    const Complex from_1 = -r * std::polar(1.0, -phase);  // weight of a2^dag in the image of a1^dag
    const Complex from_2 = r * std::polar(1.0, phase);    // weight of a1^dag in the image of a2^dag

    const auto in = input.amplitudes();
    std::vector<Complex> out(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) {
        if (in[i] == Complex{}) {
            continue;
        }
        const int n1 = input.occupation(i, mode_1);
        const int n2 = input.occupation(i, mode_2);
        const std::size_t base = i - static_cast<std::size_t>(n1) * s1 - static_cast<std::size_t>(n2) * s2;
        const double inv_norm = 1.0 / std::sqrt(factorial(n1) * factorial(n2));
        for (int j = 0; j <= n1; ++j) {
            const Complex c1 = binomial(n1, j) * std::pow(t, j) * int_power(from_1, n1 - j);
            for (int l = 0; l <= n2; ++l) {
                const Complex c2 = binomial(n2, l) * int_power(from_2, l) * std::pow(t, n2 - l);
                const int p = j + l;
                const int q = n1 + n2 - p;
                out[base + static_cast<std::size_t>(p) * s1 + static_cast<std::size_t>(q) * s2] +=
                    in[i] * c1 * c2 * std::sqrt(factorial(p) * factorial(q)) * inv_norm;
            }
        }
    }
    return FockState::from_amplitudes(input.num_modes(), input.cutoff(), std::move(out));
}

FockState apply_phase_shift(const FockState &state, std::size_t mode, double phase) {
    require_mode(state, mode);
    const auto in = state.amplitudes();
    std::vector<Complex> out(in.begin(), in.end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] *= std::polar(1.0, phase * state.occupation(i, mode));
    }
    return FockState::from_amplitudes(state.num_modes(), state.cutoff(), std::move(out));
}

MixedStateEnsemble apply_loss(const FockState &state, std::size_t mode, double transmission) {
    require_mode(state, mode);
    require_unit_interval(transmission, "transmission");
    require_normalized(state);

    const int cutoff = state.cutoff();
    const std::size_t stride = state.stride(mode);
    const auto in = state.amplitudes();
    std::vector<EnsembleComponent> branches;
    for (int lost = 0; lost <= cutoff; ++lost) {
        std::vector<Complex> out(in.size());
        double weight = 0;
        for (std::size_t i = 0; i < in.size(); ++i) {
            const int n = state.occupation(i, mode);
            if (n < lost || in[i] == Complex{}) {
                continue;
            }
            const double kraus =
                std::sqrt(binomial(n, lost) * std::pow(transmission, n - lost) * std::pow(1.0 - transmission, lost));
            out[i - static_cast<std::size_t>(lost) * stride] = in[i] * kraus;
            weight += std::norm(out[i - static_cast<std::size_t>(lost) * stride]);
        }
        if (weight > kNegligibleWeight) {
            branches.push_back({weight, renormalized(state.num_modes(), cutoff, std::move(out))});
        }
    }
    return MixedStateEnsemble::from_weights(std::move(branches));
}

MixedStateEnsemble apply_loss(const MixedStateEnsemble &ensemble, std::size_t mode, double transmission) {
    std::vector<EnsembleComponent> branches;
    for (const auto &c : ensemble.components()) {
        const auto thinned = apply_loss(c.state, mode, transmission);
        for (const auto &b : thinned.components()) {
            branches.push_back({c.probability * b.probability, b.state});
        }
    }
    return MixedStateEnsemble::from_weights(std::move(branches));
}

std::vector<double> number_distribution(const FockState &state, std::size_t mode) {
    require_mode(state, mode);
    std::vector<double> p(static_cast<std::size_t>(state.cutoff()) + 1);
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        p[static_cast<std::size_t>(state.occupation(i, mode))] += std::norm(amps[i]);
    }
    return p;
}

std::vector<double> number_distribution(const MixedStateEnsemble &ensemble, std::size_t mode) {
    std::vector<double> total;
    for (const auto &c : ensemble.components()) {
        const auto p = number_distribution(c.state, mode);
        if (total.size() < p.size()) {
            total.resize(p.size());
        }
        for (std::size_t n = 0; n < p.size(); ++n) {
            total[n] += c.probability * p[n];
        }
    }
    return total;
}

double mean_photon_number(const MixedStateEnsemble &ensemble, std::size_t mode) {
    const auto p = number_distribution(ensemble, mode);
    double mean = 0;
    for (std::size_t n = 0; n < p.size(); ++n) {
        mean += static_cast<double>(n) * p[n];
    }
    return mean;
}

double g2_from_distribution(std::span<const double> photon_number_probabilities) {
    double mean = 0;
    double pairs = 0;
    for (std::size_t n = 0; n < photon_number_probabilities.size(); ++n) {
        const double dn = static_cast<double>(n);
        mean += dn * photon_number_probabilities[n];
        pairs += dn * (dn - 1.0) * photon_number_probabilities[n];
    }
    if (!(mean > 0.0)) {
        throw UndefinedCorrelation("g2(0) is undefined for a mode with zero mean photon number");
    }
    return pairs / (mean * mean);
}

double g2_zero(const FockState &state, std::size_t mode) { return g2_from_distribution(number_distribution(state, mode)); }

double g2_zero(const MixedStateEnsemble &ensemble, std::size_t mode) {
    return g2_from_distribution(number_distribution(ensemble, mode));
}

HeraldResult herald(const FockState &state, std::size_t trigger_mode, const DetectorModel &detector,
                    HeraldCondition condition) {
    return herald(MixedStateEnsemble(state), trigger_mode, detector, condition);
}

HeraldResult herald(const MixedStateEnsemble &ensemble, std::size_t trigger_mode, const DetectorModel &detector,
                    HeraldCondition condition) {
    require(ensemble.num_modes() >= 2, "heralding needs a trigger mode and at least one remaining mode");
    require(trigger_mode < ensemble.num_modes(), "trigger mode out of range");
    // Validates the detector/condition pairing even when no photon reaches the trigger.
    (void)detector.likelihood(condition, 0);

    std::vector<EnsembleComponent> branches;
    double probability = 0;
    for (const auto &c : ensemble.components()) {
        const FockState &s = c.state;
        const int cutoff = s.cutoff();
        const std::size_t stride = s.stride(trigger_mode);
        const std::size_t block = stride * static_cast<std::size_t>(cutoff + 1);
        const auto amps = s.amplitudes();
        for (int n = 0; n <= cutoff; ++n) {
            const double likelihood = detector.likelihood(condition, n);
            if (likelihood <= 0.0) {
                continue;
            }
            std::vector<Complex> reduced(amps.size() / static_cast<std::size_t>(cutoff + 1));
            double weight = 0;
            for (std::size_t high = 0; high < amps.size() / block; ++high) {
                for (std::size_t low = 0; low < stride; ++low) {
                    const Complex a = amps[high * block + static_cast<std::size_t>(n) * stride + low];
                    reduced[high * stride + low] = a;
                    weight += std::norm(a);
                }
            }
            weight *= likelihood * c.probability;
            if (weight > kNegligibleWeight) {
                probability += weight;
                branches.push_back({weight, renormalized(s.num_modes() - 1, cutoff, std::move(reduced))});
            }
        }
    }
    if (!(probability > 0.0)) {
        throw ZeroProbabilityEvent("herald outcome has zero probability");
    }
    return {probability, MixedStateEnsemble::from_weights(std::move(branches))};
}

double outcome_probability(const MixedStateEnsemble &ensemble, std::size_t mode, const DetectorModel &detector,
                           HeraldCondition condition) {
    const auto p = number_distribution(ensemble, mode);
    double total = 0;
    for (std::size_t n = 0; n < p.size(); ++n) {
        total += p[n] * detector.likelihood(condition, static_cast<int>(n));
    }
    return total;
}

MixedStateEnsemble pair_number_ensemble(std::span<const double> pair_probabilities, int cutoff) {
    std::vector<EnsembleComponent> weighted;
    for (std::size_t n = 0; n < pair_probabilities.size() && n <= static_cast<std::size_t>(cutoff); ++n) {
        const int k = static_cast<int>(n);
        weighted.push_back({pair_probabilities[n], FockState::basis({k, k}, cutoff)});
    }
    return MixedStateEnsemble::from_weights(std::move(weighted));
}

}  // namespace mux::fock
