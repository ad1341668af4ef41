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

#ifndef MUX_FOCK_OPERATIONS_HPP
#define MUX_FOCK_OPERATIONS_HPP

#include <span>
#include <vector>

#include "mux/fock/detector.hpp"
#include "mux/fock/ensemble.hpp"
#include "mux/fock/fock_state.hpp"

namespace mux::fock {

/// Conversion between squeezing strength and mean pair number, N = sinh^2(eps).
double mean_pairs_from_epsilon(double epsilon);
double epsilon_from_mean_pairs(double mean_pairs);

/// Evolves modes a and b under exp(-i eps (a^dag b^dag + a b)).
///
/// Uses the SU(1,1) disentangled form of the two-mode squeezer, applied
/// exactly in the untruncated space and projected back onto the cutoff; the
/// result is renormalized. On double vacuum the amplitude of |n, n> is
/// (-i)^n tanh^n(eps) / cosh(eps) before renormalization.
FockState apply_spdc(const FockState &state, std::size_t mode_a, std::size_t mode_b, double epsilon);

/// Two-mode squeezed vacuum on modes (0, 1).
FockState two_mode_squeezed_vacuum(double epsilon, int cutoff = kDefaultCutoff);

/// Lossless two-mode mixer with intensity transmissivity T and phase phi:
///   a1^dag -> sqrt(T) a1^dag - sqrt(1-T) e^{-i phi} a2^dag
///   a2^dag -> sqrt(1-T) e^{i phi} a1^dag + sqrt(T) a2^dag
/// The cutoff of the result grows to the largest photon number found in the
/// two modes, so no amplitude is ever discarded.
FockState apply_beamsplitter(const FockState &state, std::size_t mode_1, std::size_t mode_2, double transmissivity,
                             double phase = 0.0);

FockState apply_phase_shift(const FockState &state, std::size_t mode, double phase);

/// Binomial thinning of one mode. Each branch of the result corresponds to a
/// fixed number of lost photons.
MixedStateEnsemble apply_loss(const FockState &state, std::size_t mode, double transmission);
MixedStateEnsemble apply_loss(const MixedStateEnsemble &ensemble, std::size_t mode, double transmission);

/// P(n) for n = 0..cutoff of the given mode.
std::vector<double> number_distribution(const FockState &state, std::size_t mode);
std::vector<double> number_distribution(const MixedStateEnsemble &ensemble, std::size_t mode);

double mean_photon_number(const MixedStateEnsemble &ensemble, std::size_t mode);

/// <(a^dag)^2 a^2> / <a^dag a>^2. Throws UndefinedCorrelation on an empty mode.
double g2_zero(const FockState &state, std::size_t mode);
double g2_zero(const MixedStateEnsemble &ensemble, std::size_t mode);
double g2_from_distribution(std::span<const double> photon_number_probabilities);

struct HeraldResult {
    double probability;
    /// Remaining modes after the trigger mode is measured and traced out.
    MixedStateEnsemble state;
};

/// Measures `trigger_mode` with `detector` and conditions on `condition`.
/// Throws ZeroProbabilityEvent when the outcome cannot occur.
HeraldResult herald(const FockState &state, std::size_t trigger_mode, const DetectorModel &detector,
                    HeraldCondition condition);
HeraldResult herald(const MixedStateEnsemble &ensemble, std::size_t trigger_mode, const DetectorModel &detector,
                    HeraldCondition condition);

/// Probability of `condition` on `mode` without conditioning.
double outcome_probability(const MixedStateEnsemble &ensemble, std::size_t mode, const DetectorModel &detector,
                           HeraldCondition condition);

/// Phase-averaged pair source: mixture of |n, n> on two modes with weights
/// `pair_probabilities[n]`, truncated at `cutoff` and renormalized.
MixedStateEnsemble pair_number_ensemble(std::span<const double> pair_probabilities, int cutoff);

}  // namespace mux::fock

#endif
