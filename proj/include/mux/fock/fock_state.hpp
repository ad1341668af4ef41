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

#ifndef MUX_FOCK_FOCK_STATE_HPP
#define MUX_FOCK_FOCK_STATE_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace mux::fock {

using Complex = std::complex<double>;

inline constexpr int kDefaultCutoff = 4;
inline constexpr double kNormTolerance = 1e-10;

/// Pure state on a truncated multi-mode photon-number basis.
///
/// Every mode holds between 0 and `cutoff` photons. Amplitudes are stored
/// in mixed-radix order with mode 0 as the most significant digit, so for two
/// modes the index of |n0, n1> is n0 * (cutoff + 1) + n1.
///
/// Large squeezing strengths put non-negligible weight above the cutoff; the
/// operations renormalize onto the kept basis, which biases g2 upward of the
/// truncation error. Raise the cutoff when sweeping past epsilon ~ 0.5.
class FockState {
   public:
    /// Vacuum on `num_modes` modes.
    FockState(std::size_t num_modes, int cutoff = kDefaultCutoff);

    static FockState basis(std::span<const int> occupations, int cutoff = kDefaultCutoff);
    static FockState basis(std::initializer_list<int> occupations, int cutoff = kDefaultCutoff);
    static FockState from_amplitudes(std::size_t num_modes, int cutoff, std::vector<Complex> amplitudes);
    /// Single-mode coherent state truncated at `cutoff` and renormalized.
    static FockState coherent(Complex alpha, int cutoff);

    std::size_t num_modes() const { return num_modes_; }
    int cutoff() const { return cutoff_; }
    std::size_t dimension() const { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const { return amplitudes_; }

    std::size_t stride(std::size_t mode) const;
    int occupation(std::size_t index, std::size_t mode) const;
    std::vector<int> occupations(std::size_t index) const;
    std::size_t index_of(std::span<const int> occupations) const;

    Complex amplitude(std::span<const int> occupations) const;
    Complex amplitude(std::initializer_list<int> occupations) const;
    double probability(std::initializer_list<int> occupations) const;

    double norm_squared() const;
    bool is_normalized(double tolerance = kNormTolerance) const;

    /// Same state embedded in a larger per-mode cutoff.
    FockState with_cutoff(int new_cutoff) const;

    /// Largest total photon number held by modes `a` and `b` on the support.
    int max_pair_occupation(std::size_t a, std::size_t b) const;

   private:
    std::size_t num_modes_;
    int cutoff_;
    std::vector<Complex> amplitudes_;
};

}  // namespace mux::fock

#endif
