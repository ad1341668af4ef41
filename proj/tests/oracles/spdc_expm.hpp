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

// Brute-force two-mode squeezing oracle. eps (a^dag b^dag + a b) conserves
// n_a - n_b, so the Hamiltonian on a truncated two-mode space splits into
// tridiagonal blocks; each block is built densely and exponentiated with
// Eigen's scaling-and-squaring Pade routine. Test-only.
#ifndef MUX_TESTS_ORACLES_SPDC_EXPM_HPP
#define MUX_TESTS_ORACLES_SPDC_EXPM_HPP

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>
#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

/// exp(-i H) with H truncated at `evolve_cutoff` per mode, applied to
/// `input` (two-mode amplitudes, mode a most significant, at `input_cutoff`),
/// projected back onto `input_cutoff` and renormalized.
inline std::vector<std::complex<double>> evolve_two_mode(const std::vector<std::complex<double>> &input,
                                                         int input_cutoff, int evolve_cutoff, double epsilon) {
    const int din = input_cutoff + 1;
    std::vector<std::complex<double>> projected(static_cast<std::size_t>(din * din));
    for (int diff = -input_cutoff; diff <= input_cutoff; ++diff) {
        const int a0 = std::max(diff, 0);
        const int b0 = std::max(-diff, 0);
        const int size = evolve_cutoff + 1 - std::max(a0, b0);
        Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(size, size);
        for (int k = 0; k + 1 < size; ++k) {
            const double coupling = epsilon * std::sqrt(static_cast<double>((a0 + k + 1) * (b0 + k + 1)));
            h(k + 1, k) = coupling;
            h(k, k + 1) = coupling;
        }
        Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(size);
        for (int k = 0; k < size && a0 + k < din && b0 + k < din; ++k) {
            psi(k) = input[static_cast<std::size_t>((a0 + k) * din + (b0 + k))];
        }
        const Eigen::MatrixXcd u = (std::complex<double>(0, -1) * h).exp();
        const Eigen::VectorXcd out = u * psi;
        for (int k = 0; k < size && a0 + k < din && b0 + k < din; ++k) {
            projected[static_cast<std::size_t>((a0 + k) * din + (b0 + k))] = out(k);
        }
    }
    double norm = 0;
    for (const auto &x : projected) {
        norm += std::norm(x);
    }
    for (auto &x : projected) {
        x /= std::sqrt(norm);
    }
    return projected;
}

}  // namespace oracle

#endif
