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

#include "mux/fock/fock_state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mux/errors.hpp"

namespace mux::fock {

namespace {

std::size_t checked_dimension(std::size_t num_modes, int cutoff) {
    require(num_modes >= 1, "FockState needs at least one mode");
    require(cutoff >= 1, "FockState cutoff must be >= 1");
    std::size_t dim = 1;
    for (std::size_t k = 0; k < num_modes; ++k) {
        dim *= static_cast<std::size_t>(cutoff + 1);
        require(dim <= (std::size_t{1} << 26), "FockState dimension too large");
    }
    return dim;
}

}  // namespace

FockState::FockState(std::size_t num_modes, int cutoff)
    : num_modes_(num_modes), cutoff_(cutoff), amplitudes_(checked_dimension(num_modes, cutoff)) {
    amplitudes_[0] = 1.0;
}

FockState FockState::basis(std::span<const int> occupations, int cutoff) {
    FockState state(occupations.size(), cutoff);
    state.amplitudes_[0] = 0.0;
    state.amplitudes_[state.index_of(occupations)] = 1.0;
    return state;
}

FockState FockState::basis(std::initializer_list<int> occupations, int cutoff) {
    return basis(std::span<const int>(occupations.begin(), occupations.size()), cutoff);
}

FockState FockState::from_amplitudes(std::size_t num_modes, int cutoff, std::vector<Complex> amplitudes) {
    FockState state(num_modes, cutoff);
    require(amplitudes.size() == state.dimension(),
            "amplitude vector length " + std::to_string(amplitudes.size()) + " does not match (cutoff+1)^modes = " +
                std::to_string(state.dimension()));
    state.amplitudes_ = std::move(amplitudes);
    return state;
}

FockState FockState::coherent(Complex alpha, int cutoff) {
    FockState state(1, cutoff);
    double norm = 0;
    Complex term = std::exp(-0.5 * std::norm(alpha));
    for (int n = 0; n <= cutoff; ++n) {
        if (n > 0) {
            term *= alpha / std::sqrt(static_cast<double>(n));
        }
        state.amplitudes_[n] = term;
        norm += std::norm(term);
    }
    for (auto &a : state.amplitudes_) {
        a /= std::sqrt(norm);
    }
    return state;
}

std::size_t FockState::stride(std::size_t mode) const {
    require(mode < num_modes_, "mode index " + std::to_string(mode) + " out of range");
    std::size_t s = 1;
    for (std::size_t k = mode + 1; k < num_modes_; ++k) {
        s *= static_cast<std::size_t>(cutoff_ + 1);
    }
    return s;
}

int FockState::occupation(std::size_t index, std::size_t mode) const {
    return static_cast<int>((index / stride(mode)) % static_cast<std::size_t>(cutoff_ + 1));
}

std::vector<int> FockState::occupations(std::size_t index) const {
    std::vector<int> occ(num_modes_);
    for (std::size_t k = num_modes_; k-- > 0;) {
        occ[k] = static_cast<int>(index % static_cast<std::size_t>(cutoff_ + 1));
        index /= static_cast<std::size_t>(cutoff_ + 1);
    }
    return occ;
}

std::size_t FockState::index_of(std::span<const int> occupations) const {
    require(occupations.size() == num_modes_, "occupation list length does not match mode count");
    std::size_t index = 0;
    for (int n : occupations) {
        require(n >= 0 && n <= cutoff_, "occupation " + std::to_string(n) + " outside [0, cutoff]");
        index = index * static_cast<std::size_t>(cutoff_ + 1) + static_cast<std::size_t>(n);
    }
    return index;
}

Complex FockState::amplitude(std::span<const int> occupations) const { return amplitudes_[index_of(occupations)]; }

Complex FockState::amplitude(std::initializer_list<int> occupations) const {
    return amplitude(std::span<const int>(occupations.begin(), occupations.size()));
}

double FockState::probability(std::initializer_list<int> occupations) const { return std::norm(amplitude(occupations)); }

double FockState::norm_squared() const {
    double total = 0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

bool FockState::is_normalized(double tolerance) const { return std::abs(norm_squared() - 1.0) <= tolerance; }

FockState FockState::with_cutoff(int new_cutoff) const {
    require(new_cutoff >= cutoff_, "with_cutoff only enlarges the basis");
    if (new_cutoff == cutoff_) {
        return *this;
    }
    FockState out(num_modes_, new_cutoff);
    out.amplitudes_[0] = 0.0;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        if (amplitudes_[i] != Complex{}) {
            out.amplitudes_[out.index_of(occupations(i))] = amplitudes_[i];
        }
    }
    return out;
}

int FockState::max_pair_occupation(std::size_t a, std::size_t b) const {
    int best = 0;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        if (amplitudes_[i] != Complex{}) {
            best = std::max(best, occupation(i, a) + occupation(i, b));
        }
    }
    return best;
}

}  // namespace mux::fock
