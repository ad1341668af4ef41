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

#ifndef MUX_FOCK_ENSEMBLE_HPP
#define MUX_FOCK_ENSEMBLE_HPP

#include <vector>

#include "mux/fock/fock_state.hpp"

namespace mux::fock {

struct EnsembleComponent {
    double probability;
    FockState state;
};

/// Classical mixture of pure states sharing a mode count.
///
/// Every channel in this library (photon loss, number-diagonal detection)
/// sends Kraus branches to pure states, so a weighted list of branches is an
/// exact stand-in for the density matrix.
class MixedStateEnsemble {
   public:
    explicit MixedStateEnsemble(FockState pure);
    /// Components must be normalized states with probabilities summing to 1.
    explicit MixedStateEnsemble(std::vector<EnsembleComponent> components);

    /// Rescales nonnegative weights to sum to 1; drops zero-weight entries.
    static MixedStateEnsemble from_weights(std::vector<EnsembleComponent> weighted);

    const std::vector<EnsembleComponent> &components() const { return components_; }
    std::size_t size() const { return components_.size(); }
    std::size_t num_modes() const { return components_.front().state.num_modes(); }
    double total_probability() const;

   private:
    std::vector<EnsembleComponent> components_;
};

}  // namespace mux::fock

#endif
