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

#include "mux/fock/ensemble.hpp"

#include <cmath>

#include "mux/errors.hpp"

namespace mux::fock {

MixedStateEnsemble::MixedStateEnsemble(FockState pure) {
    require(pure.is_normalized(), "ensemble component must be normalized");
    components_.push_back({1.0, std::move(pure)});
}

MixedStateEnsemble::MixedStateEnsemble(std::vector<EnsembleComponent> components)
    : components_(std::move(components)) {
    require(!components_.empty(), "ensemble needs at least one component");
    const auto modes = components_.front().state.num_modes();
    for (const auto &c : components_) {
        require(c.probability >= 0.0 && c.probability <= 1.0 + kNormTolerance, "component probability outside [0,1]");
        require(c.state.num_modes() == modes, "ensemble components disagree on mode count");
        require(c.state.is_normalized(), "ensemble component must be normalized");
    }
    require(std::abs(total_probability() - 1.0) <= kNormTolerance, "ensemble probabilities must sum to 1");
}

MixedStateEnsemble MixedStateEnsemble::from_weights(std::vector<EnsembleComponent> weighted) {
    double total = 0;
    for (const auto &c : weighted) {
        require(c.probability >= 0.0, "negative ensemble weight");
        total += c.probability;
    }
    if (total <= 0.0) {
        throw ZeroProbabilityEvent("ensemble has zero total weight");
    }
    std::vector<EnsembleComponent> kept;
    kept.reserve(weighted.size());
    for (auto &c : weighted) {
        if (c.probability > 0.0) {
            kept.push_back({c.probability / total, std::move(c.state)});
        }
    }
    return MixedStateEnsemble(std::move(kept));
}

double MixedStateEnsemble::total_probability() const {
    double total = 0;
    for (const auto &c : components_) {
        total += c.probability;
    }
    return total;
}

}  // namespace mux::fock
