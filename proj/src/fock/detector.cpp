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

#include "mux/fock/detector.hpp"

#include <cmath>

#include "mux/errors.hpp"

namespace mux::fock {

namespace {

double binomial_coefficient(int n, int k) {
    double c = 1;
    for (int i = 1; i <= k; ++i) {
        c = c * (n - k + i) / i;
    }
    return c;
}

}  // namespace

DetectorModel::DetectorModel(DetectorKind kind, double efficiency) : kind_(kind), efficiency_(efficiency) {
    require(efficiency >= 0.0 && efficiency <= 1.0, "detector efficiency must lie in [0,1]");
}

double DetectorModel::click_probability(int photons) const {
    require(photons >= 0, "negative photon number");
    return 1.0 - std::pow(1.0 - efficiency_, photons);
}

double DetectorModel::count_probability(int photons, int counts) const {
    require(photons >= 0, "negative photon number");
    if (counts < 0 || counts > photons) {
        return 0.0;
    }
    return binomial_coefficient(photons, counts) * std::pow(efficiency_, counts) *
           std::pow(1.0 - efficiency_, photons - counts);
}

double DetectorModel::likelihood(HeraldCondition condition, int photons) const {
    switch (condition) {
        case HeraldCondition::ClickedAtLeastOnce:
            return click_probability(photons);
        case HeraldCondition::NoClick:
            require(photons >= 0, "negative photon number");
            return std::pow(1.0 - efficiency_, photons);
        case HeraldCondition::ExactlyOne:
            if (kind_ != DetectorKind::NumberResolving) {
                throw InvalidArgument("ExactlyOne heralding needs a number-resolving detector");
            }
            return count_probability(photons, 1);
    }
    throw InvalidArgument("unknown herald condition");
}

std::string_view to_string(DetectorKind kind) {
    return kind == DetectorKind::Bucket ? "bucket" : "pnrd";
}

}  // namespace mux::fock
