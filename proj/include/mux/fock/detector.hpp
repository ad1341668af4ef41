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

#ifndef MUX_FOCK_DETECTOR_HPP
#define MUX_FOCK_DETECTOR_HPP

#include <string_view>

namespace mux::fock {

enum class DetectorKind { Bucket, NumberResolving };

enum class HeraldCondition {
    ClickedAtLeastOnce,
    /// Requires a number-resolving detector.
    ExactlyOne,
    NoClick,
};

/// Click or photon-count response of a detector with efficiency eta.
///
/// Each incident photon is registered independently with probability eta, so
/// a bucket detector clicks with probability 1 - (1 - eta)^n and a
/// number-resolving one reports k counts with probability
/// C(n, k) eta^k (1 - eta)^(n - k).
class DetectorModel {
   public:
    DetectorModel(DetectorKind kind, double efficiency);

    static DetectorModel bucket(double efficiency) { return {DetectorKind::Bucket, efficiency}; }
    static DetectorModel number_resolving(double efficiency) { return {DetectorKind::NumberResolving, efficiency}; }

    DetectorKind kind() const { return kind_; }
    double efficiency() const { return efficiency_; }

    double click_probability(int photons) const;
    double count_probability(int photons, int counts) const;

    /// Probability that `photons` incident photons satisfy `condition`.
    double likelihood(HeraldCondition condition, int photons) const;

   private:
    DetectorKind kind_;
    double efficiency_;
};

std::string_view to_string(DetectorKind kind);

}  // namespace mux::fock

#endif
