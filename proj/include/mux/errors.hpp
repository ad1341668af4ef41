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

#ifndef MUX_ERRORS_HPP
#define MUX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mux {

/// Raised when an argument violates an operation's precondition.
class InvalidArgument : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A correlation function whose denominator vanishes (e.g. g2 of vacuum).
class UndefinedCorrelation : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Conditioning on an outcome that has probability zero.
class ZeroProbabilityEvent : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

inline void require(bool condition, const std::string &message) {
    if (!condition) {
        throw InvalidArgument(message);
    }
}

}  // namespace mux

#endif
