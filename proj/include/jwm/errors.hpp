// Copyright 2026 The jwm Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace jwm {

/// Malformed arguments: bad labels, out-of-range parameters, parse errors.
class InvalidInput : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Weak value requested for (numerically) orthogonal pre- and postselection.
class UndefinedWeakValue : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// A conditioning step kept nothing: zero postselection probability,
/// degenerate ABL denominator, or an empty coincidence window.
class PostselectionFailure : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Readout requested at G = 0, where the normalized readout is undefined.
class ZeroStrength : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// A prepared optical meter does not match the target polarization state.
class FidelityGateFailure : public std::runtime_error {
   public:
    FidelityGateFailure(const std::string &what, double fidelity)
        : std::runtime_error(what), fidelity_(fidelity) {}
    double fidelity() const noexcept { return fidelity_; }

   private:
    double fidelity_;
};

}  // namespace jwm
