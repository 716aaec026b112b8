// Copyright 2026 The holocomp Authors
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

namespace holocomp {

/// Malformed input: wrong shape, non-Hermitian generator, bad label, etc.
struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A parameter sits on a singularity of a closed-form expression (e.g. 1 + eps0 == 0).
struct SingularParameter : std::domain_error {
    using std::domain_error::domain_error;
};

/// A scaling fit or order-ratio test has no usable samples above the floating-point floor.
struct DegenerateFit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A computed quantity failed a sanity check (e.g. a propagator lost unitarity).
struct NumericalFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace holocomp
