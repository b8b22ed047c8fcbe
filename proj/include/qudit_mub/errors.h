// Copyright 2026 The qudit-mub Authors
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

#ifndef QUDIT_MUB_ERRORS_H
#define QUDIT_MUB_ERRORS_H

#include <stdexcept>

namespace qmub {

/// Two operands live on Hilbert spaces of different dimension.
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A brute-force routine was asked for an input beyond its combinatorial guard.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An operation that needs a non-degenerate d-nary spectrum got something else.
struct NotDnaryError : std::domain_error {
    using std::domain_error::domain_error;
};

struct NonUnitaryError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotTracePreservingError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace qmub

#endif
