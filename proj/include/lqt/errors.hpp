// Copyright 2026 The lqt Authors
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

#ifndef LQT_ERRORS_HPP
#define LQT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lqt {

/// Bad argument to a simulator operation (out-of-range qubit, malformed channel, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A projection or forced measurement branch with vanishing probability.
struct OrthogonalSubspaceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A code-space renormalization by a probability below the degeneracy floor.
struct DegenerateProjectionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace lqt

#endif
