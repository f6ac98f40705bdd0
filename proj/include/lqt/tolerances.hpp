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

#ifndef LQT_TOLERANCES_HPP
#define LQT_TOLERANCES_HPP

namespace lqt::tol {

inline constexpr double kNorm = 1e-10;
inline constexpr double kUnitarity = 1e-12;
inline constexpr double kProbabilityFloor = 1e-12;
inline constexpr double kChannelSum = 1e-12;
inline constexpr double kHermitian = 1e-10;
inline constexpr double kTrace = 1e-10;
inline constexpr double kEigenvalue = 1e-9;
inline constexpr double kIdempotent = 1e-10;
// Code-space probability below which renormalized figures of merit are undefined.
inline constexpr double kDegenerateProjection = 1e-9;

}  // namespace lqt::tol

#endif
