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

#ifndef LQT_STATS_HPP
#define LQT_STATS_HPP

#include <span>
#include <vector>

#include "lqt/metrics.hpp"

namespace lqt {

/// A sample-based estimator together with its per-sample influence values.
/// The standard error is the standard deviation of the influence over sqrt(n),
/// so linear combinations and ratios propagate errors by the delta method
/// without losing correlations between observables.
struct Influence {
    double value = 0.0;
    std::vector<double> psi;

    Estimate estimate() const;
};

Influence sample_mean(std::span<const double> x);
/// mean(a) / mean(b), influence (a_i - R b_i) / mean(b).
Influence sample_ratio(std::span<const double> a, std::span<const double> b);
/// sum_k w_k * terms[k]; all terms must share the sample count.
Influence linear_combination(std::span<const Influence> terms, std::span<const double> weights);

}  // namespace lqt

#endif
