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

#ifndef LQT_TESTS_TEST_UTIL_HPP
#define LQT_TESTS_TEST_UTIL_HPP

#include <algorithm>
#include <cmath>
#include <random>
#include <span>
#include <vector>

#include "lqt/pauli.hpp"
#include "lqt/state.hpp"

namespace lqt::testing {

inline Rng test_rng(std::uint64_t salt = 0) {
    return Rng(0x5eed5eedULL + salt);
}

inline StateVector random_state(int num_qubits, Rng &rng) {
    std::normal_distribution<double> g;
    std::vector<Complex> a(std::size_t{1} << num_qubits);
    for (auto &v : a) {
        v = {g(rng), g(rng)};
    }
    return StateVector::normalized(num_qubits, std::move(a));
}

inline PauliString random_pauli(int num_qubits, Rng &rng) {
    std::uniform_int_distribution<std::uint32_t> mask(0, (1u << num_qubits) - 1);
    std::uniform_int_distribution<int> phase(0, 3);
    return PauliString::from_masks(num_qubits, mask(rng), mask(rng), phase(rng));
}

/// Row-major dense product of two square matrices.
inline std::vector<Complex> matmul(const std::vector<Complex> &a, const std::vector<Complex> &b) {
    const auto n = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(a.size()))));
    std::vector<Complex> c(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a[i * n + k];
            if (aik == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                c[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    return c;
}

inline double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

}  // namespace lqt::testing

#endif
