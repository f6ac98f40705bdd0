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

// Raw gate kernels shared by the state-vector and density-operator paths.

#ifndef LQT_SRC_KERNELS_HPP
#define LQT_SRC_KERNELS_HPP

#include <span>
#include <vector>

#include "lqt/pauli.hpp"

namespace lqt::detail {

/// Applies a 2x2 row-major matrix to bit `bit` of every index.
inline void apply_1q(std::span<Complex> v, int bit, const Complex *m) {
    const std::size_t stride = std::size_t{1} << bit;
    for (std::size_t base = 0; base < v.size(); base += 2 * stride) {
        for (std::size_t j = base; j < base + stride; ++j) {
            Complex a0 = v[j];
            Complex a1 = v[j + stride];
            v[j] = m[0] * a0 + m[1] * a1;
            v[j + stride] = m[2] * a0 + m[3] * a1;
        }
    }
}

/// Applies a 4x4 row-major matrix on bits (b0, b1); local index = bit0 + 2*bit1.
inline void apply_2q(std::span<Complex> v, int b0, int b1, const Complex *m) {
    const std::size_t s0 = std::size_t{1} << b0;
    const std::size_t s1 = std::size_t{1} << b1;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (j & (s0 | s1)) {
            continue;
        }
        const std::size_t idx[4] = {j, j | s0, j | s1, j | s0 | s1};
        Complex a[4] = {v[idx[0]], v[idx[1]], v[idx[2]], v[idx[3]]};
        for (int r = 0; r < 4; ++r) {
            v[idx[r]] = m[4 * r] * a[0] + m[4 * r + 1] * a[1] + m[4 * r + 2] * a[2] + m[4 * r + 3] * a[3];
        }
    }
}

}  // namespace lqt::detail

#endif
