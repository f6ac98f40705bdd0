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

#ifndef LQT_DENSITY_HPP
#define LQT_DENSITY_HPP

#include <variant>
#include <vector>

#include "lqt/pauli.hpp"
#include "lqt/state.hpp"

namespace lqt {

inline constexpr int kMaxDensityQubits = 10;

/// Exact mixed state on up to 10 qubits, stored as a dense row-major matrix.
/// Only used as a brute-force reference for the trajectory engine.
class DensityOperator {
   public:
    static DensityOperator from_pure(const StateVector &state);

    int num_qubits() const { return num_qubits_; }
    std::size_t dimension() const { return dim_; }
    Complex at(std::size_t row, std::size_t col) const { return m_[row * dim_ + col]; }
    std::span<const Complex> data() const { return m_; }

    Complex trace() const;
    /// Tr(P rho).
    Complex expectation(const PauliString &op) const;
    /// <psi|rho|psi>.
    double fidelity(const StateVector &psi) const;

    // rho <- K rho K^dagger (unnormalized, in place).
    void conjugate(const PauliString &op);
    void conjugate(const Gate &gate);

    /// Trace 1, Hermitian and PSD within the project tolerances. The PSD check
    /// diagonalizes the matrix and is meant for tests.
    bool satisfies_invariants() const;

    /// Builds from raw data; validates shape only.
    static DensityOperator from_matrix(int num_qubits, std::vector<Complex> matrix);

   private:
    DensityOperator(int num_qubits, std::vector<Complex> matrix);

    int num_qubits_ = 0;
    std::size_t dim_ = 0;
    std::vector<Complex> m_;
};

struct ChannelTerm {
    double probability;
    std::variant<PauliString, Gate> op;
};
using Channel = std::vector<ChannelTerm>;

/// rho <- sum_i p_i K_i rho K_i^dagger. Probabilities must be >= 0 and sum to 1
/// within tol::kChannelSum.
DensityOperator dm_evolve(const DensityOperator &rho, const Channel &channel);

}  // namespace lqt

#endif
