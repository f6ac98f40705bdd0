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

#ifndef LQT_STATE_HPP
#define LQT_STATE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "lqt/pauli.hpp"

namespace lqt {

/// The single random engine type used across the library. Every stochastic
/// operation takes one by reference; nothing draws from global state.
using Rng = std::mt19937_64;

enum class GateKind { H, X, Y, Z, S, T, Rz, CNOT };

struct Gate {
    GateKind kind;
    /// One target for single-qubit gates; {control, target} for CNOT.
    std::vector<int> targets;
    /// Rotation angle in radians (Rz only).
    double angle = 0.0;

    static Gate h(int q) { return {GateKind::H, {q}}; }
    static Gate x(int q) { return {GateKind::X, {q}}; }
    static Gate y(int q) { return {GateKind::Y, {q}}; }
    static Gate z(int q) { return {GateKind::Z, {q}}; }
    static Gate s(int q) { return {GateKind::S, {q}}; }
    static Gate t(int q) { return {GateKind::T, {q}}; }
    static Gate rz(int q, double phi) { return {GateKind::Rz, {q}, phi}; }
    static Gate cnot(int control, int target) { return {GateKind::CNOT, {control, target}}; }

    int arity() const { return kind == GateKind::CNOT ? 2 : 1; }
    /// Row-major unitary on the gate's own qubits (2x2 or 4x4). For CNOT the
    /// local basis index is control + 2*target.
    std::vector<Complex> matrix() const;
    std::string name() const;
};

/// Normalized pure state of 1..20 qubits. Qubit 0 is the least significant bit
/// of the basis index.
class StateVector {
   public:
    /// Validates dimension and unit norm (within tol::kNorm).
    StateVector(int num_qubits, std::vector<Complex> amplitudes);

    static StateVector basis(int num_qubits, std::uint64_t index);
    /// Rescales an arbitrary nonzero vector to unit norm. Throws
    /// OrthogonalSubspaceError when the squared norm is below the probability floor.
    static StateVector normalized(int num_qubits, std::vector<Complex> amplitudes);

    int num_qubits() const { return num_qubits_; }
    std::size_t dimension() const { return amps_.size(); }
    std::span<const Complex> amplitudes() const { return amps_; }
    Complex amplitude(std::size_t index) const { return amps_.at(index); }
    double norm_squared() const;

    // In-place mutation; callers holding a StateVector own it exclusively.
    void apply(const Gate &gate);
    void apply(const PauliString &op);

   private:
    struct Unchecked {};
    StateVector(int num_qubits, std::vector<Complex> amplitudes, Unchecked);

    int num_qubits_;
    std::vector<Complex> amps_;
};

StateVector new_basis_state(int num_qubits, std::uint64_t basis_index);
StateVector apply_gate(StateVector state, const Gate &gate);
StateVector apply_pauli(StateVector state, const PauliString &op);
StateVector tensor(const StateVector &a, const StateVector &b);

/// <psi|P|psi> for a Hermitian (phase +-1) Pauli string.
double expectation(const StateVector &state, const PauliString &observable);

Complex inner_product(const StateVector &a, const StateVector &b);
/// |<a|b>|^2
double fidelity(const StateVector &a, const StateVector &b);

struct MeasureResult {
    int outcome;  // +1 or -1
    StateVector post_state;
    double probability;
};

/// Samples a +-1 eigenvalue of a Hermitian Pauli observable with Born
/// probabilities and collapses onto that eigenspace.
MeasureResult measure(const StateVector &state, const PauliString &observable, Rng &rng);

struct ProjectionResult {
    double probability;
    /// Empty when probability is below the floor.
    std::optional<StateVector> state;
};

struct Projection {
    double probability;
    StateVector state;
};

/// prob = <psi|Pi|psi>, post = Pi psi / sqrt(prob). Throws OrthogonalSubspaceError
/// when prob < tol::kProbabilityFloor.
Projection project(const StateVector &state, const PauliSum &projector);
ProjectionResult try_project(const StateVector &state, const PauliSum &projector);
/// Single (I + sign*P)/2 projection.
ProjectionResult try_project(const StateVector &state, const PauliString &observable, int sign);

/// Places `state` on the listed qubits of a larger all-|0> register:
/// local qubit j lands on positions[j].
StateVector embed(const StateVector &state, int total_qubits, std::span<const int> positions);

}  // namespace lqt

#endif
