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

#ifndef LQT_PROTOCOL_HPP
#define LQT_PROTOCOL_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lqt/shor_code.hpp"
#include "lqt/state.hpp"

namespace lqt {

// Resource register layout: qubits 0..8 hold the code block, qubit 9 is the
// physical half. When an input is attached it sits on qubit 10.
inline constexpr int kResourceQubits = 10;
inline constexpr int kPhysicalQubit = 9;
inline constexpr int kCodeOffset = 0;
inline constexpr int kInputQubit = 10;

/// (|0>|0_L> + |1>|1_L>)/sqrt2 on the 10-qubit resource register.
struct ResourceState {
    StateVector state;
};

enum class BellState { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

inline constexpr BellState kBellStates[4] = {BellState::PhiPlus, BellState::PhiMinus, BellState::PsiPlus,
                                             BellState::PsiMinus};

std::string bell_label(BellState b);

/// Amplitudes B[a + 2b] of a Bell state, a = input bit, b = physical-qubit bit.
std::array<Complex, 4> bell_amplitudes(BellState s);

struct BsmOutcome {
    BellState label;
    /// Logical feedforward on the 9 code qubits: I, Z_L, X_L, X_L Z_L.
    PauliString correction;
};

BsmOutcome bsm_outcome(BellState label, const ShorCode &code = ShorCode::standard());

struct BsmResult {
    BsmOutcome outcome;
    double probability;
    /// Normalized state of the remaining qubits (measured pair removed).
    StateVector state;
};

enum class TeleportMode { PostselectPhiPlus, Feedforward };

/// "postselect_phi_plus" or "feedforward".
std::string mode_name(TeleportMode mode);
std::optional<TeleportMode> parse_mode(std::string_view name);

StateVector prepare_ghz4();

/// GHZ4 over the three polarization qubits and the physical qubit, Hadamards on
/// the polarizations, then polarization->path and polarization->OAM CNOTs.
ResourceState prepare_resource_circuit();

/// The Bell-type resource built directly from the logical code words.
ResourceState resource_from_code_words(const ShorCode &code = ShorCode::standard());

/// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
StateVector prepare_input(double theta, double phi);

struct NamedInput {
    std::string name;
    double theta;
    double phi;

    StateVector state() const { return prepare_input(theta, phi); }
    Complex alpha() const;
    Complex beta() const;
};

namespace inputs {
NamedInput zero();
NamedInput plus();
/// (|0> + i|1>)/sqrt2
NamedInput right();
/// (|0> + e^{i pi/4}|1>)/sqrt2
NamedInput magic();
/// zero, plus, right: the +1 eigenstates of Z, X and Y.
std::vector<NamedInput> pauli_eigenstates();
std::optional<NamedInput> by_name(const std::string &name);
}  // namespace inputs

/// Bell-state measurement on (input_qubit, physical_qubit), input first in the
/// Bell-basis labels. Samples the outcome unless `forced` is given; a forced
/// outcome with vanishing probability throws OrthogonalSubspaceError.
BsmResult bsm(const StateVector &joint, int input_qubit, int physical_qubit, Rng &rng,
              std::optional<BellState> forced = std::nullopt);

/// Attaches `input` as qubit 10 of the resource register.
StateVector join_input(const ResourceState &resource, const StateVector &input);

/// One BSM branch with its feedforward correction applied to the code block.
BsmResult teleport_branch(const StateVector &input, const ResourceState &resource, BellState outcome,
                          const ShorCode &code = ShorCode::standard());

/// Full teleportation. Post-selection resamples the BSM until Phi+ appears;
/// feedforward accepts any outcome and applies the logical correction.
StateVector teleport(const StateVector &input, const ResourceState &resource, TeleportMode mode, Rng &rng,
                     const ShorCode &code = ShorCode::standard());

}  // namespace lqt

#endif
