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

#include "lqt/protocol.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "lqt/errors.hpp"
#include "lqt/tolerances.hpp"

namespace lqt {

using std::numbers::sqrt2;

std::array<Complex, 4> bell_amplitudes(BellState s) {
    const double r = 1.0 / sqrt2;
    switch (s) {
        case BellState::PhiPlus:
            return {r, 0, 0, r};
        case BellState::PhiMinus:
            return {r, 0, 0, -r};
        case BellState::PsiPlus:
            return {0, r, r, 0};
        case BellState::PsiMinus:
            return {0, -r, r, 0};  // |a=0,b=1> - |a=1,b=0>
    }
    throw DomainError("unknown Bell state");
}

std::string bell_label(BellState b) {
    switch (b) {
        case BellState::PhiPlus:
            return "phi+";
        case BellState::PhiMinus:
            return "phi-";
        case BellState::PsiPlus:
            return "psi+";
        case BellState::PsiMinus:
            return "psi-";
    }
    return "?";
}

BsmOutcome bsm_outcome(BellState label, const ShorCode &code) {
    switch (label) {
        case BellState::PhiPlus:
            return {label, PauliString(ShorCode::kNumQubits)};
        case BellState::PhiMinus:
            return {label, code.logical_z()};
        case BellState::PsiPlus:
            return {label, code.logical_x()};
        case BellState::PsiMinus:
            return {label, code.logical_x() * code.logical_z()};
    }
    throw DomainError("unknown Bell state");
}

StateVector prepare_ghz4() {
    StateVector s = StateVector::basis(4, 0);
    s.apply(Gate::h(0));
    for (int q = 1; q < 4; ++q) {
        s.apply(Gate::cnot(0, q));
    }
    return s;
}

ResourceState prepare_resource_circuit() {
    const auto &blocks = kDefaultBlocks;
    const std::array<int, 4> ghz_positions = {blocks[0][0], blocks[1][0], blocks[2][0], kPhysicalQubit};
    StateVector s = embed(prepare_ghz4(), kResourceQubits, ghz_positions);
    for (const auto &block : blocks) {
        s.apply(Gate::h(block[0]));
    }
    for (const auto &block : blocks) {
        s.apply(Gate::cnot(block[0], block[1]));
        s.apply(Gate::cnot(block[0], block[2]));
    }
    return {std::move(s)};
}

ResourceState resource_from_code_words(const ShorCode &code) {
    const StateVector zero_state = logical_basis(0, code);
    const StateVector one_state = logical_basis(1, code);
    auto zero = zero_state.amplitudes();
    auto one = one_state.amplitudes();
    std::vector<Complex> a(std::size_t{1} << kResourceQubits);
    const std::size_t half = zero.size();
    for (std::size_t c = 0; c < half; ++c) {
        a[c] = zero[c] / sqrt2;
        a[half + c] = one[c] / sqrt2;
    }
    return {StateVector(kResourceQubits, std::move(a))};
}

StateVector prepare_input(double theta, double phi) {
    return StateVector(1, {std::cos(theta / 2), std::polar(std::sin(theta / 2), phi)});
}

Complex NamedInput::alpha() const {
    return std::cos(theta / 2);
}

Complex NamedInput::beta() const {
    return std::polar(std::sin(theta / 2), phi);
}

std::string mode_name(TeleportMode mode) {
    return mode == TeleportMode::PostselectPhiPlus ? "postselect_phi_plus" : "feedforward";
}

std::optional<TeleportMode> parse_mode(std::string_view name) {
    if (name == "postselect_phi_plus") {
        return TeleportMode::PostselectPhiPlus;
    }
    if (name == "feedforward") {
        return TeleportMode::Feedforward;
    }
    return std::nullopt;
}

namespace inputs {

NamedInput zero() {
    return {"zero", 0.0, 0.0};
}
NamedInput plus() {
    return {"plus", std::numbers::pi / 2, 0.0};
}
NamedInput right() {
    return {"right", std::numbers::pi / 2, std::numbers::pi / 2};
}
NamedInput magic() {
    return {"magic", std::numbers::pi / 2, std::numbers::pi / 4};
}
std::vector<NamedInput> pauli_eigenstates() {
    return {zero(), plus(), right()};
}
std::optional<NamedInput> by_name(const std::string &name) {
    for (const auto &n : {zero(), plus(), right(), magic()}) {
        if (n.name == name) {
            return n;
        }
    }
    return std::nullopt;
}

}  // namespace inputs

BsmResult bsm(const StateVector &joint, int input_qubit, int physical_qubit, Rng &rng,
              std::optional<BellState> forced) {
    const int n = joint.num_qubits();
    if (input_qubit < 0 || input_qubit >= n || physical_qubit < 0 || physical_qubit >= n) {
        throw DomainError("BSM qubit out of range");
    }
    if (input_qubit == physical_qubit) {
        throw DomainError("BSM qubits must be distinct");
    }
    if (n < 3) {
        throw DomainError("BSM needs at least one remaining qubit");
    }
    const std::size_t ma = std::size_t{1} << input_qubit;
    const std::size_t mb = std::size_t{1} << physical_qubit;
    const int lo = std::min(input_qubit, physical_qubit);
    const int hi = std::max(input_qubit, physical_qubit);
    const std::size_t out_dim = std::size_t{1} << (n - 2);
    auto src = joint.amplitudes();

    // Gather the four (a, b) slices of the remaining register.
    std::array<std::vector<Complex>, 4> slices;
    for (auto &s : slices) {
        s.resize(out_dim);
    }
    for (std::size_t c = 0; c < out_dim; ++c) {
        // Re-insert zero bits at positions lo and hi.
        std::size_t low_part = c & ((std::size_t{1} << lo) - 1);
        std::size_t rest = c >> lo;
        std::size_t mid_part = rest & ((std::size_t{1} << (hi - lo - 1)) - 1);
        std::size_t high_part = rest >> (hi - lo - 1);
        std::size_t base = low_part | (mid_part << (lo + 1)) | (high_part << (hi + 1));
        slices[0][c] = src[base];
        slices[1][c] = src[base | ma];
        slices[2][c] = src[base | mb];
        slices[3][c] = src[base | ma | mb];
    }

    std::array<std::vector<Complex>, 4> branches;
    std::array<double, 4> probs{};
    for (int k = 0; k < 4; ++k) {
        auto b = bell_amplitudes(kBellStates[k]);
        branches[k].assign(out_dim, 0.0);
        for (int ab = 0; ab < 4; ++ab) {
            if (b[ab] == 0.0) {
                continue;
            }
            Complex w = std::conj(b[ab]);
            for (std::size_t c = 0; c < out_dim; ++c) {
                branches[k][c] += w * slices[ab][c];
            }
        }
        for (const auto &a : branches[k]) {
            probs[k] += std::norm(a);
        }
    }

    int chosen = 0;
    if (forced) {
        chosen = static_cast<int>(*forced);
        if (probs[chosen] < tol::kProbabilityFloor) {
            throw OrthogonalSubspaceError("forced BSM outcome " + bell_label(*forced) + " has vanishing probability");
        }
    } else {
        std::uniform_real_distribution<double> u(0.0, 1.0);
        double r = u(rng) * (probs[0] + probs[1] + probs[2] + probs[3]);
        chosen = 3;
        double acc = 0;
        for (int k = 0; k < 4; ++k) {
            acc += probs[k];
            if (r < acc && probs[k] >= tol::kProbabilityFloor) {
                chosen = k;
                break;
            }
        }
        while (probs[chosen] < tol::kProbabilityFloor) {
            --chosen;
        }
    }
    BellState label = kBellStates[chosen];
    BsmOutcome outcome = (n - 2 == ShorCode::kNumQubits) ? bsm_outcome(label) : BsmOutcome{label, PauliString(n - 2)};
    return {std::move(outcome), probs[chosen],
            StateVector::normalized(n - 2, std::move(branches[chosen]))};
}

namespace {

// Code-block amplitudes of one BSM branch taken straight from the resource
// halves: branch[c] = sum_b w_b res[c + 512 b], w_b = sum_a conj(B[a+2b]) in[a].
std::vector<Complex> resource_branch(const StateVector &resource, const StateVector &input, BellState outcome) {
    const auto b = bell_amplitudes(outcome);
    auto res = resource.amplitudes();
    auto in = input.amplitudes();
    const std::size_t half = res.size() / 2;
    const Complex w0 = std::conj(b[0]) * in[0] + std::conj(b[1]) * in[1];
    const Complex w1 = std::conj(b[2]) * in[0] + std::conj(b[3]) * in[1];
    std::vector<Complex> out(half);
    for (std::size_t c = 0; c < half; ++c) {
        out[c] = w0 * res[c] + w1 * res[half + c];
    }
    return out;
}

double norm_squared(const std::vector<Complex> &v) {
    double s = 0;
    for (const auto &a : v) {
        s += std::norm(a);
    }
    return s;
}

void check_teleport_operands(const StateVector &input, const ResourceState &resource) {
    if (input.num_qubits() != 1) {
        throw DomainError("teleportation input must be a single qubit");
    }
    if (resource.state.num_qubits() != kResourceQubits) {
        throw DomainError("resource state must have 10 qubits");
    }
}

}  // namespace

StateVector join_input(const ResourceState &resource, const StateVector &input) {
    if (input.num_qubits() != 1) {
        throw DomainError("teleportation input must be a single qubit");
    }
    return tensor(resource.state, input);
}

BsmResult teleport_branch(const StateVector &input, const ResourceState &resource, BellState outcome,
                          const ShorCode &code) {
    check_teleport_operands(input, resource);
    std::vector<Complex> branch = resource_branch(resource.state, input, outcome);
    const double prob = norm_squared(branch);
    if (prob < tol::kProbabilityFloor) {
        throw OrthogonalSubspaceError("BSM outcome " + bell_label(outcome) + " has vanishing probability");
    }
    BsmResult r{bsm_outcome(outcome, code), prob, StateVector::normalized(ShorCode::kNumQubits, std::move(branch))};
    r.state.apply(r.outcome.correction);
    return r;
}

StateVector teleport(const StateVector &input, const ResourceState &resource, TeleportMode mode, Rng &rng,
                     const ShorCode &code) {
    check_teleport_operands(input, resource);
    std::array<std::vector<Complex>, 4> branches;
    std::array<double, 4> probs{};
    for (int k = 0; k < 4; ++k) {
        branches[k] = resource_branch(resource.state, input, kBellStates[k]);
        probs[k] = norm_squared(branches[k]);
    }
    if (mode == TeleportMode::PostselectPhiPlus) {
        // Repeating the coincidence trial until Phi+ fires leaves exactly
        // the normalized Phi+ branch.
        if (probs[0] < tol::kProbabilityFloor) {
            throw OrthogonalSubspaceError("BSM outcome phi+ has vanishing probability");
        }
        return StateVector::normalized(ShorCode::kNumQubits, std::move(branches[0]));
    }
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double r = u(rng) * (probs[0] + probs[1] + probs[2] + probs[3]);
    int chosen = 3;
    double acc = 0;
    for (int k = 0; k < 4; ++k) {
        acc += probs[k];
        if (r < acc && probs[k] >= tol::kProbabilityFloor) {
            chosen = k;
            break;
        }
    }
    while (probs[chosen] < tol::kProbabilityFloor) {
        --chosen;
    }
    StateVector out = StateVector::normalized(ShorCode::kNumQubits, std::move(branches[chosen]));
    out.apply(bsm_outcome(kBellStates[chosen], code).correction);
    return out;
}

}  // namespace lqt
