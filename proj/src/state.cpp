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

#include "lqt/state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "kernels.hpp"
#include "lqt/errors.hpp"
#include "lqt/tolerances.hpp"

namespace lqt {

namespace {

void check_register(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw DomainError("qubit count " + std::to_string(n) + " outside 1.." + std::to_string(kMaxQubits));
    }
}

double sum_norm(std::span<const Complex> v) {
    double s = 0;
    for (const auto &a : v) {
        s += std::norm(a);
    }
    return s;
}

void check_gate_targets(const Gate &gate, int num_qubits) {
    if (static_cast<int>(gate.targets.size()) != gate.arity()) {
        throw DomainError(gate.name() + " expects " + std::to_string(gate.arity()) + " target(s)");
    }
    for (int q : gate.targets) {
        if (q < 0 || q >= num_qubits) {
            throw DomainError(gate.name() + " target " + std::to_string(q) + " out of range");
        }
    }
    if (gate.arity() == 2 && gate.targets[0] == gate.targets[1]) {
        throw DomainError(gate.name() + " targets must be distinct");
    }
}

}  // namespace

std::vector<Complex> Gate::matrix() const {
    using std::numbers::sqrt2;
    const Complex i(0, 1);
    switch (kind) {
        case GateKind::H:
            return {1 / sqrt2, 1 / sqrt2, 1 / sqrt2, -1 / sqrt2};
        case GateKind::X:
            return {0, 1, 1, 0};
        case GateKind::Y:
            return {0, -i, i, 0};
        case GateKind::Z:
            return {1, 0, 0, -1};
        case GateKind::S:
            return {1, 0, 0, i};
        case GateKind::T:
            return {1, 0, 0, std::polar(1.0, std::numbers::pi / 4)};
        case GateKind::Rz:
            return {std::polar(1.0, -angle / 2), 0, 0, std::polar(1.0, angle / 2)};
        case GateKind::CNOT:
            // local index = control + 2*target; flips target when control is set
            return {1, 0, 0, 0,  //
                    0, 0, 0, 1,  //
                    0, 0, 1, 0,  //
                    0, 1, 0, 0};
    }
    throw DomainError("unknown gate");
}

std::string Gate::name() const {
    switch (kind) {
        case GateKind::H:
            return "H";
        case GateKind::X:
            return "X";
        case GateKind::Y:
            return "Y";
        case GateKind::Z:
            return "Z";
        case GateKind::S:
            return "S";
        case GateKind::T:
            return "T";
        case GateKind::Rz:
            return "Rz";
        case GateKind::CNOT:
            return "CNOT";
    }
    return "?";
}

StateVector::StateVector(int num_qubits, std::vector<Complex> amplitudes, Unchecked)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
}

StateVector::StateVector(int num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
    check_register(num_qubits);
    if (amps_.size() != (std::size_t{1} << num_qubits)) {
        throw DomainError("amplitude count does not match 2^num_qubits");
    }
    if (std::abs(sum_norm(amps_) - 1.0) > tol::kNorm) {
        throw DomainError("state vector is not normalized");
    }
}

StateVector StateVector::basis(int num_qubits, std::uint64_t index) {
    check_register(num_qubits);
    if (index >= (std::uint64_t{1} << num_qubits)) {
        throw DomainError("basis index " + std::to_string(index) + " out of range");
    }
    std::vector<Complex> a(std::size_t{1} << num_qubits);
    a[index] = 1.0;
    return StateVector(num_qubits, std::move(a), Unchecked{});
}

StateVector StateVector::normalized(int num_qubits, std::vector<Complex> amplitudes) {
    check_register(num_qubits);
    if (amplitudes.size() != (std::size_t{1} << num_qubits)) {
        throw DomainError("amplitude count does not match 2^num_qubits");
    }
    double n2 = sum_norm(amplitudes);
    if (n2 < tol::kProbabilityFloor) {
        throw OrthogonalSubspaceError("cannot normalize a vanishing vector");
    }
    double inv = 1.0 / std::sqrt(n2);
    for (auto &a : amplitudes) {
        a *= inv;
    }
    return StateVector(num_qubits, std::move(amplitudes), Unchecked{});
}

double StateVector::norm_squared() const {
    return sum_norm(amps_);
}

void StateVector::apply(const Gate &gate) {
    check_gate_targets(gate, num_qubits_);
    switch (gate.kind) {
        case GateKind::X:
            PauliString::single(num_qubits_, gate.targets[0], Pauli::X).apply(amps_);
            return;
        case GateKind::Z:
            PauliString::single(num_qubits_, gate.targets[0], Pauli::Z).apply(amps_);
            return;
        case GateKind::CNOT: {
            const std::size_t c = std::size_t{1} << gate.targets[0];
            const std::size_t t = std::size_t{1} << gate.targets[1];
            for (std::size_t j = 0; j < amps_.size(); ++j) {
                if ((j & c) && !(j & t)) {
                    std::swap(amps_[j], amps_[j | t]);
                }
            }
            return;
        }
        default: {
            auto m = gate.matrix();
            detail::apply_1q(amps_, gate.targets[0], m.data());
        }
    }
}

void StateVector::apply(const PauliString &op) {
    if (op.num_qubits() != num_qubits_) {
        throw DomainError("Pauli string size does not match state");
    }
    op.apply(amps_);
}

StateVector new_basis_state(int num_qubits, std::uint64_t basis_index) {
    return StateVector::basis(num_qubits, basis_index);
}

StateVector apply_gate(StateVector state, const Gate &gate) {
    state.apply(gate);
    return state;
}

StateVector apply_pauli(StateVector state, const PauliString &op) {
    state.apply(op);
    return state;
}

StateVector tensor(const StateVector &a, const StateVector &b) {
    int n = a.num_qubits() + b.num_qubits();
    if (n > kMaxQubits) {
        throw DomainError("tensor product exceeds " + std::to_string(kMaxQubits) + " qubits");
    }
    std::vector<Complex> out(a.dimension() * b.dimension());
    auto aa = a.amplitudes();
    auto bb = b.amplitudes();
    for (std::size_t j = 0; j < bb.size(); ++j) {
        for (std::size_t i = 0; i < aa.size(); ++i) {
            out[j * aa.size() + i] = aa[i] * bb[j];
        }
    }
    return StateVector::normalized(n, std::move(out));
}

double expectation(const StateVector &state, const PauliString &observable) {
    if (!observable.is_hermitian()) {
        throw DomainError("observable " + observable.str() + " is not Hermitian");
    }
    if (observable.num_qubits() != state.num_qubits()) {
        throw DomainError("observable size does not match state");
    }
    return observable.expectation(state.amplitudes()).real();
}

Complex inner_product(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DomainError("inner product of states with different sizes");
    }
    Complex acc = 0;
    auto aa = a.amplitudes();
    auto bb = b.amplitudes();
    for (std::size_t j = 0; j < aa.size(); ++j) {
        acc += std::conj(aa[j]) * bb[j];
    }
    return acc;
}

double fidelity(const StateVector &a, const StateVector &b) {
    return std::norm(inner_product(a, b));
}

ProjectionResult try_project(const StateVector &state, const PauliString &observable, int sign) {
    if (!observable.is_hermitian()) {
        throw DomainError("observable " + observable.str() + " is not Hermitian");
    }
    if (observable.num_qubits() != state.num_qubits()) {
        throw DomainError("observable size does not match state");
    }
    std::vector<Complex> flipped(state.amplitudes().begin(), state.amplitudes().end());
    observable.apply(flipped);
    auto src = state.amplitudes();
    double prob = 0;
    for (std::size_t j = 0; j < flipped.size(); ++j) {
        flipped[j] = 0.5 * (src[j] + static_cast<double>(sign) * flipped[j]);
        prob += std::norm(flipped[j]);
    }
    if (prob < tol::kProbabilityFloor) {
        return {prob, std::nullopt};
    }
    return {prob, StateVector::normalized(state.num_qubits(), std::move(flipped))};
}

MeasureResult measure(const StateVector &state, const PauliString &observable, Rng &rng) {
    double ev = expectation(state, observable);
    double p_plus = std::clamp(0.5 * (1.0 + ev), 0.0, 1.0);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int outcome = u(rng) < p_plus ? +1 : -1;
    auto r = try_project(state, observable, outcome);
    if (!r.state) {
        // Only reachable through rounding at a deterministic outcome.
        outcome = -outcome;
        r = try_project(state, observable, outcome);
    }
    return {outcome, std::move(*r.state), r.probability};
}

ProjectionResult try_project(const StateVector &state, const PauliSum &projector) {
    if (projector.num_qubits() != state.num_qubits()) {
        throw DomainError("projector size does not match state");
    }
    std::vector<Complex> out = projector.apply(state.amplitudes());
    // <psi|Pi|psi> for a projector equals ||Pi psi||^2.
    double prob = sum_norm(out);
    if (prob < tol::kProbabilityFloor) {
        return {prob, std::nullopt};
    }
    return {prob, StateVector::normalized(state.num_qubits(), std::move(out))};
}

Projection project(const StateVector &state, const PauliSum &projector) {
    auto r = try_project(state, projector);
    if (!r.state) {
        throw OrthogonalSubspaceError("state is orthogonal to the projector's range (prob " + std::to_string(r.probability) + ")");
    }
    return {r.probability, std::move(*r.state)};
}

StateVector embed(const StateVector &state, int total_qubits, std::span<const int> positions) {
    check_register(total_qubits);
    if (static_cast<int>(positions.size()) != state.num_qubits()) {
        throw DomainError("embedding needs one position per qubit");
    }
    std::uint64_t used = 0;
    for (int p : positions) {
        if (p < 0 || p >= total_qubits || (used >> p) & 1u) {
            throw DomainError("embedding positions must be distinct and in range");
        }
        used |= std::uint64_t{1} << p;
    }
    std::vector<Complex> out(std::size_t{1} << total_qubits);
    auto src = state.amplitudes();
    for (std::size_t j = 0; j < src.size(); ++j) {
        std::size_t k = 0;
        for (std::size_t q = 0; q < positions.size(); ++q) {
            if ((j >> q) & 1u) {
                k |= std::size_t{1} << positions[q];
            }
        }
        out[k] = src[j];
    }
    return StateVector(total_qubits, std::move(out));
}

}  // namespace lqt
