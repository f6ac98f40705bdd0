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

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

#include "lqt/errors.hpp"
#include "test_util.hpp"

using namespace lqt;
using namespace lqt::testing;

namespace {

const double kInvSqrt2 = 1 / std::numbers::sqrt2;

StateVector plus_state() {
    return StateVector(1, {kInvSqrt2, kInvSqrt2});
}

}  // namespace

TEST(StateVector, construction_validates) {
    ASSERT_THROW(StateVector(1, {1, 1}), DomainError);
    ASSERT_THROW(StateVector(2, {1, 0}), DomainError);
    ASSERT_THROW(StateVector::basis(2, 4), DomainError);
    ASSERT_THROW(StateVector::normalized(1, {0, 0}), OrthogonalSubspaceError);
    ASSERT_EQ(new_basis_state(3, 5).amplitude(5), Complex(1));
}

TEST(StateVector, hadamard_on_zero) {
    StateVector s = apply_gate(new_basis_state(1, 0), Gate::h(0));
    ASSERT_NEAR(s.amplitude(0).real(), kInvSqrt2, 1e-15);
    ASSERT_NEAR(s.amplitude(1).real(), kInvSqrt2, 1e-15);
}

TEST(StateVector, cnot_makes_bell_pair) {
    // (|00> + |10>)/sqrt2 in qubit-0-first ket notation means qubit 0 is in |+>.
    StateVector s = apply_gate(new_basis_state(2, 0), Gate::h(0));
    s = apply_gate(std::move(s), Gate::cnot(0, 1));
    ASSERT_NEAR(std::abs(s.amplitude(0)), kInvSqrt2, 1e-15);
    ASSERT_NEAR(std::abs(s.amplitude(3)), kInvSqrt2, 1e-15);
    ASSERT_NEAR(std::abs(s.amplitude(1)), 0, 1e-15);
    ASSERT_NEAR(std::abs(s.amplitude(2)), 0, 1e-15);
}

TEST(StateVector, gate_target_validation) {
    StateVector s = new_basis_state(2, 0);
    ASSERT_THROW(s.apply(Gate::cnot(1, 1)), DomainError);
    ASSERT_THROW(s.apply(Gate::x(2)), DomainError);
    ASSERT_THROW(s.apply(Gate{GateKind::H, {0, 1}}), DomainError);
}

TEST(StateVector, hadamard_twice_and_norm_preservation) {
    Rng rng = test_rng();
    for (int trial = 0; trial < 20; ++trial) {
        StateVector s = random_state(4, rng);
        StateVector h2 = apply_gate(apply_gate(s, Gate::h(trial % 4)), Gate::h(trial % 4));
        ASSERT_LT(max_abs_diff(h2.amplitudes(), s.amplitudes()), 1e-12);
        for (const Gate &g : {Gate::s(1), Gate::t(2), Gate::rz(3, 0.37 * trial), Gate::y(0), Gate::cnot(3, 0)}) {
            s.apply(g);
            ASSERT_NEAR(s.norm_squared(), 1.0, 1e-10) << g.name();
        }
    }
}

TEST(StateVector, gate_matrices_are_unitary) {
    for (const Gate &g : {Gate::h(0), Gate::x(0), Gate::y(0), Gate::z(0), Gate::s(0), Gate::t(0), Gate::rz(0, 1.1),
                          Gate::cnot(0, 1)}) {
        auto m = g.matrix();
        const std::size_t d = g.arity() == 2 ? 4 : 2;
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                Complex acc = 0;
                for (std::size_t k = 0; k < d; ++k) {
                    acc += std::conj(m[k * d + i]) * m[k * d + j];
                }
                ASSERT_LT(std::abs(acc - (i == j ? 1.0 : 0.0)), 1e-12) << g.name();
            }
        }
    }
}

TEST(StateVector, expectation_examples) {
    ASSERT_DOUBLE_EQ(expectation(new_basis_state(1, 0), PauliString::parse("Z")), 1.0);
    ASSERT_NEAR(expectation(plus_state(), PauliString::parse("X")), 1.0, 1e-15);
    StateVector bell(2, {kInvSqrt2, 0, 0, kInvSqrt2});
    ASSERT_NEAR(expectation(bell, PauliString::parse("YY")), -1.0, 1e-15);
    ASSERT_NEAR(expectation(bell, PauliString::parse("-YY")), 1.0, 1e-15);
    ASSERT_THROW(expectation(bell, PauliString::parse("iYY")), DomainError);
}

TEST(StateVector, expectation_bounds) {
    Rng rng = test_rng(1);
    for (int trial = 0; trial < 100; ++trial) {
        StateVector s = random_state(3, rng);
        PauliString p = random_pauli(3, rng);
        if (!p.is_hermitian()) {
            p = p.times_i();
        }
        ASSERT_LE(std::abs(expectation(s, p)), 1 + 1e-10);
    }
}

TEST(StateVector, tensor_ordering_and_factorization) {
    StateVector s = tensor(new_basis_state(1, 0), new_basis_state(1, 1));
    ASSERT_EQ(s.amplitude(2), Complex(1));
    StateVector pp = tensor(plus_state(), plus_state());
    for (std::size_t i = 0; i < 4; ++i) {
        ASSERT_NEAR(pp.amplitude(i).real(), 0.5, 1e-15);
    }
    Rng rng = test_rng(2);
    for (int trial = 0; trial < 10; ++trial) {
        StateVector a = random_state(2, rng);
        StateVector b = random_state(3, rng);
        StateVector ab = tensor(a, b);
        ASSERT_NEAR(ab.norm_squared(), 1.0, 1e-12);
        auto pa = PauliString::parse("XY");
        auto pb = PauliString::parse("ZIX");
        auto joint = PauliString::parse("XYZIX");
        ASSERT_NEAR(expectation(ab, joint), expectation(a, pa) * expectation(b, pb), 1e-10);
    }
    ASSERT_THROW(tensor(new_basis_state(12, 0), new_basis_state(9, 0)), DomainError);
}

TEST(StateVector, measure_deterministic_and_ghz) {
    Rng rng = test_rng(3);
    MeasureResult r = measure(new_basis_state(1, 0), PauliString::parse("Z"), rng);
    ASSERT_EQ(r.outcome, 1);
    ASSERT_DOUBLE_EQ(r.probability, 1.0);
    ASSERT_NEAR(fidelity(r.post_state, new_basis_state(1, 0)), 1.0, 1e-15);

    StateVector ghz3(3, {kInvSqrt2, 0, 0, 0, 0, 0, 0, kInvSqrt2});
    MeasureResult g = measure(ghz3, PauliString::parse("_ZZ"), rng);
    ASSERT_EQ(g.outcome, 1);
    ASSERT_NEAR(g.probability, 1.0, 1e-15);
    ASSERT_NEAR(fidelity(g.post_state, ghz3), 1.0, 1e-15);
}

TEST(StateVector, measure_frequencies_match_born_rule) {
    Rng rng = test_rng(4);
    StateVector s(1, {std::cos(0.4), std::sin(0.4)});
    const auto z = PauliString::parse("Z");
    const double p_plus = 0.5 * (1 + expectation(s, z));
    const int n = 100000;
    int plus = 0;
    for (int k = 0; k < n; ++k) {
        plus += measure(s, z, rng).outcome == 1;
    }
    const double se = std::sqrt(p_plus * (1 - p_plus) / n);
    ASSERT_LT(std::abs(plus / static_cast<double>(n) - p_plus), 4 * se);

    // X on |0> is unbiased.
    int x_plus = 0;
    for (int k = 0; k < n; ++k) {
        x_plus += measure(new_basis_state(1, 0), PauliString::parse("X"), rng).outcome == 1;
    }
    ASSERT_LT(std::abs(x_plus / static_cast<double>(n) - 0.5), 4 * 0.5 / std::sqrt(n));
}

TEST(StateVector, project_examples) {
    PauliSum zero(1);
    zero.add(0.5, PauliString::parse("I"));
    zero.add(0.5, PauliString::parse("Z"));
    Projection a = project(new_basis_state(1, 0), zero);
    ASSERT_NEAR(a.probability, 1.0, 1e-15);
    Projection b = project(plus_state(), zero);
    ASSERT_NEAR(b.probability, 0.5, 1e-15);
    ASSERT_NEAR(fidelity(b.state, new_basis_state(1, 0)), 1.0, 1e-15);
    ASSERT_THROW(project(new_basis_state(1, 1), zero), OrthogonalSubspaceError);
    ProjectionResult c = try_project(new_basis_state(1, 1), zero);
    ASSERT_FALSE(c.state.has_value());
    ASSERT_NEAR(c.probability, 0.0, 1e-15);
    ProjectionResult d = try_project(plus_state(), PauliString::parse("Z"), -1);
    ASSERT_NEAR(d.probability, 0.5, 1e-15);
    ASSERT_NEAR(fidelity(*d.state, new_basis_state(1, 1)), 1.0, 1e-15);
}

TEST(StateVector, embed_places_qubits) {
    StateVector one = new_basis_state(1, 1);
    const int positions[] = {2};
    StateVector e = embed(one, 3, positions);
    ASSERT_EQ(e.amplitude(4), Complex(1));
    const int bad[] = {3};
    ASSERT_THROW(embed(one, 3, bad), DomainError);
}

TEST(StateVector, inner_product_and_fidelity) {
    StateVector a = plus_state();
    StateVector b = new_basis_state(1, 0);
    ASSERT_NEAR(inner_product(a, b).real(), kInvSqrt2, 1e-15);
    ASSERT_NEAR(fidelity(a, b), 0.5, 1e-15);
    ASSERT_THROW(inner_product(a, new_basis_state(2, 0)), DomainError);
}
