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

#include "lqt/density.hpp"

#include <numbers>

#include "gtest/gtest.h"

#include "lqt/errors.hpp"
#include "lqt/noise.hpp"
#include "test_util.hpp"

using namespace lqt;
using namespace lqt::testing;

TEST(DensityOperator, from_pure_invariants) {
    Rng rng = test_rng();
    StateVector s = random_state(3, rng);
    auto rho = DensityOperator::from_pure(s);
    ASSERT_TRUE(rho.satisfies_invariants());
    ASSERT_NEAR(rho.trace().real(), 1.0, 1e-12);
    ASSERT_NEAR(rho.fidelity(s), 1.0, 1e-12);
    auto p = PauliString::parse("XYZ");
    ASSERT_NEAR(rho.expectation(p).real(), expectation(s, p), 1e-12);
}

TEST(DensityOperator, identity_channel_is_noop) {
    Rng rng = test_rng(1);
    auto rho = DensityOperator::from_pure(random_state(2, rng));
    auto out = dm_evolve(rho, {{1.0, PauliString(2)}});
    ASSERT_LT(max_abs_diff(out.data(), rho.data()), 1e-15);
}

TEST(DensityOperator, full_dephasing_of_plus) {
    const double h = 1 / std::numbers::sqrt2;
    auto rho = DensityOperator::from_pure(StateVector(1, {h, h}));
    auto out = dm_evolve(rho, {{0.5, PauliString::parse("I")}, {0.5, PauliString::parse("Z")}});
    ASSERT_NEAR(out.at(0, 0).real(), 0.5, 1e-15);
    ASSERT_NEAR(out.at(1, 1).real(), 0.5, 1e-15);
    ASSERT_NEAR(std::abs(out.at(0, 1)), 0.0, 1e-15);
    ASSERT_NEAR(std::abs(out.at(1, 0)), 0.0, 1e-15);
}

TEST(DensityOperator, depolarizing_diagonal_weights) {
    const double p = 0.12;
    auto rho = DensityOperator::from_pure(new_basis_state(1, 0));
    auto out = dm_evolve(rho, PauliChannel::depolarizing(p).as_channel(1, 0));
    ASSERT_NEAR(out.at(0, 0).real(), 1 - 2 * p / 3, 1e-15);
    ASSERT_NEAR(out.at(1, 1).real(), 2 * p / 3, 1e-15);
    ASSERT_TRUE(out.satisfies_invariants());
}

TEST(DensityOperator, gate_conjugation_matches_state_vector) {
    Rng rng = test_rng(2);
    StateVector s = random_state(3, rng);
    auto rho = DensityOperator::from_pure(s);
    for (const Gate &g : {Gate::h(0), Gate::cnot(0, 2), Gate::t(1), Gate::rz(2, 0.3)}) {
        rho.conjugate(g);
        s.apply(g);
    }
    ASSERT_LT(max_abs_diff(rho.data(), DensityOperator::from_pure(s).data()), 1e-12);
    auto mixed = dm_evolve(rho, {{0.3, Gate::h(1)}, {0.7, PauliString::parse("ZZ_")}});
    ASSERT_TRUE(mixed.satisfies_invariants());
}

TEST(DensityOperator, malformed_channels) {
    auto rho = DensityOperator::from_pure(new_basis_state(1, 0));
    ASSERT_THROW(dm_evolve(rho, {}), DomainError);
    ASSERT_THROW(dm_evolve(rho, {{0.5, PauliString::parse("I")}}), DomainError);
    ASSERT_THROW(dm_evolve(rho, {{1.5, PauliString::parse("I")}, {-0.5, PauliString::parse("X")}}), DomainError);
    ASSERT_THROW(dm_evolve(rho, {{1.0, PauliString::parse("XX")}}), DomainError);
    ASSERT_THROW(DensityOperator::from_pure(new_basis_state(11, 0)), DomainError);
}

TEST(DensityOperator, invariants_detect_bad_matrices) {
    auto not_psd = DensityOperator::from_matrix(1, {1.5, 0, 0, -0.5});
    ASSERT_FALSE(not_psd.satisfies_invariants());
    auto not_hermitian = DensityOperator::from_matrix(1, {0.5, 0.5, 0, 0.5});
    ASSERT_FALSE(not_hermitian.satisfies_invariants());
    ASSERT_THROW(DensityOperator::from_matrix(1, {1, 0, 0}), DomainError);
}
