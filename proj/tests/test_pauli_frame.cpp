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

#include "lqt/pauli_frame.hpp"

#include <cmath>
#include <numeric>

#include "gtest/gtest.h"

#include "lqt/noise.hpp"
#include "lqt/oracle.hpp"
#include "test_util.hpp"

using namespace lqt;
using namespace lqt::testing;

namespace {

const PauliFrameModel &model() {
    static const PauliFrameModel m;
    return m;
}

}  // namespace

TEST(FrameGroup, decompose_round_trip) {
    const FrameGroup &g = model().resource_group();
    ASSERT_EQ(g.generators().size(), static_cast<std::size_t>(FrameGroup::kBits));
    for (std::uint32_t mask = 0; mask < FrameGroup::kSize; mask += 37) {
        auto d = g.decompose(g.product(mask).times_i(2));
        ASSERT_TRUE(d.has_value());
        ASSERT_EQ(d->mask, mask);
        ASSERT_EQ(d->phase, 2);
    }
    // A single X on a code qubit is not a stabilizer of the ideal resource.
    ASSERT_FALSE(g.decompose(PauliString::single(10, 0, Pauli::X)).has_value());
}

TEST(PauliFrameModel, distribution_is_normalized) {
    auto d = model().resource_distribution(NoiseSpec::depolarizing(0.1, 0.05, 0.2));
    ASSERT_EQ(d.size(), FrameGroup::kSize);
    ASSERT_NEAR(std::accumulate(d.begin(), d.end(), 0.0), 1.0, 1e-12);
    auto none = model().resource_distribution({});
    ASSERT_DOUBLE_EQ(none[0], 1.0);
    auto w = PauliFrameModel::walsh(d);
    ASSERT_NEAR(w[0], 1.0, 1e-12);
}

TEST(PauliFrameModel, resource_expectations_match_density) {
    const NoiseSpec spec = NoiseSpec::depolarizing(0.08, 0, 0.1);
    const DensityOperator rho = resource_density(spec);
    const auto w = PauliFrameModel::walsh(model().resource_distribution(spec));
    Rng rng = test_rng();
    for (int k = 0; k < 30; ++k) {
        PauliString p = random_pauli(10, rng);
        if (!p.is_hermitian()) {
            p = p.times_i();
        }
        ASSERT_NEAR(model().resource_expectation(w, p), rho.expectation(p).real(), 1e-10) << p.str();
    }
    const auto &g = model().resource_group();
    for (std::uint32_t mask = 1; mask < FrameGroup::kSize; mask += 101) {
        const PauliString &p = g.product(mask);
        ASSERT_NEAR(model().resource_expectation(w, p), rho.expectation(p).real(), 1e-10) << p.str();
    }
}

TEST(PauliFrameModel, resource_moments_match_density) {
    for (const NoiseSpec &spec :
         {NoiseSpec::depolarizing(0.05, 0, 0), NoiseSpec::depolarizing(0, 0, 0.3), NoiseSpec{{0.02, 0.0, 0.07}, {}, 0.1}}) {
        const DensityOperator rho = resource_density(spec);
        const auto d = model().resource_distribution(spec);
        ResourceSample a = model().resource_moments(d);
        ResourceSample b = density_resource_moments(rho);
        ASSERT_NEAR(a.projection, b.projection, 1e-10);
        ASSERT_NEAR(a.sandwiched.xx, b.sandwiched.xx, 1e-10);
        ASSERT_NEAR(a.sandwiched.yy, b.sandwiched.yy, 1e-10);
        ASSERT_NEAR(a.sandwiched.zz, b.sandwiched.zz, 1e-10);
        ASSERT_NEAR(a.bare.xx, b.bare.xx, 1e-10);
        ASSERT_NEAR(a.sandwiched_correlators.c1, b.sandwiched_correlators.c1, 1e-10);
        ASSERT_NEAR(a.bare_correlators.c4, b.bare_correlators.c4, 1e-10);
        ASSERT_NEAR(model().resource_active_fidelity(d), density_resource_active_fidelity(rho), 1e-10);
    }
}

TEST(PauliFrameModel, teleport_moments_match_density) {
    const NoiseSpec spec = NoiseSpec::depolarizing(0.05, 0.1, 0.05);
    const DensityOperator rho = resource_density(spec);
    const auto out = model().output_distribution(model().resource_distribution(spec), spec.input);
    for (const NamedInput &in : {inputs::zero(), inputs::magic()}) {
        for (TeleportMode mode : {TeleportMode::PostselectPhiPlus, TeleportMode::Feedforward}) {
            DensityOperator sigma = density_teleport_output(rho, input_density(in.state(), spec), mode);
            TeleportMoments exact = density_teleport_moments(sigma, in);
            TeleportMoments frame = model().teleport_moments(out, in);
            ASSERT_NEAR(frame.f_raw, exact.f_raw, 1e-10) << in.name;
            ASSERT_NEAR(frame.p_cs, exact.p_cs, 1e-10) << in.name;
            ASSERT_NEAR(frame.f_active, exact.f_active, 1e-10) << in.name;
        }
    }
}

TEST(Oracle, bsm_branches_sum_to_trace_one) {
    const NoiseSpec spec = NoiseSpec::depolarizing(0.05, 0.1, 0);
    const DensityOperator rho = resource_density(spec);
    const DensityOperator in = input_density(inputs::plus().state(), spec);
    double total = 0;
    for (BellState b : kBellStates) {
        DensityOperator branch = density_bsm_branch(rho, in, b);
        ASSERT_EQ(branch.num_qubits(), 9);
        total += branch.trace().real();
    }
    ASSERT_NEAR(total, 1.0, 1e-12);
}
