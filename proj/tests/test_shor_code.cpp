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

#include "lqt/shor_code.hpp"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

#include "lqt/errors.hpp"
#include "test_util.hpp"

using namespace lqt;
using namespace lqt::testing;

namespace {

const ShorCode &code() {
    return ShorCode::standard();
}

StateVector random_logical(Rng &rng) {
    StateVector q = random_state(1, rng);
    return encode_logical(q.amplitude(0), q.amplitude(1));
}

}  // namespace

TEST(ShorCode, generator_list) {
    const std::vector<std::string> expected = {"ZZ_______", "_ZZ______", "___ZZ____", "____ZZ___",
                                               "______ZZ_", "_______ZZ", "XXXXXX___", "___XXXXXX"};
    ASSERT_EQ(code().generators().size(), expected.size());
    for (std::size_t j = 0; j < expected.size(); ++j) {
        ASSERT_EQ(code().generators()[j], PauliString::parse(expected[j])) << j;
    }
    ASSERT_EQ(code().logical_x(), PauliString::parse("Z__Z__Z__"));
    ASSERT_EQ(code().logical_z(), PauliString::parse("XXX______"));
}

TEST(ShorCode, algebra) {
    const auto &g = code().generators();
    for (const auto &a : g) {
        for (const auto &b : g) {
            ASSERT_TRUE(a.commutes_with(b));
        }
        for (auto axis : {LogicalAxis::X, LogicalAxis::Y, LogicalAxis::Z}) {
            ASSERT_TRUE(a.commutes_with(code().logical(axis)));
        }
    }
    ASSERT_FALSE(code().logical_x().commutes_with(code().logical_z()));
    ASSERT_EQ(code().logical_y(), (code().logical_x() * code().logical_z()).times_i());
}

TEST(ShorCode, logical_basis_amplitudes) {
    const double a = 1 / (2 * std::numbers::sqrt2);
    StateVector zero = logical_basis(0);
    StateVector one = logical_basis(1);
    int nonzero = 0;
    for (unsigned i = 0; i < 512; ++i) {
        if (std::abs(zero.amplitude(i)) > 1e-12) {
            ++nonzero;
            ASSERT_NEAR(zero.amplitude(i).real(), a, 1e-15);
            // Blocks in |111> flip the sign of the |1_L> amplitude.
            int ones = 0;
            for (int b = 0; b < 3; ++b) {
                unsigned block = (i >> (3 * b)) & 7;
                ASSERT_TRUE(block == 0 || block == 7);
                ones += block == 7;
            }
            ASSERT_NEAR(one.amplitude(i).real(), ones % 2 ? -a : a, 1e-15);
        }
    }
    ASSERT_EQ(nonzero, 8);
    ASSERT_NEAR(std::abs(inner_product(zero, one)), 0.0, 1e-15);
}

TEST(ShorCode, encode_logical_expectations) {
    const double h = 1 / std::numbers::sqrt2;
    ASSERT_NEAR(fidelity(encode_logical(1, 0), logical_basis(0)), 1.0, 1e-15);
    StateVector plus = encode_logical(h, h);
    ASSERT_NEAR(logical_expectation(plus, LogicalAxis::Z, false), 0.0, 1e-12);
    ASSERT_NEAR(logical_expectation(plus, LogicalAxis::X, false), 1.0, 1e-12);
    StateVector magic = encode_logical(h, std::polar(h, std::numbers::pi / 4));
    ASSERT_NEAR(logical_expectation(magic, LogicalAxis::X, false), std::cos(std::numbers::pi / 4), 1e-12);
    ASSERT_NEAR(logical_expectation(magic, LogicalAxis::Y, false), std::sin(std::numbers::pi / 4), 1e-12);
    ASSERT_THROW(encode_logical(1, 1), DomainError);
}

TEST(ShorCode, projector_examples) {
    ASSERT_NEAR(project_code_space(logical_basis(0)).probability, 1.0, 1e-12);
    StateVector errored = apply_pauli(logical_basis(0), PauliString::parse("X________"));
    ProjectionResult r = project_code_space(errored);
    ASSERT_NEAR(r.probability, 0.0, 1e-15);
    ASSERT_FALSE(r.state.has_value());
    ASSERT_NEAR(logical_expectation(errored, LogicalAxis::Z, true), 0.0, 1e-15);
}

TEST(ShorCode, projector_sum_has_rank_two_and_matches_sequential_form) {
    PauliSum pi = code_space_projector();
    ASSERT_EQ(pi.size(), 256u);
    auto m = pi.dense();
    double trace = 0;
    for (std::size_t i = 0; i < 512; ++i) {
        trace += m[i * 512 + i].real();
    }
    ASSERT_NEAR(trace, 2.0, 1e-10);
    ASSERT_TRUE(pi.is_idempotent(1e-10));

    Rng rng = test_rng();
    StateVector s = random_state(9, rng);
    std::vector<Complex> summed = pi.apply(s.amplitudes());
    double p_sum = 0;
    for (std::size_t i = 0; i < summed.size(); ++i) {
        p_sum += std::real(std::conj(s.amplitude(i)) * summed[i]);
    }
    ProjectionResult seq = project_code_space(s);
    ASSERT_NEAR(seq.probability, p_sum, 1e-12);
    // Projecting the projected state again keeps all of it.
    ASSERT_NEAR(project_code_space(*seq.state).probability, 1.0, 1e-10);
}

TEST(ShorCode, stabilizer_products_act_trivially) {
    Rng rng = test_rng(1);
    StateVector psi = random_logical(rng);
    const auto &g = code().generators();
    for (unsigned mask = 0; mask < 256; mask += 7) {
        PauliString p(9);
        for (int j = 0; j < 8; ++j) {
            if (mask >> j & 1) {
                p *= g[j];
            }
        }
        ASSERT_NEAR(std::abs(inner_product(psi, apply_pauli(psi, p))), 1.0, 1e-12);
    }
}

TEST(ShorCode, logical_representatives_agree) {
    Rng rng = test_rng(2);
    StateVector psi = random_logical(rng);
    StateVector a = apply_pauli(psi, PauliString::parse("Z__Z__Z__"));
    StateVector b = apply_pauli(psi, PauliString::parse("_Z__Z__Z_"));
    ASSERT_NEAR(fidelity(a, b), 1.0, 1e-12);
    StateVector z0 = apply_pauli(psi, PauliString::parse("Z________"));
    StateVector z1 = apply_pauli(psi, PauliString::parse("_Z_______"));
    ASSERT_NEAR(fidelity(z0, z1), 1.0, 1e-12);
}

TEST(ShorCode, syndrome_extraction_examples) {
    Rng rng = test_rng(3);
    SyndromeResult clean = extract_syndrome(logical_basis(0), rng);
    ASSERT_TRUE(clean.syndrome.trivial());
    ASSERT_NEAR(fidelity(clean.post_state, logical_basis(0)), 1.0, 1e-12);

    SyndromeResult x4 = extract_syndrome(apply_pauli(logical_basis(0), PauliString::parse("____X____")), rng);
    ASSERT_EQ(x4.syndrome.bits, (std::array<int, 8>{1, 1, -1, -1, 1, 1, 1, 1}));

    SyndromeResult z2 = extract_syndrome(apply_pauli(logical_basis(0), PauliString::parse("__Z______")), rng);
    ASSERT_EQ(z2.syndrome.bits, (std::array<int, 8>{1, 1, 1, 1, 1, 1, -1, 1}));
}

TEST(ShorCode, syndrome_extraction_with_offset) {
    Rng rng = test_rng(4);
    StateVector joint = tensor(new_basis_state(1, 0), apply_pauli(logical_basis(1), PauliString::parse("_______Y_")));
    SyndromeResult r = extract_syndrome(joint, rng, code(), 1);
    ASSERT_EQ(r.syndrome, code().syndrome_of(PauliString::parse("_______Y_")));
}

TEST(ShorCode, decoder_examples) {
    ASSERT_TRUE(decode_correction(Syndrome{}).op.is_identity());
    Recovery x4 = decode_correction(Syndrome::from_mask(0b00001100));
    ASSERT_EQ(x4.op, PauliString::parse("____X____"));
    ASSERT_TRUE(x4.in_table);
    Recovery z_block0 = decode_correction(Syndrome::from_mask(0b01000000));
    ASSERT_EQ(z_block0.op, PauliString::parse("Z________"));
}

TEST(ShorCode, decoder_covers_every_syndrome) {
    int in_table = 0;
    for (unsigned mask = 0; mask < 256; ++mask) {
        Syndrome s = Syndrome::from_mask(static_cast<std::uint8_t>(mask));
        ASSERT_EQ(s.mask(), mask);
        Recovery r = decode_correction(s);
        ASSERT_EQ(code().syndrome_of(r.op), s) << s.str();
        ASSERT_EQ(r.weight, r.op.weight());
        in_table += r.in_table;
        if (r.in_table) {
            ASSERT_LE(r.weight, 1);
        }
    }
    // The trivial syndrome, 9 from X errors, 3 from Z errors (one per block)
    // and 9 from Y errors.
    ASSERT_EQ(in_table, 1 + 9 + 3 + 9);
}

TEST(ShorCode, distance_three_exhaustive) {
    Rng rng = test_rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        StateVector psi = random_logical(rng);
        for (int q = 0; q < 9; ++q) {
            for (Pauli l : {Pauli::X, Pauli::Y, Pauli::Z}) {
                PauliString e = PauliString::single(9, q, l);
                StateVector bad = apply_pauli(psi, e);
                SyndromeResult s = extract_syndrome(bad, rng);
                ASSERT_FALSE(s.syndrome.trivial()) << e.str();
                StateVector fixed = apply_pauli(s.post_state, decode_correction(s.syndrome).op);
                ASSERT_NEAR(fidelity(fixed, psi), 1.0, 1e-10) << e.str();
                ASSERT_NEAR(project_code_space(bad).probability, 0.0, 1e-15) << e.str();
            }
        }
    }
    CheckReport r = check_distance_three(code(), rng);
    ASSERT_TRUE(r.passed);
    ASSERT_TRUE(r.failures.empty());
}

TEST(ShorCode, corrupted_generators_fail_distance_check) {
    auto gens = code().generators();
    gens[0] = PauliString::parse("_________");
    Rng rng = test_rng(6);
    CheckReport r = check_distance_three(ShorCode::with_generators(gens), rng);
    ASSERT_FALSE(r.passed);
    ASSERT_FALSE(r.failures.empty());
}

TEST(ShorCode, custom_block_map) {
    ShorCode c({{{0, 3, 6}, {1, 4, 7}, {2, 5, 8}}});
    ASSERT_EQ(c.generators()[0], PauliString::parse("Z__Z_____"));
    ASSERT_NEAR(project_code_space(logical_basis(0, c), c).probability, 1.0, 1e-12);
    for (const auto &g : c.generators()) {
        ASSERT_TRUE(g.commutes_with(c.logical_x()));
    }
    ASSERT_THROW(ShorCode({{{0, 0, 6}, {1, 4, 7}, {2, 5, 8}}}), DomainError);
}
