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

#include <bit>
#include <cmath>
#include <numbers>

#include "lqt/errors.hpp"
#include "lqt/tolerances.hpp"

namespace lqt {

namespace {

constexpr Pauli kLetters[3] = {Pauli::X, Pauli::Y, Pauli::Z};

std::vector<PauliString> standard_generators(const BlockMap &b) {
    const int n = ShorCode::kNumQubits;
    std::vector<PauliString> g;
    for (const auto &block : b) {
        for (int k = 0; k < 2; ++k) {
            PauliString p(n);
            p.set_letter(block[k], Pauli::Z);
            p.set_letter(block[k + 1], Pauli::Z);
            g.push_back(p);
        }
    }
    for (int k = 0; k < 2; ++k) {
        PauliString p(n);
        for (int q : b[k]) {
            p.set_letter(q, Pauli::X);
        }
        for (int q : b[k + 1]) {
            p.set_letter(q, Pauli::X);
        }
        g.push_back(p);
    }
    return g;
}

// Calls fn(qubits) for every w-subset of 0..n-1 in lexicographic order.
template <typename Fn>
void for_each_subset(int n, int w, Fn &&fn) {
    std::vector<int> idx(w);
    for (int i = 0; i < w; ++i) {
        idx[i] = i;
    }
    while (true) {
        fn(idx);
        int i = w - 1;
        while (i >= 0 && idx[i] == n - w + i) {
            --i;
        }
        if (i < 0) {
            return;
        }
        ++idx[i];
        for (int j = i + 1; j < w; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

}  // namespace

bool Syndrome::trivial() const {
    return mask() == 0;
}

std::uint8_t Syndrome::mask() const {
    std::uint8_t m = 0;
    for (int j = 0; j < 8; ++j) {
        if (bits[j] < 0) {
            m |= static_cast<std::uint8_t>(1u << j);
        }
    }
    return m;
}

Syndrome Syndrome::from_mask(std::uint8_t mask) {
    Syndrome s;
    for (int j = 0; j < 8; ++j) {
        s.bits[j] = ((mask >> j) & 1u) ? -1 : 1;
    }
    return s;
}

std::string Syndrome::str() const {
    std::string out;
    for (int b : bits) {
        out += b > 0 ? '+' : '-';
    }
    return out;
}

ShorCode::ShorCode(const BlockMap &blocks) : ShorCode(blocks, standard_generators(blocks)) {
}

ShorCode::ShorCode(const BlockMap &blocks, std::vector<PauliString> generators)
    : blocks_(blocks), generators_(std::move(generators)) {
    std::uint32_t seen = 0;
    for (const auto &block : blocks_) {
        for (int q : block) {
            if (q < 0 || q >= kNumQubits || ((seen >> q) & 1u)) {
                throw DomainError("block map must be a permutation of qubits 0..8");
            }
            seen |= 1u << q;
        }
    }
    if (generators_.size() != kNumGenerators) {
        throw DomainError("the Shor code has exactly 8 stabilizer generators");
    }
    for (const auto &g : generators_) {
        if (g.num_qubits() != kNumQubits) {
            throw DomainError("stabilizer generators act on 9 qubits");
        }
    }
    logical_x_ = PauliString(kNumQubits);
    for (const auto &block : blocks_) {
        logical_x_.set_letter(block[0], Pauli::Z);
    }
    logical_z_ = PauliString(kNumQubits);
    for (int q : blocks_[0]) {
        logical_z_.set_letter(q, Pauli::X);
    }
    logical_y_ = (logical_x_ * logical_z_).times_i(1);
    build_decoder();
}

ShorCode ShorCode::with_generators(std::vector<PauliString> generators) {
    return ShorCode(kDefaultBlocks, std::move(generators));
}

const ShorCode &ShorCode::standard() {
    static const ShorCode code;
    return code;
}

const PauliString &ShorCode::logical(LogicalAxis axis) const {
    switch (axis) {
        case LogicalAxis::X:
            return logical_x_;
        case LogicalAxis::Y:
            return logical_y_;
        case LogicalAxis::Z:
            return logical_z_;
    }
    throw DomainError("unknown logical axis");
}

Syndrome ShorCode::syndrome_of(const PauliString &error) const {
    Syndrome s;
    for (int j = 0; j < kNumGenerators; ++j) {
        s.bits[j] = generators_[j].commutes_with(error) ? 1 : -1;
    }
    return s;
}

void ShorCode::build_decoder() {
    auto table = std::make_shared<std::vector<Recovery>>(256, Recovery{PauliString(kNumQubits), false, -1});
    std::vector<bool> filled(256, false);
    int remaining = 256;
    for (int w = 0; w <= kNumQubits && remaining > 0; ++w) {
        for_each_subset(kNumQubits, w, [&](const std::vector<int> &qubits) {
            // Letter tuples in lexicographic order, first qubit most significant.
            int combos = 1;
            for (int i = 0; i < w; ++i) {
                combos *= 3;
            }
            for (int c = 0; c < combos && remaining > 0; ++c) {
                PauliString e(kNumQubits);
                int rest = c;
                for (int i = w - 1; i >= 0; --i) {
                    e.set_letter(qubits[i], kLetters[rest % 3]);
                    rest /= 3;
                }
                std::uint8_t m = syndrome_of(e).mask();
                if (!filled[m]) {
                    filled[m] = true;
                    --remaining;
                    (*table)[m] = Recovery{e, w <= 1, w};
                }
            }
        });
    }
    table_ = std::move(table);
}

Recovery ShorCode::decode(const Syndrome &syndrome) const {
    return (*table_)[syndrome.mask()];
}

StateVector logical_basis(int bit, const ShorCode &code) {
    if (bit != 0 && bit != 1) {
        throw DomainError("logical basis bit must be 0 or 1");
    }
    std::vector<Complex> a(std::size_t{1} << ShorCode::kNumQubits);
    const double amp = 1.0 / (2.0 * std::numbers::sqrt2);
    const auto &blocks = code.blocks();
    for (int pattern = 0; pattern < 8; ++pattern) {
        std::size_t index = 0;
        for (int b = 0; b < 3; ++b) {
            if ((pattern >> b) & 1) {
                for (int q : blocks[b]) {
                    index |= std::size_t{1} << q;
                }
            }
        }
        int ones = std::popcount(static_cast<unsigned>(pattern));
        a[index] = (bit == 1 && (ones & 1)) ? -amp : amp;
    }
    return StateVector(ShorCode::kNumQubits, std::move(a));
}

StateVector encode_logical(Complex alpha, Complex beta, const ShorCode &code) {
    if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > tol::kNorm) {
        throw DomainError("logical amplitudes are not normalized");
    }
    const StateVector zero_state = logical_basis(0, code);
    const StateVector one_state = logical_basis(1, code);
    auto zero = zero_state.amplitudes();
    auto one = one_state.amplitudes();
    std::vector<Complex> a(zero.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
        a[j] = alpha * zero[j] + beta * one[j];
    }
    return StateVector(ShorCode::kNumQubits, std::move(a));
}

PauliSum code_space_projector(const ShorCode &code) {
    PauliSum sum(ShorCode::kNumQubits);
    const auto &g = code.generators();
    for (int m = 0; m < 256; ++m) {
        PauliString p(ShorCode::kNumQubits);
        for (int j = 0; j < 8; ++j) {
            if ((m >> j) & 1) {
                p *= g[j];
            }
        }
        sum.add(1.0 / 256.0, p);
    }
    return sum;
}

ProjectionResult project_code_space(const StateVector &state, const ShorCode &code, int offset) {
    const int n = state.num_qubits();
    std::vector<Complex> v(state.amplitudes().begin(), state.amplitudes().end());
    for (const auto &g : code.generators()) {
        g.embed(n, offset).project_plus(v);
    }
    double prob = 0;
    for (const auto &a : v) {
        prob += std::norm(a);
    }
    if (prob < tol::kProbabilityFloor) {
        return {prob, std::nullopt};
    }
    return {prob, StateVector::normalized(n, std::move(v))};
}

SyndromeResult extract_syndrome(const StateVector &state, Rng &rng, const ShorCode &code, int offset) {
    SyndromeResult out{Syndrome{}, state};
    const auto &g = code.generators();
    for (int j = 0; j < ShorCode::kNumGenerators; ++j) {
        auto r = measure(out.post_state, g[j].embed(state.num_qubits(), offset), rng);
        out.syndrome.bits[j] = r.outcome;
        out.post_state = std::move(r.post_state);
    }
    return out;
}

Recovery decode_correction(const Syndrome &syndrome, const ShorCode &code) {
    return code.decode(syndrome);
}

double logical_expectation(const StateVector &state, LogicalAxis which, bool code_space_restricted,
                           const ShorCode &code, int offset) {
    PauliString op = code.logical(which).embed(state.num_qubits(), offset);
    if (!code_space_restricted) {
        return expectation(state, op);
    }
    auto r = project_code_space(state, code, offset);
    if (!r.state) {
        return 0.0;
    }
    return r.probability * expectation(*r.state, op);
}

CheckReport check_distance_three(const ShorCode &code, Rng &rng) {
    CheckReport report;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double theta = std::acos(2 * u(rng) - 1);
    double phi = 2 * std::numbers::pi * u(rng);
    StateVector psi = encode_logical(std::cos(theta / 2), std::polar(std::sin(theta / 2), phi), code);
    for (int q = 0; q < ShorCode::kNumQubits; ++q) {
        for (Pauli letter : kLetters) {
            PauliString e = PauliString::single(ShorCode::kNumQubits, q, letter);
            std::string label = std::string(1, pauli_char(letter)) + std::to_string(q);
            StateVector damaged = apply_pauli(psi, e);
            auto syn = extract_syndrome(damaged, rng, code);
            if (syn.syndrome.trivial()) {
                report.passed = false;
                report.failures.push_back(label + ": trivial syndrome");
                continue;
            }
            auto proj = project_code_space(damaged, code);
            if (proj.probability > tol::kProbabilityFloor) {
                report.passed = false;
                report.failures.push_back(label + ": projection accepts the error (prob " + std::to_string(proj.probability) + ")");
            }
            Recovery rec = code.decode(syn.syndrome);
            StateVector fixed = apply_pauli(syn.post_state, rec.op);
            double f = fidelity(fixed, psi);
            if (std::abs(f - 1.0) > 1e-10) {
                report.passed = false;
                report.failures.push_back(label + ": recovery " + rec.op.str() + " leaves fidelity " + std::to_string(f));
            }
        }
    }
    return report;
}

}  // namespace lqt
