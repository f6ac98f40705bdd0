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

#include <bit>
#include <cmath>

#include "lqt/errors.hpp"

namespace lqt {

namespace {

constexpr std::uint32_t kSyndromeMask = 0xFF;
constexpr std::uint32_t kBitX = 1u << 8;
constexpr std::uint32_t kBitZ = 1u << 9;

std::uint64_t key_of(const PauliString &p) {
    return (static_cast<std::uint64_t>(p.x_mask()) << 32) | p.z_mask();
}

int parity(std::uint32_t v) {
    return std::popcount(v) & 1;
}

// Real value of i^phase for a Hermitian decomposition.
double phase_sign(int phase) {
    switch (((phase % 4) + 4) % 4) {
        case 0:
            return 1.0;
        case 2:
            return -1.0;
        default:
            throw DomainError("observable is not Hermitian");
    }
}

// sum_s D[s] (-1)^{|s & mask|}, optionally over trivial syndromes only.
double signed_sum(std::span<const double> d, std::uint32_t mask, bool trivial_only) {
    double acc = 0;
    for (std::uint32_t s = 0; s < d.size(); ++s) {
        if (trivial_only && (s & kSyndromeMask) != 0) {
            continue;
        }
        acc += parity(s & mask) ? -d[s] : d[s];
    }
    return acc;
}

// <L>^2 on the input for the logical class whose anticommutation bits with
// (X_L, Z_L) are packed as (bit 0, bit 1).
double class_fidelity(std::uint32_t cls, double nx, double ny, double nz) {
    switch (cls) {
        case 0:
            return 1.0;
        case 1:
            return nz * nz;
        case 2:
            return nx * nx;
        default:
            return ny * ny;
    }
}

void fold_channel(std::vector<double> &d, const PauliChannel &ch, std::uint32_t sx, std::uint32_t sy,
                  std::uint32_t sz) {
    if (ch.is_identity()) {
        return;
    }
    const double pi = 1.0 - ch.total();
    std::vector<double> out(d.size());
    for (std::uint32_t s = 0; s < d.size(); ++s) {
        out[s] = pi * d[s] + ch.px * d[s ^ sx] + ch.py * d[s ^ sy] + ch.pz * d[s ^ sz];
    }
    d = std::move(out);
}

}  // namespace

FrameGroup::FrameGroup(std::vector<PauliString> generators) : generators_(std::move(generators)) {
    if (generators_.size() != static_cast<std::size_t>(kBits)) {
        throw DomainError("a frame group needs exactly 10 generators");
    }
    const int n = generators_[0].num_qubits();
    for (const auto &g : generators_) {
        if (g.num_qubits() != n) {
            throw DomainError("frame generators must share a register");
        }
    }
    products_.reserve(kSize);
    products_.emplace_back(n);
    index_.reserve(kSize);
    index_.emplace(key_of(products_[0]), 0);
    for (std::uint32_t mask = 1; mask < kSize; ++mask) {
        int top = std::bit_width(mask) - 1;
        products_.push_back(products_[mask & ~(1u << top)] * generators_[top]);
        if (!index_.emplace(key_of(products_.back()), mask).second) {
            throw DomainError("frame generators are not independent");
        }
    }
}

std::uint32_t FrameGroup::signature(const PauliString &error) const {
    std::uint32_t s = 0;
    for (int j = 0; j < kBits; ++j) {
        if (!generators_[j].commutes_with(error)) {
            s |= 1u << j;
        }
    }
    return s;
}

std::optional<FrameGroup::Decomposition> FrameGroup::decompose(const PauliString &op) const {
    if (op.num_qubits() != generators_[0].num_qubits()) {
        throw DomainError("operator acts on a different register");
    }
    auto it = index_.find(key_of(op));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return Decomposition{it->second, (op.phase_exponent() - products_[it->second].phase_exponent() + 4) % 4};
}

namespace {

std::vector<PauliString> resource_generators(const ShorCode &code) {
    std::vector<PauliString> g;
    for (const auto &s : code.generators()) {
        g.push_back(s.embed(kResourceQubits, kCodeOffset));
    }
    g.push_back(PauliString::single(kResourceQubits, kPhysicalQubit, Pauli::X) *
                code.logical_x().embed(kResourceQubits, kCodeOffset));
    g.push_back(PauliString::single(kResourceQubits, kPhysicalQubit, Pauli::Z) *
                code.logical_z().embed(kResourceQubits, kCodeOffset));
    return g;
}

std::vector<PauliString> output_generators(const ShorCode &code) {
    std::vector<PauliString> g = code.generators();
    g.push_back(code.logical_x());
    g.push_back(code.logical_z());
    return g;
}

}  // namespace

PauliFrameModel::PauliFrameModel(const ShorCode &code)
    : code_(code), resource_group_(resource_generators(code)), output_group_(output_generators(code)) {
    const Pauli letters[3] = {Pauli::X, Pauli::Y, Pauli::Z};
    for (int q = 0; q < kResourceQubits; ++q) {
        for (int k = 0; k < 3; ++k) {
            letter_sig_[q][k] = resource_group_.signature(PauliString::single(kResourceQubits, q, letters[k]));
        }
    }
    const LogicalAxis axes[3] = {LogicalAxis::X, LogicalAxis::Y, LogicalAxis::Z};
    for (int k = 0; k < 3; ++k) {
        logical_sig_[k] = resource_group_.signature(code_.logical(axes[k]).embed(kResourceQubits, kCodeOffset));
    }
    for (std::uint32_t syn = 0; syn < 256; ++syn) {
        Recovery r = code_.decode(Syndrome::from_mask(static_cast<std::uint8_t>(syn)));
        recovery_bits_[syn] = output_group_.signature(r.op);
    }
}

std::uint32_t PauliFrameModel::letter_signature(int qubit, Pauli letter) const {
    if (qubit < 0 || qubit >= kResourceQubits) {
        throw DomainError("resource qubit out of range");
    }
    switch (letter) {
        case Pauli::I:
            return 0;
        case Pauli::X:
            return letter_sig_[qubit][0];
        case Pauli::Y:
            return letter_sig_[qubit][1];
        case Pauli::Z:
            return letter_sig_[qubit][2];
    }
    return 0;
}

std::uint32_t PauliFrameModel::logical_signature(LogicalAxis axis) const {
    return logical_sig_[static_cast<int>(axis)];
}

std::vector<double> PauliFrameModel::resource_distribution(const NoiseSpec &spec) const {
    spec.validate();
    std::vector<double> d(FrameGroup::kSize, 0.0);
    d[0] = 1.0;
    for (int q = 0; q < kResourceQubits; ++q) {
        fold_channel(d, spec.phys, letter_sig_[q][0], letter_sig_[q][1], letter_sig_[q][2]);
    }
    const double q = spec.q_logical;
    fold_channel(d, {q / 3, q / 3, q / 3}, logical_sig_[0], logical_sig_[1], logical_sig_[2]);
    return d;
}

std::vector<double> PauliFrameModel::output_distribution(std::span<const double> resource,
                                                         const PauliChannel &input) const {
    input.validate();
    std::vector<double> d(resource.begin(), resource.end());
    // An input X becomes X_L on the output, which anticommutes with Z_L.
    fold_channel(d, input, kBitZ, kBitX | kBitZ, kBitX);
    return d;
}

std::vector<double> PauliFrameModel::walsh(std::vector<double> d) {
    for (std::size_t h = 1; h < d.size(); h <<= 1) {
        for (std::size_t i = 0; i < d.size(); i += 2 * h) {
            for (std::size_t j = i; j < i + h; ++j) {
                double a = d[j];
                double b = d[j + h];
                d[j] = a + b;
                d[j + h] = a - b;
            }
        }
    }
    return d;
}

double PauliFrameModel::resource_expectation(std::span<const double> w, const PauliString &op) const {
    auto dec = resource_group_.decompose(op);
    if (!dec) {
        return 0.0;
    }
    return phase_sign(dec->phase) * w[dec->mask];
}

double PauliFrameModel::output_expectation(std::span<const double> w, const PauliString &op,
                                           const StateVector &ideal) const {
    auto dec = output_group_.decompose(op);
    if (!dec) {
        return 0.0;
    }
    PauliString p = output_group_.product(dec->mask).times_i(dec->phase);
    if (!p.is_hermitian()) {
        throw DomainError("observable is not Hermitian");
    }
    return expectation(ideal, p) * w[dec->mask];
}

ResourceSample PauliFrameModel::resource_moments(std::span<const double> d) const {
    auto value = [&](Pauli physical, LogicalAxis axis, bool sandwiched) {
        auto dec = resource_group_.decompose(resource_correlator(physical, axis, code_));
        if (!dec) {
            return 0.0;
        }
        return phase_sign(dec->phase) * signed_sum(d, dec->mask, sandwiched);
    };
    ResourceSample s;
    s.projection = signed_sum(d, 0, true);
    for (bool sandwiched : {false, true}) {
        FidelityTerms t{sandwiched ? s.projection : 1.0, value(Pauli::X, LogicalAxis::X, sandwiched),
                        value(Pauli::Y, LogicalAxis::Y, sandwiched), value(Pauli::Z, LogicalAxis::Z, sandwiched)};
        Correlators c = correlators_from_paulis(value(Pauli::Z, LogicalAxis::X, sandwiched), t.xx, t.zz,
                                                value(Pauli::X, LogicalAxis::Z, sandwiched));
        (sandwiched ? s.sandwiched : s.bare) = t;
        (sandwiched ? s.sandwiched_correlators : s.bare_correlators) = c;
    }
    return s;
}

double PauliFrameModel::resource_active_fidelity(std::span<const double> d) const {
    double f = 0;
    for (std::uint32_t s = 0; s < d.size(); ++s) {
        if (((s ^ recovery_bits_[s & kSyndromeMask]) & (kBitX | kBitZ)) == 0) {
            f += d[s];
        }
    }
    return f;
}

TeleportMoments PauliFrameModel::teleport_moments(std::span<const double> d, const NamedInput &input) const {
    const double nx = std::sin(input.theta) * std::cos(input.phi);
    const double ny = std::sin(input.theta) * std::sin(input.phi);
    const double nz = std::cos(input.theta);
    TeleportMoments m{0, 0, 0};
    for (std::uint32_t s = 0; s < d.size(); ++s) {
        const std::uint32_t cls = s >> 8;
        if ((s & kSyndromeMask) == 0) {
            m.p_cs += d[s];
            m.f_raw += d[s] * class_fidelity(cls, nx, ny, nz);
        }
        const std::uint32_t fixed = cls ^ (recovery_bits_[s & kSyndromeMask] >> 8);
        m.f_active += d[s] * class_fidelity(fixed, nx, ny, nz);
    }
    return m;
}

}  // namespace lqt
