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

#include "lqt/oracle.hpp"

#include "lqt/errors.hpp"
#include "lqt/tolerances.hpp"

namespace lqt {

namespace {

constexpr std::size_t kCodeDim = std::size_t{1} << ShorCode::kNumQubits;

// Tr(Pi op rho) for an operator commuting with the code checks, which equals
// Tr(Pi op Pi rho).
double sandwiched(const DensityOperator &rho, const std::vector<PauliString> &stabilizers, const PauliString &op) {
    double acc = 0;
    for (const auto &s : stabilizers) {
        acc += rho.expectation(s * op).real();
    }
    return acc / static_cast<double>(stabilizers.size());
}

std::vector<PauliString> stabilizer_products(const ShorCode &code, int num_qubits) {
    std::vector<PauliString> out;
    const PauliSum projector = code_space_projector(code);
    for (const auto &term : projector.terms()) {
        out.push_back(term.op.embed(num_qubits, kCodeOffset));
    }
    return out;
}

// R_s |target> for every syndrome s, with R_s the table recovery. Their
// overlaps with rho sum to the fidelity after active correction.
double active_fidelity(const DensityOperator &rho, const StateVector &target, const ShorCode &code) {
    double f = 0;
    for (int s = 0; s < 256; ++s) {
        Recovery r = code.decode(Syndrome::from_mask(static_cast<std::uint8_t>(s)));
        f += rho.fidelity(apply_pauli(target, r.op.embed(target.num_qubits(), kCodeOffset)));
    }
    return f;
}

void check_resource(const DensityOperator &rho) {
    if (rho.num_qubits() != kResourceQubits) {
        throw DomainError("resource density matrix must have 10 qubits");
    }
}

}  // namespace

ResourceSample density_resource_moments(const DensityOperator &rho, const ShorCode &code) {
    check_resource(rho);
    const auto stabilizers = stabilizer_products(code, kResourceQubits);
    const PauliString identity(kResourceQubits);
    const PauliString xx = resource_correlator(Pauli::X, LogicalAxis::X, code);
    const PauliString yy = resource_correlator(Pauli::Y, LogicalAxis::Y, code);
    const PauliString zz = resource_correlator(Pauli::Z, LogicalAxis::Z, code);
    const PauliString zx = resource_correlator(Pauli::Z, LogicalAxis::X, code);
    const PauliString xz = resource_correlator(Pauli::X, LogicalAxis::Z, code);

    auto bare = [&](const PauliString &op) { return rho.expectation(op).real(); };
    ResourceSample s;
    s.bare = {1.0, bare(xx), bare(yy), bare(zz)};
    s.bare_correlators = correlators_from_paulis(bare(zx), s.bare.xx, s.bare.zz, bare(xz));
    s.projection = sandwiched(rho, stabilizers, identity);
    s.sandwiched = {s.projection, sandwiched(rho, stabilizers, xx), sandwiched(rho, stabilizers, yy),
                    sandwiched(rho, stabilizers, zz)};
    s.sandwiched_correlators = correlators_from_paulis(sandwiched(rho, stabilizers, zx), s.sandwiched.xx,
                                                       s.sandwiched.zz, sandwiched(rho, stabilizers, xz));
    return s;
}

double density_resource_active_fidelity(const DensityOperator &rho, const ShorCode &code) {
    check_resource(rho);
    return active_fidelity(rho, resource_from_code_words(code).state, code);
}

DensityOperator density_bsm_branch(const DensityOperator &resource, const DensityOperator &input, BellState outcome) {
    check_resource(resource);
    if (input.num_qubits() != 1) {
        throw DomainError("input density matrix must have 1 qubit");
    }
    const auto b = bell_amplitudes(outcome);
    const std::size_t rdim = resource.dimension();
    auto rho = resource.data();
    std::vector<Complex> sigma(kCodeDim * kCodeDim);
    for (int ab = 0; ab < 4; ++ab) {
        if (b[ab] == 0.0) {
            continue;
        }
        for (int ab2 = 0; ab2 < 4; ++ab2) {
            if (b[ab2] == 0.0) {
                continue;
            }
            const int a = ab & 1, bb = ab >> 1;
            const int a2 = ab2 & 1, bb2 = ab2 >> 1;
            const Complex w = std::conj(b[ab]) * b[ab2] * input.at(a, a2);
            if (w == 0.0) {
                continue;
            }
            // Physical qubit 9 is the high bit of the resource index.
            const std::size_t row0 = bb * kCodeDim;
            const std::size_t col0 = bb2 * kCodeDim;
            for (std::size_t c = 0; c < kCodeDim; ++c) {
                const Complex *src = rho.data() + (row0 + c) * rdim + col0;
                Complex *dst = sigma.data() + c * kCodeDim;
                for (std::size_t c2 = 0; c2 < kCodeDim; ++c2) {
                    dst[c2] += w * src[c2];
                }
            }
        }
    }
    return DensityOperator::from_matrix(ShorCode::kNumQubits, std::move(sigma));
}

DensityOperator density_teleport_output(const DensityOperator &resource, const DensityOperator &input,
                                        TeleportMode mode, const ShorCode &code) {
    std::vector<Complex> total(kCodeDim * kCodeDim);
    for (BellState outcome : kBellStates) {
        if (mode == TeleportMode::PostselectPhiPlus && outcome != BellState::PhiPlus) {
            continue;
        }
        DensityOperator branch = density_bsm_branch(resource, input, outcome);
        branch.conjugate(bsm_outcome(outcome, code).correction);
        auto d = branch.data();
        for (std::size_t k = 0; k < total.size(); ++k) {
            total[k] += d[k];
        }
    }
    double tr = 0;
    for (std::size_t c = 0; c < kCodeDim; ++c) {
        tr += total[c * kCodeDim + c].real();
    }
    if (tr < tol::kProbabilityFloor) {
        throw OrthogonalSubspaceError("the Phi+ outcome has vanishing probability");
    }
    for (auto &v : total) {
        v /= tr;
    }
    return DensityOperator::from_matrix(ShorCode::kNumQubits, std::move(total));
}

TeleportMoments density_teleport_moments(const DensityOperator &output, const NamedInput &input,
                                         const ShorCode &code) {
    if (output.num_qubits() != ShorCode::kNumQubits) {
        throw DomainError("teleportation output must have 9 qubits");
    }
    const StateVector target = encode_logical(input.alpha(), input.beta(), code);
    TeleportMoments m{};
    m.f_raw = output.fidelity(target);
    m.p_cs = sandwiched(output, stabilizer_products(code, ShorCode::kNumQubits), PauliString(ShorCode::kNumQubits));
    m.f_active = active_fidelity(output, target, code);
    return m;
}

}  // namespace lqt
