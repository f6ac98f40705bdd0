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

#include <Eigen/Eigenvalues>
#include <bit>
#include <cmath>

#include "kernels.hpp"
#include "lqt/errors.hpp"
#include "lqt/tolerances.hpp"

namespace lqt {

namespace {

constexpr Complex kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

DensityOperator::DensityOperator(int num_qubits, std::vector<Complex> matrix)
    : num_qubits_(num_qubits), dim_(std::size_t{1} << num_qubits), m_(std::move(matrix)) {
}

DensityOperator DensityOperator::from_matrix(int num_qubits, std::vector<Complex> matrix) {
    if (num_qubits < 1 || num_qubits > kMaxDensityQubits) {
        throw DomainError("density operators are limited to 1.." + std::to_string(kMaxDensityQubits) + " qubits");
    }
    std::size_t d = std::size_t{1} << num_qubits;
    if (matrix.size() != d * d) {
        throw DomainError("density matrix has the wrong number of entries");
    }
    return DensityOperator(num_qubits, std::move(matrix));
}

DensityOperator DensityOperator::from_pure(const StateVector &state) {
    if (state.num_qubits() > kMaxDensityQubits) {
        throw DomainError("density operators are limited to " + std::to_string(kMaxDensityQubits) + " qubits");
    }
    auto a = state.amplitudes();
    std::vector<Complex> m(a.size() * a.size());
    for (std::size_t r = 0; r < a.size(); ++r) {
        for (std::size_t c = 0; c < a.size(); ++c) {
            m[r * a.size() + c] = a[r] * std::conj(a[c]);
        }
    }
    return DensityOperator(state.num_qubits(), std::move(m));
}

Complex DensityOperator::trace() const {
    Complex t = 0;
    for (std::size_t j = 0; j < dim_; ++j) {
        t += m_[j * dim_ + j];
    }
    return t;
}

Complex DensityOperator::expectation(const PauliString &op) const {
    if (op.num_qubits() != num_qubits_) {
        throw DomainError("observable size does not match density operator");
    }
    // Tr(P rho) = sum_j <j^x| ... = sum_j ph(j) rho[j, j^x]
    const std::uint32_t x = op.x_mask();
    const std::uint32_t z = op.z_mask();
    Complex acc = 0;
    for (std::size_t j = 0; j < dim_; ++j) {
        Complex t = m_[j * dim_ + (j ^ x)];
        acc += (std::popcount(static_cast<std::uint32_t>(j) & z) & 1) ? -t : t;
    }
    return acc * kIPowers[(op.phase_exponent() + std::popcount(x & z)) & 3];
}

double DensityOperator::fidelity(const StateVector &psi) const {
    if (psi.num_qubits() != num_qubits_) {
        throw DomainError("state size does not match density operator");
    }
    auto a = psi.amplitudes();
    Complex acc = 0;
    for (std::size_t r = 0; r < dim_; ++r) {
        Complex row = 0;
        for (std::size_t c = 0; c < dim_; ++c) {
            row += m_[r * dim_ + c] * a[c];
        }
        acc += std::conj(a[r]) * row;
    }
    return acc.real();
}

void DensityOperator::conjugate(const PauliString &op) {
    if (op.num_qubits() != num_qubits_) {
        throw DomainError("Kraus operator size does not match density operator");
    }
    // P rho P^dag = (P (x) conj(P)) applied to the vectorized matrix; the phase cancels.
    const std::uint32_t x = op.x_mask();
    const std::uint32_t z = op.z_mask();
    std::vector<Complex> out(m_.size());
    for (std::size_t r = 0; r < dim_; ++r) {
        int sr = std::popcount(static_cast<std::uint32_t>(r) & z) & 1;
        for (std::size_t c = 0; c < dim_; ++c) {
            int sc = std::popcount(static_cast<std::uint32_t>(c) & z) & 1;
            Complex v = m_[r * dim_ + c];
            out[(r ^ x) * dim_ + (c ^ x)] = (sr ^ sc) ? -v : v;
        }
    }
    m_ = std::move(out);
}

void DensityOperator::conjugate(const Gate &gate) {
    for (int q : gate.targets) {
        if (q < 0 || q >= num_qubits_) {
            throw DomainError("gate target out of range");
        }
    }
    // Row-major storage: column index occupies the low n bits, row index the high n bits.
    std::vector<Complex> u = gate.matrix();
    std::vector<Complex> uc(u.size());
    for (std::size_t k = 0; k < u.size(); ++k) {
        uc[k] = std::conj(u[k]);
    }
    if (gate.arity() == 1) {
        detail::apply_1q(m_, gate.targets[0] + num_qubits_, u.data());
        detail::apply_1q(m_, gate.targets[0], uc.data());
    } else {
        if (gate.targets[0] == gate.targets[1]) {
            throw DomainError("gate targets must be distinct");
        }
        detail::apply_2q(m_, gate.targets[0] + num_qubits_, gate.targets[1] + num_qubits_, u.data());
        detail::apply_2q(m_, gate.targets[0], gate.targets[1], uc.data());
    }
}

bool DensityOperator::satisfies_invariants() const {
    if (std::abs(trace() - 1.0) > tol::kTrace) {
        return false;
    }
    Eigen::MatrixXcd m(dim_, dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            if (std::abs(m_[r * dim_ + c] - std::conj(m_[c * dim_ + r])) > tol::kHermitian) {
                return false;
            }
            m(r, c) = m_[r * dim_ + c];
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff() >= -tol::kEigenvalue;
}

DensityOperator dm_evolve(const DensityOperator &rho, const Channel &channel) {
    if (channel.empty()) {
        throw DomainError("channel has no Kraus terms");
    }
    double total = 0;
    for (const auto &term : channel) {
        if (!(term.probability >= 0.0)) {
            throw DomainError("channel probability must be nonnegative");
        }
        total += term.probability;
    }
    if (std::abs(total - 1.0) > tol::kChannelSum) {
        throw DomainError("channel probabilities sum to " + std::to_string(total) + ", not 1");
    }
    std::vector<Complex> acc(rho.data().size());
    for (const auto &term : channel) {
        if (term.probability == 0.0) {
            continue;
        }
        DensityOperator k = rho;
        std::visit([&](const auto &op) { k.conjugate(op); }, term.op);
        auto d = k.data();
        for (std::size_t j = 0; j < acc.size(); ++j) {
            acc[j] += term.probability * d[j];
        }
    }
    return DensityOperator::from_matrix(rho.num_qubits(), std::move(acc));
}

}  // namespace lqt
