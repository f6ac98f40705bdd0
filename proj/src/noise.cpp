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

#include "lqt/noise.hpp"

#include <gsl/gsl_statistics_double.h>

#include <cmath>

#include "lqt/errors.hpp"
#include "lqt/tolerances.hpp"

namespace lqt {

namespace {

void check_probability(double p, const char *what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError(std::string(what) + " must lie in [0, 1]");
    }
}

const ResourceState &ideal_resource() {
    static const ResourceState r = prepare_resource_circuit();
    return r;
}

}  // namespace

void PauliChannel::validate() const {
    check_probability(px, "px");
    check_probability(py, "py");
    check_probability(pz, "pz");
    if (total() > 1.0 + tol::kChannelSum) {
        throw DomainError("Pauli channel probabilities sum to more than 1");
    }
}

Channel PauliChannel::as_channel(int num_qubits, int qubit) const {
    validate();
    Channel ch;
    ch.push_back({1.0 - total(), PauliString(num_qubits)});
    ch.push_back({px, PauliString::single(num_qubits, qubit, Pauli::X)});
    ch.push_back({py, PauliString::single(num_qubits, qubit, Pauli::Y)});
    ch.push_back({pz, PauliString::single(num_qubits, qubit, Pauli::Z)});
    return ch;
}

NoiseSpec NoiseSpec::depolarizing(double p_phys, double p_input, double q_logical, std::uint64_t seed) {
    NoiseSpec s{PauliChannel::depolarizing(p_phys), PauliChannel::depolarizing(p_input), q_logical, seed};
    s.validate();
    return s;
}

void NoiseSpec::validate() const {
    phys.validate();
    input.validate();
    check_probability(q_logical, "q_logical");
}

Pauli sample_pauli(const PauliChannel &channel, Rng &rng) {
    if (channel.is_identity()) {
        return Pauli::I;
    }
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double r = u(rng);
    if (r < channel.px) {
        return Pauli::X;
    }
    if (r < channel.px + channel.py) {
        return Pauli::Y;
    }
    if (r < channel.total()) {
        return Pauli::Z;
    }
    return Pauli::I;
}

Pauli apply_pauli_channel(StateVector &state, int qubit, const PauliChannel &channel, Rng &rng) {
    if (qubit < 0 || qubit >= state.num_qubits()) {
        throw DomainError("channel qubit out of range");
    }
    Pauli p = sample_pauli(channel, rng);
    if (p != Pauli::I) {
        state.apply(PauliString::single(state.num_qubits(), qubit, p));
    }
    return p;
}

PauliString sample_resource_error(const NoiseSpec &spec, Rng &rng, const ShorCode &code) {
    PauliString e(kResourceQubits);
    for (int q = 0; q < kResourceQubits; ++q) {
        e.set_letter(q, sample_pauli(spec.phys, rng));
    }
    if (spec.q_logical > 0.0) {
        std::uniform_real_distribution<double> u(0.0, 1.0);
        double r = u(rng);
        if (r < spec.q_logical) {
            int axis = std::min(2, static_cast<int>(3.0 * r / spec.q_logical));
            const LogicalAxis axes[3] = {LogicalAxis::X, LogicalAxis::Y, LogicalAxis::Z};
            e *= code.logical(axes[axis]).embed(kResourceQubits, kCodeOffset);
        }
    }
    return e;
}

ResourceState noisy_resource(const NoiseSpec &spec, Rng &rng, PauliString *applied) {
    spec.validate();
    ResourceState r = ideal_resource();
    PauliString e = sample_resource_error(spec, rng);
    if (!e.is_identity()) {
        r.state.apply(e);
    }
    if (applied != nullptr) {
        *applied = std::move(e);
    }
    return r;
}

DensityOperator resource_density(const NoiseSpec &spec, const ShorCode &code) {
    spec.validate();
    DensityOperator rho = DensityOperator::from_pure(ideal_resource().state);
    if (!spec.phys.is_identity()) {
        for (int q = 0; q < kResourceQubits; ++q) {
            rho = dm_evolve(rho, spec.phys.as_channel(kResourceQubits, q));
        }
    }
    if (spec.q_logical > 0.0) {
        const double q = spec.q_logical;
        Channel logical = {
            {1.0 - q, PauliString(kResourceQubits)},
            {q / 3, code.logical_x().embed(kResourceQubits, kCodeOffset)},
            {q / 3, code.logical_y().embed(kResourceQubits, kCodeOffset)},
            {q / 3, code.logical_z().embed(kResourceQubits, kCodeOffset)},
        };
        rho = dm_evolve(rho, logical);
    }
    return rho;
}

DensityOperator input_density(const StateVector &input, const NoiseSpec &spec) {
    if (input.num_qubits() != 1) {
        throw DomainError("input state must be a single qubit");
    }
    DensityOperator rho = DensityOperator::from_pure(input);
    if (!spec.input.is_identity()) {
        rho = dm_evolve(rho, spec.input.as_channel(1, 0));
    }
    return rho;
}

TrajectoryStats run_trajectories(const std::function<double(Rng &)> &experiment, std::size_t n,
                                 std::uint64_t base_seed) {
    if (n < 2) {
        throw DomainError("need at least two trajectories for an error bar");
    }
    std::vector<double> x(n);
    for (std::size_t k = 0; k < n; ++k) {
        Rng rng(base_seed + k);
        x[k] = experiment(rng);
    }
    const double mean = gsl_stats_mean(x.data(), 1, n);
    const double sd = gsl_stats_sd_m(x.data(), 1, n, mean);
    return {mean, sd / std::sqrt(static_cast<double>(n)), n};
}

std::vector<double> TrajectoryBatch::column(std::size_t j) const {
    if (j >= width) {
        throw DomainError("trajectory column out of range");
    }
    std::vector<double> out(n_trajectories);
    for (std::size_t k = 0; k < n_trajectories; ++k) {
        out[k] = samples[k * width + j];
    }
    return out;
}

TrajectoryBatch run_trajectory_batch(const TrajectoryFn &experiment, std::size_t n, std::size_t width,
                                     std::uint64_t base_seed, bool record_errors) {
    if (n < 2) {
        throw DomainError("need at least two trajectories for an error bar");
    }
    TrajectoryBatch batch;
    batch.n_trajectories = n;
    batch.width = width;
    batch.samples.assign(n * width, 0.0);
    if (record_errors) {
        batch.errors.resize(n);
    }
    for (std::size_t k = 0; k < n; ++k) {
        Rng rng(base_seed + k);
        std::span<double> out(batch.samples.data() + k * width, width);
        experiment(rng, out, record_errors ? &batch.errors[k] : nullptr);
    }
    return batch;
}

}  // namespace lqt
