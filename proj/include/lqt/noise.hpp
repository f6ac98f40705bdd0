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

#ifndef LQT_NOISE_HPP
#define LQT_NOISE_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "lqt/density.hpp"
#include "lqt/protocol.hpp"
#include "lqt/state.hpp"

namespace lqt {

/// Single-qubit Pauli channel: X, Y, Z with the given probabilities, identity
/// with the remainder.
struct PauliChannel {
    double px = 0.0;
    double py = 0.0;
    double pz = 0.0;

    /// Total error probability p split evenly over X, Y, Z.
    static PauliChannel depolarizing(double p) { return {p / 3, p / 3, p / 3}; }

    double total() const { return px + py + pz; }
    bool is_identity() const { return px == 0.0 && py == 0.0 && pz == 0.0; }
    /// Throws DomainError unless every probability is in [0,1] and the total is <= 1.
    void validate() const;
    /// Kraus form on one qubit of an n-qubit register, for dm_evolve.
    Channel as_channel(int num_qubits, int qubit) const;
    bool operator==(const PauliChannel &) const = default;
};

/// Noise model for one run of the experiment.
///
/// `phys` hits each of the 10 resource qubits after preparation, `input` hits
/// the qubit to be teleported, and with probability `q_logical` one of
/// X_L, Y_L, Z_L (uniformly) hits the code block. The logical channel lives
/// entirely inside the code space, so post-selection cannot remove it.
struct NoiseSpec {
    PauliChannel phys;
    PauliChannel input;
    double q_logical = 0.0;
    std::uint64_t seed = 0;

    static NoiseSpec depolarizing(double p_phys, double p_input, double q_logical, std::uint64_t seed = 0);
    void validate() const;
    bool is_noiseless() const { return phys.is_identity() && input.is_identity() && q_logical == 0.0; }
    bool operator==(const NoiseSpec &) const = default;
};

Pauli sample_pauli(const PauliChannel &channel, Rng &rng);

/// Draws one letter from the channel and applies it to `qubit` of `state`
/// in place. Returns the applied letter.
Pauli apply_pauli_channel(StateVector &state, int qubit, const PauliChannel &channel, Rng &rng);

/// Samples the full resource error: one letter per resource qubit, then the
/// logical kick. The returned operator acts on the 10-qubit resource register.
PauliString sample_resource_error(const NoiseSpec &spec, Rng &rng, const ShorCode &code = ShorCode::standard());

/// Ideal circuit preparation followed by one sampled noise realization.
/// When `applied` is non-null it receives the sampled error operator.
ResourceState noisy_resource(const NoiseSpec &spec, Rng &rng, PauliString *applied = nullptr);

/// The exact mixed resource: every channel of `spec` pushed through dm_evolve.
DensityOperator resource_density(const NoiseSpec &spec, const ShorCode &code = ShorCode::standard());

/// Input qubit density after the input channel.
DensityOperator input_density(const StateVector &input, const NoiseSpec &spec);

struct TrajectoryStats {
    double mean;
    double error;
    std::size_t n;
};

/// Runs n independent trajectories; trajectory k draws from Rng(base_seed + k).
/// error is the sample standard deviation over sqrt(n).
TrajectoryStats run_trajectories(const std::function<double(Rng &)> &experiment, std::size_t n,
                                 std::uint64_t base_seed);

/// Multi-observable form: each trajectory writes `width` numbers.
struct TrajectoryBatch {
    std::size_t n_trajectories = 0;
    std::size_t width = 0;
    /// Row-major n_trajectories x width.
    std::vector<double> samples;
    /// Resource error of each trajectory when the experiment records it.
    std::vector<PauliString> errors;

    std::span<const double> row(std::size_t k) const { return {samples.data() + k * width, width}; }
    std::vector<double> column(std::size_t j) const;
};

using TrajectoryFn = std::function<void(Rng &rng, std::span<double> out, PauliString *error)>;

TrajectoryBatch run_trajectory_batch(const TrajectoryFn &experiment, std::size_t n, std::size_t width,
                                     std::uint64_t base_seed, bool record_errors = false);

}  // namespace lqt

#endif
