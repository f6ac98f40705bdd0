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

#ifndef LQT_METRICS_HPP
#define LQT_METRICS_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lqt/noise.hpp"
#include "lqt/shor_code.hpp"
#include "lqt/state.hpp"

namespace lqt {

/// A value with its one-sigma statistical error (0 for exact computations).
struct Estimate {
    double value = 0.0;
    double error = 0.0;
};

/// The four terms of the Bell-state fidelity decomposition:
/// <Pi>, <X (x) X_L>, <Y (x) Y_L>, <Z (x) Z_L>, either bare (identity = 1)
/// or sandwiched by the code-space projector.
struct FidelityTerms {
    double identity = 1.0;
    double xx = 0.0;
    double yy = 0.0;
    double zz = 0.0;
};

/// raw: (identity + xx - yy + zz) / 4; corrected: the same divided by identity.
/// Throws DegenerateProjectionError in corrected mode when identity < 1e-9.
double resource_fidelity(const FidelityTerms &terms, bool corrected);

/// C1..C4 = <E1 X_L>, <E2 X_L>, <E1 Z_L>, <E2 Z_L> with E1,2 = (Z +- X)/sqrt2
/// on the physical qubit.
struct Correlators {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
    double c4 = 0.0;
};

/// Builds C1..C4 from the four Pauli correlators <Z X_L>, <X X_L>, <Z Z_L>, <X Z_L>.
Correlators correlators_from_paulis(double zx, double xx, double zz, double xz);

/// C1 - C2 + C3 + C4. In corrected mode the correlators are taken to be
/// sandwiched and the sum is divided by `projection`.
double chsh(const Correlators &c, bool corrected, double projection = 1.0);

/// P (x) L on the resource register: `physical` on qubit 9, the logical on the code block.
PauliString resource_correlator(Pauli physical, LogicalAxis logical, const ShorCode &code = ShorCode::standard());

/// Everything the resource characterization needs from one 10-qubit state.
struct ResourceSample {
    double projection = 1.0;
    FidelityTerms bare;
    FidelityTerms sandwiched;
    Correlators bare_correlators;
    Correlators sandwiched_correlators;
};

ResourceSample measure_resource(const StateVector &resource, const ShorCode &code = ShorCode::standard());

/// One member of a 9-qubit output ensemble.
struct WeightedState {
    double weight;
    StateVector state;
};

struct TeleportFidelity {
    double fidelity;
    double p_cs;
};

/// Fidelity of the ensemble with alpha|0_L> + beta|1_L>. Corrected mode
/// projects each member onto the code space and renormalizes over the
/// accepted weight; p_cs is the accepted fraction in both modes.
TeleportFidelity teleport_fidelity(std::span<const WeightedState> ensemble, Complex alpha, Complex beta,
                                   bool corrected, const ShorCode &code = ShorCode::standard());

/// The measure-and-prepare bound on average teleportation fidelity.
double classical_limit();

/// Two-outcome count histograms, one row per measurement setting.
struct CountTable {
    std::vector<std::string> labels;
    /// counts[s] = {n(+1), n(-1)} for setting s.
    std::vector<std::array<std::int64_t, 2>> counts;

    std::size_t size() const { return counts.size(); }
    void add(std::string label, std::int64_t plus, std::int64_t minus);
    /// (n+ - n-) / (n+ + n-); 0 for an empty row.
    double expectation(std::size_t setting) const;
};

/// Draws Binomial(shots, (1 + E)/2) positive outcomes for each exact expectation E.
CountTable sample_counts(std::span<const double> expectations, std::span<const std::string> labels,
                         std::int64_t shots, Rng &rng);

using CountStatistic = std::function<double(const CountTable &)>;

/// Standard deviation of `derived` over n_resamples tables whose counts are
/// each redrawn as Poisson(observed). Requires n_resamples >= 100.
double poisson_resample(const CountTable &counts, const CountStatistic &derived, std::size_t n_resamples,
                        Rng &rng);

/// Several statistics over one shared set of resampled tables.
std::vector<double> poisson_resample(const CountTable &counts, std::span<const CountStatistic> derived,
                                     std::size_t n_resamples, Rng &rng);

struct TeleportFigures {
    std::string input;
    double theta = 0.0;
    double phi = 0.0;
    Estimate f_raw;
    Estimate f_cs;
    Estimate p_cs;
    std::optional<Estimate> f_active;
};

/// One run's headline numbers with their errors and the settings that
/// produced them. Resource and teleportation blocks are filled by the
/// scenarios that compute them.
struct ExperimentRecord {
    std::string scenario;
    bool has_resource = false;
    Estimate f_raw;
    Estimate f_cs;
    Estimate p_cs;
    Estimate chsh_raw;
    Estimate chsh_cs;
    /// Fidelity and CHSH from unprojected operators.
    Estimate f_bare;
    Estimate chsh_bare;
    std::optional<Estimate> f_active;

    std::vector<TeleportFigures> teleport;
    Estimate teleport_avg_raw;
    Estimate teleport_avg_cs;
    std::optional<Estimate> teleport_avg_active;

    NoiseSpec noise;
    std::string engine;
    std::string mode;
    std::string correction;
    /// Shots per measurement setting; 0 for exact expectations.
    std::int64_t shots = 0;
    std::size_t trajectories = 0;
    std::uint64_t seed = 0;
};

}  // namespace lqt

#endif
