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

#ifndef LQT_EXPERIMENT_HPP
#define LQT_EXPERIMENT_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lqt/engines.hpp"
#include "lqt/metrics.hpp"
#include "lqt/noise.hpp"
#include "lqt/protocol.hpp"
#include "lqt/shor_code.hpp"

namespace lqt {

enum class Scenario { Characterize, Teleport, Fit, Validate };
enum class Correction { Projection, Active, Both };
enum class OutputFormat { Json, Csv, Both };

std::string scenario_name(Scenario s);
std::optional<Scenario> parse_scenario(std::string_view name);
std::string correction_name(Correction c);
std::string format_name(OutputFormat f);
std::optional<OutputFormat> parse_format(std::string_view name);

/// Shots per setting used when a config does not say, matching the
/// experiment's typical coincidence totals per setting.
constexpr std::int64_t kCharacterizeShots = 1500;
constexpr std::int64_t kTeleportShots = 60;

struct FitTarget {
    std::string name;
    double value;
};

struct FitOptions {
    /// Observables matched in the least-squares objective.
    std::vector<FitTarget> targets;
    /// Observables predicted at the fitted point but not fitted.
    std::vector<FitTarget> holdout;
    double grid_step = 0.01;
    double upper = 0.3;
    /// Number of best grid points refined by the simplex.
    int seeds = 5;
    int max_iterations = 2000;

    /// Fidelities, projection and CHSH values from the experiment, with the
    /// raw teleportation average held out.
    static FitOptions reported();
};

struct ValidateOptions {
    std::vector<double> grid{0.0, 0.02, 0.05, 0.1};
    std::size_t trajectories = 10000;
    std::size_t calibration_runs = 200;
    std::int64_t calibration_shots = kCharacterizeShots;
    /// Noise of the calibration experiments.
    NoiseSpec calibration_noise = NoiseSpec::depolarizing(0.02, 0.02, 0.1);
};

struct ExperimentConfig {
    int schema_version = 1;
    Scenario scenario = Scenario::Characterize;
    NoiseSpec noise;
    /// Shots per setting; 0 means exact expectations.
    std::int64_t shots = 0;
    /// Unset: trajectories for exact runs, the analytic engine for sampled ones.
    std::optional<Engine> engine;
    std::size_t trajectories = 100000;
    std::vector<NamedInput> inputs;
    TeleportMode mode = TeleportMode::PostselectPhiPlus;
    Correction correction = Correction::Projection;
    std::size_t resamples = 200;
    FitOptions fit = FitOptions::reported();
    ValidateOptions validate;
    /// Empty: the report goes to standard output.
    std::string output_dir;
    OutputFormat format = OutputFormat::Json;

    /// Defaults for one scenario: the experiment's shot counts for
    /// characterize and teleport, the Pauli eigenstates as inputs.
    static ExperimentConfig defaults(Scenario scenario);

    Engine resolved_engine() const;
    EngineOptions engine_options() const;
    /// Throws ConfigError for inconsistent settings.
    void validate_config() const;
};

/// Parses a JSON config. Unknown keys, wrong types and a wrong
/// schema_version throw ConfigError.
ExperimentConfig parse_config(std::string_view json_text);
ExperimentConfig load_config(const std::string &path);

/// Looks up a named observable ("f_raw", "teleport_avg_cs", ...).
std::optional<Estimate> find_observable(const ExperimentRecord &record, std::string_view name);

ExperimentRecord run_characterize(const ExperimentConfig &config);
ExperimentRecord run_teleport(const ExperimentConfig &config);

struct FitResidual {
    std::string name;
    double target;
    double predicted;
    double residual;
};

struct FitStep {
    int iteration;
    double objective;
    double simplex_size;
    double p_phys;
    double p_input;
    double q_logical;
};

struct FitResult {
    double p_phys = 0;
    double p_input = 0;
    double q_logical = 0;
    /// Sum of squared residuals at the returned point.
    double objective = 0;
    double grid_objective = 0;
    std::size_t grid_points = 0;
    /// Set when no simplex run improved on the best grid point.
    bool grid_only = false;
    std::vector<FitResidual> residuals;
    std::vector<FitResidual> holdout;
    /// Simplex iterations of the winning refinement.
    std::vector<FitStep> trace;
    /// Exact prediction of every observable at the fitted point.
    ExperimentRecord prediction;
};

/// Exact forward model of the fit: depolarizing physical and input noise and
/// a uniform logical channel, post-selected teleportation of `inputs`.
ExperimentRecord fit_model(double p_phys, double p_input, double q_logical, const std::vector<NamedInput> &inputs);

/// Grid search over [0, upper]^3 followed by Nelder-Mead refinement.
FitResult fit_noise(const FitOptions &options, const std::vector<NamedInput> &inputs);
FitResult run_fit(const ExperimentConfig &config);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    /// Offending cases, one line each.
    std::vector<std::string> failures;
};

/// check_distance_three as a named validation check.
CheckResult distance_three_check(const ShorCode &code, Rng &rng);

struct OracleComparison {
    std::string observable;
    double exact;
    Estimate sampled;
    /// |sampled - exact| / stderr, with the stderr floored at scale/n.
    double z;
};

struct OracleCell {
    NoiseSpec noise;
    std::vector<OracleComparison> comparisons;
};

struct OracleEquivalence {
    std::vector<OracleCell> cells;
    std::size_t pairs = 0;
    std::size_t within_two = 0;
    double max_z = 0;
    CheckResult check;
};

/// Observables compared between the trajectory engine and the density oracle.
const std::vector<std::string> &oracle_observables();

/// Trajectory estimates against the density oracle on grid^3 depolarizing
/// (p_phys, p_input, q_logical). Passes when every pair is within 4 stderr
/// and at least 95% are within 2.
OracleEquivalence check_oracle_equivalence(const std::vector<double> &grid, std::size_t trajectories,
                                           std::uint64_t seed,
                                           const std::function<void(const OracleCell &)> &progress = {});

struct CalibrationSummary {
    std::vector<std::string> observables;
    /// Fraction of runs whose exact value lies within one reported stderr.
    std::vector<double> coverage;
    CheckResult check;
};

/// Repeats a shot-sampled characterization and counts how often the exact
/// value lies within the Poisson-resampled error bar. Passes when every
/// observable covers 68% +- 7% of runs.
CalibrationSummary check_calibration(const NoiseSpec &noise, std::size_t runs, std::int64_t shots,
                                     std::size_t resamples, std::uint64_t seed);

struct ValidationReport {
    std::vector<CheckResult> checks;
    std::uint64_t seed = 0;

    bool passed() const;
};

ValidationReport run_validate(const ExperimentConfig &config);

}  // namespace lqt

#endif
