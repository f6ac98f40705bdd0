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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "lqt/errors.hpp"
#include "lqt/experiment.hpp"

namespace lqt {

namespace {

constexpr double kMaxZ = 4.0;
constexpr double kInnerZ = 2.0;
constexpr double kInnerFraction = 0.95;
constexpr double kTargetCoverage = 0.68;
constexpr double kCoverageSlack = 0.07;

const std::vector<std::string> kCalibrated = {"f_raw", "f_cs", "p_cs", "chsh_raw", "chsh_cs"};

// Natural size of an observable, used to floor the stderr of a trajectory
// estimate that happens to have no spread.
double scale_of(const std::string &name) {
    return name.rfind("chsh", 0) == 0 ? 2 * std::numbers::sqrt2 : 1.0;
}

std::string describe(const NoiseSpec &s) {
    std::ostringstream out;
    out << "p_phys=" << s.phys.total() << " p_input=" << s.input.total() << " q=" << s.q_logical;
    return out.str();
}

}  // namespace

CheckResult distance_three_check(const ShorCode &code, Rng &rng) {
    CheckReport r = check_distance_three(code, rng);
    CheckResult out{"distance_three", r.passed, "", r.failures};
    out.detail = r.passed ? "27 weight-1 errors detected, corrected and rejected by projection"
                          : std::to_string(r.failures.size()) + " weight-1 error checks failed";
    return out;
}

const std::vector<std::string> &oracle_observables() {
    static const std::vector<std::string> names = {"f_raw",   "f_cs",         "p_cs",           "chsh_raw",
                                                   "chsh_cs", "teleport_avg_raw", "teleport_avg_cs"};
    return names;
}

OracleEquivalence check_oracle_equivalence(const std::vector<double> &grid, std::size_t trajectories,
                                           std::uint64_t seed,
                                           const std::function<void(const OracleCell &)> &progress) {
    if (grid.empty()) {
        throw ConfigError("oracle grid is empty");
    }
    OracleEquivalence eq;
    std::uint64_t cell_index = 0;
    for (double p : grid) {
        for (double pin : grid) {
            for (double q : grid) {
                OracleCell cell{NoiseSpec::depolarizing(p, pin, q), {}};
                EngineOptions o;
                o.inputs = inputs::pauli_eigenstates();
                o.trajectories = trajectories;
                // Disjoint per-trajectory streams across cells.
                o.seed = seed + cell_index * trajectories;
                ++cell_index;
                const ExperimentRecord sampled = evaluate_trajectories(cell.noise, o);
                const ExperimentRecord exact = evaluate_density(cell.noise, o);
                for (const auto &name : oracle_observables()) {
                    const Estimate s = *find_observable(sampled, name);
                    const double e = find_observable(exact, name)->value;
                    const double floor = scale_of(name) / static_cast<double>(trajectories);
                    const double z = std::abs(s.value - e) / std::max(s.error, floor);
                    cell.comparisons.push_back({name, e, s, z});
                    ++eq.pairs;
                    if (z <= kInnerZ) {
                        ++eq.within_two;
                    }
                    eq.max_z = std::max(eq.max_z, z);
                    if (z > kMaxZ) {
                        std::ostringstream msg;
                        msg << describe(cell.noise) << " " << name << ": sampled " << s.value << " +- " << s.error
                            << ", exact " << e << ", z=" << z;
                        eq.check.failures.push_back(msg.str());
                    }
                }
                if (progress) {
                    progress(cell);
                }
                eq.cells.push_back(std::move(cell));
            }
        }
    }
    const double inner = static_cast<double>(eq.within_two) / static_cast<double>(eq.pairs);
    eq.check.name = "oracle_equivalence";
    eq.check.passed = eq.check.failures.empty() && inner >= kInnerFraction;
    std::ostringstream detail;
    detail << eq.cells.size() << " cells x " << oracle_observables().size() << " observables at n=" << trajectories
           << ": " << eq.within_two << "/" << eq.pairs << " within 2 stderr, max z " << eq.max_z;
    eq.check.detail = detail.str();
    if (inner < kInnerFraction) {
        eq.check.failures.push_back("only " + std::to_string(eq.within_two) + " of " + std::to_string(eq.pairs) +
                                    " pairs within 2 stderr");
    }
    return eq;
}

CalibrationSummary check_calibration(const NoiseSpec &noise, std::size_t runs, std::int64_t shots,
                                     std::size_t resamples, std::uint64_t seed) {
    if (runs == 0 || shots <= 0) {
        throw ConfigError("calibration needs runs and shots");
    }
    EngineOptions o;
    o.resamples = resamples;
    const ExperimentRecord exact = evaluate_analytic(noise, o);
    std::vector<std::size_t> covered(kCalibrated.size(), 0);
    o.shots = shots;
    for (std::size_t k = 0; k < runs; ++k) {
        o.seed = seed + k;
        const ExperimentRecord r = evaluate(Engine::Analytic, noise, o);
        for (std::size_t j = 0; j < kCalibrated.size(); ++j) {
            const Estimate e = *find_observable(r, kCalibrated[j]);
            if (std::abs(e.value - find_observable(exact, kCalibrated[j])->value) <= e.error) {
                ++covered[j];
            }
        }
    }
    CalibrationSummary s;
    s.observables = kCalibrated;
    s.check.name = "calibration";
    s.check.passed = true;
    std::ostringstream detail;
    detail << runs << " runs at " << shots << " shots per setting; coverage";
    for (std::size_t j = 0; j < kCalibrated.size(); ++j) {
        const double c = static_cast<double>(covered[j]) / static_cast<double>(runs);
        s.coverage.push_back(c);
        detail << " " << kCalibrated[j] << "=" << c;
        if (std::abs(c - kTargetCoverage) > kCoverageSlack) {
            s.check.passed = false;
            s.check.failures.push_back(kCalibrated[j] + " coverage " + std::to_string(c) + " outside 0.68 +- 0.07");
        }
    }
    s.check.detail = detail.str();
    return s;
}

bool ValidationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
}

ValidationReport run_validate(const ExperimentConfig &config) {
    if (config.scenario != Scenario::Validate) {
        throw ConfigError("config is for the " + scenario_name(config.scenario) + " scenario");
    }
    config.validate_config();
    const ValidateOptions &v = config.validate;
    ValidationReport report;
    report.seed = config.noise.seed;
    Rng rng(config.noise.seed);
    report.checks.push_back(distance_three_check(ShorCode::standard(), rng));
    report.checks.push_back(check_oracle_equivalence(v.grid, v.trajectories, config.noise.seed).check);
    report.checks.push_back(
        check_calibration(v.calibration_noise, v.calibration_runs, v.calibration_shots, config.resamples,
                          config.noise.seed)
            .check);
    return report;
}

}  // namespace lqt
