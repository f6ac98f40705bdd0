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

// Acceptance suite. Prints one PASS/FAIL line per criterion:
//
//   lqt_acceptance        all six criteria
//   lqt_acceptance N      criterion N only
//
// Exit status is 0 when every requested criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "lqt/experiment.hpp"
#include "lqt/report.hpp"

using namespace lqt;

namespace {

constexpr std::uint64_t kSeed = 20260101;
const double kTsirelson = 2 * std::numbers::sqrt2;

struct Outcome {
    bool passed = true;
    std::ostringstream detail;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            passed = false;
            detail << " [failed: " << what << "]";
        }
    }
};

NamedInput random_input(Rng &rng) {
    std::uniform_real_distribution<double> u(0, 1);
    return {"random", std::acos(1 - 2 * u(rng)), 2 * std::numbers::pi * u(rng)};
}

void ideal_exactness(Outcome &out) {
    double worst_resource = 0;
    double worst_projection = 0;
    for (Engine e : {Engine::Trajectory, Engine::Analytic, Engine::Density}) {
        ExperimentConfig c = ExperimentConfig::defaults(Scenario::Characterize);
        c.shots = 0;
        c.engine = e;
        c.trajectories = 100;
        ExperimentRecord r = run_characterize(c);
        worst_resource = std::max({worst_resource, std::abs(r.f_raw.value - 1), std::abs(r.f_cs.value - 1),
                                   std::abs(r.chsh_raw.value - kTsirelson), std::abs(r.chsh_cs.value - kTsirelson)});
        worst_projection = std::max(worst_projection, std::abs(r.p_cs.value - 1));
    }
    out.require(worst_resource <= 1e-9, "resource fidelity and CHSH within 1e-9");
    out.require(worst_projection <= 1e-12, "projection probability within 1e-12");

    Rng rng(kSeed);
    const ResourceState resource = prepare_resource_circuit();
    double worst_teleport = 0;
    for (int k = 0; k < 50; ++k) {
        NamedInput in = random_input(rng);
        const StateVector target = encode_logical(in.alpha(), in.beta());
        for (BellState b : kBellStates) {
            BsmResult branch = teleport_branch(in.state(), resource, b);
            worst_teleport = std::max(worst_teleport, std::abs(fidelity(branch.state, target) - 1));
        }
    }
    out.require(worst_teleport <= 1e-9, "teleportation fidelity within 1e-9");
    out.detail << "max |dF|, |dCHSH| " << worst_resource << ", max |dP| " << worst_projection
               << ", 50 inputs x 4 branches max |1-F| " << worst_teleport;
}

void distance_three(Outcome &out) {
    Rng rng(kSeed);
    const ShorCode &code = ShorCode::standard();
    int cases = 0;
    double worst = 0;
    double worst_projection = 0;
    for (int trial = 0; trial < 20; ++trial) {
        CheckResult c = distance_three_check(code, rng);
        out.require(c.passed, c.failures.empty() ? c.detail : c.failures.front());
        NamedInput in = random_input(rng);
        const StateVector psi = encode_logical(in.alpha(), in.beta());
        for (int q = 0; q < ShorCode::kNumQubits; ++q) {
            for (Pauli l : {Pauli::X, Pauli::Y, Pauli::Z}) {
                const StateVector bad = apply_pauli(psi, PauliString::single(9, q, l));
                SyndromeResult s = extract_syndrome(bad, rng);
                out.require(!s.syndrome.trivial(), "nontrivial syndrome");
                const StateVector fixed = apply_pauli(s.post_state, decode_correction(s.syndrome).op);
                worst = std::max(worst, std::abs(fidelity(fixed, psi) - 1));
                worst_projection = std::max(worst_projection, project_code_space(bad).probability);
                ++cases;
            }
        }
    }
    out.require(worst <= 1e-10, "active correction restores fidelity 1 within 1e-10");
    out.require(worst_projection <= 1e-12, "projection rejects every weight-1 error");
    out.detail << cases << " error cases on 20 random logical states, max |1-F| " << worst
               << ", max projection probability " << worst_projection;
}

void oracle_equivalence(Outcome &out) {
    const std::vector<double> grid = {0.0, 0.02, 0.05, 0.1};
    int done = 0;
    OracleEquivalence eq = check_oracle_equivalence(grid, 100000, kSeed, [&](const OracleCell &cell) {
        ++done;
        double z = 0;
        for (const auto &c : cell.comparisons) {
            z = std::max(z, c.z);
        }
        std::fprintf(stderr, "  cell %2d/64 p_phys=%.2f p_input=%.2f q=%.2f max z %.2f\n", done, cell.noise.phys.total(),
                     cell.noise.input.total(), cell.noise.q_logical, z);
    });
    out.require(eq.check.passed, eq.check.failures.empty() ? "equivalence" : eq.check.failures.front());
    out.detail << eq.check.detail;
}

void reported_numbers(Outcome &out) {
    FitResult fit = run_fit(ExperimentConfig::defaults(Scenario::Fit));
    out.detail << "fitted p_phys=" << fit.p_phys << " p_input=" << fit.p_input << " q_logical=" << fit.q_logical
               << " objective=" << fit.objective << "; residuals";
    for (const auto &r : fit.residuals) {
        out.detail << " " << r.name << "=" << r.residual;
        out.require(std::abs(r.residual) <= 0.04, r.name + " residual within 0.04");
    }
    for (const auto &r : fit.holdout) {
        out.detail << "; held-out " << r.name << " predicted " << r.predicted << " vs " << r.target;
        out.require(std::abs(r.residual) <= 0.05, "held-out " + r.name + " within 0.05");
    }
}

void structural_orderings(Outcome &out) {
    EngineOptions o;
    o.inputs = inputs::pauli_eigenstates();
    ExperimentRecord phys = evaluate_density(NoiseSpec::depolarizing(0.05, 0, 0), o);
    out.require(phys.f_cs.value > phys.f_bare.value && phys.f_cs.value > phys.f_raw.value,
                "corrected exceeds raw under physical noise");
    out.require(phys.teleport_avg_cs.value > phys.teleport_avg_raw.value,
                "corrected teleportation exceeds raw under physical noise");
    ExperimentRecord logical = evaluate_density(NoiseSpec::depolarizing(0, 0, 0.3), o);
    const double gap = std::max({std::abs(logical.f_cs.value - logical.f_raw.value),
                                 std::abs(logical.f_cs.value - logical.f_bare.value),
                                 std::abs(logical.teleport_avg_cs.value - logical.teleport_avg_raw.value)});
    out.require(gap <= 1e-12, "corrected equals raw under logical noise");
    out.detail << "p=0.05: F_cs " << phys.f_cs.value << " > F_bare " << phys.f_bare.value << "; q=0.3: |F_cs-F_raw| "
               << gap;

    // Corrected never falls below raw for purely physical noise.
    int grid_cells = 0;
    for (double p : {0.0, 0.02, 0.05, 0.1}) {
        for (double pin : {0.0, 0.02, 0.05, 0.1}) {
            ExperimentRecord r = evaluate_analytic(NoiseSpec::depolarizing(p, pin, 0), o);
            out.require(r.f_cs.value >= r.f_bare.value - 1e-12, "corrected >= raw on the q=0 grid");
            out.require(r.teleport_avg_cs.value >= r.teleport_avg_raw.value - 1e-12,
                        "teleportation corrected >= raw on the q=0 grid");
            ++grid_cells;
        }
    }
    out.detail << "; " << grid_cells << " q=0 cells ordered";

    EngineOptions resource_only;
    out.detail << "; Werner v-grid";
    for (double v : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        ExperimentRecord r = evaluate_density(NoiseSpec::depolarizing(0, 0, 0.75 * (1 - v)), resource_only);
        out.require(std::abs(r.chsh_cs.value - kTsirelson * v) <= 1e-9, "CHSH_cs = 2 sqrt2 v");
        out.require(std::abs(r.f_cs.value - (1 + 3 * v) / 4) <= 1e-9, "F_cs = (1+3v)/4");
        if (r.f_cs.value > 0.854) {
            out.require(r.chsh_cs.value > 2, "CHSH_cs > 2 when F_cs > 0.854");
        }
        out.detail << " v=" << v << ":(" << r.f_cs.value << "," << r.chsh_cs.value << ")";
    }
}

void statistical_machinery(Outcome &out) {
    const ValidateOptions v;
    CalibrationSummary cal = check_calibration(v.calibration_noise, v.calibration_runs, v.calibration_shots, 200, kSeed);
    out.require(cal.check.passed, cal.check.failures.empty() ? "calibration" : cal.check.failures.front());
    out.detail << cal.check.detail;

    int compared = 0;
    for (Scenario s : {Scenario::Characterize, Scenario::Teleport, Scenario::Fit}) {
        ExperimentConfig c = ExperimentConfig::defaults(s);
        c.noise.seed = kSeed;
        if (s != Scenario::Fit) {
            c.noise = NoiseSpec::depolarizing(0.0236, 0.2522, 0.0827, kSeed);
        }
        const Report a = run_scenario(c);
        const Report b = run_scenario(c);
        out.require(a.json == b.json && a.csv == b.csv && a.plot_csv == b.plot_csv,
                    scenario_name(s) + " report byte-identical");
        ++compared;
    }
    ExperimentConfig traj = ExperimentConfig::defaults(Scenario::Teleport);
    traj.shots = 0;
    traj.trajectories = 2000;
    traj.noise = NoiseSpec::depolarizing(0.05, 0.05, 0.05, kSeed);
    out.require(run_scenario(traj).json == run_scenario(traj).json, "trajectory report byte-identical");
    out.detail << "; " << compared + 1 << " seeded reports byte-identical across repeated runs";
}

struct Criterion {
    const char *title;
    std::function<void(Outcome &)> check;
};

}  // namespace

int main(int argc, char **argv) {
    const std::vector<Criterion> criteria = {
        {"ideal-protocol exactness", ideal_exactness},
        {"distance-3 exhaustiveness", distance_three},
        {"oracle equivalence (4x4x4 grid, n=1e5)", oracle_equivalence},
        {"reported-number reproduction (calibrated fit)", reported_numbers},
        {"structural orderings", structural_orderings},
        {"statistical machinery", statistical_machinery},
    };
    std::vector<int> which;
    if (argc > 1) {
        const int n = std::atoi(argv[1]);
        if (n < 1 || n > static_cast<int>(criteria.size())) {
            std::fprintf(stderr, "usage: %s [1-%zu]\n", argv[0], criteria.size());
            return 2;
        }
        which.push_back(n);
    } else {
        for (int n = 1; n <= static_cast<int>(criteria.size()); ++n) {
            which.push_back(n);
        }
    }
    bool all = true;
    for (int n : which) {
        Outcome out;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[n - 1].check(out);
        } catch (const std::exception &e) {
            out.passed = false;
            out.detail << " [error: " << e.what() << "]";
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %d: %s - %s (%.1f s): %s\n", n, out.passed ? "PASS" : "FAIL", criteria[n - 1].title,
                    secs, out.detail.str().c_str());
        std::fflush(stdout);
        all = all && out.passed;
    }
    return all ? 0 : 1;
}
