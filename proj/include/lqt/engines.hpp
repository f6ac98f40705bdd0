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

#ifndef LQT_ENGINES_HPP
#define LQT_ENGINES_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lqt/metrics.hpp"
#include "lqt/noise.hpp"
#include "lqt/protocol.hpp"

namespace lqt {

/// How the headline observables are computed.
///
/// Trajectory: pure-state Monte Carlo over sampled Pauli errors.
/// Analytic: exact, by tracking the distribution of error signatures.
/// Density: exact, by dense density-matrix evolution (slow reference).
enum class Engine { Trajectory, Analytic, Density };

std::string engine_name(Engine e);
std::optional<Engine> parse_engine(std::string_view name);

struct EngineOptions {
    /// Compute the resource characterization block.
    bool resource = true;
    /// Teleport each of these inputs.
    std::vector<NamedInput> inputs;
    TeleportMode mode = TeleportMode::PostselectPhiPlus;
    /// Also report fidelities after syndrome measurement and table recovery.
    bool active = false;
    std::size_t trajectories = 100000;
    std::uint64_t seed = 0;
    /// Shots per measurement setting; 0 reports exact expectations.
    std::int64_t shots = 0;
    std::size_t resamples = 200;
};

ExperimentRecord evaluate_trajectories(const NoiseSpec &spec, const EngineOptions &options);
ExperimentRecord evaluate_analytic(const NoiseSpec &spec, const EngineOptions &options);
ExperimentRecord evaluate_density(const NoiseSpec &spec, const EngineOptions &options);

/// Dispatches on the engine. With shots > 0 the exact expectations of every
/// measurement setting are turned into sampled counts and the errors come
/// from Poisson resampling; that path needs an exact engine.
ExperimentRecord evaluate(Engine engine, const NoiseSpec &spec, const EngineOptions &options);

/// Exact expectation of a Pauli observable on some fixed state.
using PauliOracle = std::function<double(const PauliString &)>;

struct SettingPlan {
    std::vector<std::string> labels;
    std::vector<double> expectations;
};

/// Resource settings: for each of I, XX, YY, ZZ, E1X, E2X, E1Z, E2Z and each
/// of the 256 stabilizer products S, the observable (physical (x) S L). The
/// code-space projector is the average over S, so every headline quantity is
/// a linear function of setting expectations.
SettingPlan resource_settings(const PauliOracle &resource, const ShorCode &code = ShorCode::standard());

/// Teleportation settings for one input: S and S L for each logical axis on
/// which the input has a nonzero Bloch component.
SettingPlan teleport_settings(const PauliOracle &output, const NamedInput &input,
                              const ShorCode &code = ShorCode::standard());

/// p_cs, f_raw, f_cs, chsh_raw, chsh_cs from a resource count table.
std::vector<CountStatistic> resource_statistics();
/// f_raw, f_cs, p_cs from a teleportation count table.
std::vector<CountStatistic> teleport_statistics(const NamedInput &input);

}  // namespace lqt

#endif
