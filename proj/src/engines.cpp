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

#include "lqt/engines.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <unordered_map>

#include "lqt/errors.hpp"
#include "lqt/oracle.hpp"
#include "lqt/pauli_frame.hpp"
#include "lqt/stats.hpp"
#include "lqt/tolerances.hpp"

namespace lqt {

namespace {

using std::numbers::sqrt2;

constexpr int kProducts = 256;
constexpr double kAxisCutoff = 1e-12;

std::array<double, 3> bloch(const NamedInput &in) {
    return {std::sin(in.theta) * std::cos(in.phi), std::sin(in.theta) * std::sin(in.phi), std::cos(in.theta)};
}

ExperimentRecord blank_record(Engine engine, const NoiseSpec &spec, const EngineOptions &o) {
    ExperimentRecord r;
    r.noise = spec;
    r.engine = engine_name(engine);
    r.mode = mode_name(o.mode);
    r.shots = o.shots;
    r.trajectories = engine == Engine::Trajectory ? o.trajectories : 0;
    r.seed = o.seed;
    return r;
}

Estimate exact(double v) {
    return {v, 0.0};
}

void fill_resource(ExperimentRecord &r, const ResourceSample &s) {
    r.has_resource = true;
    r.p_cs = exact(s.projection);
    r.f_raw = exact(resource_fidelity(s.sandwiched, false));
    r.f_cs = exact(resource_fidelity(s.sandwiched, true));
    r.chsh_raw = exact(chsh(s.sandwiched_correlators, false));
    r.chsh_cs = exact(chsh(s.sandwiched_correlators, true, s.projection));
    r.f_bare = exact(resource_fidelity(s.bare, false));
    r.chsh_bare = exact(chsh(s.bare_correlators, false));
}

TeleportFigures exact_teleport(const NamedInput &in, const TeleportMoments &m, bool active) {
    TeleportFigures t;
    t.input = in.name;
    t.theta = in.theta;
    t.phi = in.phi;
    t.f_raw = exact(m.f_raw);
    t.p_cs = exact(m.p_cs);
    if (!(m.p_cs >= tol::kDegenerateProjection)) {
        throw DegenerateProjectionError("teleported output never lies in the code space");
    }
    t.f_cs = exact(m.f_raw / m.p_cs);
    if (active) {
        t.f_active = exact(m.f_active);
    }
    return t;
}

// Plain averages over inputs for independent per-input estimates.
void fill_teleport_average(ExperimentRecord &r, bool active) {
    if (r.teleport.empty()) {
        return;
    }
    const double k = static_cast<double>(r.teleport.size());
    auto average = [&](auto pick) {
        double v = 0, var = 0;
        for (const auto &t : r.teleport) {
            Estimate e = pick(t);
            v += e.value;
            var += e.error * e.error;
        }
        return Estimate{v / k, std::sqrt(var) / k};
    };
    r.teleport_avg_raw = average([](const TeleportFigures &t) { return t.f_raw; });
    r.teleport_avg_cs = average([](const TeleportFigures &t) { return t.f_cs; });
    if (active) {
        r.teleport_avg_active = average([](const TeleportFigures &t) { return *t.f_active; });
    }
}

std::string setting_label(const std::string &group, int m) {
    return group + ":S" + std::to_string(m);
}

double group_mean(const CountTable &t, std::size_t group) {
    double acc = 0;
    for (int m = 0; m < kProducts; ++m) {
        acc += t.expectation(group * kProducts + m);
    }
    return acc / kProducts;
}

std::vector<PauliString> code_products(const ShorCode &code) {
    std::vector<PauliString> out;
    out.reserve(kProducts);
    const PauliSum projector = code_space_projector(code);
    for (const auto &term : projector.terms()) {
        out.push_back(term.op);
    }
    return out;
}

// Teleport axes actually measured for an input: those with a nonzero Bloch component.
std::vector<int> measured_axes(const NamedInput &in) {
    auto n = bloch(in);
    std::vector<int> axes;
    for (int a = 0; a < 3; ++a) {
        if (std::abs(n[a]) > kAxisCutoff) {
            axes.push_back(a);
        }
    }
    return axes;
}

constexpr LogicalAxis kAxes[3] = {LogicalAxis::X, LogicalAxis::Y, LogicalAxis::Z};

ExperimentRecord sampled_record(Engine engine, const NoiseSpec &spec, const EngineOptions &o,
                                const std::optional<PauliOracle> &resource,
                                const std::vector<PauliOracle> &outputs) {
    if (o.active) {
        throw ConfigError("active correction is only available with exact expectations");
    }
    ExperimentRecord r = blank_record(engine, spec, o);
    Rng rng(o.seed);
    if (resource) {
        SettingPlan plan = resource_settings(*resource);
        CountTable counts = sample_counts(plan.expectations, plan.labels, o.shots, rng);
        auto stats = resource_statistics();
        auto err = poisson_resample(counts, stats, o.resamples, rng);
        r.has_resource = true;
        r.p_cs = {stats[0](counts), err[0]};
        r.f_raw = {stats[1](counts), err[1]};
        r.f_cs = {stats[2](counts), err[2]};
        r.chsh_raw = {stats[3](counts), err[3]};
        r.chsh_cs = {stats[4](counts), err[4]};
        // The bare operators are the S = identity settings.
        double xx = counts.expectation(1 * kProducts), yy = counts.expectation(2 * kProducts);
        double zz = counts.expectation(3 * kProducts);
        r.f_bare = {0.25 * (1 + xx - yy + zz), 0.0};
        r.chsh_bare = {counts.expectation(4 * kProducts) - counts.expectation(5 * kProducts) +
                           counts.expectation(6 * kProducts) + counts.expectation(7 * kProducts),
                       0.0};
        CountStatistic bare[2] = {
            [](const CountTable &t) {
                return 0.25 * (1 + t.expectation(kProducts) - t.expectation(2 * kProducts) +
                               t.expectation(3 * kProducts));
            },
            [](const CountTable &t) {
                return t.expectation(4 * kProducts) - t.expectation(5 * kProducts) + t.expectation(6 * kProducts) +
                       t.expectation(7 * kProducts);
            }};
        auto bare_err = poisson_resample(counts, bare, o.resamples, rng);
        r.f_bare.error = bare_err[0];
        r.chsh_bare.error = bare_err[1];
    }
    for (std::size_t k = 0; k < o.inputs.size(); ++k) {
        const NamedInput &in = o.inputs[k];
        SettingPlan plan = teleport_settings(outputs[k], in);
        CountTable counts = sample_counts(plan.expectations, plan.labels, o.shots, rng);
        auto stats = teleport_statistics(in);
        auto err = poisson_resample(counts, stats, o.resamples, rng);
        TeleportFigures t;
        t.input = in.name;
        t.theta = in.theta;
        t.phi = in.phi;
        t.f_raw = {stats[0](counts), err[0]};
        t.f_cs = {stats[1](counts), err[1]};
        t.p_cs = {stats[2](counts), err[2]};
        r.teleport.push_back(std::move(t));
    }
    fill_teleport_average(r, false);
    return r;
}

// Trajectory sample layout.
enum Column : std::size_t {
    kP,
    kFRaw,
    kChshRaw,
    kFBare,
    kChshBare,
    kFActive,
    kResourceColumns,
};
enum TeleportColumn : std::size_t { kW, kWF, kWP, kWFActive, kTeleportColumns };

}  // namespace

std::string engine_name(Engine e) {
    switch (e) {
        case Engine::Trajectory:
            return "trajectory";
        case Engine::Analytic:
            return "analytic";
        case Engine::Density:
            return "density";
    }
    return "?";
}

std::optional<Engine> parse_engine(std::string_view name) {
    for (Engine e : {Engine::Trajectory, Engine::Analytic, Engine::Density}) {
        if (engine_name(e) == name) {
            return e;
        }
    }
    return std::nullopt;
}

SettingPlan resource_settings(const PauliOracle &resource, const ShorCode &code) {
    const auto products = code_products(code);
    SettingPlan plan;
    auto add_group = [&](const std::string &name, const std::function<double(const PauliString &)> &value) {
        for (int m = 0; m < kProducts; ++m) {
            plan.labels.push_back(setting_label(name, m));
            plan.expectations.push_back(value(products[m].embed(kResourceQubits, kCodeOffset)));
        }
    };
    auto pauli = [&](Pauli physical, LogicalAxis axis) {
        return [&, physical, axis](const PauliString &s) {
            return resource(s * resource_correlator(physical, axis, code));
        };
    };
    auto e_basis = [&](LogicalAxis axis, double sign) {
        return [&, axis, sign](const PauliString &s) {
            return (resource(s * resource_correlator(Pauli::Z, axis, code)) +
                    sign * resource(s * resource_correlator(Pauli::X, axis, code))) /
                   sqrt2;
        };
    };
    add_group("I", [&](const PauliString &s) { return resource(s); });
    add_group("XX", pauli(Pauli::X, LogicalAxis::X));
    add_group("YY", pauli(Pauli::Y, LogicalAxis::Y));
    add_group("ZZ", pauli(Pauli::Z, LogicalAxis::Z));
    add_group("E1X", e_basis(LogicalAxis::X, 1.0));
    add_group("E2X", e_basis(LogicalAxis::X, -1.0));
    add_group("E1Z", e_basis(LogicalAxis::Z, 1.0));
    add_group("E2Z", e_basis(LogicalAxis::Z, -1.0));
    return plan;
}

std::vector<CountStatistic> resource_statistics() {
    auto f_raw = [](const CountTable &t) {
        return resource_fidelity({group_mean(t, 0), group_mean(t, 1), group_mean(t, 2), group_mean(t, 3)}, false);
    };
    auto chsh_raw = [](const CountTable &t) {
        return chsh({group_mean(t, 4), group_mean(t, 5), group_mean(t, 6), group_mean(t, 7)}, false);
    };
    return {
        [](const CountTable &t) { return group_mean(t, 0); },
        f_raw,
        [f_raw](const CountTable &t) { return f_raw(t) / group_mean(t, 0); },
        chsh_raw,
        [chsh_raw](const CountTable &t) { return chsh_raw(t) / group_mean(t, 0); },
    };
}

SettingPlan teleport_settings(const PauliOracle &output, const NamedInput &input, const ShorCode &code) {
    const auto products = code_products(code);
    SettingPlan plan;
    for (int m = 0; m < kProducts; ++m) {
        plan.labels.push_back(setting_label("I", m));
        plan.expectations.push_back(output(products[m]));
    }
    const char *names[3] = {"X", "Y", "Z"};
    for (int a : measured_axes(input)) {
        const PauliString &l = code.logical(kAxes[a]);
        for (int m = 0; m < kProducts; ++m) {
            plan.labels.push_back(setting_label(names[a], m));
            plan.expectations.push_back(output(products[m] * l));
        }
    }
    return plan;
}

std::vector<CountStatistic> teleport_statistics(const NamedInput &input) {
    const auto n = bloch(input);
    const auto axes = measured_axes(input);
    // |psi_L><psi_L| = Pi (I + sum_a n_a L_a) / 2.
    auto f_raw = [n, axes](const CountTable &t) {
        double acc = group_mean(t, 0);
        for (std::size_t g = 0; g < axes.size(); ++g) {
            acc += n[axes[g]] * group_mean(t, g + 1);
        }
        return 0.5 * acc;
    };
    return {
        f_raw,
        [f_raw](const CountTable &t) { return f_raw(t) / group_mean(t, 0); },
        [](const CountTable &t) { return group_mean(t, 0); },
    };
}

ExperimentRecord evaluate_analytic(const NoiseSpec &spec, const EngineOptions &o) {
    static const PauliFrameModel model;
    const auto dist = model.resource_distribution(spec);
    if (o.shots > 0) {
        const auto w = PauliFrameModel::walsh(dist);
        std::optional<PauliOracle> resource;
        if (o.resource) {
            resource = [w](const PauliString &p) { return model.resource_expectation(w, p); };
        }
        std::vector<PauliOracle> outputs;
        const auto wout = PauliFrameModel::walsh(model.output_distribution(dist, spec.input));
        for (const auto &in : o.inputs) {
            StateVector ideal = encode_logical(in.alpha(), in.beta());
            outputs.push_back([wout, ideal](const PauliString &p) { return model.output_expectation(wout, p, ideal); });
        }
        return sampled_record(Engine::Analytic, spec, o, resource, outputs);
    }
    ExperimentRecord r = blank_record(Engine::Analytic, spec, o);
    if (o.resource) {
        fill_resource(r, model.resource_moments(dist));
        if (o.active) {
            r.f_active = exact(model.resource_active_fidelity(dist));
        }
    }
    if (!o.inputs.empty()) {
        // With Pauli noise every feedforward branch reproduces the Phi+ branch,
        // so the mode does not enter here.
        const auto out = model.output_distribution(dist, spec.input);
        for (const auto &in : o.inputs) {
            r.teleport.push_back(exact_teleport(in, model.teleport_moments(out, in), o.active));
        }
    }
    fill_teleport_average(r, o.active);
    return r;
}

ExperimentRecord evaluate_density(const NoiseSpec &spec, const EngineOptions &o) {
    const DensityOperator rho = resource_density(spec);
    std::vector<DensityOperator> outputs;
    for (const auto &in : o.inputs) {
        outputs.push_back(density_teleport_output(rho, input_density(in.state(), spec), o.mode));
    }
    if (o.shots > 0) {
        std::optional<PauliOracle> resource;
        if (o.resource) {
            resource = [&rho](const PauliString &p) { return rho.expectation(p).real(); };
        }
        std::vector<PauliOracle> oracles;
        for (const auto &sigma : outputs) {
            oracles.push_back([&sigma](const PauliString &p) { return sigma.expectation(p).real(); });
        }
        return sampled_record(Engine::Density, spec, o, resource, oracles);
    }
    ExperimentRecord r = blank_record(Engine::Density, spec, o);
    if (o.resource) {
        fill_resource(r, density_resource_moments(rho));
        if (o.active) {
            r.f_active = exact(density_resource_active_fidelity(rho));
        }
    }
    for (std::size_t k = 0; k < o.inputs.size(); ++k) {
        TeleportMoments m = density_teleport_moments(outputs[k], o.inputs[k]);
        r.teleport.push_back(exact_teleport(o.inputs[k], m, o.active));
    }
    fill_teleport_average(r, o.active);
    return r;
}

ExperimentRecord evaluate_trajectories(const NoiseSpec &spec, const EngineOptions &o) {
    if (o.shots > 0) {
        throw ConfigError("shot sampling needs an exact engine (analytic or density)");
    }
    spec.validate();
    const ShorCode &code = ShorCode::standard();
    const StateVector ideal = resource_from_code_words(code).state;
    std::vector<StateVector> targets;
    for (const auto &in : o.inputs) {
        targets.push_back(encode_logical(in.alpha(), in.beta(), code));
    }
    const std::size_t width = kResourceColumns + kTeleportColumns * o.inputs.size();

    // With Phi+ post-selection and no active correction a trajectory is a
    // deterministic function of its sampled Pauli errors, so its columns are
    // memoized per error pattern. The random draws are the same either way.
    const bool memoize = o.mode == TeleportMode::PostselectPhiPlus && !o.active;
    std::unordered_map<std::uint32_t, std::array<double, kResourceColumns>> resource_cache;
    std::unordered_map<std::uint64_t, std::array<double, kTeleportColumns>> teleport_cache;
    const ResourceState clean = prepare_resource_circuit();

    TrajectoryFn one = [&](Rng &rng, std::span<double> out, PauliString *) {
        const PauliString e = sample_resource_error(spec, rng, code);
        // The sign of e is a global phase and does not enter the key.
        const std::uint32_t e_key = e.x_mask() | (e.z_mask() << kResourceQubits);
        std::optional<ResourceState> res;
        auto resource = [&]() -> const ResourceState & {
            if (!res) {
                res = clean;
                if (!e.is_identity()) {
                    res->state.apply(e);
                }
            }
            return *res;
        };

        if (o.resource) {
            auto hit = memoize ? resource_cache.find(e_key) : resource_cache.end();
            if (hit != resource_cache.end()) {
                std::copy(hit->second.begin(), hit->second.end(), out.begin());
            } else {
                ResourceSample s = measure_resource(resource().state, code);
                out[kP] = s.projection;
                out[kFRaw] = resource_fidelity(s.sandwiched, false);
                out[kChshRaw] = chsh(s.sandwiched_correlators, false);
                out[kFBare] = resource_fidelity(s.bare, false);
                out[kChshBare] = chsh(s.bare_correlators, false);
                if (o.active) {
                    auto syn = extract_syndrome(resource().state, rng, code, kCodeOffset);
                    StateVector fixed = apply_pauli(std::move(syn.post_state),
                                                    code.decode(syn.syndrome).op.embed(kResourceQubits, kCodeOffset));
                    out[kFActive] = fidelity(fixed, ideal);
                }
                if (memoize) {
                    std::array<double, kResourceColumns> row;
                    std::copy(out.begin(), out.begin() + kResourceColumns, row.begin());
                    resource_cache.emplace(e_key, row);
                }
            }
        }
        for (std::size_t k = 0; k < o.inputs.size(); ++k) {
            const Pauli input_error = sample_pauli(spec.input, rng);
            const std::uint64_t key = (static_cast<std::uint64_t>(k * 4 + static_cast<int>(input_error)) << 32) | e_key;
            double *col = out.data() + kResourceColumns + kTeleportColumns * k;
            auto hit = memoize ? teleport_cache.find(key) : teleport_cache.end();
            if (hit != teleport_cache.end()) {
                std::copy(hit->second.begin(), hit->second.end(), col);
                continue;
            }
            std::array<double, kTeleportColumns> row{};
            StateVector in = o.inputs[k].state();
            if (input_error != Pauli::I) {
                in.apply(PauliString::single(in.num_qubits(), 0, input_error));
            }
            double w = 1.0;
            std::optional<StateVector> output;
            if (o.mode == TeleportMode::PostselectPhiPlus) {
                // Weight the Phi+ branch by its probability instead of
                // discarding the other outcomes.
                try {
                    BsmResult b = teleport_branch(in, resource(), BellState::PhiPlus, code);
                    w = b.probability;
                    output = std::move(b.state);
                } catch (const OrthogonalSubspaceError &) {
                    w = 0.0;
                }
            } else {
                output = teleport(in, resource(), o.mode, rng, code);
            }
            row[kW] = w;
            if (output) {
                const double f = fidelity(*output, targets[k]);
                row[kWF] = w * f;
                row[kWP] = w * project_code_space(*output, code).probability;
                if (o.active) {
                    auto syn = extract_syndrome(*output, rng, code);
                    StateVector fixed = apply_pauli(std::move(syn.post_state), code.decode(syn.syndrome).op);
                    row[kWFActive] = w * fidelity(fixed, targets[k]);
                }
            }
            std::copy(row.begin(), row.end(), col);
            if (memoize) {
                teleport_cache.emplace(key, row);
            }
        }
    };
    TrajectoryBatch batch = run_trajectory_batch(one, o.trajectories, width, o.seed);

    ExperimentRecord r = blank_record(Engine::Trajectory, spec, o);
    if (o.resource) {
        const auto p = batch.column(kP);
        const auto f = batch.column(kFRaw);
        const auto c = batch.column(kChshRaw);
        r.has_resource = true;
        r.p_cs = sample_mean(p).estimate();
        r.f_raw = sample_mean(f).estimate();
        r.f_cs = sample_ratio(f, p).estimate();
        r.chsh_raw = sample_mean(c).estimate();
        r.chsh_cs = sample_ratio(c, p).estimate();
        r.f_bare = sample_mean(batch.column(kFBare)).estimate();
        r.chsh_bare = sample_mean(batch.column(kChshBare)).estimate();
        if (o.active) {
            r.f_active = sample_mean(batch.column(kFActive)).estimate();
        }
    }
    std::vector<Influence> raw, cs, active;
    for (std::size_t k = 0; k < o.inputs.size(); ++k) {
        const std::size_t base = kResourceColumns + kTeleportColumns * k;
        const auto w = batch.column(base + kW);
        const auto wf = batch.column(base + kWF);
        const auto wp = batch.column(base + kWP);
        TeleportFigures t;
        t.input = o.inputs[k].name;
        t.theta = o.inputs[k].theta;
        t.phi = o.inputs[k].phi;
        raw.push_back(sample_ratio(wf, w));
        cs.push_back(sample_ratio(wf, wp));
        t.f_raw = raw.back().estimate();
        t.f_cs = cs.back().estimate();
        t.p_cs = sample_ratio(wp, w).estimate();
        if (o.active) {
            active.push_back(sample_ratio(batch.column(base + kWFActive), w));
            t.f_active = active.back().estimate();
        }
        r.teleport.push_back(std::move(t));
    }
    if (!o.inputs.empty()) {
        // The inputs share each trajectory's resource, so the average keeps
        // their correlation through the per-trajectory influence values.
        std::vector<double> weights(o.inputs.size(), 1.0 / static_cast<double>(o.inputs.size()));
        r.teleport_avg_raw = linear_combination(raw, weights).estimate();
        r.teleport_avg_cs = linear_combination(cs, weights).estimate();
        if (o.active) {
            r.teleport_avg_active = linear_combination(active, weights).estimate();
        }
    }
    return r;
}

ExperimentRecord evaluate(Engine engine, const NoiseSpec &spec, const EngineOptions &options) {
    if (options.shots < 0) {
        throw ConfigError("shots must be positive or exact");
    }
    switch (engine) {
        case Engine::Trajectory:
            return evaluate_trajectories(spec, options);
        case Engine::Analytic:
            return evaluate_analytic(spec, options);
        case Engine::Density:
            return evaluate_density(spec, options);
    }
    throw ConfigError("unknown engine");
}

}  // namespace lqt
