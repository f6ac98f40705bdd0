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

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <memory>

#include "lqt/errors.hpp"
#include "lqt/experiment.hpp"

namespace lqt {

namespace {

using Point = std::array<double, 3>;

// Pushes points outside the box back in; the simplex sees the overshoot as a
// quadratic penalty.
constexpr double kBoxPenalty = 1e3;
constexpr double kSimplexStep = 0.01;
constexpr double kSimplexTolerance = 1e-8;

struct Objective {
    const FitOptions &options;
    const std::vector<NamedInput> &inputs;

    double residual_sum(const Point &p) const {
        ExperimentRecord r = fit_model(p[0], p[1], p[2], inputs);
        double acc = 0;
        for (const auto &t : options.targets) {
            const double d = find_observable(r, t.name)->value - t.value;
            acc += d * d;
        }
        return acc;
    }

    double penalized(const Point &p) const {
        Point clamped;
        double excess = 0;
        for (int k = 0; k < 3; ++k) {
            clamped[k] = std::clamp(p[k], 0.0, options.upper);
            excess += (p[k] - clamped[k]) * (p[k] - clamped[k]);
        }
        return residual_sum(clamped) + kBoxPenalty * excess;
    }
};

double gsl_objective(const gsl_vector *x, void *params) {
    const auto *obj = static_cast<const Objective *>(params);
    return obj->penalized({gsl_vector_get(x, 0), gsl_vector_get(x, 1), gsl_vector_get(x, 2)});
}

struct Refinement {
    Point point;
    double objective;
    std::vector<FitStep> trace;
};

Point clamp_point(Point p, double upper) {
    for (auto &v : p) {
        v = std::clamp(v, 0.0, upper);
    }
    return p;
}

Refinement refine(const Objective &obj, const Point &start, int max_iterations) {
    gsl_multimin_function f{&gsl_objective, 3, const_cast<Objective *>(&obj)};
    auto vec = [](const Point &p, double fill) {
        gsl_vector *v = gsl_vector_alloc(3);
        for (int k = 0; k < 3; ++k) {
            gsl_vector_set(v, k, fill < 0 ? p[k] : fill);
        }
        return std::unique_ptr<gsl_vector, decltype(&gsl_vector_free)>(v, &gsl_vector_free);
    };
    auto x = vec(start, -1);
    auto step = vec(start, kSimplexStep);
    std::unique_ptr<gsl_multimin_fminimizer, decltype(&gsl_multimin_fminimizer_free)> s(
        gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, 3), &gsl_multimin_fminimizer_free);
    gsl_multimin_fminimizer_set(s.get(), &f, x.get(), step.get());

    Refinement out{start, obj.penalized(start), {}};
    for (int it = 1; it <= max_iterations; ++it) {
        if (gsl_multimin_fminimizer_iterate(s.get()) != GSL_SUCCESS) {
            break;
        }
        const double size = gsl_multimin_fminimizer_size(s.get());
        const gsl_vector *best = gsl_multimin_fminimizer_x(s.get());
        Point p{gsl_vector_get(best, 0), gsl_vector_get(best, 1), gsl_vector_get(best, 2)};
        out.trace.push_back({it, s->fval, size, p[0], p[1], p[2]});
        if (gsl_multimin_test_size(size, kSimplexTolerance) == GSL_SUCCESS) {
            break;
        }
    }
    const gsl_vector *best = gsl_multimin_fminimizer_x(s.get());
    out.point = clamp_point({gsl_vector_get(best, 0), gsl_vector_get(best, 1), gsl_vector_get(best, 2)},
                            obj.options.upper);
    out.objective = obj.residual_sum(out.point);
    return out;
}

std::vector<FitResidual> residuals(const ExperimentRecord &r, const std::vector<FitTarget> &targets) {
    std::vector<FitResidual> out;
    for (const auto &t : targets) {
        auto e = find_observable(r, t.name);
        if (!e) {
            throw ConfigError("the fit model does not predict '" + t.name + "'");
        }
        out.push_back({t.name, t.value, e->value, e->value - t.value});
    }
    return out;
}

}  // namespace

ExperimentRecord fit_model(double p_phys, double p_input, double q_logical, const std::vector<NamedInput> &inputs) {
    EngineOptions o;
    o.inputs = inputs;
    o.mode = TeleportMode::PostselectPhiPlus;
    return evaluate_analytic(NoiseSpec::depolarizing(p_phys, p_input, q_logical), o);
}

FitResult fit_noise(const FitOptions &options, const std::vector<NamedInput> &inputs) {
    if (options.targets.empty()) {
        throw ConfigError("fit needs at least one target");
    }
    if (inputs.empty()) {
        throw ConfigError("fit needs teleportation inputs");
    }
    for (const auto &t : options.targets) {
        if (!std::isfinite(t.value)) {
            throw ConfigError("fit target '" + t.name + "' is not finite");
        }
    }
    // Checks that every target name is predicted before the grid runs.
    residuals(fit_model(0, 0, 0, inputs), options.targets);
    residuals(fit_model(0, 0, 0, inputs), options.holdout);

    const Objective obj{options, inputs};
    const int steps = static_cast<int>(std::floor(options.upper / options.grid_step + 1e-9));
    struct Seed {
        double objective;
        Point point;
    };
    std::vector<Seed> grid;
    for (int i = 0; i <= steps; ++i) {
        for (int j = 0; j <= steps; ++j) {
            for (int k = 0; k <= steps; ++k) {
                Point p{i * options.grid_step, j * options.grid_step, k * options.grid_step};
                grid.push_back({obj.residual_sum(p), p});
            }
        }
    }
    const std::size_t n_seeds = std::min<std::size_t>(options.seeds, grid.size());
    std::partial_sort(grid.begin(), grid.begin() + n_seeds, grid.end(),
                      [](const Seed &a, const Seed &b) { return a.objective < b.objective; });

    FitResult result;
    result.grid_points = grid.size();
    result.grid_objective = grid.front().objective;
    Refinement best{grid.front().point, grid.front().objective, {}};
    result.grid_only = true;
    for (std::size_t s = 0; s < n_seeds; ++s) {
        Refinement r = refine(obj, grid[s].point, options.max_iterations);
        if (r.objective < best.objective) {
            best = std::move(r);
            result.grid_only = false;
        }
    }
    result.p_phys = best.point[0];
    result.p_input = best.point[1];
    result.q_logical = best.point[2];
    result.objective = best.objective;
    result.trace = std::move(best.trace);
    result.prediction = fit_model(result.p_phys, result.p_input, result.q_logical, inputs);
    result.prediction.scenario = "fit";
    result.residuals = residuals(result.prediction, options.targets);
    result.holdout = residuals(result.prediction, options.holdout);
    return result;
}

FitResult run_fit(const ExperimentConfig &config) {
    if (config.scenario != Scenario::Fit) {
        throw ConfigError("config is for the " + scenario_name(config.scenario) + " scenario");
    }
    config.validate_config();
    return fit_noise(config.fit, config.inputs);
}

}  // namespace lqt
