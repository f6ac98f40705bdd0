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

#include "lqt/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"
#include "lqt/errors.hpp"

namespace lqt {

namespace {

using json = nlohmann::json;

const std::vector<std::string> kObservableNames = {
    "f_raw", "f_cs", "p_cs", "chsh_raw", "chsh_cs", "f_bare", "chsh_bare", "f_active",
    "teleport_avg_raw", "teleport_avg_cs", "teleport_avg_active",
};

bool known_observable(const std::string &name) {
    return std::find(kObservableNames.begin(), kObservableNames.end(), name) != kObservableNames.end();
}

// Rejects keys outside `allowed`, naming the section for the message.
void check_keys(const json &obj, std::string_view section, std::initializer_list<std::string_view> allowed) {
    if (!obj.is_object()) {
        throw ConfigError(std::string(section) + " must be an object");
    }
    for (const auto &[key, value] : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw ConfigError("unknown key '" + key + "' in " + std::string(section));
        }
    }
}

double get_number(const json &v, const std::string &what) {
    if (!v.is_number()) {
        throw ConfigError(what + " must be a number");
    }
    double x = v.get<double>();
    if (!std::isfinite(x)) {
        throw ConfigError(what + " must be finite");
    }
    return x;
}

double get_probability(const json &v, const std::string &what) {
    double x = get_number(v, what);
    if (x < 0.0 || x > 1.0) {
        throw ConfigError(what + " must lie in [0, 1]");
    }
    return x;
}

std::int64_t get_integer(const json &v, const std::string &what, std::int64_t minimum) {
    if (!v.is_number_integer()) {
        throw ConfigError(what + " must be an integer");
    }
    std::int64_t x = v.get<std::int64_t>();
    if (x < minimum) {
        throw ConfigError(what + " must be at least " + std::to_string(minimum));
    }
    return x;
}

std::string get_string(const json &v, const std::string &what) {
    if (!v.is_string()) {
        throw ConfigError(what + " must be a string");
    }
    return v.get<std::string>();
}

// A channel is either a total depolarizing probability or explicit
// {"px", "py", "pz"} weights.
PauliChannel parse_channel(const json &v, const std::string &what) {
    if (v.is_number()) {
        return PauliChannel::depolarizing(get_probability(v, what));
    }
    check_keys(v, what, {"px", "py", "pz"});
    PauliChannel ch;
    if (v.contains("px")) ch.px = get_probability(v["px"], what + ".px");
    if (v.contains("py")) ch.py = get_probability(v["py"], what + ".py");
    if (v.contains("pz")) ch.pz = get_probability(v["pz"], what + ".pz");
    if (ch.total() > 1.0) {
        throw ConfigError(what + " probabilities sum above 1");
    }
    return ch;
}

NoiseSpec parse_noise(const json &v, const std::string &what) {
    check_keys(v, what, {"p_phys", "p_input", "q_logical", "seed"});
    NoiseSpec spec;
    if (v.contains("p_phys")) spec.phys = parse_channel(v["p_phys"], what + ".p_phys");
    if (v.contains("p_input")) spec.input = parse_channel(v["p_input"], what + ".p_input");
    if (v.contains("q_logical")) spec.q_logical = get_probability(v["q_logical"], what + ".q_logical");
    if (v.contains("seed")) {
        if (!v["seed"].is_number_unsigned()) {
            throw ConfigError(what + ".seed must be a nonnegative integer");
        }
        spec.seed = v["seed"].get<std::uint64_t>();
    }
    return spec;
}

NamedInput parse_input(const json &v) {
    if (v.is_string()) {
        auto named = inputs::by_name(v.get<std::string>());
        if (!named) {
            throw ConfigError("unknown input state '" + v.get<std::string>() + "'");
        }
        return *named;
    }
    check_keys(v, "inputs entry", {"name", "theta", "phi"});
    if (!v.contains("name") || !v.contains("theta") || !v.contains("phi")) {
        throw ConfigError("an explicit input needs name, theta and phi");
    }
    return {get_string(v["name"], "input name"), get_number(v["theta"], "input theta"),
            get_number(v["phi"], "input phi")};
}

std::vector<FitTarget> parse_targets(const json &v, const std::string &what) {
    if (!v.is_array()) {
        throw ConfigError(what + " must be an array of {name, value} entries");
    }
    std::vector<FitTarget> out;
    for (const auto &entry : v) {
        check_keys(entry, what + " entry", {"name", "value"});
        if (!entry.contains("name") || !entry.contains("value")) {
            throw ConfigError("each " + what + " entry needs name and value");
        }
        const std::string name = get_string(entry["name"], what + " name");
        if (!known_observable(name)) {
            throw ConfigError("unknown observable '" + name + "' in " + what);
        }
        out.push_back({name, get_number(entry["value"], what + "." + name)});
    }
    return out;
}

FitOptions parse_fit(const json &v) {
    check_keys(v, "fit", {"targets", "holdout", "grid_step", "upper", "seeds", "max_iterations"});
    FitOptions f = FitOptions::reported();
    if (v.contains("targets")) f.targets = parse_targets(v["targets"], "fit.targets");
    if (v.contains("holdout")) f.holdout = parse_targets(v["holdout"], "fit.holdout");
    if (v.contains("grid_step")) f.grid_step = get_number(v["grid_step"], "fit.grid_step");
    if (v.contains("upper")) f.upper = get_probability(v["upper"], "fit.upper");
    if (v.contains("seeds")) f.seeds = static_cast<int>(get_integer(v["seeds"], "fit.seeds", 1));
    if (v.contains("max_iterations")) {
        f.max_iterations = static_cast<int>(get_integer(v["max_iterations"], "fit.max_iterations", 1));
    }
    return f;
}

ValidateOptions parse_validate(const json &v) {
    check_keys(v, "validate",
               {"grid", "trajectories", "calibration_runs", "calibration_shots", "calibration_noise"});
    ValidateOptions o;
    if (v.contains("grid")) {
        if (!v["grid"].is_array() || v["grid"].empty()) {
            throw ConfigError("validate.grid must be a nonempty array");
        }
        o.grid.clear();
        for (const auto &g : v["grid"]) {
            o.grid.push_back(get_probability(g, "validate.grid entry"));
        }
    }
    if (v.contains("trajectories")) {
        o.trajectories = static_cast<std::size_t>(get_integer(v["trajectories"], "validate.trajectories", 2));
    }
    if (v.contains("calibration_runs")) {
        o.calibration_runs =
            static_cast<std::size_t>(get_integer(v["calibration_runs"], "validate.calibration_runs", 1));
    }
    if (v.contains("calibration_shots")) {
        o.calibration_shots = get_integer(v["calibration_shots"], "validate.calibration_shots", 1);
    }
    if (v.contains("calibration_noise")) {
        o.calibration_noise = parse_noise(v["calibration_noise"], "validate.calibration_noise");
    }
    return o;
}

ExperimentRecord run_exact_or_sampled(const ExperimentConfig &config, bool resource) {
    config.validate_config();
    EngineOptions o = config.engine_options();
    o.resource = resource;
    if (!resource) {
        if (config.inputs.empty()) {
            throw ConfigError("teleport needs at least one input");
        }
    } else {
        o.inputs.clear();
    }
    ExperimentRecord r = evaluate(config.resolved_engine(), config.noise, o);
    r.scenario = scenario_name(config.scenario);
    r.correction = correction_name(config.correction);
    return r;
}

}  // namespace

std::string scenario_name(Scenario s) {
    switch (s) {
        case Scenario::Characterize:
            return "characterize";
        case Scenario::Teleport:
            return "teleport";
        case Scenario::Fit:
            return "fit";
        case Scenario::Validate:
            return "validate";
    }
    return "unknown";
}

std::optional<Scenario> parse_scenario(std::string_view name) {
    for (Scenario s : {Scenario::Characterize, Scenario::Teleport, Scenario::Fit, Scenario::Validate}) {
        if (scenario_name(s) == name) {
            return s;
        }
    }
    return std::nullopt;
}

std::string correction_name(Correction c) {
    switch (c) {
        case Correction::Projection:
            return "projection";
        case Correction::Active:
            return "active";
        case Correction::Both:
            return "both";
    }
    return "unknown";
}

std::string format_name(OutputFormat f) {
    switch (f) {
        case OutputFormat::Json:
            return "json";
        case OutputFormat::Csv:
            return "csv";
        case OutputFormat::Both:
            return "both";
    }
    return "unknown";
}

std::optional<OutputFormat> parse_format(std::string_view name) {
    for (OutputFormat f : {OutputFormat::Json, OutputFormat::Csv, OutputFormat::Both}) {
        if (format_name(f) == name) {
            return f;
        }
    }
    return std::nullopt;
}

FitOptions FitOptions::reported() {
    FitOptions f;
    f.targets = {{"f_raw", 0.703},    {"f_cs", 0.870},    {"p_cs", 0.808},
                 {"chsh_raw", 1.974}, {"chsh_cs", 2.443}, {"teleport_avg_cs", 0.786}};
    f.holdout = {{"teleport_avg_raw", 0.520}};
    return f;
}

ExperimentConfig ExperimentConfig::defaults(Scenario scenario) {
    ExperimentConfig c;
    c.scenario = scenario;
    c.inputs = inputs::pauli_eigenstates();
    if (scenario == Scenario::Characterize) {
        c.shots = kCharacterizeShots;
    } else if (scenario == Scenario::Teleport) {
        c.shots = kTeleportShots;
    }
    return c;
}

Engine ExperimentConfig::resolved_engine() const {
    return engine.value_or(shots > 0 ? Engine::Analytic : Engine::Trajectory);
}

EngineOptions ExperimentConfig::engine_options() const {
    EngineOptions o;
    o.inputs = inputs;
    o.mode = mode;
    o.active = correction != Correction::Projection;
    o.trajectories = trajectories;
    o.seed = noise.seed;
    o.shots = shots;
    o.resamples = resamples;
    return o;
}

void ExperimentConfig::validate_config() const {
    if (schema_version != 1) {
        throw ConfigError("unsupported schema_version " + std::to_string(schema_version));
    }
    try {
        noise.validate();
    } catch (const DomainError &e) {
        throw ConfigError(std::string("invalid noise: ") + e.what());
    }
    if (shots < 0) {
        throw ConfigError("shots must be positive or \"exact\"");
    }
    if (shots > 0 && resolved_engine() == Engine::Trajectory) {
        throw ConfigError("shot sampling needs an exact engine (analytic or density)");
    }
    if (shots > 0 && correction != Correction::Projection) {
        throw ConfigError("active correction is only available with exact expectations");
    }
    if (resolved_engine() == Engine::Trajectory && trajectories < 2) {
        throw ConfigError("trajectories must be at least 2");
    }
    if (shots > 0 && resamples < 100) {
        throw ConfigError("resamples must be at least 100");
    }
    if (!(fit.grid_step > 0.0) || !(fit.upper > 0.0) || fit.grid_step > fit.upper) {
        throw ConfigError("fit grid needs 0 < grid_step <= upper");
    }
}

ExperimentConfig parse_config(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    check_keys(doc, "config",
               {"schema_version", "scenario", "noise", "engine", "shots", "trajectories", "inputs", "mode",
                "correction", "resamples", "fit", "validate", "output"});
    if (!doc.contains("schema_version")) {
        throw ConfigError("config needs schema_version");
    }
    const auto version = get_integer(doc["schema_version"], "schema_version", 0);
    if (version != 1) {
        throw ConfigError("unsupported schema_version " + std::to_string(version));
    }
    if (!doc.contains("scenario")) {
        throw ConfigError("config needs a scenario");
    }
    auto scenario = parse_scenario(get_string(doc["scenario"], "scenario"));
    if (!scenario) {
        throw ConfigError("unknown scenario '" + doc["scenario"].get<std::string>() + "'");
    }
    ExperimentConfig c = ExperimentConfig::defaults(*scenario);
    if (doc.contains("fit") && *scenario != Scenario::Fit) {
        throw ConfigError("the fit section belongs to the fit scenario");
    }
    if (doc.contains("validate") && *scenario != Scenario::Validate) {
        throw ConfigError("the validate section belongs to the validate scenario");
    }
    if (doc.contains("noise")) c.noise = parse_noise(doc["noise"], "noise");
    if (doc.contains("engine")) {
        auto e = parse_engine(get_string(doc["engine"], "engine"));
        if (!e) {
            throw ConfigError("unknown engine '" + doc["engine"].get<std::string>() + "'");
        }
        c.engine = *e;
    }
    if (doc.contains("shots")) {
        const auto &s = doc["shots"];
        if (s.is_string()) {
            if (s.get<std::string>() != "exact") {
                throw ConfigError("shots must be a positive integer or \"exact\"");
            }
            c.shots = 0;
        } else {
            c.shots = get_integer(s, "shots", 1);
        }
    }
    if (doc.contains("trajectories")) {
        c.trajectories = static_cast<std::size_t>(get_integer(doc["trajectories"], "trajectories", 2));
    }
    if (doc.contains("inputs")) {
        if (!doc["inputs"].is_array()) {
            throw ConfigError("inputs must be an array");
        }
        c.inputs.clear();
        for (const auto &v : doc["inputs"]) {
            c.inputs.push_back(parse_input(v));
        }
    }
    if (doc.contains("mode")) {
        auto m = parse_mode(get_string(doc["mode"], "mode"));
        if (!m) {
            throw ConfigError("mode must be postselect_phi_plus or feedforward");
        }
        c.mode = *m;
    }
    if (doc.contains("correction")) {
        const std::string name = get_string(doc["correction"], "correction");
        if (name == "projection") {
            c.correction = Correction::Projection;
        } else if (name == "active") {
            c.correction = Correction::Active;
        } else if (name == "both") {
            c.correction = Correction::Both;
        } else {
            throw ConfigError("correction must be projection, active or both");
        }
    }
    if (doc.contains("resamples")) {
        c.resamples = static_cast<std::size_t>(get_integer(doc["resamples"], "resamples", 100));
    }
    if (doc.contains("fit")) c.fit = parse_fit(doc["fit"]);
    if (doc.contains("validate")) c.validate = parse_validate(doc["validate"]);
    if (doc.contains("output")) {
        const auto &out = doc["output"];
        check_keys(out, "output", {"dir", "format"});
        if (out.contains("dir")) c.output_dir = get_string(out["dir"], "output.dir");
        if (out.contains("format")) {
            auto f = parse_format(get_string(out["format"], "output.format"));
            if (!f) {
                throw ConfigError("output.format must be json, csv or both");
            }
            c.format = *f;
        }
    }
    c.validate_config();
    return c;
}

ExperimentConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config file " + path);
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

std::optional<Estimate> find_observable(const ExperimentRecord &r, std::string_view name) {
    if (r.has_resource) {
        if (name == "f_raw") return r.f_raw;
        if (name == "f_cs") return r.f_cs;
        if (name == "p_cs") return r.p_cs;
        if (name == "chsh_raw") return r.chsh_raw;
        if (name == "chsh_cs") return r.chsh_cs;
        if (name == "f_bare") return r.f_bare;
        if (name == "chsh_bare") return r.chsh_bare;
        if (name == "f_active") return r.f_active;
    }
    if (!r.teleport.empty()) {
        if (name == "teleport_avg_raw") return r.teleport_avg_raw;
        if (name == "teleport_avg_cs") return r.teleport_avg_cs;
        if (name == "teleport_avg_active") return r.teleport_avg_active;
    }
    return std::nullopt;
}

ExperimentRecord run_characterize(const ExperimentConfig &config) {
    if (config.scenario != Scenario::Characterize) {
        throw ConfigError("config is for the " + scenario_name(config.scenario) + " scenario");
    }
    return run_exact_or_sampled(config, true);
}

ExperimentRecord run_teleport(const ExperimentConfig &config) {
    if (config.scenario != Scenario::Teleport) {
        throw ConfigError("config is for the " + scenario_name(config.scenario) + " scenario");
    }
    return run_exact_or_sampled(config, false);
}

}  // namespace lqt
