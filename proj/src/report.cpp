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

#include "lqt/report.hpp"

#include <filesystem>
#include <fstream>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lqt/errors.hpp"

namespace lqt {

namespace {

using json = nlohmann::ordered_json;

constexpr int kIndent = 2;

json estimate_json(const Estimate &e) {
    return json{{"value", e.value}, {"stderr", e.error}};
}

json channel_json(const PauliChannel &c) {
    return json{{"px", c.px}, {"py", c.py}, {"pz", c.pz}};
}

json noise_json(const NoiseSpec &s) {
    return json{{"p_phys", channel_json(s.phys)},
                {"p_input", channel_json(s.input)},
                {"q_logical", s.q_logical},
                {"seed", s.seed}};
}

json shots_json(std::int64_t shots) {
    return shots > 0 ? json(shots) : json("exact");
}

// Text of one CSV cell: numbers exactly as in the JSON dump, strings quoted
// only when they need it.
std::string cell(const json &v) {
    if (v.is_null()) {
        return "";
    }
    if (!v.is_string()) {
        return v.dump();
    }
    const std::string s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string quoted = "\"";
    for (char c : s) {
        quoted += c;
        if (c == '"') {
            quoted += '"';
        }
    }
    return quoted + "\"";
}

class CsvTable {
   public:
    void add(std::string name, json value) { columns_.emplace_back(std::move(name), std::move(value)); }

    std::string str() const {
        std::string header, row;
        for (std::size_t k = 0; k < columns_.size(); ++k) {
            if (k > 0) {
                header += ',';
                row += ',';
            }
            header += cell(columns_[k].first);
            row += cell(columns_[k].second);
        }
        return header + "\n" + row + "\n";
    }

   private:
    std::vector<std::pair<std::string, json>> columns_;
};

class PlotSeries {
   public:
    void add(const std::string &series, const std::string &x, double y, double yerr) {
        rows_ += cell(series) + "," + cell(x) + "," + json(y).dump() + "," + json(yerr).dump() + "\n";
    }
    std::string str() const { return rows_.empty() ? "" : "series,x,y,yerr\n" + rows_; }

   private:
    std::string rows_;
};

std::string dump(const json &doc) {
    return doc.dump(kIndent) + "\n";
}

// Every (name, estimate) pair of a record in report order.
std::vector<std::pair<std::string, Estimate>> record_values(const ExperimentRecord &r) {
    std::vector<std::pair<std::string, Estimate>> out;
    if (r.has_resource) {
        out.emplace_back("f_raw", r.f_raw);
        out.emplace_back("f_cs", r.f_cs);
        out.emplace_back("p_cs", r.p_cs);
        out.emplace_back("chsh_raw", r.chsh_raw);
        out.emplace_back("chsh_cs", r.chsh_cs);
        out.emplace_back("f_bare", r.f_bare);
        out.emplace_back("chsh_bare", r.chsh_bare);
        if (r.f_active) {
            out.emplace_back("f_active", *r.f_active);
        }
    }
    for (const auto &t : r.teleport) {
        const std::string prefix = "teleport_" + t.input + "_";
        out.emplace_back(prefix + "f_raw", t.f_raw);
        out.emplace_back(prefix + "f_cs", t.f_cs);
        out.emplace_back(prefix + "p_cs", t.p_cs);
        if (t.f_active) {
            out.emplace_back(prefix + "f_active", *t.f_active);
        }
    }
    if (!r.teleport.empty()) {
        out.emplace_back("teleport_avg_raw", r.teleport_avg_raw);
        out.emplace_back("teleport_avg_cs", r.teleport_avg_cs);
        if (r.teleport_avg_active) {
            out.emplace_back("teleport_avg_active", *r.teleport_avg_active);
        }
    }
    return out;
}

void add_metadata(CsvTable &t, const ExperimentRecord &r) {
    t.add("engine", r.engine);
    t.add("mode", r.mode);
    t.add("correction", r.correction);
    t.add("shots", shots_json(r.shots));
    t.add("trajectories", r.trajectories);
    t.add("seed", r.seed);
    t.add("p_phys_x", r.noise.phys.px);
    t.add("p_phys_y", r.noise.phys.py);
    t.add("p_phys_z", r.noise.phys.pz);
    t.add("p_input_x", r.noise.input.px);
    t.add("p_input_y", r.noise.input.py);
    t.add("p_input_z", r.noise.input.pz);
    t.add("q_logical", r.noise.q_logical);
}

json record_json(const ExperimentRecord &r) {
    json doc;
    doc["schema_version"] = 1;
    doc["scenario"] = r.scenario;
    doc["engine"] = r.engine;
    doc["mode"] = r.mode;
    doc["correction"] = r.correction;
    doc["shots"] = shots_json(r.shots);
    doc["trajectories"] = r.trajectories;
    doc["seed"] = r.seed;
    doc["noise"] = noise_json(r.noise);
    if (r.has_resource) {
        json res;
        res["f_raw"] = estimate_json(r.f_raw);
        res["f_cs"] = estimate_json(r.f_cs);
        res["p_cs"] = estimate_json(r.p_cs);
        res["chsh_raw"] = estimate_json(r.chsh_raw);
        res["chsh_cs"] = estimate_json(r.chsh_cs);
        res["f_bare"] = estimate_json(r.f_bare);
        res["chsh_bare"] = estimate_json(r.chsh_bare);
        if (r.f_active) {
            res["f_active"] = estimate_json(*r.f_active);
        }
        doc["resource"] = res;
    }
    if (!r.teleport.empty()) {
        json inputs = json::array();
        for (const auto &t : r.teleport) {
            json in{{"name", t.input}, {"theta", t.theta}, {"phi", t.phi}};
            in["f_raw"] = estimate_json(t.f_raw);
            in["f_cs"] = estimate_json(t.f_cs);
            in["p_cs"] = estimate_json(t.p_cs);
            if (t.f_active) {
                in["f_active"] = estimate_json(*t.f_active);
            }
            inputs.push_back(in);
        }
        json avg;
        avg["f_raw"] = estimate_json(r.teleport_avg_raw);
        avg["f_cs"] = estimate_json(r.teleport_avg_cs);
        if (r.teleport_avg_active) {
            avg["f_active"] = estimate_json(*r.teleport_avg_active);
        }
        json tel;
        tel["inputs"] = inputs;
        tel["average"] = avg;
        tel["classical_limit"] = classical_limit();
        tel["above_classical_limit"] = {{"raw", r.teleport_avg_raw.value > classical_limit()},
                                        {"cs", r.teleport_avg_cs.value > classical_limit()}};
        doc["teleport"] = tel;
    }
    return doc;
}

std::string record_plot(const ExperimentRecord &r) {
    PlotSeries p;
    if (r.has_resource) {
        p.add("resource_fidelity", "raw", r.f_raw.value, r.f_raw.error);
        p.add("resource_fidelity", "cs", r.f_cs.value, r.f_cs.error);
        p.add("projection", "p_cs", r.p_cs.value, r.p_cs.error);
        p.add("chsh", "raw", r.chsh_raw.value, r.chsh_raw.error);
        p.add("chsh", "cs", r.chsh_cs.value, r.chsh_cs.error);
        p.add("chsh_local_bound", "bound", 2.0, 0.0);
    }
    for (const auto &t : r.teleport) {
        p.add("teleport_raw", t.input, t.f_raw.value, t.f_raw.error);
        p.add("teleport_cs", t.input, t.f_cs.value, t.f_cs.error);
        p.add("teleport_p_cs", t.input, t.p_cs.value, t.p_cs.error);
    }
    if (!r.teleport.empty()) {
        p.add("teleport_raw", "average", r.teleport_avg_raw.value, r.teleport_avg_raw.error);
        p.add("teleport_cs", "average", r.teleport_avg_cs.value, r.teleport_avg_cs.error);
        p.add("classical_limit", "bound", classical_limit(), 0.0);
    }
    return p.str();
}

json residuals_json(const std::vector<FitResidual> &rs) {
    json out = json::array();
    for (const auto &r : rs) {
        out.push_back({{"name", r.name}, {"target", r.target}, {"predicted", r.predicted}, {"residual", r.residual}});
    }
    return out;
}

void ensure_directory(const std::string &dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw IoError("cannot create output directory " + dir + ": " + ec.message());
    }
}

void write_file(const std::filesystem::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    out << text;
    if (!out) {
        throw IoError("write failed for " + path.string());
    }
}

}  // namespace

Report make_report(const ExperimentRecord &record) {
    Report rep;
    rep.scenario = record.scenario;
    rep.json = dump(record_json(record));
    CsvTable t;
    t.add("scenario", record.scenario);
    const auto values = record_values(record);
    for (const auto &[name, e] : values) {
        t.add(name, e.value);
    }
    for (const auto &[name, e] : values) {
        t.add(name + "_err", e.error);
    }
    add_metadata(t, record);
    rep.csv = t.str();
    rep.plot_csv = record_plot(record);
    return rep;
}

Report make_report(const FitResult &fit, const ExperimentConfig &config) {
    Report rep;
    rep.scenario = "fit";
    json doc;
    doc["schema_version"] = 1;
    doc["scenario"] = "fit";
    doc["fitted"] = {{"p_phys", fit.p_phys}, {"p_input", fit.p_input}, {"q_logical", fit.q_logical}};
    doc["objective"] = fit.objective;
    doc["grid_objective"] = fit.grid_objective;
    doc["grid_points"] = fit.grid_points;
    doc["grid_only"] = fit.grid_only;
    doc["grid_step"] = config.fit.grid_step;
    doc["upper"] = config.fit.upper;
    doc["residuals"] = residuals_json(fit.residuals);
    doc["holdout"] = residuals_json(fit.holdout);
    json trace = json::array();
    for (const auto &s : fit.trace) {
        trace.push_back({{"iteration", s.iteration},
                         {"objective", s.objective},
                         {"simplex_size", s.simplex_size},
                         {"p_phys", s.p_phys},
                         {"p_input", s.p_input},
                         {"q_logical", s.q_logical}});
    }
    doc["trace"] = trace;
    doc["prediction"] = record_json(fit.prediction);
    rep.json = dump(doc);

    CsvTable t;
    t.add("scenario", "fit");
    t.add("p_phys", fit.p_phys);
    t.add("p_input", fit.p_input);
    t.add("q_logical", fit.q_logical);
    t.add("objective", fit.objective);
    t.add("grid_objective", fit.grid_objective);
    t.add("grid_only", fit.grid_only);
    for (const auto &r : fit.residuals) {
        t.add(r.name + "_predicted", r.predicted);
        t.add(r.name + "_residual", r.residual);
    }
    for (const auto &r : fit.holdout) {
        t.add(r.name + "_predicted", r.predicted);
        t.add(r.name + "_residual", r.residual);
    }
    t.add("iterations", fit.trace.size());
    rep.csv = t.str();

    PlotSeries p;
    for (const auto &r : fit.residuals) {
        p.add("fit_target", r.name, r.target, 0.0);
        p.add("fit_predicted", r.name, r.predicted, 0.0);
    }
    for (const auto &r : fit.holdout) {
        p.add("holdout_target", r.name, r.target, 0.0);
        p.add("holdout_predicted", r.name, r.predicted, 0.0);
    }
    for (const auto &s : fit.trace) {
        p.add("fit_objective", std::to_string(s.iteration), s.objective, 0.0);
    }
    rep.plot_csv = p.str();
    return rep;
}

Report make_report(const ValidationReport &validation) {
    Report rep;
    rep.scenario = "validate";
    rep.passed = validation.passed();
    json doc;
    doc["schema_version"] = 1;
    doc["scenario"] = "validate";
    doc["seed"] = validation.seed;
    doc["passed"] = rep.passed;
    json checks = json::array();
    CsvTable t;
    t.add("scenario", "validate");
    t.add("passed", rep.passed);
    for (const auto &c : validation.checks) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"failures", c.failures}});
        t.add(c.name, c.passed);
    }
    doc["checks"] = checks;
    rep.json = dump(doc);
    rep.csv = t.str();
    return rep;
}

Report run_scenario(const ExperimentConfig &config) {
    switch (config.scenario) {
        case Scenario::Characterize:
            return make_report(run_characterize(config));
        case Scenario::Teleport:
            return make_report(run_teleport(config));
        case Scenario::Fit:
            return make_report(run_fit(config), config);
        case Scenario::Validate:
            return make_report(run_validate(config));
    }
    throw ConfigError("unknown scenario");
}

void write_report(const Report &report, const std::string &dir, OutputFormat format) {
    ensure_directory(dir);
    const std::filesystem::path base(dir);
    if (format != OutputFormat::Csv) {
        write_file(base / (report.scenario + ".json"), report.json);
    }
    if (format != OutputFormat::Json) {
        write_file(base / (report.scenario + ".csv"), report.csv);
    }
    if (!report.plot_csv.empty()) {
        write_file(base / (report.scenario + "_plot.csv"), report.plot_csv);
    }
}

}  // namespace lqt
