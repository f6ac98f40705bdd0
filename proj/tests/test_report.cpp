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
#include <map>
#include <set>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"

#include "lqt/errors.hpp"

using namespace lqt;
using json = nlohmann::json;

namespace {

std::vector<std::string> split(const std::string &line) {
    std::vector<std::string> out;
    std::stringstream in(line);
    std::string cell;
    while (std::getline(in, cell, ',')) {
        out.push_back(cell);
    }
    return out;
}

std::map<std::string, std::string> csv_row(const std::string &csv) {
    std::stringstream in(csv);
    std::string header;
    std::string row;
    std::getline(in, header);
    std::getline(in, row);
    std::string extra;
    EXPECT_FALSE(std::getline(in, extra)) << "CSV has more than one data row";
    auto h = split(header);
    auto r = split(row);
    EXPECT_EQ(h.size(), r.size());
    std::map<std::string, std::string> out;
    for (std::size_t k = 0; k < h.size() && k < r.size(); ++k) {
        out[h[k]] = r[k];
    }
    return out;
}

ExperimentConfig sampled_teleport() {
    ExperimentConfig c = ExperimentConfig::defaults(Scenario::Teleport);
    c.noise = NoiseSpec::depolarizing(0.02, 0.05, 0.1, 123);
    return c;
}

std::string read_file(const std::filesystem::path &p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST(Report, record_json_schema) {
    ExperimentConfig c = ExperimentConfig::defaults(Scenario::Characterize);
    c.noise.seed = 5;
    Report rep = run_scenario(c);
    ASSERT_EQ(rep.scenario, "characterize");
    ASSERT_TRUE(rep.passed);
    ASSERT_EQ(rep.json.back(), '\n');
    json doc = json::parse(rep.json);
    ASSERT_EQ(doc["schema_version"], 1);
    ASSERT_EQ(doc["scenario"], "characterize");
    ASSERT_EQ(doc["engine"], "analytic");
    ASSERT_EQ(doc["shots"], 1500);
    ASSERT_EQ(doc["seed"], 5);
    ASSERT_TRUE(doc["resource"]["f_raw"].contains("stderr"));
    ASSERT_FALSE(doc.contains("teleport"));
    ASSERT_NEAR(doc["resource"]["f_raw"]["value"].get<double>(), 1.0, 0.01);
}

TEST(Report, csv_and_json_encode_identical_numbers) {
    Report rep = run_scenario(sampled_teleport());
    json doc = json::parse(rep.json);
    auto row = csv_row(rep.csv);
    ASSERT_EQ(row["scenario"], "teleport");
    ASSERT_EQ(row["shots"], "60");
    for (const auto &in : doc["teleport"]["inputs"]) {
        const std::string prefix = "teleport_" + in["name"].get<std::string>() + "_";
        for (const char *field : {"f_raw", "f_cs", "p_cs"}) {
            ASSERT_EQ(row.at(prefix + field), in[field]["value"].dump());
            ASSERT_EQ(row.at(prefix + field + "_err"), in[field]["stderr"].dump());
        }
    }
    ASSERT_EQ(row.at("teleport_avg_cs"), doc["teleport"]["average"]["f_cs"]["value"].dump());
    ASSERT_EQ(row.at("q_logical"), doc["noise"]["q_logical"].dump());
    ASSERT_NEAR(doc["teleport"]["classical_limit"].get<double>(), 2.0 / 3.0, 1e-15);
}

TEST(Report, seeded_runs_are_byte_identical) {
    Report a = run_scenario(sampled_teleport());
    Report b = run_scenario(sampled_teleport());
    ASSERT_EQ(a.json, b.json);
    ASSERT_EQ(a.csv, b.csv);
    ASSERT_EQ(a.plot_csv, b.plot_csv);
    ExperimentConfig other = sampled_teleport();
    other.noise.seed = 124;
    ASSERT_NE(run_scenario(other).json, a.json);
}

TEST(Report, exact_shots_serialize_as_string) {
    ExperimentConfig c = ExperimentConfig::defaults(Scenario::Characterize);
    c.shots = 0;
    c.engine = Engine::Analytic;
    json doc = json::parse(run_scenario(c).json);
    ASSERT_EQ(doc["shots"], "exact");
    ASSERT_EQ(doc["resource"]["f_raw"]["stderr"], 0.0);
}

TEST(Report, plot_series) {
    Report rep = run_scenario(sampled_teleport());
    std::stringstream in(rep.plot_csv);
    std::string line;
    std::getline(in, line);
    ASSERT_EQ(line, "series,x,y,yerr");
    std::set<std::string> series;
    while (std::getline(in, line)) {
        auto cells = split(line);
        ASSERT_EQ(cells.size(), 4u) << line;
        series.insert(cells[0]);
    }
    ASSERT_TRUE(series.count("teleport_raw"));
    ASSERT_TRUE(series.count("teleport_cs"));
    ASSERT_TRUE(series.count("teleport_p_cs"));
    ASSERT_TRUE(series.count("classical_limit"));
}

TEST(Report, fit_and_validation_reports) {
    FitResult fit;
    fit.p_phys = 0.01;
    fit.residuals = {{"f_raw", 0.7, 0.71, 0.01}};
    fit.trace = {{1, 0.5, 0.1, 0.01, 0.02, 0.03}};
    fit.prediction.scenario = "fit";
    Report f = make_report(fit, ExperimentConfig::defaults(Scenario::Fit));
    json doc = json::parse(f.json);
    ASSERT_EQ(doc["fitted"]["p_phys"], 0.01);
    ASSERT_EQ(doc["residuals"][0]["name"], "f_raw");
    ASSERT_EQ(csv_row(f.csv)["f_raw_residual"], "0.01");
    ASSERT_NE(f.plot_csv.find("fit_objective,1,0.5,"), std::string::npos);

    ValidationReport v;
    v.checks = {{"distance_three", true, "ok", {}}, {"calibration", false, "off", {"f_raw coverage 0.5"}}};
    Report vr = make_report(v);
    ASSERT_FALSE(vr.passed);
    json vdoc = json::parse(vr.json);
    ASSERT_EQ(vdoc["passed"], false);
    ASSERT_EQ(vdoc["checks"][1]["failures"][0], "f_raw coverage 0.5");
    ASSERT_EQ(csv_row(vr.csv)["calibration"], "false");
    ASSERT_TRUE(vr.plot_csv.empty());
}

TEST(Report, write_report_files) {
    const auto dir = std::filesystem::temp_directory_path() / "lqt_report_test";
    std::filesystem::remove_all(dir);
    Report rep = run_scenario(sampled_teleport());
    write_report(rep, (dir / "nested").string(), OutputFormat::Both);
    ASSERT_EQ(read_file(dir / "nested" / "teleport.json"), rep.json);
    ASSERT_EQ(read_file(dir / "nested" / "teleport.csv"), rep.csv);
    ASSERT_EQ(read_file(dir / "nested" / "teleport_plot.csv"), rep.plot_csv);
    write_report(rep, (dir / "csv_only").string(), OutputFormat::Csv);
    ASSERT_FALSE(std::filesystem::exists(dir / "csv_only" / "teleport.json"));
    ASSERT_TRUE(std::filesystem::exists(dir / "csv_only" / "teleport.csv"));
    std::filesystem::remove_all(dir);
}
