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

#include "lqt/lqt.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>

#include "gtest/gtest.h"

namespace {

const char *kExactCharacterize =
    R"({"schema_version": 1, "scenario": "characterize", "engine": "analytic", "shots": "exact",
        "noise": {"p_phys": 0.05, "seed": 3}})";

}  // namespace

TEST(CApi, version) {
    ASSERT_EQ(lqt_abi_version(), static_cast<uint32_t>(LQT_ABI_VERSION));
    ASSERT_EQ(std::string(lqt_version_string()), "lqt 1.0.0");
    ASSERT_EQ(std::string(lqt_status_name(LQT_ERR_CONFIG)), "config error");
}

TEST(CApi, null_arguments) {
    lqt_config *c = nullptr;
    ASSERT_EQ(lqt_config_create(nullptr, &c), LQT_ERR_INVALID_ARGUMENT);
    ASSERT_EQ(lqt_config_create("characterize", nullptr), LQT_ERR_INVALID_ARGUMENT);
    ASSERT_EQ(lqt_run(nullptr, nullptr), LQT_ERR_INVALID_ARGUMENT);
    ASSERT_NE(std::string(lqt_last_error()), "");
    lqt_config_free(nullptr);
    lqt_report_free(nullptr);
}

TEST(CApi, config_errors_are_reported) {
    lqt_config *c = nullptr;
    ASSERT_EQ(lqt_config_create("dance", &c), LQT_ERR_CONFIG);
    ASSERT_EQ(c, nullptr);
    ASSERT_EQ(lqt_config_parse(R"({"schema_version": 1, "scenario": "fit", "bogus": 1})", &c), LQT_ERR_CONFIG);
    ASSERT_NE(std::string(lqt_last_error()).find("bogus"), std::string::npos);
    ASSERT_EQ(lqt_config_load("/nonexistent/lqt.json", &c), LQT_ERR_IO);
    ASSERT_EQ(lqt_config_create("characterize", &c), LQT_OK);
    ASSERT_EQ(lqt_config_set_format(c, "xml"), LQT_ERR_CONFIG);
    lqt_config_free(c);
}

TEST(CApi, run_exact_characterization) {
    lqt_config *c = nullptr;
    ASSERT_EQ(lqt_config_parse(kExactCharacterize, &c), LQT_OK);
    const char *scenario = nullptr;
    ASSERT_EQ(lqt_config_scenario(c, &scenario), LQT_OK);
    ASSERT_EQ(std::string(scenario), "characterize");
    lqt_report *r = nullptr;
    ASSERT_EQ(lqt_run(c, &r), LQT_OK);
    double value = 0;
    double err = -1;
    ASSERT_EQ(lqt_report_value(r, "p_cs", &value, &err), LQT_OK);
    ASSERT_GT(value, 0.5);
    ASSERT_LT(value, 1.0);
    ASSERT_EQ(err, 0.0);
    double f_cs = 0;
    ASSERT_EQ(lqt_report_value(r, "f_cs", &f_cs, nullptr), LQT_OK);
    double f_bare = 0;
    ASSERT_EQ(lqt_report_value(r, "f_bare", &f_bare, nullptr), LQT_OK);
    ASSERT_GT(f_cs, f_bare);
    ASSERT_EQ(lqt_report_value(r, "teleport_avg_cs", &value, nullptr), LQT_ERR_NOT_FOUND);
    ASSERT_EQ(lqt_report_passed(r), 1);
    const char *text = nullptr;
    ASSERT_EQ(lqt_report_json(r, &text), LQT_OK);
    ASSERT_NE(std::string(text).find("\"scenario\": \"characterize\""), std::string::npos);
    ASSERT_EQ(lqt_report_csv(r, &text), LQT_OK);
    ASSERT_EQ(std::string(text).rfind("scenario,", 0), 0u);
    ASSERT_EQ(lqt_report_plot_csv(r, &text), LQT_OK);
    ASSERT_EQ(std::string(text).rfind("series,x,y,yerr", 0), 0u);
    lqt_report_free(r);
    lqt_config_free(c);
}

TEST(CApi, seeded_runs_repeat_and_write) {
    lqt_config *c = nullptr;
    ASSERT_EQ(lqt_config_create("teleport", &c), LQT_OK);
    ASSERT_EQ(lqt_config_set_seed(c, 77), LQT_OK);
    ASSERT_EQ(lqt_config_set_format(c, "both"), LQT_OK);
    lqt_report *a = nullptr;
    lqt_report *b = nullptr;
    ASSERT_EQ(lqt_run(c, &a), LQT_OK);
    ASSERT_EQ(lqt_run(c, &b), LQT_OK);
    const char *ja = nullptr;
    const char *jb = nullptr;
    lqt_report_json(a, &ja);
    lqt_report_json(b, &jb);
    ASSERT_EQ(std::string(ja), std::string(jb));

    const auto dir = std::filesystem::temp_directory_path() / "lqt_c_api_test";
    std::filesystem::remove_all(dir);
    ASSERT_EQ(lqt_report_write(a, dir.c_str()), LQT_OK);
    ASSERT_TRUE(std::filesystem::exists(dir / "teleport.json"));
    ASSERT_TRUE(std::filesystem::exists(dir / "teleport.csv"));
    std::filesystem::remove_all(dir);
    lqt_report_free(a);
    lqt_report_free(b);
    lqt_config_free(c);
}

TEST(CApi, exact_override_and_output_dir) {
    lqt_config *c = nullptr;
    ASSERT_EQ(lqt_config_create("teleport", &c), LQT_OK);
    ASSERT_EQ(lqt_config_set_output_dir(c, "reports"), LQT_OK);
    const char *dir = nullptr;
    ASSERT_EQ(lqt_config_output_dir(c, &dir), LQT_OK);
    ASSERT_EQ(std::string(dir), "reports");
    ASSERT_EQ(lqt_config_set_exact(c), LQT_OK);
    lqt_config_free(c);
}
