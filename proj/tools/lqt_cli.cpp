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

// Command-line front end. Built only against the C interface.
//
//   lqt <characterize|teleport|fit|validate> [--config PATH] [--seed N]
//       [--exact] [--out DIR] [--format json|csv|both]
//
// Exit status: 0 on success, 1 when a validation check fails, 2 on any error.

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lqt/lqt.h"

namespace {

constexpr int kExitFailedCheck = 1;
constexpr int kExitError = 2;

int report_error(lqt_status status) {
    std::fprintf(stderr, "lqt: %s: %s\n", lqt_status_name(status), lqt_last_error());
    return kExitError;
}

struct Options {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    bool exact = false;
    std::string out_dir;
    std::string format;
};

int run(const std::string &verb, const Options &opt) {
    lqt_config *config = nullptr;
    lqt_status st = opt.config_path.empty() ? lqt_config_create(verb.c_str(), &config)
                                            : lqt_config_load(opt.config_path.c_str(), &config);
    if (st != LQT_OK) {
        return report_error(st);
    }
    const char *scenario = nullptr;
    lqt_config_scenario(config, &scenario);
    if (verb != scenario) {
        std::fprintf(stderr, "lqt: config error: %s describes the '%s' scenario, not '%s'\n", opt.config_path.c_str(),
                     scenario, verb.c_str());
        lqt_config_free(config);
        return kExitError;
    }
    if (opt.seed) st = lqt_config_set_seed(config, *opt.seed);
    if (st == LQT_OK && opt.exact) st = lqt_config_set_exact(config);
    if (st == LQT_OK && !opt.out_dir.empty()) st = lqt_config_set_output_dir(config, opt.out_dir.c_str());
    if (st == LQT_OK && !opt.format.empty()) st = lqt_config_set_format(config, opt.format.c_str());
    if (st != LQT_OK) {
        lqt_config_free(config);
        return report_error(st);
    }

    lqt_report *report = nullptr;
    st = lqt_run(config, &report);
    if (st != LQT_OK) {
        lqt_config_free(config);
        return report_error(st);
    }
    const char *dir = nullptr;
    lqt_config_output_dir(config, &dir);
    if (dir[0] != '\0') {
        st = lqt_report_write(report, dir);
        if (st == LQT_OK) {
            std::fprintf(stderr, "lqt: wrote %s report to %s\n", scenario, dir);
        }
    } else {
        // No directory: the report goes to stdout in the requested format.
        const char *text = nullptr;
        const bool csv_only = opt.format == "csv";
        if (!csv_only) {
            lqt_report_json(report, &text);
            std::fputs(text, stdout);
        }
        if (csv_only || opt.format == "both") {
            lqt_report_csv(report, &text);
            std::fputs(text, stdout);
        }
    }
    const int passed = lqt_report_passed(report);
    lqt_report_free(report);
    lqt_config_free(config);
    if (st != LQT_OK) {
        return report_error(st);
    }
    return passed ? 0 : kExitFailedCheck;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Teleportation of a physical qubit into the Shor nine-qubit code"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    std::uint64_t seed = 0;
    app.add_option("--config", opt.config_path, "JSON experiment config")->check(CLI::ExistingFile);
    auto *seed_opt = app.add_option("--seed", seed, "Random seed, overriding the config");
    app.add_flag("--exact", opt.exact, "Exact expectations instead of shot sampling");
    app.add_option("--out", opt.out_dir, "Directory for the report files");
    app.add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"json", "csv", "both"}));

    std::string verb;
    for (const char *name : {"characterize", "teleport", "fit", "validate"}) {
        app.add_subcommand(name, std::string("Run the ") + name + " scenario")->callback([&verb, name] {
            verb = name;
        });
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? 0 : kExitError;
    }
    if (*seed_opt) {
        opt.seed = seed;
    }
    return run(verb, opt);
}
