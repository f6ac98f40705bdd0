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

#include <map>
#include <new>
#include <string>

#include "lqt/errors.hpp"
#include "lqt/experiment.hpp"
#include "lqt/report.hpp"

struct lqt_config {
    lqt::ExperimentConfig config;
    std::string scenario;
};

struct lqt_report {
    lqt::Report report;
    lqt::OutputFormat format;
    /// name -> (value, stderr)
    std::map<std::string, std::pair<double, double>> values;
};

namespace {

thread_local std::string last_error;

lqt_status fail(lqt_status status, const std::string &message) {
    last_error = message;
    return status;
}

// Maps the exception in flight to a status code.
lqt_status translate() {
    try {
        throw;
    } catch (const lqt::ConfigError &e) {
        return fail(LQT_ERR_CONFIG, e.what());
    } catch (const lqt::DomainError &e) {
        return fail(LQT_ERR_DOMAIN, e.what());
    } catch (const lqt::OrthogonalSubspaceError &e) {
        return fail(LQT_ERR_ORTHOGONAL_SUBSPACE, e.what());
    } catch (const lqt::DegenerateProjectionError &e) {
        return fail(LQT_ERR_DEGENERATE_PROJECTION, e.what());
    } catch (const lqt::IoError &e) {
        return fail(LQT_ERR_IO, e.what());
    } catch (const std::bad_alloc &) {
        return fail(LQT_ERR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return fail(LQT_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(LQT_ERR_INTERNAL, "unknown error");
    }
}

template <typename F>
lqt_status guarded(F &&body) {
    try {
        body();
        last_error.clear();
        return LQT_OK;
    } catch (...) {
        return translate();
    }
}

lqt_status null_argument(const char *what) {
    return fail(LQT_ERR_INVALID_ARGUMENT, std::string(what) + " is null");
}

lqt_config *wrap(lqt::ExperimentConfig c) {
    auto *h = new lqt_config{std::move(c), {}};
    h->scenario = lqt::scenario_name(h->config.scenario);
    return h;
}

void collect(lqt_report &r, const lqt::ExperimentRecord &record) {
    static const char *const names[] = {"f_raw",           "f_cs",           "p_cs",      "chsh_raw",
                                        "chsh_cs",         "f_bare",         "chsh_bare", "f_active",
                                        "teleport_avg_raw", "teleport_avg_cs", "teleport_avg_active"};
    for (const char *name : names) {
        if (auto e = lqt::find_observable(record, name)) {
            r.values[name] = {e->value, e->error};
        }
    }
}

void collect(lqt_report &r, const lqt::FitResult &fit) {
    r.values["p_phys"] = {fit.p_phys, 0.0};
    r.values["p_input"] = {fit.p_input, 0.0};
    r.values["q_logical"] = {fit.q_logical, 0.0};
    r.values["objective"] = {fit.objective, 0.0};
    for (const auto &res : fit.residuals) {
        r.values[res.name] = {res.predicted, 0.0};
        r.values[res.name + "_residual"] = {res.residual, 0.0};
    }
    for (const auto &res : fit.holdout) {
        r.values[res.name] = {res.predicted, 0.0};
        r.values[res.name + "_residual"] = {res.residual, 0.0};
    }
}

}  // namespace

extern "C" {

LQT_API uint32_t lqt_abi_version(void) {
    return LQT_ABI_VERSION;
}

LQT_API const char *lqt_version_string(void) {
    return "lqt 1.0.0";
}

LQT_API const char *lqt_status_name(lqt_status status) {
    switch (status) {
        case LQT_OK:
            return "ok";
        case LQT_ERR_INVALID_ARGUMENT:
            return "invalid argument";
        case LQT_ERR_CONFIG:
            return "config error";
        case LQT_ERR_DOMAIN:
            return "domain error";
        case LQT_ERR_ORTHOGONAL_SUBSPACE:
            return "orthogonal subspace";
        case LQT_ERR_DEGENERATE_PROJECTION:
            return "degenerate projection";
        case LQT_ERR_IO:
            return "i/o error";
        case LQT_ERR_NOT_FOUND:
            return "not found";
        case LQT_ERR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

LQT_API const char *lqt_last_error(void) {
    return last_error.c_str();
}

LQT_API lqt_status lqt_config_create(const char *scenario, lqt_config **out) {
    if (scenario == nullptr) return null_argument("scenario");
    if (out == nullptr) return null_argument("out");
    auto s = lqt::parse_scenario(scenario);
    if (!s) {
        return fail(LQT_ERR_CONFIG, std::string("unknown scenario '") + scenario + "'");
    }
    return guarded([&] { *out = wrap(lqt::ExperimentConfig::defaults(*s)); });
}

LQT_API lqt_status lqt_config_parse(const char *json_text, lqt_config **out) {
    if (json_text == nullptr) return null_argument("json_text");
    if (out == nullptr) return null_argument("out");
    return guarded([&] { *out = wrap(lqt::parse_config(json_text)); });
}

LQT_API lqt_status lqt_config_load(const char *path, lqt_config **out) {
    if (path == nullptr) return null_argument("path");
    if (out == nullptr) return null_argument("out");
    return guarded([&] { *out = wrap(lqt::load_config(path)); });
}

LQT_API void lqt_config_free(lqt_config *config) {
    delete config;
}

LQT_API lqt_status lqt_config_scenario(const lqt_config *config, const char **out) {
    if (config == nullptr) return null_argument("config");
    if (out == nullptr) return null_argument("out");
    *out = config->scenario.c_str();
    return LQT_OK;
}

LQT_API lqt_status lqt_config_set_seed(lqt_config *config, uint64_t seed) {
    if (config == nullptr) return null_argument("config");
    config->config.noise.seed = seed;
    return LQT_OK;
}

LQT_API lqt_status lqt_config_set_exact(lqt_config *config) {
    if (config == nullptr) return null_argument("config");
    config->config.shots = 0;
    return guarded([&] { config->config.validate_config(); });
}

LQT_API lqt_status lqt_config_set_output_dir(lqt_config *config, const char *dir) {
    if (config == nullptr) return null_argument("config");
    if (dir == nullptr) return null_argument("dir");
    config->config.output_dir = dir;
    return LQT_OK;
}

LQT_API lqt_status lqt_config_set_format(lqt_config *config, const char *format) {
    if (config == nullptr) return null_argument("config");
    if (format == nullptr) return null_argument("format");
    auto f = lqt::parse_format(format);
    if (!f) {
        return fail(LQT_ERR_CONFIG, std::string("unknown format '") + format + "'");
    }
    config->config.format = *f;
    return LQT_OK;
}

LQT_API lqt_status lqt_config_output_dir(const lqt_config *config, const char **out) {
    if (config == nullptr) return null_argument("config");
    if (out == nullptr) return null_argument("out");
    *out = config->config.output_dir.c_str();
    return LQT_OK;
}

LQT_API lqt_status lqt_run(const lqt_config *config, lqt_report **out) {
    if (config == nullptr) return null_argument("config");
    if (out == nullptr) return null_argument("out");
    return guarded([&] {
        const lqt::ExperimentConfig &c = config->config;
        auto *r = new lqt_report{{}, c.format, {}};
        try {
            switch (c.scenario) {
                case lqt::Scenario::Characterize: {
                    auto record = lqt::run_characterize(c);
                    r->report = lqt::make_report(record);
                    collect(*r, record);
                    break;
                }
                case lqt::Scenario::Teleport: {
                    auto record = lqt::run_teleport(c);
                    r->report = lqt::make_report(record);
                    collect(*r, record);
                    break;
                }
                case lqt::Scenario::Fit: {
                    auto fit = lqt::run_fit(c);
                    r->report = lqt::make_report(fit, c);
                    collect(*r, fit);
                    break;
                }
                case lqt::Scenario::Validate:
                    r->report = lqt::make_report(lqt::run_validate(c));
                    break;
            }
        } catch (...) {
            delete r;
            throw;
        }
        *out = r;
    });
}

LQT_API void lqt_report_free(lqt_report *report) {
    delete report;
}

LQT_API lqt_status lqt_report_json(const lqt_report *report, const char **out) {
    if (report == nullptr) return null_argument("report");
    if (out == nullptr) return null_argument("out");
    *out = report->report.json.c_str();
    return LQT_OK;
}

LQT_API lqt_status lqt_report_csv(const lqt_report *report, const char **out) {
    if (report == nullptr) return null_argument("report");
    if (out == nullptr) return null_argument("out");
    *out = report->report.csv.c_str();
    return LQT_OK;
}

LQT_API lqt_status lqt_report_plot_csv(const lqt_report *report, const char **out) {
    if (report == nullptr) return null_argument("report");
    if (out == nullptr) return null_argument("out");
    *out = report->report.plot_csv.c_str();
    return LQT_OK;
}

LQT_API int lqt_report_passed(const lqt_report *report) {
    return report != nullptr && report->report.passed ? 1 : 0;
}

LQT_API lqt_status lqt_report_value(const lqt_report *report, const char *name, double *value, double *stderr_out) {
    if (report == nullptr) return null_argument("report");
    if (name == nullptr) return null_argument("name");
    auto it = report->values.find(name);
    if (it == report->values.end()) {
        return fail(LQT_ERR_NOT_FOUND, std::string("report has no value '") + name + "'");
    }
    if (value != nullptr) *value = it->second.first;
    if (stderr_out != nullptr) *stderr_out = it->second.second;
    return LQT_OK;
}

LQT_API lqt_status lqt_report_write(const lqt_report *report, const char *dir) {
    if (report == nullptr) return null_argument("report");
    if (dir == nullptr) return null_argument("dir");
    return guarded([&] { lqt::write_report(report->report, dir, report->format); });
}

}  // extern "C"
