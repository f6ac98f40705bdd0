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

#ifndef LQT_REPORT_HPP
#define LQT_REPORT_HPP

#include <string>

#include "lqt/experiment.hpp"

namespace lqt {

/// Serialized result of one scenario. Numbers are printed identically in the
/// JSON and CSV forms, and nothing depends on the clock, so a seeded run is
/// byte-for-byte reproducible.
struct Report {
    std::string scenario;
    std::string json;
    /// Header line plus one data row.
    std::string csv;
    /// Long-format plot data with columns series,x,y,yerr. Empty when the
    /// scenario has nothing to plot.
    std::string plot_csv;
    /// False when a validation check failed.
    bool passed = true;
};

Report make_report(const ExperimentRecord &record);
Report make_report(const FitResult &fit, const ExperimentConfig &config);
Report make_report(const ValidationReport &validation);

/// Runs the scenario named in the config and serializes its result.
Report run_scenario(const ExperimentConfig &config);

/// Writes <scenario>.json and/or <scenario>.csv, plus <scenario>_plot.csv when
/// there is plot data, into `dir` (created if missing).
void write_report(const Report &report, const std::string &dir, OutputFormat format);

}  // namespace lqt

#endif
