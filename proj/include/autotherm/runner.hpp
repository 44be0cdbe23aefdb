// Copyright 2026 the autotherm authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AUTOTHERM_RUNNER_HPP
#define AUTOTHERM_RUNNER_HPP

#include <optional>
#include <string>
#include <vector>

#include "autotherm/config.hpp"
#include "autotherm/ledger.hpp"

namespace autotherm {

struct RunResult {
  Scenario scenario;
  Trajectory trajectory;
  std::vector<AuditOutcome> audits;
  bool all_passed = true;
};

/// Propagates the scenario and evaluates its declared audits.
RunResult run_scenario(const Scenario& scenario, const Tolerances& tolerances = {});

struct SweepResult {
  std::vector<double> values;
  std::vector<RunResult> runs;
  std::optional<LimitTable> limit_table;  // initial-temperature sweeps, descending values
  bool all_passed = true;
};

/// One run per sweep value, up to `workers` in parallel. A sweep over the
/// initial temperature with strictly decreasing positive values also
/// produces the zero-temperature convergence table at the final grid time.
SweepResult run_sweep(const RunConfig& config, int workers = 1);

/// Writes the ledger to `path` and the audit summary next to it
/// (<path>.audit.json / .audit.csv). Returns the audit summary path.
std::string write_run_outputs(const RunResult& result, const std::string& path,
                              OutputFormat format);

/// Filesystem-safe rendering of a scenario name.
std::string sanitize_name(const std::string& name);

}  // namespace autotherm

#endif  // AUTOTHERM_RUNNER_HPP
