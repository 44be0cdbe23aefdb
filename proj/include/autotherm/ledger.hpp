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

#ifndef AUTOTHERM_LEDGER_HPP
#define AUTOTHERM_LEDGER_HPP

#include <ostream>
#include <string>
#include <vector>

#include "autotherm/dynamics.hpp"
#include "autotherm/laws.hpp"

namespace autotherm {

/// Full-precision decimal rendering (17 significant digits; "inf"/"nan" for
/// non-finite values). Ledger files are byte-stable across identical runs.
std::string format_double(double value);

std::vector<std::string> ledger_columns(const Trajectory& trajectory);
std::vector<double> ledger_row(const ThermoSnapshot& snapshot);

/// One row per time: t, then E/S/beta/T/zeta/Eth/Q/W per subsystem, then
/// E_int, S_total, the correlation, D per subsystem, sigma and the
/// bookkeeping residual. CSV uses comma separators, '.' decimals, a header
/// row and LF line endings.
void write_ledger_csv(std::ostream& out, const Trajectory& trajectory);
void write_ledger_json(std::ostream& out, const Trajectory& trajectory,
                       const std::string& scenario_name);

enum class AuditStatus { Pass, Fail, Info };

struct AuditOutcome {
  std::string name;
  std::string subsystem;
  AuditStatus status = AuditStatus::Pass;
  double max_residual = 0.0;
  std::string detail;           // metrics, trend notes
  std::string first_violation;  // empty when passing
};

void write_audit_summary_json(std::ostream& out, const std::vector<AuditOutcome>& audits);
void write_audit_summary_csv(std::ostream& out, const std::vector<AuditOutcome>& audits);

void write_limit_table_csv(std::ostream& out, const LimitTable& table);

}  // namespace autotherm

#endif  // AUTOTHERM_LEDGER_HPP
