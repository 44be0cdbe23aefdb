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

#include "autotherm/ledger.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace autotherm {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::vector<std::string> ledger_columns(const Trajectory& trajectory) {
  std::vector<std::string> cols{"t"};
  for (const auto& sub : trajectory.system.subsystems()) {
    for (const char* q : {"E", "S", "beta", "T", "zeta", "Eth", "Q", "W"}) {
      cols.push_back(std::string(q) + "_" + sub.label);
    }
  }
  cols.emplace_back("E_int");
  cols.emplace_back("S_total");
  cols.emplace_back("I_or_totalcorr");
  for (const auto& sub : trajectory.system.subsystems()) {
    cols.push_back("D_" + sub.label);
  }
  cols.emplace_back("sigma");
  cols.emplace_back("identity_residual");
  return cols;
}

std::vector<double> ledger_row(const ThermoSnapshot& snapshot) {
  std::vector<double> row{snapshot.time};
  for (const auto& rec : snapshot.subsystems) {
    row.push_back(rec.energy);
    row.push_back(rec.entropy);
    row.push_back(rec.beta);
    row.push_back(rec.temperature);
    row.push_back(rec.zeta);
    row.push_back(rec.thermal_energy);
    row.push_back(rec.heat);
    row.push_back(rec.work);
  }
  row.push_back(snapshot.interaction_energy);
  row.push_back(snapshot.total_entropy);
  row.push_back(snapshot.correlation);
  for (const auto& rec : snapshot.subsystems) row.push_back(rec.drive_relative_entropy);
  row.push_back(snapshot.sigma);
  row.push_back(snapshot.identity_residual);
  return row;
}

void write_ledger_csv(std::ostream& out, const Trajectory& trajectory) {
  const auto cols = ledger_columns(trajectory);
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i) out << ',';
    out << cols[i];
  }
  out << '\n';
  for (const auto& snap : trajectory.snapshots) {
    const auto row = ledger_row(snap);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << format_double(row[i]);
    }
    out << '\n';
  }
}

void write_ledger_json(std::ostream& out, const Trajectory& trajectory,
                       const std::string& scenario_name) {
  nlohmann::ordered_json j;
  j["scenario"] = scenario_name;
  nlohmann::ordered_json labels = nlohmann::ordered_json::array();
  for (const auto& sub : trajectory.system.subsystems()) labels.push_back(sub.label);
  j["subsystems"] = std::move(labels);
  j["columns"] = ledger_columns(trajectory);
  // Numbers go through as strings to keep inf/nan representable and the
  // full 17-digit precision byte-stable.
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& snap : trajectory.snapshots) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (double v : ledger_row(snap)) row.push_back(format_double(v));
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  out << j.dump(2) << '\n';
}

namespace {

const char* status_name(AuditStatus status) {
  switch (status) {
    case AuditStatus::Pass:
      return "pass";
    case AuditStatus::Fail:
      return "fail";
    case AuditStatus::Info:
      return "info";
  }
  return "unknown";
}

}  // namespace

void write_audit_summary_json(std::ostream& out, const std::vector<AuditOutcome>& audits) {
  nlohmann::ordered_json j;
  j["audits"] = nlohmann::ordered_json::array();
  bool all_passed = true;
  for (const auto& a : audits) {
    nlohmann::ordered_json aj;
    aj["name"] = a.name;
    if (!a.subsystem.empty()) aj["subsystem"] = a.subsystem;
    aj["status"] = status_name(a.status);
    aj["max_residual"] = format_double(a.max_residual);
    if (!a.detail.empty()) aj["detail"] = a.detail;
    if (!a.first_violation.empty()) aj["first_violation"] = a.first_violation;
    j["audits"].push_back(std::move(aj));
    all_passed = all_passed && a.status != AuditStatus::Fail;
  }
  j["all_passed"] = all_passed;
  out << j.dump(2) << '\n';
}

void write_audit_summary_csv(std::ostream& out, const std::vector<AuditOutcome>& audits) {
  out << "audit,subsystem,status,max_residual,detail\n";
  for (const auto& a : audits) {
    std::string detail = a.detail;
    for (char& c : detail) {
      if (c == ',' || c == '\n') c = ';';
    }
    out << a.name << ',' << a.subsystem << ',' << status_name(a.status) << ','
        << format_double(a.max_residual) << ',' << detail << '\n';
  }
}

void write_limit_table_csv(std::ostream& out, const LimitTable& table) {
  out << "temperature,T_times_D,limit_value,deviation,T_times_dzeta,dzeta_bound\n";
  for (const auto& row : table.rows) {
    out << format_double(row.temperature) << ',' << format_double(row.t_times_drive) << ','
        << format_double(table.limit_value) << ',' << format_double(row.deviation) << ','
        << format_double(row.t_times_dzeta) << ',' << format_double(row.dzeta_bound) << '\n';
  }
}

}  // namespace autotherm
