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

#include "autotherm/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

namespace autotherm {

namespace {

std::string pass_fail_detail(double max_heat, double min_margin) {
  std::ostringstream oss;
  oss << "max Q = " << format_double(max_heat) << ", min work-bound margin = "
      << format_double(min_margin);
  return oss.str();
}

AuditOutcome audit_entropy_production(const Trajectory& traj, const AuditSpec& spec,
                                      const Tolerances& tol) {
  const SecondLawReport report = entropy_production_identity(traj, spec.subsystem, tol);
  AuditOutcome out;
  out.name = "entropy_production";
  out.subsystem = spec.subsystem;
  out.status = report.passed ? AuditStatus::Pass : AuditStatus::Fail;
  out.max_residual = report.max_identity_residual;
  std::ostringstream oss;
  oss << "min sigma = " << format_double(report.min_sigma);
  out.detail = oss.str();
  out.first_violation = report.detail;
  return out;
}

AuditOutcome audit_zero_temperature(const Trajectory& traj, const AuditSpec& spec,
                                    const Tolerances& tol) {
  const SecondLawReport report = zero_temperature_audit(traj, spec.subsystem, tol);
  AuditOutcome out;
  out.name = "zero_temperature";
  out.subsystem = spec.subsystem;
  out.status = report.passed ? AuditStatus::Pass : AuditStatus::Fail;
  out.max_residual = std::max(report.max_heat, -report.min_work_margin);
  out.detail = pass_fail_detail(report.max_heat, report.min_work_margin);
  out.first_violation = report.detail;
  return out;
}

AuditOutcome audit_multipartite(const Trajectory& traj, const Tolerances& tol) {
  const MultipartiteReport report = multipartite_production(traj, tol);
  AuditOutcome out;
  out.name = "multipartite";
  out.status = report.passed ? AuditStatus::Pass : AuditStatus::Fail;
  out.max_residual = report.max_residual;
  std::ostringstream oss;
  oss << "min correlation = " << format_double(report.min_correlation);
  out.detail = oss.str();
  return out;
}

AuditOutcome audit_thermo_identity(const Trajectory& traj, const AuditSpec& spec) {
  const IdentityResidualSeries series = thermodynamic_identity_check(traj, spec.subsystem);
  AuditOutcome out;
  out.name = "thermo_identity";
  out.subsystem = spec.subsystem;
  out.status = series.passed ? AuditStatus::Pass : AuditStatus::Fail;
  out.max_residual = series.max_residual;
  std::ostringstream oss;
  oss << series.skipped_count << " rows skipped (zero or undefined temperature)";
  out.detail = oss.str();
  return out;
}

AuditOutcome audit_ergotropy_decay(const Trajectory& traj) {
  AuditOutcome out;
  out.name = "ergotropy_decay";
  out.status = AuditStatus::Info;
  for (const auto& sub : traj.system.subsystems()) {
    if (sub.dim() != 2) {
      out.detail = "skipped: local-control audit requires qubit subsystems";
      return out;
    }
  }
  const ControlFamily family = local_qubit_family(traj.system);
  const int stride = std::max<int>(1, static_cast<int>(traj.times.size()) / 8);
  SearchConfig cfg;
  cfg.grid_points = 5;
  cfg.refine_iterations = 40;
  const auto series = restricted_ergotropy_series(traj, family, stride, cfg);

  double first_half = 0.0;
  double second_half = 0.0;
  const std::size_t half = series.size() / 2;
  for (std::size_t i = 0; i < series.size(); ++i) {
    (i < half ? first_half : second_half) += series[i].restricted;
  }
  if (half > 0) first_half /= static_cast<double>(half);
  if (series.size() > half) second_half /= static_cast<double>(series.size() - half);

  std::ostringstream oss;
  oss << "restricted ergotropy (local controls): start "
      << format_double(series.front().restricted) << ", mean first half "
      << format_double(first_half) << ", mean second half " << format_double(second_half)
      << ", unrestricted " << format_double(series.front().unrestricted)
      << (second_half <= first_half + 1e-12 ? "; time-averaged non-increasing"
                                            : "; no decay over this window");
  out.detail = oss.str();
  out.max_residual = 0.0;
  return out;
}

}  // namespace

RunResult run_scenario(const Scenario& scenario, const Tolerances& tolerances) {
  const CompositeSystem system = build_system(scenario);
  const std::vector<DensityMatrix> locals = build_initial_states(scenario, system);
  const DensityMatrix initial = tensor_product(locals);
  const std::vector<double> times = build_times(scenario.times);

  RunResult result{scenario, propagate(system, initial, times), {}, true};
  for (const AuditSpec& spec : scenario.audits) {
    AuditOutcome outcome;
    switch (spec.kind) {
      case AuditSpec::Kind::EntropyProduction:
        outcome = audit_entropy_production(result.trajectory, spec, tolerances);
        break;
      case AuditSpec::Kind::ZeroTemperature:
        outcome = audit_zero_temperature(result.trajectory, spec, tolerances);
        break;
      case AuditSpec::Kind::Multipartite:
        outcome = audit_multipartite(result.trajectory, tolerances);
        break;
      case AuditSpec::Kind::ThermoIdentity:
        outcome = audit_thermo_identity(result.trajectory, spec);
        break;
      case AuditSpec::Kind::ErgotropyDecay:
        outcome = audit_ergotropy_decay(result.trajectory);
        break;
    }
    result.all_passed = result.all_passed && outcome.status != AuditStatus::Fail;
    result.audits.push_back(std::move(outcome));
  }
  return result;
}

SweepResult run_sweep(const RunConfig& config, int workers) {
  if (!config.sweep) throw ConfigError("sweep requires a sweep spec in the config");
  const SweepSpec& sweep = *config.sweep;

  SweepResult result;
  result.values = sweep.values;
  result.runs.resize(sweep.values.size());

  const int n = static_cast<int>(sweep.values.size());
  const int pool = std::max(1, std::min(workers, n));
  std::atomic<int> next{0};
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(n);
  for (int w = 0; w < pool; ++w) {
    threads.emplace_back([&]() {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
        try {
          const Scenario sc = apply_sweep_value(config.scenario, sweep, sweep.values[i]);
          result.runs[i] = run_scenario(sc, config.tolerances);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (const auto& run : result.runs) result.all_passed = result.all_passed && run.all_passed;

  // Initial-temperature sweeps over a strictly decreasing positive list also
  // produce the convergence table of T * D toward Eth(t) - E_g.
  if (sweep.parameter == "initial_temperature") {
    bool decreasing = true;
    for (std::size_t i = 0; i < sweep.values.size(); ++i) {
      if (!(sweep.values[i] > 0.0)) decreasing = false;
      if (i > 0 && !(sweep.values[i] < sweep.values[i - 1])) decreasing = false;
    }
    if (decreasing) {
      const CompositeSystem system = build_system(config.scenario);
      const std::vector<DensityMatrix> locals = build_initial_states(config.scenario, system);
      const std::vector<double> times = build_times(config.scenario.times);
      result.limit_table = zero_temperature_limit_check(system, locals, sweep.subsystem,
                                                        sweep.values, times.back());
    }
  }
  return result;
}

std::string write_run_outputs(const RunResult& result, const std::string& path,
                              OutputFormat format) {
  std::ofstream ledger(path, std::ios::binary);
  if (!ledger) throw std::runtime_error("cannot write ledger file '" + path + "'");
  if (format == OutputFormat::Csv) {
    write_ledger_csv(ledger, result.trajectory);
  } else {
    write_ledger_json(ledger, result.trajectory, result.scenario.name);
  }

  const std::string audit_path =
      path + (format == OutputFormat::Csv ? ".audit.csv" : ".audit.json");
  std::ofstream audit(audit_path, std::ios::binary);
  if (!audit) throw std::runtime_error("cannot write audit summary '" + audit_path + "'");
  if (format == OutputFormat::Csv) {
    write_audit_summary_csv(audit, result.audits);
  } else {
    write_audit_summary_json(audit, result.audits);
  }
  return audit_path;
}

std::string sanitize_name(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') {
      out += c;
    } else {
      out += '_';
    }
  }
  return out.empty() ? "scenario" : out;
}

}  // namespace autotherm
