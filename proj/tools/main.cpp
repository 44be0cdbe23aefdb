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

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "autotherm/runner.hpp"

namespace {

using namespace autotherm;

constexpr int kExitPass = 0;
constexpr int kExitAuditFailure = 1;
constexpr int kExitConfigError = 2;

struct CommonOptions {
  std::string scenario;
  std::string out;
  std::string format = "csv";
  std::uint64_t seed = 0;
  bool seed_set = false;
  int workers = 1;
  double tol_identity = -1.0;
  double tol_inequality = -1.0;
};

void add_common_flags(CLI::App* cmd, CommonOptions& opt, bool with_workers) {
  cmd->add_option("scenario", opt.scenario,
                  "preset name (see 'presets') or config file path")
      ->required();
  cmd->add_option("--out", opt.out, "output path (file for run, directory for sweep)");
  cmd->add_option("--format", opt.format, "ledger format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--seed", opt.seed, "seed override for random(...) presets")
      ->each([&opt](const std::string&) { opt.seed_set = true; });
  if (with_workers) {
    cmd->add_option("--workers", opt.workers, "parallel sweep workers")->check(CLI::PositiveNumber);
  }
  cmd->add_option("--tol-identity", opt.tol_identity, "equality-residual tolerance override");
  cmd->add_option("--tol-inequality", opt.tol_inequality, "inequality slack override");
}

bool looks_like_file(const std::string& scenario) {
  return scenario.ends_with(".json") || std::filesystem::exists(scenario);
}

RunConfig load_config(const CommonOptions& opt) {
  RunConfig cfg;
  if (looks_like_file(opt.scenario)) {
    cfg = parse_config_file(opt.scenario);
  } else {
    std::string name = opt.scenario;
    if (opt.seed_set && name.rfind("random(", 0) == 0 && name.back() == ')') {
      const std::string args = name.substr(7, name.size() - 8);
      const auto comma = args.find(',');
      if (comma != std::string::npos) {
        name = "random(" + std::to_string(opt.seed) + args.substr(comma) + ")";
      }
    }
    try {
      cfg.scenario = preset(name);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  if (opt.seed_set && !looks_like_file(opt.scenario)) cfg.seed = opt.seed;
  if (opt.seed_set && looks_like_file(opt.scenario)) {
    // Flag wins over the file's seed; re-key a random preset scenario.
    cfg.seed = opt.seed;
    if (cfg.scenario.name.rfind("random(", 0) == 0 && cfg.scenario.name.back() == ')') {
      const std::string args = cfg.scenario.name.substr(7, cfg.scenario.name.size() - 8);
      const auto comma = args.find(',');
      if (comma != std::string::npos) {
        cfg.scenario =
            preset("random(" + std::to_string(opt.seed) + args.substr(comma) + ")");
      }
    }
  }
  if (opt.tol_identity >= 0.0) cfg.tolerances.identity = opt.tol_identity;
  if (opt.tol_inequality >= 0.0) cfg.tolerances.inequality = opt.tol_inequality;
  if (!opt.out.empty()) cfg.output_path = opt.out;
  cfg.format = (opt.format == "json") ? OutputFormat::Json : OutputFormat::Csv;
  return cfg;
}

void print_audits(const std::vector<AuditOutcome>& audits) {
  for (const auto& a : audits) {
    std::cout << "  [" << (a.status == AuditStatus::Pass
                               ? "pass"
                               : (a.status == AuditStatus::Fail ? "FAIL" : "info"))
              << "] " << a.name;
    if (!a.subsystem.empty()) std::cout << "(" << a.subsystem << ")";
    std::cout << ": max residual " << format_double(a.max_residual);
    if (!a.detail.empty()) std::cout << "; " << a.detail;
    std::cout << "\n";
    if (!a.first_violation.empty()) std::cout << "         " << a.first_violation << "\n";
  }
}

int command_run(const CommonOptions& opt) {
  RunConfig cfg = load_config(opt);
  std::string path = cfg.output_path;
  if (path.empty()) {
    path = sanitize_name(cfg.scenario.name) +
           (cfg.format == OutputFormat::Csv ? ".ledger.csv" : ".ledger.json");
  }
  const RunResult result = run_scenario(cfg.scenario, cfg.tolerances);
  const std::string audit_path = write_run_outputs(result, path, cfg.format);
  std::cout << "scenario " << cfg.scenario.name << ": " << result.trajectory.times.size()
            << " times, ledger " << path << ", audits " << audit_path << "\n";
  print_audits(result.audits);
  return result.all_passed ? kExitPass : kExitAuditFailure;
}

int command_sweep(const CommonOptions& opt) {
  RunConfig cfg = load_config(opt);
  if (!cfg.sweep) {
    throw ConfigError("sweep requires a config file with a 'sweep' section");
  }
  std::filesystem::path dir =
      cfg.output_path.empty() ? (sanitize_name(cfg.scenario.name) + "_sweep")
                              : cfg.output_path;
  std::filesystem::create_directories(dir);

  const SweepResult sweep = run_sweep(cfg, opt.workers);
  const char* ext = cfg.format == OutputFormat::Csv ? ".csv" : ".json";
  for (std::size_t i = 0; i < sweep.runs.size(); ++i) {
    std::ostringstream name;
    name << sanitize_name(cfg.scenario.name) << "__" << cfg.sweep->parameter << "_"
         << sweep.values[i] << ext;
    const std::string path = (dir / name.str()).string();
    write_run_outputs(sweep.runs[i], path, cfg.format);
    std::cout << cfg.sweep->parameter << " = " << sweep.values[i] << " -> " << path << "\n";
    print_audits(sweep.runs[i].audits);
  }
  if (sweep.limit_table) {
    const std::string table_path = (dir / "convergence.csv").string();
    std::ofstream out(table_path, std::ios::binary);
    write_limit_table_csv(out, *sweep.limit_table);
    std::cout << "convergence table (t = " << sweep.limit_table->time << ", limit "
              << format_double(sweep.limit_table->limit_value) << ") -> " << table_path
              << (sweep.limit_table->monotone ? "; deviation monotone decreasing"
                                              : "; deviation NOT monotone")
              << "\n";
  }
  return sweep.all_passed ? kExitPass : kExitAuditFailure;
}

int command_presets(const std::string& dump) {
  if (!dump.empty()) {
    nlohmann::ordered_json j;
    j["scenario"] = scenario_to_json(preset(dump));
    std::cout << j.dump(2) << "\n";
    return kExitPass;
  }
  std::cout << "ex1_ground_ground   two ground-state qubits, sigma_x sigma_x coupling\n"
            << "ex2_pure_pure       excited qubit + pure-superposition qutrit, exchange coupling\n"
            << "three_body_chain    three thermal qubits, nearest-neighbour chain\n"
            << "random(seed,d1,d2,...)  seeded Gibbs subsystems with random couplings\n";
  return kExitPass;
}

int command_validate(const CommonOptions& opt) {
  const RunConfig cfg = load_config(opt);
  build_system(cfg.scenario);  // full structural validation
  std::cout << "ok: scenario '" << cfg.scenario.name << "' with "
            << cfg.scenario.subsystems.size() << " subsystems, "
            << cfg.scenario.couplings.size() << " couplings, "
            << build_times(cfg.scenario.times).size() << " times\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dense-matrix thermodynamic ledger for autonomous quantum systems"};
  app.require_subcommand(1);

  CommonOptions run_opt;
  CLI::App* run_cmd = app.add_subcommand("run", "propagate a scenario and audit it");
  add_common_flags(run_cmd, run_opt, false);

  CommonOptions sweep_opt;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "run a scenario over a parameter list");
  add_common_flags(sweep_cmd, sweep_opt, true);

  std::string dump_name;
  CLI::App* presets_cmd = app.add_subcommand("presets", "list built-in scenarios");
  presets_cmd->add_option("--dump", dump_name, "print a preset as a config document");

  CommonOptions validate_opt;
  CLI::App* validate_cmd = app.add_subcommand("validate", "parse and check a scenario");
  add_common_flags(validate_cmd, validate_opt, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitConfigError : kExitPass;
  }

  try {
    if (run_cmd->parsed()) return command_run(run_opt);
    if (sweep_cmd->parsed()) return command_sweep(sweep_opt);
    if (presets_cmd->parsed()) return command_presets(dump_name);
    if (validate_cmd->parsed()) return command_validate(validate_opt);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return kExitPass;
}
