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

#include "autotherm/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace autotherm {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ConfigError(where + ": " + what);
}

const json& require_field(const json& j, const std::string& key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) fail(where, "missing field '" + key + "'");
  return *it;
}

double number_at(const json& j, const std::string& key, const std::string& where) {
  const json& v = require_field(j, key, where);
  if (!v.is_number()) fail(where + "." + key, "expected a number");
  return v.get<double>();
}

int int_at(const json& j, const std::string& key, const std::string& where) {
  const json& v = require_field(j, key, where);
  if (!v.is_number_integer()) fail(where + "." + key, "expected an integer");
  return v.get<int>();
}

std::string string_at(const json& j, const std::string& key, const std::string& where) {
  const json& v = require_field(j, key, where);
  if (!v.is_string()) fail(where + "." + key, "expected a string");
  return v.get<std::string>();
}

ComplexMatrix matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("real")) {
    fail(where, "expected a matrix object with 'real' (and optional 'imag') row arrays");
  }
  const json& re = j.at("real");
  if (!re.is_array() || re.empty()) fail(where + ".real", "expected a nonempty array of rows");
  const std::size_t n = re.size();
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  auto fill = [&](const json& part, bool imag) {
    if (part.size() != n) fail(where, "matrix part has wrong row count");
    for (std::size_t r = 0; r < n; ++r) {
      const json& row = part.at(r);
      if (!row.is_array() || row.size() != n) {
        fail(where, "matrix rows must all have length " + std::to_string(n));
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (!row.at(c).is_number()) fail(where, "matrix entries must be numbers");
        const double v = row.at(c).get<double>();
        if (imag) {
          m(r, c) += Complex(0.0, v);
        } else {
          m(r, c) += Complex(v, 0.0);
        }
      }
    }
  };
  fill(re, false);
  if (j.contains("imag")) fill(j.at("imag"), true);
  return m;
}

ordered_json matrix_to_json(const ComplexMatrix& m) {
  ordered_json re = ordered_json::array();
  ordered_json im = ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    ordered_json re_row = ordered_json::array();
    ordered_json im_row = ordered_json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re_row.push_back(m(r, c).real());
      im_row.push_back(m(r, c).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return ordered_json{{"real", std::move(re)}, {"imag", std::move(im)}};
}

// "name(arg1,arg2)" -> {name, args}; plain "name" gives empty args.
bool split_call(const std::string& text, std::string& name, std::vector<std::string>& args) {
  const auto open = text.find('(');
  if (open == std::string::npos) {
    name = text;
    args.clear();
    return true;
  }
  if (text.back() != ')') return false;
  name = text.substr(0, open);
  args.clear();
  std::stringstream ss(text.substr(open + 1, text.size() - open - 2));
  std::string tok;
  while (std::getline(ss, tok, ',')) args.push_back(tok);
  return true;
}

double parse_double_arg(const std::string& tok, const std::string& where) {
  if (tok == "inf" || tok == "+inf") return std::numeric_limits<double>::infinity();
  try {
    std::size_t used = 0;
    const double v = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    fail(where, "cannot parse number '" + tok + "'");
  }
}

HamiltonianSpec hamiltonian_from_json(const json& j, const std::string& where) {
  if (j.is_string()) {
    std::string name;
    std::vector<std::string> args;
    if (!split_call(j.get<std::string>(), name, args)) {
      fail(where, "malformed Hamiltonian spec '" + j.get<std::string>() + "'");
    }
    if (name == "qubit") {
      if (args.size() != 1) fail(where, "qubit(omega) takes one argument");
      return HamiltonianSpec::qubit(parse_double_arg(args[0], where));
    }
    if (name == "oscillator") {
      if (args.size() != 2) fail(where, "oscillator(levels, omega) takes two arguments");
      const int levels = static_cast<int>(parse_double_arg(args[0], where));
      return HamiltonianSpec::oscillator(levels, parse_double_arg(args[1], where));
    }
    fail(where, "unknown Hamiltonian preset '" + name + "'");
  }
  if (j.is_object()) return HamiltonianSpec::explicit_matrix(matrix_from_json(j, where));
  fail(where, "expected a Hamiltonian preset string or matrix object");
}

InitialSpec initial_from_json(const json& j, const std::string& where) {
  if (j.is_string()) {
    std::string name;
    std::vector<std::string> args;
    if (!split_call(j.get<std::string>(), name, args)) {
      fail(where, "malformed initial-state spec '" + j.get<std::string>() + "'");
    }
    if (name == "ground") {
      if (!args.empty()) fail(where, "ground takes no arguments");
      return InitialSpec::ground();
    }
    if (name == "gibbs") {
      if (args.size() != 1) fail(where, "gibbs(beta) takes one argument");
      const double beta = parse_double_arg(args[0], where);
      if (beta < 0.0) fail(where, "gibbs beta must be nonnegative");
      return InitialSpec::gibbs(beta);
    }
    fail(where, "unknown initial-state preset '" + name + "'");
  }
  if (j.is_object()) {
    if (j.contains("pure")) {
      const json& amps = j.at("pure");
      if (!amps.is_array() || amps.empty()) {
        fail(where + ".pure", "expected an array of [re, im] amplitude pairs");
      }
      ComplexVector v(amps.size());
      for (std::size_t i = 0; i < amps.size(); ++i) {
        const json& pair = amps.at(i);
        if (pair.is_number()) {
          v(i) = Complex(pair.get<double>(), 0.0);
        } else if (pair.is_array() && pair.size() == 2 && pair.at(0).is_number() &&
                   pair.at(1).is_number()) {
          v(i) = Complex(pair.at(0).get<double>(), pair.at(1).get<double>());
        } else {
          fail(where + ".pure", "amplitudes must be numbers or [re, im] pairs");
        }
      }
      return InitialSpec::pure(std::move(v));
    }
    if (j.contains("matrix")) {
      return InitialSpec::explicit_matrix(matrix_from_json(j.at("matrix"), where + ".matrix"));
    }
    fail(where, "initial-state object needs 'pure' or 'matrix'");
  }
  fail(where, "expected an initial-state preset string or object");
}

LocalFactorSpec factor_from_json(const json& j, const std::string& where) {
  if (j.is_string()) return LocalFactorSpec{true, j.get<std::string>(), {}};
  if (j.is_object()) return LocalFactorSpec{false, "", matrix_from_json(j, where)};
  fail(where, "expected an operator name or matrix object");
}

CouplingTermSpec term_from_json(const json& j, const std::string& where) {
  CouplingTermSpec term;
  if (j.contains("coeff")) {
    const json& c = j.at("coeff");
    if (c.is_number()) {
      term.coeff = Complex(c.get<double>(), 0.0);
    } else if (c.is_array() && c.size() == 2) {
      term.coeff = Complex(c.at(0).get<double>(), c.at(1).get<double>());
    } else {
      fail(where + ".coeff", "expected a number or [re, im] pair");
    }
  }
  const json& factors = require_field(j, "factors", where);
  if (!factors.is_object() || factors.empty()) {
    fail(where + ".factors", "expected a nonempty {subsystem: operator} object");
  }
  for (auto it = factors.begin(); it != factors.end(); ++it) {
    term.factors[it.key()] = factor_from_json(it.value(), where + ".factors." + it.key());
  }
  return term;
}

CouplingSpec coupling_from_json(const json& j, const std::string& where) {
  CouplingSpec cs;
  cs.strength = number_at(j, "strength", where);
  if (j.contains("terms")) {
    const json& terms = j.at("terms");
    if (!terms.is_array() || terms.empty()) fail(where + ".terms", "expected a nonempty array");
    for (std::size_t i = 0; i < terms.size(); ++i) {
      cs.terms.push_back(
          term_from_json(terms.at(i), where + ".terms[" + std::to_string(i) + "]"));
    }
  } else if (j.contains("factors")) {
    cs.terms.push_back(term_from_json(j, where));
  } else {
    fail(where, "coupling needs 'factors' or 'terms'");
  }
  return cs;
}

AuditSpec audit_from_json(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "audits must be strings like 'zero_temperature(B)'");
  std::string name;
  std::vector<std::string> args;
  if (!split_call(j.get<std::string>(), name, args)) {
    fail(where, "malformed audit spec '" + j.get<std::string>() + "'");
  }
  AuditSpec spec;
  if (name == "entropy_production") {
    spec.kind = AuditSpec::Kind::EntropyProduction;
  } else if (name == "zero_temperature") {
    spec.kind = AuditSpec::Kind::ZeroTemperature;
  } else if (name == "multipartite") {
    spec.kind = AuditSpec::Kind::Multipartite;
  } else if (name == "thermo_identity") {
    spec.kind = AuditSpec::Kind::ThermoIdentity;
  } else if (name == "ergotropy_decay") {
    spec.kind = AuditSpec::Kind::ErgotropyDecay;
  } else {
    fail(where, "unknown audit '" + name + "'");
  }
  const bool needs_subsystem = spec.kind == AuditSpec::Kind::EntropyProduction ||
                               spec.kind == AuditSpec::Kind::ZeroTemperature ||
                               spec.kind == AuditSpec::Kind::ThermoIdentity;
  if (needs_subsystem) {
    if (args.size() != 1 || args[0].empty()) {
      fail(where, "audit '" + name + "' needs a subsystem label argument");
    }
    spec.subsystem = args[0];
  } else if (!args.empty()) {
    fail(where, "audit '" + name + "' takes no arguments");
  }
  return spec;
}

std::string audit_to_string(const AuditSpec& spec) {
  switch (spec.kind) {
    case AuditSpec::Kind::EntropyProduction:
      return "entropy_production(" + spec.subsystem + ")";
    case AuditSpec::Kind::ZeroTemperature:
      return "zero_temperature(" + spec.subsystem + ")";
    case AuditSpec::Kind::Multipartite:
      return "multipartite";
    case AuditSpec::Kind::ThermoIdentity:
      return "thermo_identity(" + spec.subsystem + ")";
    case AuditSpec::Kind::ErgotropyDecay:
      return "ergotropy_decay";
  }
  return "";
}

}  // namespace

Scenario scenario_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("scenario: expected an object");
  Scenario sc;
  sc.name = j.contains("name") ? string_at(j, "name", "scenario") : "custom";

  const json& subs = require_field(j, "subsystems", "scenario");
  if (!subs.is_array() || subs.empty()) {
    fail("scenario.subsystems", "expected a nonempty array");
  }
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const std::string where = "scenario.subsystems[" + std::to_string(i) + "]";
    const json& s = subs.at(i);
    SubsystemSpec spec;
    spec.label = string_at(s, "label", where);
    spec.dim = int_at(s, "dim", where);
    if (spec.dim < 1) fail(where + ".dim", "dimension must be positive");
    spec.hamiltonian =
        hamiltonian_from_json(require_field(s, "hamiltonian", where), where + ".hamiltonian");
    spec.initial = initial_from_json(require_field(s, "initial", where), where + ".initial");
    sc.subsystems.push_back(std::move(spec));
  }

  if (j.contains("couplings")) {
    const json& cps = j.at("couplings");
    if (!cps.is_array()) fail("scenario.couplings", "expected an array");
    for (std::size_t i = 0; i < cps.size(); ++i) {
      sc.couplings.push_back(
          coupling_from_json(cps.at(i), "scenario.couplings[" + std::to_string(i) + "]"));
    }
  }

  const json& times = require_field(j, "times", "scenario");
  if (times.contains("list")) {
    const json& list = times.at("list");
    if (!list.is_array() || list.empty()) fail("scenario.times.list", "expected an array");
    std::vector<double> ts;
    for (const auto& t : list) {
      if (!t.is_number()) fail("scenario.times.list", "times must be numbers");
      ts.push_back(t.get<double>());
    }
    sc.times = TimeGridSpec::from_times(std::move(ts));
  } else {
    sc.times = TimeGridSpec::linspace(
        times.contains("start") ? number_at(times, "start", "scenario.times") : 0.0,
        number_at(times, "stop", "scenario.times"),
        int_at(times, "points", "scenario.times"));
  }

  if (j.contains("audits")) {
    const json& audits = j.at("audits");
    if (!audits.is_array()) fail("scenario.audits", "expected an array");
    for (std::size_t i = 0; i < audits.size(); ++i) {
      sc.audits.push_back(
          audit_from_json(audits.at(i), "scenario.audits[" + std::to_string(i) + "]"));
    }
  }
  return sc;
}

nlohmann::ordered_json scenario_to_json(const Scenario& scenario) {
  ordered_json j;
  j["name"] = scenario.name;
  j["subsystems"] = ordered_json::array();
  for (const auto& s : scenario.subsystems) {
    ordered_json sub;
    sub["label"] = s.label;
    sub["dim"] = s.dim;
    switch (s.hamiltonian.kind) {
      case HamiltonianSpec::Kind::Qubit: {
        std::ostringstream oss;
        oss << "qubit(" << s.hamiltonian.omega << ")";
        sub["hamiltonian"] = oss.str();
        break;
      }
      case HamiltonianSpec::Kind::Oscillator: {
        std::ostringstream oss;
        oss << "oscillator(" << s.hamiltonian.levels << "," << s.hamiltonian.omega << ")";
        sub["hamiltonian"] = oss.str();
        break;
      }
      case HamiltonianSpec::Kind::Explicit:
        sub["hamiltonian"] = matrix_to_json(s.hamiltonian.matrix);
        break;
    }
    switch (s.initial.kind) {
      case InitialSpec::Kind::Ground:
        sub["initial"] = "ground";
        break;
      case InitialSpec::Kind::Gibbs: {
        std::ostringstream oss;
        oss << "gibbs(";
        if (std::isinf(s.initial.beta)) {
          oss << "inf";
        } else {
          oss << s.initial.beta;
        }
        oss << ")";
        sub["initial"] = oss.str();
        break;
      }
      case InitialSpec::Kind::Pure: {
        ordered_json amps = ordered_json::array();
        for (Eigen::Index i = 0; i < s.initial.amplitudes.size(); ++i) {
          amps.push_back(ordered_json::array(
              {s.initial.amplitudes(i).real(), s.initial.amplitudes(i).imag()}));
        }
        sub["initial"] = ordered_json{{"pure", std::move(amps)}};
        break;
      }
      case InitialSpec::Kind::Matrix:
        sub["initial"] = ordered_json{{"matrix", matrix_to_json(s.initial.matrix)}};
        break;
    }
    j["subsystems"].push_back(std::move(sub));
  }

  j["couplings"] = ordered_json::array();
  for (const auto& c : scenario.couplings) {
    ordered_json cj;
    cj["strength"] = c.strength;
    ordered_json terms = ordered_json::array();
    for (const auto& term : c.terms) {
      ordered_json tj;
      if (term.coeff != Complex(1.0, 0.0)) {
        tj["coeff"] = ordered_json::array({term.coeff.real(), term.coeff.imag()});
      }
      ordered_json factors;
      for (const auto& [label, factor] : term.factors) {
        if (factor.named) {
          factors[label] = factor.name;
        } else {
          factors[label] = matrix_to_json(factor.matrix);
        }
      }
      tj["factors"] = std::move(factors);
      terms.push_back(std::move(tj));
    }
    cj["terms"] = std::move(terms);
    j["couplings"].push_back(std::move(cj));
  }

  if (scenario.times.is_explicit) {
    j["times"] = ordered_json{{"list", scenario.times.explicit_times}};
  } else {
    j["times"] = ordered_json{{"start", scenario.times.start},
                              {"stop", scenario.times.stop},
                              {"points", scenario.times.points}};
  }

  j["audits"] = ordered_json::array();
  for (const auto& a : scenario.audits) j["audits"].push_back(audit_to_string(a));
  return j;
}

RunConfig parse_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("config parse error at byte " + std::to_string(e.byte) + ": " +
                      e.what());
  }
  if (!j.is_object()) throw ConfigError("config: expected a JSON object");

  RunConfig cfg;
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_integer()) throw ConfigError("config.seed: expected an integer");
    cfg.seed = j.at("seed").get<std::uint64_t>();
  }

  const bool has_preset = j.contains("preset");
  const bool has_scenario = j.contains("scenario");
  if (has_preset == has_scenario) {
    throw ConfigError("config: exactly one of 'preset' or 'scenario' is required");
  }
  if (has_preset) {
    std::string name = string_at(j, "preset", "config");
    if (cfg.seed && name.rfind("random(", 0) == 0 && name.back() == ')') {
      // Seed override: re-key the random preset.
      const std::string args = name.substr(7, name.size() - 8);
      const auto comma = args.find(',');
      if (comma == std::string::npos) {
        throw ConfigError("config.preset: malformed random preset '" + name + "'");
      }
      name = "random(" + std::to_string(*cfg.seed) + args.substr(comma) + ")";
    }
    try {
      cfg.scenario = preset(name);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("config.preset: ") + e.what());
    }
  } else {
    cfg.scenario = scenario_from_json(j.at("scenario"));
  }

  if (j.contains("tolerances")) {
    const json& t = j.at("tolerances");
    if (t.contains("identity")) cfg.tolerances.identity = t.at("identity").get<double>();
    if (t.contains("inequality")) cfg.tolerances.inequality = t.at("inequality").get<double>();
    if (t.contains("sigma")) cfg.tolerances.sigma_floor = t.at("sigma").get<double>();
  }

  if (j.contains("sweep")) {
    const json& s = j.at("sweep");
    SweepSpec sweep;
    sweep.parameter = string_at(s, "parameter", "config.sweep");
    if (sweep.parameter == "coupling_strength") {
      sweep.coupling_index = s.contains("index") ? int_at(s, "index", "config.sweep") : 0;
      if (sweep.coupling_index < 0 ||
          sweep.coupling_index >= static_cast<int>(cfg.scenario.couplings.size())) {
        throw ConfigError("config.sweep.index: no coupling with index " +
                          std::to_string(sweep.coupling_index));
      }
    } else if (sweep.parameter == "initial_temperature") {
      sweep.subsystem = string_at(s, "subsystem", "config.sweep");
      bool found = false;
      for (const auto& sub : cfg.scenario.subsystems) found |= sub.label == sweep.subsystem;
      if (!found) {
        throw ConfigError("config.sweep.subsystem: unknown subsystem '" + sweep.subsystem +
                          "'");
      }
    } else {
      throw ConfigError(
          "config.sweep.parameter: must be 'coupling_strength' or 'initial_temperature'");
    }
    const json& values = require_field(s, "values", "config.sweep");
    if (!values.is_array() || values.empty()) {
      throw ConfigError("config.sweep.values: expected a nonempty array of numbers");
    }
    for (const auto& v : values) {
      if (!v.is_number()) throw ConfigError("config.sweep.values: entries must be numbers");
      sweep.values.push_back(v.get<double>());
    }
    cfg.sweep = std::move(sweep);
  }

  if (j.contains("output")) {
    const json& o = j.at("output");
    if (o.contains("path")) cfg.output_path = string_at(o, "path", "config.output");
    if (o.contains("format")) {
      const std::string f = string_at(o, "format", "config.output");
      if (f == "csv") {
        cfg.format = OutputFormat::Csv;
      } else if (f == "json") {
        cfg.format = OutputFormat::Json;
      } else {
        throw ConfigError("config.output.format: expected 'csv' or 'json'");
      }
    }
  }
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream oss;
  oss << in.rdbuf();
  return parse_config_text(oss.str());
}

Scenario apply_sweep_value(const Scenario& base, const SweepSpec& sweep, double value) {
  Scenario sc = base;
  if (sweep.parameter == "coupling_strength") {
    sc.couplings[sweep.coupling_index].strength = value;
  } else if (sweep.parameter == "initial_temperature") {
    if (value < 0.0) throw ConfigError("sweep temperature must be nonnegative");
    for (auto& sub : sc.subsystems) {
      if (sub.label == sweep.subsystem) {
        sub.initial = (value == 0.0) ? InitialSpec::ground()
                                     : InitialSpec::gibbs(1.0 / value);
      }
    }
  } else {
    throw ConfigError("unknown sweep parameter '" + sweep.parameter + "'");
  }
  return sc;
}

}  // namespace autotherm
