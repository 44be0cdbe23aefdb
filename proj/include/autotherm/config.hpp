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

#ifndef AUTOTHERM_CONFIG_HPP
#define AUTOTHERM_CONFIG_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "autotherm/laws.hpp"
#include "autotherm/scenarios.hpp"

namespace autotherm {

/// Raised for malformed or semantically invalid configuration input. The
/// message names the offending field (or byte offset for syntax errors).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { Csv, Json };

struct SweepSpec {
  std::string parameter;  // "coupling_strength" | "initial_temperature"
  int coupling_index = 0;
  std::string subsystem;
  std::vector<double> values;
};

struct RunConfig {
  Scenario scenario;
  std::optional<std::uint64_t> seed;
  Tolerances tolerances;
  std::optional<SweepSpec> sweep;
  std::string output_path;  // empty: derive from scenario name
  OutputFormat format = OutputFormat::Csv;
};

/// Scenario <-> config-document round trip.
Scenario scenario_from_json(const nlohmann::json& j);
nlohmann::ordered_json scenario_to_json(const Scenario& scenario);

/// Parses a full config document ({"preset": ...} or {"scenario": {...}},
/// plus optional seed/tolerances/sweep/output). A seed override replaces the
/// seed of a random(...) preset.
RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

/// Applies one sweep value to a copy of the scenario.
Scenario apply_sweep_value(const Scenario& base, const SweepSpec& sweep, double value);

}  // namespace autotherm

#endif  // AUTOTHERM_CONFIG_HPP
