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

#ifndef AUTOTHERM_SCENARIOS_HPP
#define AUTOTHERM_SCENARIOS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "autotherm/dynamics.hpp"
#include "autotherm/ergotropy.hpp"

namespace autotherm {

struct HamiltonianSpec {
  enum class Kind { Qubit, Oscillator, Explicit };
  Kind kind = Kind::Qubit;
  double omega = 1.0;
  int levels = 2;  // oscillator truncation
  ComplexMatrix matrix;

  static HamiltonianSpec qubit(double omega);
  static HamiltonianSpec oscillator(int levels, double omega);
  static HamiltonianSpec explicit_matrix(ComplexMatrix m);
};

struct InitialSpec {
  enum class Kind { Ground, Gibbs, Pure, Matrix };
  Kind kind = Kind::Ground;
  double beta = 0.0;  // Gibbs; +inf allowed
  ComplexVector amplitudes;
  ComplexMatrix matrix;

  static InitialSpec ground();
  static InitialSpec gibbs(double beta);
  static InitialSpec pure(ComplexVector amplitudes);
  static InitialSpec explicit_matrix(ComplexMatrix m);
};

struct LocalFactorSpec {
  bool named = true;
  std::string name;  // see local_operator()
  ComplexMatrix matrix;
};

struct CouplingTermSpec {
  Complex coeff{1.0, 0.0};
  std::map<std::string, LocalFactorSpec> factors;  // subsystem label -> factor
};

struct CouplingSpec {
  double strength = 0.0;
  std::vector<CouplingTermSpec> terms;
};

struct SubsystemSpec {
  std::string label;
  int dim = 2;
  HamiltonianSpec hamiltonian;
  InitialSpec initial;
};

struct TimeGridSpec {
  bool is_explicit = false;
  double start = 0.0;
  double stop = 0.0;
  int points = 2;
  std::vector<double> explicit_times;

  static TimeGridSpec linspace(double start, double stop, int points);
  static TimeGridSpec from_times(std::vector<double> times);
};

struct AuditSpec {
  enum class Kind {
    EntropyProduction,
    ZeroTemperature,
    Multipartite,
    ThermoIdentity,
    ErgotropyDecay
  };
  Kind kind = Kind::Multipartite;
  std::string subsystem;  // audited subsystem where applicable
};

/// Declarative description of a run: subsystems (with local Hamiltonians and
/// initial states), couplings built from local factors, a time grid, and the
/// audits to evaluate. Initial states are per-subsystem, so the global
/// initial state is always a product.
struct Scenario {
  std::string name;
  std::vector<SubsystemSpec> subsystems;
  std::vector<CouplingSpec> couplings;
  TimeGridSpec times;
  std::vector<AuditSpec> audits;
};

/// Named presets: ex1_ground_ground, ex2_pure_pure, three_body_chain, and
/// random(seed, d1, d2, ...). Unknown names are rejected.
Scenario preset(const std::string& name);
std::vector<std::string> preset_names();

/// Seeded scenario with Gibbs initial states (beta in [0.2, 5]) and random
/// Hermitian nearest-neighbour couplings of spectral norm <= 0.5. The spec is
/// fully explicit (matrices frozen), so equal seeds give identical scenarios.
Scenario random_scenario(std::uint64_t seed, const std::vector<int>& dims);

/// Seeded two-subsystem scenario whose audited subsystem "B" starts at zero
/// effective temperature: either a pure nondegenerate ground state or a pure
/// superposition inside a twofold-degenerate ground space.
Scenario random_ground_scenario(std::uint64_t seed);

HermitianOperator build_hamiltonian(const SubsystemSpec& spec);
DensityMatrix build_initial_state(const SubsystemSpec& spec, const HermitianOperator& h);
CompositeSystem build_system(const Scenario& scenario);
std::vector<DensityMatrix> build_initial_states(const Scenario& scenario,
                                                const CompositeSystem& system);
std::vector<double> build_times(const TimeGridSpec& grid);

/// Per-site sigma_x / sigma_y rotations for a register of qubits; used by the
/// local-control ergotropy audit.
ControlFamily local_qubit_family(const CompositeSystem& system);

}  // namespace autotherm

#endif  // AUTOTHERM_SCENARIOS_HPP
