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

#ifndef AUTOTHERM_DYNAMICS_HPP
#define AUTOTHERM_DYNAMICS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "autotherm/qmat.hpp"
#include "autotherm/thermo.hpp"

namespace autotherm {

struct Subsystem {
  std::string label;
  HermitianOperator hamiltonian;

  int dim() const { return hamiltonian.dim(); }
};

/// Ordered list of subsystems plus Hermitian coupling terms on the full
/// space. Immutable once constructed; the total Hamiltonian is cached.
class CompositeSystem {
 public:
  CompositeSystem(std::vector<Subsystem> subsystems,
                  std::vector<HermitianOperator> couplings = {});

  const std::vector<Subsystem>& subsystems() const { return subsystems_; }
  const std::vector<HermitianOperator>& couplings() const { return couplings_; }
  int total_dim() const { return total_dim_; }
  std::vector<int> dims() const;
  int subsystem_count() const { return static_cast<int>(subsystems_.size()); }
  int index_of(const std::string& label) const;

 private:
  std::vector<Subsystem> subsystems_;
  std::vector<HermitianOperator> couplings_;
  int total_dim_ = 0;
};

/// Named local operators: sigma_x, sigma_y, sigma_z, sigma_plus, sigma_minus
/// (dim 2); a, adag, x, p, number (truncated oscillator, any dim); identity.
ComplexMatrix local_operator(const std::string& name, int dim);

/// op acting on `site`, identity elsewhere.
ComplexMatrix embed(const ComplexMatrix& op, const std::vector<int>& dims, int site);

/// Product of per-site factors (identity on unlisted sites).
ComplexMatrix product_embed(const std::map<int, ComplexMatrix>& factors,
                            const std::vector<int>& dims);

/// sum_i (I x ... x H_i x ... x I) + sum_k V_k.
HermitianOperator build_total_hamiltonian(const CompositeSystem& system);

/// sum_k Tr{V_k rho}.
double interaction_energy(const DensityMatrix& state, const CompositeSystem& system);

/// Per-subsystem thermodynamic bookkeeping at one instant. Heat and work are
/// referenced to t = 0: Q = -(Eth(t) - Eth(0)) and W = -d(E - Eth), so
/// dE = -Q - W holds identically.
struct SubsystemRecord {
  std::string label;
  double energy = 0.0;
  double entropy = 0.0;  // nats
  double beta = 0.0;
  double temperature = 0.0;
  double zeta = 0.0;
  double thermal_energy = 0.0;
  double heat = 0.0;
  double work = 0.0;
  double drive_relative_entropy = 0.0;  // D(w[beta(t)] || w[beta(0)]), nats
  MatchCase case_tag = MatchCase::EntropyMatched;
};

struct ThermoSnapshot {
  double time = 0.0;
  std::vector<SubsystemRecord> subsystems;
  double interaction_energy = 0.0;
  double total_entropy = 0.0;  // nats, constant under unitary evolution
  double correlation = 0.0;    // sum_i S_i - S_total (mutual information for N = 2)
  double sigma = 0.0;          // correlation + sum_i D_i, nats
  double identity_residual = 0.0;  // |sum_i (beta_i(0) dEth_i - dzeta_i) - sigma|
};

struct Trajectory {
  CompositeSystem system;
  HermitianOperator total_hamiltonian;
  DensityMatrix initial_state;
  std::vector<double> times;
  std::vector<ThermoSnapshot> snapshots;
};

/// Unitary trajectory with a thermodynamic snapshot per time. Each snapshot
/// propagates from t = 0 with a fresh exp(-iHt), so refining the grid does
/// not change values at shared times. Times must be strictly increasing and
/// start at 0.
Trajectory propagate(const CompositeSystem& system, const DensityMatrix& initial_state,
                     const std::vector<double>& times);

/// exp(-iHt) rho(0) exp(iHt) for the trajectory's total Hamiltonian.
DensityMatrix state_at(const Trajectory& trajectory, double time);

}  // namespace autotherm

#endif  // AUTOTHERM_DYNAMICS_HPP
