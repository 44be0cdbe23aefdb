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

#ifndef AUTOTHERM_LAWS_HPP
#define AUTOTHERM_LAWS_HPP

#include <string>
#include <vector>

#include "autotherm/dynamics.hpp"

namespace autotherm {

struct Tolerances {
  double identity = 1e-8;     // equality residuals, energy units
  double inequality = 1e-10;  // heat / work-bound slack
  double sigma_floor = 1e-9;  // allowed negativity of entropy production
};

/// One audited instant. The entropy-production fields are filled by
/// entropy_production_identity (finite initial temperature); the heat/work
/// fields by zero_temperature_audit. All entropy-production terms carry
/// energy units (multiplied through by T_B(0)).
struct SecondLawRow {
  double time = 0.0;

  double lhs = 0.0;         // T0 dS_A + dEth_B - T0 dzeta_B
  double rhs_mutual = 0.0;  // T0 * I_AB(t)
  double rhs_drive = 0.0;   // T0 * D(w_B[beta(t)] || w_B[beta(0)])
  double identity_residual = 0.0;
  double sigma = 0.0;  // rhs_mutual + rhs_drive
  bool sigma_nonneg = true;

  double heat = 0.0;
  double work = 0.0;
  double delta_e_complement = 0.0;
  double delta_e_interaction = 0.0;
  double work_bound_margin = 0.0;  // W_B - dE_A - dE_int, >= -tol
  bool heat_nonpositive = true;
  bool work_bound_ok = true;
};

struct SecondLawReport {
  std::string subsystem;
  std::vector<SecondLawRow> rows;
  bool passed = true;
  double max_identity_residual = 0.0;
  double min_sigma = 0.0;
  double max_heat = 0.0;         // most positive Q_B seen
  double min_work_margin = 0.0;  // most negative work-bound margin seen
  std::string detail;
};

/// Verifies, snapshot by snapshot, that
///   T0 dS_A + dEth_B - T0 dzeta_B = T0 I_AB(t) + T0 D(w_B[beta(t)]||w_B[beta(0)])
/// and that the right side is nonnegative. The left side comes from the
/// trajectory's bookkeeping; the right side is recomputed from the evolved
/// global state with the information functionals, so the residual checks the
/// whole pipeline rather than restating one code path.
///
/// Requires exactly two subsystems, a product initial state, and a finite
/// positive initial effective temperature for the audited subsystem.
SecondLawReport entropy_production_identity(const Trajectory& trajectory,
                                            const std::string& subsystem_b,
                                            const Tolerances& tol = {});

/// Zero-initial-temperature form of the second law: Q_B(t) <= 0 and
/// W_B(t) >= dE_A(t) + dE_int(t), checked with residuals per snapshot.
/// Requires T_B(0) = 0.
SecondLawReport zero_temperature_audit(const Trajectory& trajectory,
                                       const std::string& subsystem_b,
                                       const Tolerances& tol = {});

struct LimitTableRow {
  double temperature = 0.0;
  double t_times_drive = 0.0;  // T * D(w_B[beta(t)] || w_B[beta(0)])
  double deviation = 0.0;      // |t_times_drive - limit_value|
  double t_times_dzeta = 0.0;
  double dzeta_bound = 0.0;  // T * ln d_g
};

struct LimitTable {
  std::string subsystem;
  double time = 0.0;
  double limit_value = 0.0;  // Eth_B(t) - E_g on the T = 0 trajectory
  std::vector<LimitTableRow> rows;
  bool monotone = true;
  bool zeta_bound_ok = true;
  double final_over_first = 0.0;
};

/// Convergence of T * D toward Eth_B(t) - E_g as the initial temperature of
/// subsystem B is lowered. base_initial_states supplies one local state per
/// subsystem; the entry for B is replaced by a Gibbs state at each listed
/// temperature (and by the ground-space mixture for the reference run).
/// Temperatures must be strictly decreasing and positive.
LimitTable zero_temperature_limit_check(const CompositeSystem& system,
                                        const std::vector<DensityMatrix>& base_initial_states,
                                        const std::string& subsystem_b,
                                        const std::vector<double>& temperatures, double time);

struct MultipartiteRow {
  double time = 0.0;
  double total_correlation = 0.0;   // sum_i S_i - S_total, nats
  double entropy_sum_change = 0.0;  // sum_i dS_i, equals the correlation
  double clausius_sum = 0.0;        // sum_i (beta_i(0) dEth_i - dzeta_i)
  double functional_sum = 0.0;      // correlation + sum_i D_i (functional route)
  double residual = 0.0;
  bool limit_form = false;  // some beta_i(0) infinite; equality skipped
  bool nonneg_ok = true;
};

struct MultipartiteReport {
  std::vector<MultipartiteRow> rows;
  bool passed = true;
  double max_residual = 0.0;
  double min_correlation = 0.0;
};

/// Total-correlation form of entropy production for N >= 2 subsystems:
/// sum_i dS_i = C(t) >= 0, and the Clausius-style aggregate
/// sum_i (beta_i(0) dEth_i - dzeta_i) = C(t) + sum_i D_i(t) >= 0.
/// Requires a product initial state.
MultipartiteReport multipartite_production(const Trajectory& trajectory,
                                           const Tolerances& tol = {});

struct IdentityResidualRow {
  double time = 0.0;
  double step = 0.0;      // half-window h
  double residual = 0.0;  // |dEth - T dSth| / (2h), second order in h
  bool skipped = false;
  std::string notice;
};

struct IdentityResidualSeries {
  std::string subsystem;
  std::vector<IdentityResidualRow> rows;
  double max_residual = 0.0;
  int skipped_count = 0;
  bool passed = true;  // residual <= tolerance_coefficient * h^2 on checked rows
};

/// Central-difference check of dEth_B = T_B dSth_B along the trajectory,
/// with Sth_B = S_B + zeta_B. Rows where the effective temperature is zero
/// or not finite are skipped with a notice.
IdentityResidualSeries thermodynamic_identity_check(const Trajectory& trajectory,
                                                    const std::string& subsystem_b,
                                                    double tolerance_coefficient = 50.0);

}  // namespace autotherm

#endif  // AUTOTHERM_LAWS_HPP
