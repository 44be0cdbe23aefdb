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

#include "autotherm/laws.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace autotherm {

namespace {

constexpr double kProductStateTol = 1e-10;

void require_product_initial_state(const Trajectory& traj, const char* audit_name) {
  const ThermoSnapshot& first = traj.snapshots.front();
  if (first.correlation > kProductStateTol) {
    std::ostringstream oss;
    oss << audit_name << ": initial state is correlated (total correlation "
        << first.correlation
        << " nats); the identity presupposes initially uncorrelated subsystems";
    throw std::invalid_argument(oss.str());
  }
}

const SubsystemRecord& record_for(const ThermoSnapshot& snap, int index) {
  return snap.subsystems[index];
}

}  // namespace

SecondLawReport entropy_production_identity(const Trajectory& trajectory,
                                            const std::string& subsystem_b,
                                            const Tolerances& tol) {
  const CompositeSystem& system = trajectory.system;
  if (system.subsystem_count() != 2) {
    throw std::invalid_argument(
        "entropy_production_identity requires exactly two subsystems");
  }
  if (trajectory.snapshots.empty()) throw std::invalid_argument("empty trajectory");
  require_product_initial_state(trajectory, "entropy_production_identity");

  const int b = system.index_of(subsystem_b);
  const int a = 1 - b;
  const SubsystemRecord& b0 = record_for(trajectory.snapshots.front(), b);
  const SubsystemRecord& a0 = record_for(trajectory.snapshots.front(), a);
  const double t0 = b0.temperature;
  if (t0 == 0.0) {
    throw std::domain_error(
        "initial effective temperature of '" + subsystem_b +
        "' is zero; use zero_temperature_audit for this trajectory");
  }
  if (!std::isfinite(t0)) {
    throw std::domain_error("initial effective temperature of '" + subsystem_b +
                            "' is not finite");
  }

  const HermitianOperator& h_b = system.subsystems()[b].hamiltonian;
  const GibbsState w0 = gibbs_state(h_b, b0.beta);
  const std::vector<int> dims = system.dims();

  SecondLawReport report;
  report.subsystem = subsystem_b;
  report.min_sigma = std::numeric_limits<double>::infinity();
  for (const ThermoSnapshot& snap : trajectory.snapshots) {
    const SubsystemRecord& rb = record_for(snap, b);
    const SubsystemRecord& ra = record_for(snap, a);

    SecondLawRow row;
    row.time = snap.time;
    row.lhs = t0 * (ra.entropy - a0.entropy) + (rb.thermal_energy - b0.thermal_energy) -
              t0 * (rb.zeta - b0.zeta);

    // Right side from the evolved global state and the information
    // functionals, independent of the bookkeeping that produced the left.
    const DensityMatrix state = state_at(trajectory, snap.time);
    row.rhs_mutual = t0 * mutual_information(state, dims, {a});
    const GibbsState wt = gibbs_state(h_b, rb.beta);
    row.rhs_drive = t0 * relative_entropy(wt.state, w0.state);

    row.sigma = row.rhs_mutual + row.rhs_drive;
    row.identity_residual = std::abs(row.lhs - row.sigma);
    row.sigma_nonneg = row.sigma >= -tol.sigma_floor;

    report.max_identity_residual =
        std::max(report.max_identity_residual, row.identity_residual);
    report.min_sigma = std::min(report.min_sigma, row.sigma);
    if (row.identity_residual > tol.identity || !row.sigma_nonneg) {
      if (report.passed) {
        std::ostringstream oss;
        oss << "first violation at t = " << row.time << " (residual "
            << row.identity_residual << ", sigma " << row.sigma << ")";
        report.detail = oss.str();
      }
      report.passed = false;
    }
    report.rows.push_back(row);
  }
  return report;
}

SecondLawReport zero_temperature_audit(const Trajectory& trajectory,
                                       const std::string& subsystem_b,
                                       const Tolerances& tol) {
  const CompositeSystem& system = trajectory.system;
  if (trajectory.snapshots.empty()) throw std::invalid_argument("empty trajectory");
  const int b = system.index_of(subsystem_b);
  const SubsystemRecord& b0 = record_for(trajectory.snapshots.front(), b);
  if (b0.temperature != 0.0) {
    std::ostringstream oss;
    oss << "initial effective temperature of '" << subsystem_b << "' is "
        << b0.temperature << ", not zero; use entropy_production_identity";
    throw std::domain_error(oss.str());
  }

  const ThermoSnapshot& first = trajectory.snapshots.front();
  SecondLawReport report;
  report.subsystem = subsystem_b;
  report.max_heat = -std::numeric_limits<double>::infinity();
  report.min_work_margin = std::numeric_limits<double>::infinity();
  for (const ThermoSnapshot& snap : trajectory.snapshots) {
    const SubsystemRecord& rb = record_for(snap, b);

    SecondLawRow row;
    row.time = snap.time;
    row.heat = rb.heat;
    row.work = rb.work;
    double de_complement = 0.0;
    for (int s = 0; s < system.subsystem_count(); ++s) {
      if (s == b) continue;
      de_complement += snap.subsystems[s].energy - first.subsystems[s].energy;
    }
    row.delta_e_complement = de_complement;
    row.delta_e_interaction = snap.interaction_energy - first.interaction_energy;
    row.work_bound_margin = row.work - row.delta_e_complement - row.delta_e_interaction;
    row.heat_nonpositive = row.heat <= tol.inequality;
    row.work_bound_ok = row.work_bound_margin >= -tol.inequality;

    report.max_heat = std::max(report.max_heat, row.heat);
    report.min_work_margin = std::min(report.min_work_margin, row.work_bound_margin);
    if (!row.heat_nonpositive || !row.work_bound_ok) {
      if (report.passed) {
        std::ostringstream oss;
        oss << "first violation at t = " << row.time << " (Q = " << row.heat
            << ", work-bound margin = " << row.work_bound_margin << ")";
        report.detail = oss.str();
      }
      report.passed = false;
    }
    report.rows.push_back(row);
  }
  return report;
}

LimitTable zero_temperature_limit_check(const CompositeSystem& system,
                                        const std::vector<DensityMatrix>& base_initial_states,
                                        const std::string& subsystem_b,
                                        const std::vector<double>& temperatures, double time) {
  if (temperatures.empty()) throw std::invalid_argument("temperature list is empty");
  for (std::size_t i = 0; i < temperatures.size(); ++i) {
    if (!(temperatures[i] > 0.0)) {
      throw std::invalid_argument("temperatures must be strictly positive");
    }
    if (i > 0 && !(temperatures[i] < temperatures[i - 1])) {
      throw std::invalid_argument("temperature list must be strictly decreasing");
    }
  }
  if (base_initial_states.size() != static_cast<std::size_t>(system.subsystem_count())) {
    throw std::invalid_argument("need one base initial state per subsystem");
  }
  const int b = system.index_of(subsystem_b);
  const HermitianOperator& h_b = system.subsystems()[b].hamiltonian;
  const std::vector<double> grid = {0.0, time};

  auto run_with_beta = [&](double beta) {
    std::vector<DensityMatrix> locals = base_initial_states;
    locals[b] = gibbs_state(h_b, beta).state;
    return propagate(system, tensor_product(locals), grid);
  };

  // The T = 0 trajectory provides the limit value.
  const Trajectory reference = run_with_beta(kInfiniteBeta);
  const double limit_value =
      reference.snapshots.back().subsystems[b].thermal_energy - h_b.ground_energy();
  const double ln_dg = std::log(static_cast<double>(h_b.ground_degeneracy()));

  LimitTable table;
  table.subsystem = subsystem_b;
  table.time = time;
  table.limit_value = limit_value;
  for (const double temperature : temperatures) {
    const double beta0 = 1.0 / temperature;
    const Trajectory traj = run_with_beta(beta0);
    const SubsystemRecord& rb = traj.snapshots.back().subsystems[b];
    const SubsystemRecord& rb0 = traj.snapshots.front().subsystems[b];

    LimitTableRow row;
    row.temperature = temperature;
    row.t_times_drive =
        temperature * gibbs_relative_entropy(h_b, rb.beta, beta0);
    row.deviation = std::abs(row.t_times_drive - limit_value);
    row.t_times_dzeta = temperature * (rb.zeta - rb0.zeta);
    row.dzeta_bound = temperature * ln_dg;
    if (!table.rows.empty() && !(row.deviation < table.rows.back().deviation)) {
      table.monotone = false;
    }
    if (std::abs(row.t_times_dzeta) > row.dzeta_bound + 1e-15) {
      table.zeta_bound_ok = false;
    }
    table.rows.push_back(row);
  }
  table.final_over_first =
      table.rows.front().deviation > 0.0
          ? table.rows.back().deviation / table.rows.front().deviation
          : 0.0;
  return table;
}

MultipartiteReport multipartite_production(const Trajectory& trajectory,
                                           const Tolerances& tol) {
  const CompositeSystem& system = trajectory.system;
  if (system.subsystem_count() < 2) {
    throw std::invalid_argument("multipartite_production requires at least two subsystems");
  }
  if (trajectory.snapshots.empty()) throw std::invalid_argument("empty trajectory");
  require_product_initial_state(trajectory, "multipartite_production");

  const ThermoSnapshot& first = trajectory.snapshots.front();
  const int n_sub = system.subsystem_count();

  std::vector<GibbsState> w0;
  bool any_infinite_beta0 = false;
  for (int s = 0; s < n_sub; ++s) {
    const double beta0 = first.subsystems[s].beta;
    if (std::isinf(beta0)) any_infinite_beta0 = true;
    w0.push_back(gibbs_state(system.subsystems()[s].hamiltonian, beta0));
  }

  const std::vector<int> dims = system.dims();
  MultipartiteReport report;
  report.min_correlation = std::numeric_limits<double>::infinity();
  for (const ThermoSnapshot& snap : trajectory.snapshots) {
    MultipartiteRow row;
    row.time = snap.time;

    double entropy_sum = 0.0;
    double entropy_sum0 = 0.0;
    double clausius = 0.0;
    for (int s = 0; s < n_sub; ++s) {
      const SubsystemRecord& rec = snap.subsystems[s];
      const SubsystemRecord& rec0 = first.subsystems[s];
      entropy_sum += rec.entropy;
      entropy_sum0 += rec0.entropy;
      const double d_eth = rec.thermal_energy - rec0.thermal_energy;
      double flow;
      if (std::isinf(rec0.beta)) {
        flow = (d_eth == 0.0) ? 0.0
                              : std::copysign(std::numeric_limits<double>::infinity(), d_eth);
      } else {
        flow = rec0.beta * d_eth;
      }
      clausius += flow - (rec.zeta - rec0.zeta);
    }
    row.entropy_sum_change = entropy_sum - entropy_sum0;
    row.clausius_sum = clausius;
    row.limit_form = any_infinite_beta0;

    // Independent functional route: fresh reduced entropies and matrix
    // relative entropies on the evolved state.
    const DensityMatrix state = state_at(trajectory, snap.time);
    double fresh_entropy_sum = 0.0;
    double drive = 0.0;
    for (int s = 0; s < n_sub; ++s) {
      fresh_entropy_sum += von_neumann_entropy(partial_trace(state, dims, {s}));
      const GibbsState wt =
          gibbs_state(system.subsystems()[s].hamiltonian, snap.subsystems[s].beta);
      drive += relative_entropy(wt.state, w0[s].state);
    }
    row.total_correlation = fresh_entropy_sum - von_neumann_entropy(state);
    row.functional_sum = row.total_correlation + drive;
    row.residual = row.limit_form ? 0.0 : std::abs(row.clausius_sum - row.functional_sum);
    row.nonneg_ok = row.total_correlation >= -tol.sigma_floor &&
                    row.functional_sum >= -tol.sigma_floor;

    report.max_residual = std::max(report.max_residual, row.residual);
    report.min_correlation = std::min(report.min_correlation, row.total_correlation);
    if (!row.nonneg_ok || row.residual > tol.identity) report.passed = false;
    report.rows.push_back(row);
  }
  return report;
}

IdentityResidualSeries thermodynamic_identity_check(const Trajectory& trajectory,
                                                    const std::string& subsystem_b,
                                                    double tolerance_coefficient) {
  const int b = trajectory.system.index_of(subsystem_b);
  IdentityResidualSeries series;
  series.subsystem = subsystem_b;
  const auto& snaps = trajectory.snapshots;
  for (std::size_t i = 1; i + 1 < snaps.size(); ++i) {
    IdentityResidualRow row;
    row.time = snaps[i].time;
    row.step = 0.5 * (snaps[i + 1].time - snaps[i - 1].time);

    bool usable = true;
    for (std::size_t j = i - 1; j <= i + 1; ++j) {
      const SubsystemRecord& rec = snaps[j].subsystems[b];
      if (!(std::isfinite(rec.temperature) && rec.temperature > 0.0)) usable = false;
    }
    if (!usable) {
      row.skipped = true;
      row.notice = "effective temperature zero or undefined in the window";
      ++series.skipped_count;
      series.rows.push_back(row);
      continue;
    }

    const SubsystemRecord& prev = snaps[i - 1].subsystems[b];
    const SubsystemRecord& mid = snaps[i].subsystems[b];
    const SubsystemRecord& next = snaps[i + 1].subsystems[b];
    const double d_eth = next.thermal_energy - prev.thermal_energy;
    const double d_sth = (next.entropy + next.zeta) - (prev.entropy + prev.zeta);
    const double window = snaps[i + 1].time - snaps[i - 1].time;
    row.residual = std::abs(d_eth - mid.temperature * d_sth) / window;
    series.max_residual = std::max(series.max_residual, row.residual);
    if (row.residual > tolerance_coefficient * row.step * row.step) series.passed = false;
    series.rows.push_back(row);
  }
  return series;
}

}  // namespace autotherm
