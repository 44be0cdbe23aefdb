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

#include "autotherm/dynamics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace autotherm {

namespace {

// Clausius-style entropy-flow term beta(0) * dEth. At beta(0) = +inf the
// finite limit exists only for a stationary thermal energy.
double clausius_term(double beta0, double delta_eth) {
  if (std::isinf(beta0)) {
    if (delta_eth == 0.0) return 0.0;
    return delta_eth > 0.0 ? std::numeric_limits<double>::infinity()
                           : -std::numeric_limits<double>::infinity();
  }
  return beta0 * delta_eth;
}

}  // namespace

CompositeSystem::CompositeSystem(std::vector<Subsystem> subsystems,
                                 std::vector<HermitianOperator> couplings)
    : subsystems_(std::move(subsystems)), couplings_(std::move(couplings)) {
  if (subsystems_.empty()) {
    throw std::invalid_argument("CompositeSystem requires at least one subsystem");
  }
  long total = 1;
  for (const auto& s : subsystems_) {
    if (s.label.empty()) throw std::invalid_argument("subsystem label must be nonempty");
    total *= s.dim();
    if (total > kDefaultDimensionCap) {
      std::ostringstream oss;
      oss << "total dimension " << total << " exceeds cap " << kDefaultDimensionCap;
      throw std::length_error(oss.str());
    }
  }
  for (std::size_t i = 0; i < subsystems_.size(); ++i) {
    for (std::size_t j = i + 1; j < subsystems_.size(); ++j) {
      if (subsystems_[i].label == subsystems_[j].label) {
        throw std::invalid_argument("duplicate subsystem label '" + subsystems_[i].label + "'");
      }
    }
  }
  total_dim_ = static_cast<int>(total);
  for (const auto& v : couplings_) {
    if (v.dim() != total_dim_) {
      std::ostringstream oss;
      oss << "coupling dimension " << v.dim() << " does not match total dimension "
          << total_dim_;
      throw std::invalid_argument(oss.str());
    }
  }
}

std::vector<int> CompositeSystem::dims() const {
  std::vector<int> d;
  d.reserve(subsystems_.size());
  for (const auto& s : subsystems_) d.push_back(s.dim());
  return d;
}

int CompositeSystem::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < subsystems_.size(); ++i) {
    if (subsystems_[i].label == label) return static_cast<int>(i);
  }
  throw std::invalid_argument("unknown subsystem label '" + label + "'");
}

ComplexMatrix local_operator(const std::string& name, int dim) {
  if (dim < 1) throw std::invalid_argument("local operator dimension must be positive");
  const Complex i(0.0, 1.0);
  if (name == "identity") return ComplexMatrix::Identity(dim, dim);
  if (name == "sigma_x" || name == "sigma_y" || name == "sigma_z" || name == "sigma_plus" ||
      name == "sigma_minus") {
    if (dim != 2) {
      throw std::invalid_argument("operator '" + name + "' requires dimension 2");
    }
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    if (name == "sigma_x") {
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
    } else if (name == "sigma_y") {
      m(0, 1) = -i;
      m(1, 0) = i;
    } else if (name == "sigma_z") {
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
    } else if (name == "sigma_plus") {
      m(1, 0) = 1.0;  // |e><g| with |g> = |0>
    } else {
      m(0, 1) = 1.0;  // |g><e|
    }
    return m;
  }
  if (name == "a" || name == "adag" || name == "x" || name == "p" || name == "number") {
    ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    if (name == "a") return a;
    if (name == "adag") return a.adjoint();
    if (name == "x") return (a + a.adjoint().eval()) / std::sqrt(2.0);
    if (name == "p") return i * (a.adjoint().eval() - a) / std::sqrt(2.0);
    return a.adjoint() * a;
  }
  throw std::invalid_argument("unknown local operator '" + name + "'");
}

ComplexMatrix embed(const ComplexMatrix& op, const std::vector<int>& dims, int site) {
  if (site < 0 || site >= static_cast<int>(dims.size())) {
    throw std::invalid_argument("embed site index out of range");
  }
  return product_embed({{site, op}}, dims);
}

ComplexMatrix product_embed(const std::map<int, ComplexMatrix>& factors,
                            const std::vector<int>& dims) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int s = 0; s < static_cast<int>(dims.size()); ++s) {
    auto it = factors.find(s);
    if (it == factors.end()) {
      out = kron(out, ComplexMatrix::Identity(dims[s], dims[s]));
    } else {
      if (it->second.rows() != dims[s] || it->second.cols() != dims[s]) {
        std::ostringstream oss;
        oss << "factor on subsystem " << s << " is " << it->second.rows() << "x"
            << it->second.cols() << ", expected " << dims[s] << "x" << dims[s];
        throw std::invalid_argument(oss.str());
      }
      out = kron(out, it->second);
    }
  }
  return out;
}

HermitianOperator build_total_hamiltonian(const CompositeSystem& system) {
  const std::vector<int> dims = system.dims();
  ComplexMatrix h = ComplexMatrix::Zero(system.total_dim(), system.total_dim());
  for (int s = 0; s < system.subsystem_count(); ++s) {
    h += embed(system.subsystems()[s].hamiltonian.entries(), dims, s);
  }
  for (const auto& v : system.couplings()) h += v.entries();
  return HermitianOperator(std::move(h));
}

double interaction_energy(const DensityMatrix& state, const CompositeSystem& system) {
  if (state.dim() != system.total_dim()) {
    throw std::invalid_argument("state dimension does not match the composite system");
  }
  double e = 0.0;
  for (const auto& v : system.couplings()) e += expectation(v, state);
  return e;
}

Trajectory propagate(const CompositeSystem& system, const DensityMatrix& initial_state,
                     const std::vector<double>& times) {
  if (initial_state.dim() != system.total_dim()) {
    throw std::invalid_argument("initial state dimension does not match the composite system");
  }
  if (times.empty() || times.front() != 0.0) {
    throw std::invalid_argument("time grid must start at 0");
  }
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) {
      throw std::invalid_argument("time grid must be strictly increasing");
    }
  }

  Trajectory traj{system, build_total_hamiltonian(system), initial_state, times, {}};
  const std::vector<int> dims = system.dims();
  const int n_sub = system.subsystem_count();

  // Per-subsystem reference data at t = 0.
  std::vector<double> beta0(n_sub), eth0(n_sub), e0(n_sub), zeta0(n_sub);

  traj.snapshots.reserve(times.size());
  for (std::size_t ti = 0; ti < times.size(); ++ti) {
    const double t = times[ti];
    const DensityMatrix state = (ti == 0) ? initial_state
                                          : evolve(initial_state, traj.total_hamiltonian, t);

    ThermoSnapshot snap;
    snap.time = t;
    snap.total_entropy = von_neumann_entropy(state);
    snap.interaction_energy = interaction_energy(state, system);

    double entropy_sum = 0.0;
    double drive_sum = 0.0;
    double clausius_sum = 0.0;
    for (int s = 0; s < n_sub; ++s) {
      const Subsystem& sub = system.subsystems()[s];
      const DensityMatrix reduced = partial_trace(state, dims, {s});

      SubsystemRecord rec;
      rec.label = sub.label;
      rec.energy = expectation(sub.hamiltonian, reduced);
      rec.entropy = von_neumann_entropy(reduced);
      const EffectiveTemperature eff =
          solve_effective_temperature(sub.hamiltonian, rec.entropy);
      rec.beta = eff.beta;
      rec.temperature = eff.temperature;
      rec.zeta = eff.zeta;
      rec.case_tag = eff.case_tag;
      rec.thermal_energy = thermal_energy(sub.hamiltonian, eff.beta);

      if (ti == 0) {
        beta0[s] = rec.beta;
        eth0[s] = rec.thermal_energy;
        e0[s] = rec.energy;
        zeta0[s] = rec.zeta;
      }
      rec.heat = -(rec.thermal_energy - eth0[s]);
      rec.work = -((rec.energy - rec.thermal_energy) - (e0[s] - eth0[s]));
      rec.drive_relative_entropy =
          gibbs_relative_entropy(sub.hamiltonian, rec.beta, beta0[s]);

      entropy_sum += rec.entropy;
      drive_sum += rec.drive_relative_entropy;
      clausius_sum += clausius_term(beta0[s], rec.thermal_energy - eth0[s]) -
                      (rec.zeta - zeta0[s]);
      snap.subsystems.push_back(std::move(rec));
    }

    snap.correlation = entropy_sum - snap.total_entropy;
    snap.sigma = snap.correlation + drive_sum;
    snap.identity_residual = std::abs(clausius_sum - snap.sigma);  // nan if inf - inf
    traj.snapshots.push_back(std::move(snap));
  }
  return traj;
}

DensityMatrix state_at(const Trajectory& trajectory, double time) {
  return evolve(trajectory.initial_state, trajectory.total_hamiltonian, time);
}

}  // namespace autotherm
