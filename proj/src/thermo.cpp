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

#include "autotherm/thermo.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace autotherm {

namespace {

struct ThermalPoint {
  double energy;
  double entropy;
  double log_partition_shifted;  // ln sum_k exp(-beta (E_k - E_g)), >= 0
};

// Scalar thermal data from eigenvalues alone. All exponents are <= 0, so the
// evaluation cannot overflow for any beta in [0, +inf].
ThermalPoint thermal_point(const RealVector& eigs, double beta, double deg_tol) {
  const int n = static_cast<int>(eigs.size());
  const double e0 = eigs(0);
  if (std::isinf(beta)) {
    double esum = 0.0;
    int dg = 0;
    for (int k = 0; k < n; ++k) {
      if (eigs(k) <= e0 + deg_tol) {
        esum += eigs(k);
        ++dg;
      }
    }
    return {esum / dg, std::log(static_cast<double>(dg)), std::log(static_cast<double>(dg))};
  }
  double z = 0.0;
  double shifted_mean = 0.0;
  for (int k = 0; k < n; ++k) {
    const double w = std::exp(-beta * (eigs(k) - e0));
    z += w;
    shifted_mean += (eigs(k) - e0) * w;
  }
  shifted_mean /= z;
  const double entropy = beta * shifted_mean + std::log(z);
  return {e0 + shifted_mean, entropy, std::log(z)};
}

void require_nonnegative_beta(double beta) {
  if (std::isnan(beta) || beta < 0.0) {
    std::ostringstream oss;
    oss << "inverse temperature must be nonnegative, got " << beta;
    throw std::domain_error(oss.str());
  }
}

}  // namespace

GibbsState gibbs_state(const HermitianOperator& hamiltonian, double beta) {
  require_nonnegative_beta(beta);
  const int n = hamiltonian.dim();
  const RealVector& eigs = hamiltonian.eigenvalues();
  const double deg_tol = hamiltonian.degeneracy_tolerance();
  const double e0 = eigs(0);

  RealVector populations(n);
  if (std::isinf(beta)) {
    const int dg = hamiltonian.ground_degeneracy();
    for (int k = 0; k < n; ++k) {
      populations(k) = (eigs(k) <= e0 + deg_tol) ? 1.0 / dg : 0.0;
    }
  } else {
    double z = 0.0;
    for (int k = 0; k < n; ++k) {
      populations(k) = std::exp(-beta * (eigs(k) - e0));
      z += populations(k);
    }
    populations /= z;
  }

  const ComplexMatrix& v = hamiltonian.eigenvectors();
  DensityMatrix state(v * populations.asDiagonal() * v.adjoint());

  const ThermalPoint pt = thermal_point(eigs, beta, deg_tol);
  double log_z;
  if (std::isinf(beta)) {
    // ln Z -> ln d_g - beta E_g; keep the IEEE limit without producing nan.
    log_z = (e0 == 0.0) ? pt.log_partition_shifted
                        : (e0 > 0.0 ? -kInfiniteBeta : kInfiniteBeta);
  } else {
    log_z = pt.log_partition_shifted - beta * e0;
  }
  return GibbsState{hamiltonian, beta, std::move(state), log_z, pt.energy, pt.entropy};
}

double thermal_entropy_curve(const HermitianOperator& hamiltonian, double beta) {
  require_nonnegative_beta(beta);
  return thermal_point(hamiltonian.eigenvalues(), beta, hamiltonian.degeneracy_tolerance())
      .entropy;
}

double thermal_energy(const HermitianOperator& hamiltonian, double beta) {
  require_nonnegative_beta(beta);
  return thermal_point(hamiltonian.eigenvalues(), beta, hamiltonian.degeneracy_tolerance())
      .energy;
}

EffectiveTemperature solve_effective_temperature(const HermitianOperator& hamiltonian,
                                                 double target_entropy,
                                                 const SolverOptions& options) {
  const int n = hamiltonian.dim();
  const double ln_dim = std::log(static_cast<double>(n));
  if (std::isnan(target_entropy) || target_entropy > ln_dim + 1e-9) {
    std::ostringstream oss;
    oss << "target entropy " << target_entropy << " exceeds ln(dim) = " << ln_dim;
    throw std::domain_error(oss.str());
  }
  if (target_entropy < -1e-12) {
    std::ostringstream oss;
    oss << "target entropy must be nonnegative, got " << target_entropy;
    throw std::domain_error(oss.str());
  }
  const double target = std::max(0.0, target_entropy);

  const double deg_tol = hamiltonian.degeneracy_tolerance(options.degeneracy_tolerance);
  if (hamiltonian.spectral_range() <= deg_tol) {
    // Every Gibbs state is I/dim; beta = 0 by convention.
    return EffectiveTemperature{0.0, kInfiniteBeta, ln_dim - target,
                                MatchCase::FlatHamiltonian};
  }

  const int dg = hamiltonian.ground_degeneracy(options.degeneracy_tolerance);
  const double ln_dg = std::log(static_cast<double>(dg));
  if (target < ln_dg) {
    return EffectiveTemperature{kInfiniteBeta, 0.0, ln_dg - target,
                                MatchCase::GroundDegenerate};
  }

  const RealVector& eigs = hamiltonian.eigenvalues();
  auto entropy_at = [&](double beta) { return thermal_point(eigs, beta, deg_tol).entropy; };

  if (target >= ln_dim - 1e-13) {
    return EffectiveTemperature{0.0, kInfiniteBeta, 0.0, MatchCase::EntropyMatched};
  }

  // Bracket by doubling, capped; past the cap the Gibbs state is the
  // ground-space mixture to machine precision and T = 0 is the answer.
  const double beta_cap = options.beta_cap_scale / hamiltonian.spectral_range();
  double lo = 0.0;
  double hi = 1.0;
  while (entropy_at(hi) >= target) {
    lo = hi;
    hi *= 2.0;
    if (hi > beta_cap) {
      return EffectiveTemperature{kInfiniteBeta, 0.0, 0.0, MatchCase::EntropyMatched};
    }
  }

  // Bisect to bracket exhaustion (the entropy curve flattens exponentially at
  // large beta, so an entropy-only stop would leave beta badly resolved).
  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < options.max_iterations; ++it) {
    mid = 0.5 * (lo + hi);
    const double s = entropy_at(mid);
    if (s == target) break;
    if (s > target) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * mid) break;
  }
  const double mismatch = std::abs(entropy_at(mid) - target);
  if (mismatch > options.entropy_tolerance) {
    std::ostringstream oss;
    oss << "effective-temperature bisection left entropy mismatch " << mismatch;
    throw std::runtime_error(oss.str());
  }
  const double temperature = (mid > 0.0) ? 1.0 / mid : kInfiniteBeta;
  return EffectiveTemperature{mid, temperature, 0.0, MatchCase::EntropyMatched};
}

double gibbs_relative_entropy(const HermitianOperator& hamiltonian, double beta_rho,
                              double beta_sigma) {
  require_nonnegative_beta(beta_rho);
  require_nonnegative_beta(beta_sigma);
  if (std::isinf(beta_sigma)) {
    return std::isinf(beta_rho) ? 0.0 : std::numeric_limits<double>::infinity();
  }
  const RealVector& eigs = hamiltonian.eigenvalues();
  const double deg_tol = hamiltonian.degeneracy_tolerance();
  const ThermalPoint rho = thermal_point(eigs, beta_rho, deg_tol);
  const ThermalPoint sigma = thermal_point(eigs, beta_sigma, deg_tol);
  const double d = beta_sigma * (rho.energy - sigma.energy) - (rho.entropy - sigma.entropy);
  return std::max(0.0, d);
}

}  // namespace autotherm
