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

#ifndef AUTOTHERM_THERMO_HPP
#define AUTOTHERM_THERMO_HPP

#include <limits>

#include "autotherm/qmat.hpp"

namespace autotherm {

inline constexpr double kInfiniteBeta = std::numeric_limits<double>::infinity();

/// How the effective temperature of a state was determined.
///
/// EntropyMatched: a Gibbs state of the Hamiltonian reproduces the target
/// entropy exactly (unique beta; beta may be +inf when the target sits at
/// the ground-entropy floor).
/// GroundDegenerate: the target entropy lies below ln(d_g), so no Gibbs
/// state matches; beta = +inf minimizes the mismatch and the residual
/// entropy deficit is recorded in zeta.
/// FlatHamiltonian: every Gibbs state coincides (H proportional to the
/// identity); beta = 0 by convention.
enum class MatchCase { EntropyMatched, GroundDegenerate, FlatHamiltonian };

struct EffectiveTemperature {
  double beta = 0.0;         // inverse temperature, +inf allowed
  double temperature = 0.0;  // 1/beta; 0 at beta = +inf, +inf at beta = 0
  double zeta = 0.0;         // entropy deficit S[w(beta)] - S_target >= 0, nats
  MatchCase case_tag = MatchCase::EntropyMatched;
};

/// Gibbs state exp(-beta H)/Z with its scalar thermodynamic data.
/// Populations are evaluated with ground-shifted exponentials, so beta may
/// be anything in [0, +inf] without overflow; at beta = +inf the state is
/// the uniform mixture on the ground eigenspace.
struct GibbsState {
  HermitianOperator hamiltonian;
  double beta = 0.0;
  DensityMatrix state;
  double log_partition = 0.0;  // ln Z (unshifted)
  double thermal_energy = 0.0;
  double thermal_entropy = 0.0;  // nats
};

struct SolverOptions {
  double entropy_tolerance = 1e-12;
  int max_iterations = 200;
  double degeneracy_tolerance = -1.0;  // <0: operator default
  double beta_cap_scale = 1e9;         // cap = scale / spectral range
};

GibbsState gibbs_state(const HermitianOperator& hamiltonian, double beta);

/// Entropy of the Gibbs state at beta, in nats. Strictly decreasing in beta
/// for non-flat Hamiltonians, from ln(dim) at beta = 0 down to ln(d_g).
double thermal_entropy_curve(const HermitianOperator& hamiltonian, double beta);

/// Tr{H w[beta]}; nonincreasing in beta; ground energy at beta = +inf.
double thermal_energy(const HermitianOperator& hamiltonian, double beta);

/// Inverse temperature whose Gibbs state minimizes |S[w(beta)] - S_target|.
/// See MatchCase for the three outcomes.
EffectiveTemperature solve_effective_temperature(const HermitianOperator& hamiltonian,
                                                 double target_entropy,
                                                 const SolverOptions& options = {});

/// D(w[beta_rho] || w[beta_sigma]) for Gibbs states of the same Hamiltonian,
/// evaluated in closed form: beta_sigma * (E_rho - E_sigma) - (S_rho - S_sigma).
/// Stable for arbitrarily large beta_sigma; +inf when beta_sigma = +inf and
/// beta_rho is finite.
double gibbs_relative_entropy(const HermitianOperator& hamiltonian, double beta_rho,
                              double beta_sigma);

}  // namespace autotherm

#endif  // AUTOTHERM_THERMO_HPP
