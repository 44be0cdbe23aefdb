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

#ifndef AUTOTHERM_ERGOTROPY_HPP
#define AUTOTHERM_ERGOTROPY_HPP

#include <string>
#include <vector>

#include "autotherm/dynamics.hpp"
#include "autotherm/qmat.hpp"

namespace autotherm {

/// Parameterized family of control unitaries U[alpha] = exp(-i sum_j alpha_j G_j)
/// with a per-coordinate parameter box. The box must contain alpha = 0, so the
/// family always includes doing nothing.
class ControlFamily {
 public:
  ControlFamily(std::string name, std::vector<HermitianOperator> generators,
                std::vector<std::pair<double, double>> bounds);

  const std::string& name() const { return name_; }
  int parameter_count() const { return static_cast<int>(generators_.size()); }
  int dim() const { return generators_.front().dim(); }
  const std::vector<HermitianOperator>& generators() const { return generators_; }
  const std::vector<std::pair<double, double>>& bounds() const { return bounds_; }

  ComplexMatrix unitary(const std::vector<double>& alpha) const;

 private:
  std::string name_;
  std::vector<HermitianOperator> generators_;
  std::vector<std::pair<double, double>> bounds_;
};

/// State with the populations of rho rearranged to be nonincreasing in
/// energy: eigenvalues of rho sorted descending, paired with eigenvectors of
/// H by ascending energy. Commutes with H; ties broken by eigensolver order.
DensityMatrix passive_state(const DensityMatrix& rho, const HermitianOperator& hamiltonian);

/// Tr{rho H} - Tr{passive(rho, H) H} >= 0; zero exactly when rho is passive.
double ergotropy(const DensityMatrix& rho, const HermitianOperator& hamiltonian);

struct SearchConfig {
  int grid_points = 9;        // coarse grid per parameter axis
  int refine_iterations = 60;  // coordinate-search sweeps
  double shrink = 0.5;
};

struct RestrictedErgotropyResult {
  double value = 0.0;
  std::vector<double> alpha;
};

/// Best energy extraction over the family's parameter box: coarse grid
/// followed by a coordinate search. A heuristic lower bound on the true
/// restricted optimum; at most 8 parameters (the grid is combinatorial).
RestrictedErgotropyResult restricted_ergotropy(const DensityMatrix& rho,
                                               const HermitianOperator& hamiltonian,
                                               const ControlFamily& family,
                                               const SearchConfig& config = {});

struct ErgotropySeriesPoint {
  double time = 0.0;
  double restricted = 0.0;
  double unrestricted = 0.0;
};

/// Restricted vs unrestricted ergotropy of the evolved global state against
/// the total Hamiltonian, sampled every `stride` trajectory points.
std::vector<ErgotropySeriesPoint> restricted_ergotropy_series(const Trajectory& trajectory,
                                                              const ControlFamily& family,
                                                              int stride,
                                                              const SearchConfig& config = {});

}  // namespace autotherm

#endif  // AUTOTHERM_ERGOTROPY_HPP
