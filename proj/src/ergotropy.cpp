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

#include "autotherm/ergotropy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace autotherm {

ControlFamily::ControlFamily(std::string name, std::vector<HermitianOperator> generators,
                             std::vector<std::pair<double, double>> bounds)
    : name_(std::move(name)), generators_(std::move(generators)), bounds_(std::move(bounds)) {
  if (generators_.empty()) {
    throw std::invalid_argument("control family needs at least one generator");
  }
  if (bounds_.size() != generators_.size()) {
    throw std::invalid_argument("control family needs one parameter bound per generator");
  }
  const int d = generators_.front().dim();
  for (const auto& g : generators_) {
    if (g.dim() != d) {
      throw std::invalid_argument("control family generators must share one dimension");
    }
  }
  for (const auto& [lo, hi] : bounds_) {
    if (!(lo <= 0.0 && 0.0 <= hi)) {
      throw std::invalid_argument("every parameter box must contain 0 (identity control)");
    }
  }
}

ComplexMatrix ControlFamily::unitary(const std::vector<double>& alpha) const {
  if (alpha.size() != generators_.size()) {
    throw std::invalid_argument("alpha size does not match the generator count");
  }
  ComplexMatrix g = ComplexMatrix::Zero(dim(), dim());
  for (std::size_t j = 0; j < generators_.size(); ++j) {
    g += alpha[j] * generators_[j].entries();
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(g);
  ComplexVector phases(dim());
  for (int i = 0; i < dim(); ++i) {
    phases(i) = std::exp(Complex(0.0, -solver.eigenvalues()(i)));
  }
  return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

DensityMatrix passive_state(const DensityMatrix& rho, const HermitianOperator& hamiltonian) {
  if (rho.dim() != hamiltonian.dim()) {
    throw std::invalid_argument("passive_state requires matching dimensions");
  }
  const int n = rho.dim();
  // rho eigenvalues ascending -> reversed gives descending; pair with the
  // Hamiltonian eigenvectors, which are already ascending in energy.
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    const double p = std::max(0.0, rho.eigenvalues()(n - 1 - k));
    const ComplexVector v = hamiltonian.eigenvectors().col(k);
    out += p * (v * v.adjoint());
  }
  return DensityMatrix(std::move(out));
}

double ergotropy(const DensityMatrix& rho, const HermitianOperator& hamiltonian) {
  const DensityMatrix passive = passive_state(rho, hamiltonian);
  const double w = expectation(hamiltonian, rho) - expectation(hamiltonian, passive);
  return std::max(0.0, w);
}

namespace {

double extraction(const DensityMatrix& rho, const HermitianOperator& h,
                  const ControlFamily& family, const std::vector<double>& alpha) {
  const ComplexMatrix u = family.unitary(alpha);
  const ComplexMatrix rotated = u * rho.entries() * u.adjoint();
  return std::real((h.entries() * (rho.entries() - rotated)).trace());
}

}  // namespace

RestrictedErgotropyResult restricted_ergotropy(const DensityMatrix& rho,
                                               const HermitianOperator& hamiltonian,
                                               const ControlFamily& family,
                                               const SearchConfig& config) {
  if (family.dim() != rho.dim() || family.dim() != hamiltonian.dim()) {
    throw std::invalid_argument("control family dimension does not match state/Hamiltonian");
  }
  const int k = family.parameter_count();
  if (k > 8) {
    std::ostringstream oss;
    oss << "restricted ergotropy supports at most 8 parameters (grid search), got " << k;
    throw std::invalid_argument(oss.str());
  }
  if (config.grid_points < 1) throw std::invalid_argument("grid_points must be >= 1");

  // Coarse grid over the box, always including alpha = 0.
  std::vector<double> best_alpha(k, 0.0);
  double best = extraction(rho, hamiltonian, family, best_alpha);

  std::vector<double> alpha(k, 0.0);
  std::vector<int> idx(k, 0);
  long total = 1;
  for (int j = 0; j < k; ++j) total *= config.grid_points;
  for (long cell = 0; cell < total; ++cell) {
    long rem = cell;
    for (int j = 0; j < k; ++j) {
      idx[j] = static_cast<int>(rem % config.grid_points);
      rem /= config.grid_points;
      const auto& [lo, hi] = family.bounds()[j];
      alpha[j] = (config.grid_points == 1)
                     ? lo
                     : lo + (hi - lo) * idx[j] / (config.grid_points - 1);
    }
    const double w = extraction(rho, hamiltonian, family, alpha);
    if (w > best) {
      best = w;
      best_alpha = alpha;
    }
  }

  // Coordinate search around the best grid point.
  std::vector<double> step(k);
  for (int j = 0; j < k; ++j) {
    const auto& [lo, hi] = family.bounds()[j];
    step[j] = (config.grid_points > 1) ? (hi - lo) / (config.grid_points - 1) : (hi - lo);
    if (step[j] <= 0.0) step[j] = 1.0;
  }
  for (int it = 0; it < config.refine_iterations; ++it) {
    bool improved = false;
    for (int j = 0; j < k; ++j) {
      const auto& [lo, hi] = family.bounds()[j];
      for (const double sign : {+1.0, -1.0}) {
        std::vector<double> candidate = best_alpha;
        candidate[j] = std::clamp(candidate[j] + sign * step[j], lo, hi);
        const double w = extraction(rho, hamiltonian, family, candidate);
        if (w > best) {
          best = w;
          best_alpha = std::move(candidate);
          improved = true;
        }
      }
    }
    if (!improved) {
      for (double& s : step) s *= config.shrink;
    }
  }
  return RestrictedErgotropyResult{std::max(0.0, best), best_alpha};
}

std::vector<ErgotropySeriesPoint> restricted_ergotropy_series(const Trajectory& trajectory,
                                                              const ControlFamily& family,
                                                              int stride,
                                                              const SearchConfig& config) {
  if (stride < 1) throw std::invalid_argument("stride must be >= 1");
  std::vector<ErgotropySeriesPoint> series;
  for (std::size_t i = 0; i < trajectory.times.size(); i += stride) {
    const double t = trajectory.times[i];
    const DensityMatrix state = state_at(trajectory, t);
    ErgotropySeriesPoint pt;
    pt.time = t;
    pt.unrestricted = ergotropy(state, trajectory.total_hamiltonian);
    pt.restricted = restricted_ergotropy(state, trajectory.total_hamiltonian, family, config).value;
    series.push_back(pt);
  }
  return series;
}

}  // namespace autotherm
