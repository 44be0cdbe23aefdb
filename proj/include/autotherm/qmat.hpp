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

#ifndef AUTOTHERM_QMAT_HPP
#define AUTOTHERM_QMAT_HPP

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace autotherm {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Hard ceiling on composite Hilbert-space dimensions (dense storage).
inline constexpr int kDefaultDimensionCap = 256;

/// Sink for non-fatal numerical warnings (default writes to stderr).
void set_warning_handler(std::function<void(const std::string&)> handler);
void emit_warning(const std::string& message);

struct SpectralData {
  RealVector eigenvalues;   // ascending
  double ground_energy = 0.0;
  int ground_degeneracy = 1;  // eigenvalues within tolerance of the minimum
};

/// Finite-dimensional Hermitian matrix with its spectral decomposition
/// cached at construction. Units: energy with hbar = k_B = 1.
///
/// Construction symmetrizes the input to (M + M^dag)/2; an asymmetry
/// larger than 1e-8 triggers a warning instead of a failure.
class HermitianOperator {
 public:
  explicit HermitianOperator(ComplexMatrix entries);

  static HermitianOperator diagonal(const std::vector<double>& values);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const ComplexMatrix& entries() const { return entries_; }
  const RealVector& eigenvalues() const { return eigenvalues_; }
  const ComplexMatrix& eigenvectors() const { return eigenvectors_; }

  double ground_energy() const { return eigenvalues_(0); }
  double max_energy() const { return eigenvalues_(dim() - 1); }
  double spectral_range() const { return max_energy() - ground_energy(); }

  /// Default tolerance: 1e-9 * max(1, spectral range). Pass tol >= 0 to override.
  int ground_degeneracy(double tol = -1.0) const;
  SpectralData spectral_data(double tol = -1.0) const;
  double degeneracy_tolerance(double tol = -1.0) const;

  /// True when every eigenvalue lies within the degeneracy tolerance of the
  /// minimum, i.e. the operator is proportional to the identity.
  bool is_flat(double tol = -1.0) const;

 private:
  ComplexMatrix entries_;
  RealVector eigenvalues_;
  ComplexMatrix eigenvectors_;
};

/// Unit-trace positive-semidefinite operator. Eigendecomposition cached.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix entries);

  static DensityMatrix pure(const ComplexVector& amplitudes);
  static DensityMatrix maximally_mixed(int dim);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const ComplexMatrix& entries() const { return entries_; }
  const RealVector& eigenvalues() const { return eigenvalues_; }
  const ComplexMatrix& eigenvectors() const { return eigenvectors_; }

 private:
  ComplexMatrix entries_;
  RealVector eigenvalues_;
  ComplexMatrix eigenvectors_;
};

/// Kronecker product, row-major subsystem order:
/// (A (x) B)(i*db + k, j*db + l) = A(i, j) * B(k, l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

HermitianOperator tensor_product(const std::vector<HermitianOperator>& ops,
                                 int dimension_cap = kDefaultDimensionCap);
DensityMatrix tensor_product(const std::vector<DensityMatrix>& states,
                             int dimension_cap = kDefaultDimensionCap);

/// Reduced state on the kept subsystems (indices into dims, ascending order).
DensityMatrix partial_trace(const DensityMatrix& state,
                            const std::vector<int>& dims,
                            const std::vector<int>& keep);

/// -sum(p ln p) in nats, with 0 ln 0 = 0. Eigenvalues in [-1e-9, 0) are
/// clipped; below that the state is rejected as invalid.
double von_neumann_entropy(const DensityMatrix& state);

/// Tr rho (ln rho - ln sigma) >= 0, in nats. Returns +infinity when the
/// support of rho is not contained in the support of sigma (rank cut 1e-10).
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// S_A + S_B - S_AB for the bipartition (part_a, complement), in nats.
double mutual_information(const DensityMatrix& state,
                          const std::vector<int>& dims,
                          const std::vector<int>& part_a);

/// U rho U^dag with U = exp(-i H t) built from the cached spectrum of H.
DensityMatrix evolve(const DensityMatrix& state, const HermitianOperator& hamiltonian,
                     double time);

/// Tr{op rho}, guaranteed real for Hermitian op.
double expectation(const HermitianOperator& op, const DensityMatrix& state);

}  // namespace autotherm

#endif  // AUTOTHERM_QMAT_HPP
