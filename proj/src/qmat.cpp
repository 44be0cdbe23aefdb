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

#include "autotherm/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace autotherm {

namespace {

constexpr double kHermiticityWarnTol = 1e-8;
constexpr double kStateTraceTol = 1e-12;
constexpr double kStateHermiticityTol = 1e-12;
constexpr double kStateEigenvalueFloor = -1e-12;
constexpr double kEntropyEigenvalueFloor = -1e-9;
constexpr double kSupportRankTol = 1e-10;

std::function<void(const std::string&)>& warning_handler() {
  static std::function<void(const std::string&)> handler =
      [](const std::string& message) { std::cerr << "warning: " << message << "\n"; };
  return handler;
}

double max_abs(const ComplexMatrix& m) {
  return m.cwiseAbs().maxCoeff();
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    std::ostringstream oss;
    oss << what << " must be a nonempty square matrix, got " << m.rows() << "x" << m.cols();
    throw std::invalid_argument(oss.str());
  }
}

// Mixed-radix decode of a linear index over the listed sites (first site is
// the most significant digit, matching the kron convention).
void decode_index(long value, const std::vector<int>& dims, const std::vector<int>& sites,
                  std::vector<int>& digits) {
  for (int i = static_cast<int>(sites.size()) - 1; i >= 0; --i) {
    const int d = dims[sites[i]];
    digits[i] = static_cast<int>(value % d);
    value /= d;
  }
}

long compose_index(const std::vector<long>& strides, const std::vector<int>& sites,
                   const std::vector<int>& digits) {
  long idx = 0;
  for (std::size_t i = 0; i < sites.size(); ++i) {
    idx += digits[i] * strides[sites[i]];
  }
  return idx;
}

}  // namespace

void set_warning_handler(std::function<void(const std::string&)> handler) {
  warning_handler() = std::move(handler);
}

void emit_warning(const std::string& message) {
  if (warning_handler()) warning_handler()(message);
}

HermitianOperator::HermitianOperator(ComplexMatrix entries) {
  require_square(entries, "HermitianOperator");
  const double asymmetry = max_abs(entries - entries.adjoint().eval());
  if (asymmetry > kHermiticityWarnTol) {
    std::ostringstream oss;
    oss << "HermitianOperator input has asymmetry " << asymmetry
        << " (> 1e-8); symmetrizing";
    emit_warning(oss.str());
  }
  entries_ = 0.5 * (entries + entries.adjoint().eval());

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(entries_);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition failed for HermitianOperator");
  }
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();

  const ComplexMatrix rebuilt =
      eigenvectors_ * eigenvalues_.asDiagonal() * eigenvectors_.adjoint();
  const double scale = std::max(1.0, max_abs(entries_));
  if (max_abs(rebuilt - entries_) > 1e-10 * scale) {
    throw std::runtime_error("spectral decomposition does not reconstruct the operator");
  }
}

HermitianOperator HermitianOperator::diagonal(const std::vector<double>& values) {
  ComplexMatrix m = ComplexMatrix::Zero(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return HermitianOperator(std::move(m));
}

double HermitianOperator::degeneracy_tolerance(double tol) const {
  if (tol >= 0.0) return tol;
  return 1e-9 * std::max(1.0, spectral_range());
}

int HermitianOperator::ground_degeneracy(double tol) const {
  const double t = degeneracy_tolerance(tol);
  const double e0 = ground_energy();
  int count = 0;
  for (int i = 0; i < dim(); ++i) {
    if (eigenvalues_(i) <= e0 + t) ++count;
  }
  return count;
}

SpectralData HermitianOperator::spectral_data(double tol) const {
  return SpectralData{eigenvalues_, ground_energy(), ground_degeneracy(tol)};
}

bool HermitianOperator::is_flat(double tol) const {
  return spectral_range() <= degeneracy_tolerance(tol);
}

DensityMatrix::DensityMatrix(ComplexMatrix entries) {
  require_square(entries, "DensityMatrix");
  const double trace_err = std::abs(entries.trace() - Complex(1.0, 0.0));
  if (trace_err > kStateTraceTol) {
    std::ostringstream oss;
    oss << "DensityMatrix trace deviates from 1 by " << trace_err;
    throw std::invalid_argument(oss.str());
  }
  const double asymmetry = max_abs(entries - entries.adjoint().eval());
  if (asymmetry > kStateHermiticityTol) {
    std::ostringstream oss;
    oss << "DensityMatrix is not Hermitian (asymmetry " << asymmetry << ")";
    throw std::invalid_argument(oss.str());
  }
  entries_ = 0.5 * (entries + entries.adjoint().eval());

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(entries_);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition failed for DensityMatrix");
  }
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
  if (eigenvalues_(0) < kStateEigenvalueFloor) {
    std::ostringstream oss;
    oss << "DensityMatrix has negative eigenvalue " << eigenvalues_(0);
    throw std::invalid_argument(oss.str());
  }
}

DensityMatrix DensityMatrix::pure(const ComplexVector& amplitudes) {
  const double norm = amplitudes.norm();
  if (norm <= 0.0) {
    throw std::invalid_argument("pure state amplitudes must not be all zero");
  }
  const ComplexVector psi = amplitudes / norm;
  return DensityMatrix(psi * psi.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  if (dim <= 0) throw std::invalid_argument("dimension must be positive");
  return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

namespace {

void check_dimension_cap(long total, int cap) {
  if (total > cap) {
    std::ostringstream oss;
    oss << "tensor product dimension " << total << " exceeds cap " << cap;
    throw std::length_error(oss.str());
  }
}

template <typename T>
ComplexMatrix kron_all(const std::vector<T>& parts, int cap) {
  if (parts.empty()) throw std::invalid_argument("tensor product of an empty list");
  long total = 1;
  for (const auto& p : parts) {
    total *= p.dim();
    check_dimension_cap(total, cap);
  }
  ComplexMatrix out = parts.front().entries();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    out = kron(out, parts[i].entries());
  }
  return out;
}

}  // namespace

HermitianOperator tensor_product(const std::vector<HermitianOperator>& ops, int dimension_cap) {
  return HermitianOperator(kron_all(ops, dimension_cap));
}

DensityMatrix tensor_product(const std::vector<DensityMatrix>& states, int dimension_cap) {
  return DensityMatrix(kron_all(states, dimension_cap));
}

DensityMatrix partial_trace(const DensityMatrix& state, const std::vector<int>& dims,
                            const std::vector<int>& keep) {
  long total = 1;
  for (int d : dims) {
    if (d <= 0) throw std::invalid_argument("subsystem dimensions must be positive");
    total *= d;
  }
  if (total != state.dim()) {
    std::ostringstream oss;
    oss << "subsystem dimensions multiply to " << total << " but the state has dimension "
        << state.dim();
    throw std::invalid_argument(oss.str());
  }
  if (keep.empty()) throw std::invalid_argument("keep set must be nonempty");

  std::vector<int> kept = keep;
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    throw std::invalid_argument("keep set contains duplicate subsystem indices");
  }
  if (kept.front() < 0 || kept.back() >= static_cast<int>(dims.size())) {
    throw std::invalid_argument("keep set references an unknown subsystem index");
  }

  std::vector<int> traced;
  for (int i = 0; i < static_cast<int>(dims.size()); ++i) {
    if (!std::binary_search(kept.begin(), kept.end(), i)) traced.push_back(i);
  }
  if (traced.empty()) return state;

  std::vector<long> strides(dims.size());
  long s = 1;
  for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
    strides[i] = s;
    s *= dims[i];
  }

  long dim_keep = 1;
  for (int i : kept) dim_keep *= dims[i];
  long dim_traced = 1;
  for (int i : traced) dim_traced *= dims[i];

  const ComplexMatrix& rho = state.entries();
  ComplexMatrix out = ComplexMatrix::Zero(dim_keep, dim_keep);
  std::vector<int> row_digits(kept.size()), col_digits(kept.size()), tr_digits(traced.size());
  for (long r = 0; r < dim_keep; ++r) {
    decode_index(r, dims, kept, row_digits);
    const long row_base = compose_index(strides, kept, row_digits);
    for (long c = 0; c < dim_keep; ++c) {
      decode_index(c, dims, kept, col_digits);
      const long col_base = compose_index(strides, kept, col_digits);
      Complex acc(0.0, 0.0);
      for (long m = 0; m < dim_traced; ++m) {
        decode_index(m, dims, traced, tr_digits);
        const long offset = compose_index(strides, traced, tr_digits);
        acc += rho(row_base + offset, col_base + offset);
      }
      out(r, c) = acc;
    }
  }
  return DensityMatrix(std::move(out));
}

double von_neumann_entropy(const DensityMatrix& state) {
  double s = 0.0;
  for (int i = 0; i < state.dim(); ++i) {
    double p = state.eigenvalues()(i);
    if (p < kEntropyEigenvalueFloor) {
      std::ostringstream oss;
      oss << "state eigenvalue " << p << " below -1e-9; not a valid density matrix";
      throw std::invalid_argument(oss.str());
    }
    if (p <= 0.0) continue;
    s -= p * std::log(p);
  }
  return std::max(0.0, s);
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw std::invalid_argument("relative entropy requires equal dimensions");
  }
  const int n = rho.dim();

  double tr_rho_ln_rho = 0.0;
  for (int i = 0; i < n; ++i) {
    const double p = rho.eigenvalues()(i);
    if (p > 0.0) tr_rho_ln_rho += p * std::log(p);
  }

  // Tr rho ln sigma = sum_k ln(mu_k) <v_k| rho |v_k>; eigenvalues of sigma at
  // or below the rank cut count as null directions.
  double tr_rho_ln_sigma = 0.0;
  double null_weight = 0.0;
  for (int k = 0; k < n; ++k) {
    const double mu = sigma.eigenvalues()(k);
    const ComplexVector v = sigma.eigenvectors().col(k);
    const double overlap = std::real(v.dot(rho.entries() * v));
    if (mu <= kSupportRankTol) {
      null_weight += std::max(0.0, overlap);
    } else {
      tr_rho_ln_sigma += overlap * std::log(mu);
    }
  }
  if (null_weight > kSupportRankTol) {
    return std::numeric_limits<double>::infinity();
  }

  const double d = tr_rho_ln_rho - tr_rho_ln_sigma;
  if (d < 0.0 && d > -1e-12) return 0.0;
  return d;
}

double mutual_information(const DensityMatrix& state, const std::vector<int>& dims,
                          const std::vector<int>& part_a) {
  if (part_a.empty() || part_a.size() >= dims.size()) {
    throw std::invalid_argument("bipartition must split the subsystems into two nonempty parts");
  }
  std::vector<int> sorted_a = part_a;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::vector<int> part_b;
  for (int i = 0; i < static_cast<int>(dims.size()); ++i) {
    if (!std::binary_search(sorted_a.begin(), sorted_a.end(), i)) part_b.push_back(i);
  }
  const double s_a = von_neumann_entropy(partial_trace(state, dims, sorted_a));
  const double s_b = von_neumann_entropy(partial_trace(state, dims, part_b));
  const double s_ab = von_neumann_entropy(state);
  return s_a + s_b - s_ab;
}

DensityMatrix evolve(const DensityMatrix& state, const HermitianOperator& hamiltonian,
                     double time) {
  if (state.dim() != hamiltonian.dim()) {
    throw std::invalid_argument("evolve requires matching state and Hamiltonian dimensions");
  }
  if (!std::isfinite(time)) throw std::invalid_argument("evolution time must be finite");
  if (time == 0.0) return state;

  ComplexVector phases(hamiltonian.dim());
  for (int i = 0; i < hamiltonian.dim(); ++i) {
    phases(i) = std::exp(Complex(0.0, -hamiltonian.eigenvalues()(i) * time));
  }
  const ComplexMatrix& v = hamiltonian.eigenvectors();
  const ComplexMatrix u = v * phases.asDiagonal() * v.adjoint();
  return DensityMatrix(u * state.entries() * u.adjoint());
}

double expectation(const HermitianOperator& op, const DensityMatrix& state) {
  if (op.dim() != state.dim()) {
    throw std::invalid_argument("expectation requires matching dimensions");
  }
  return std::real((op.entries() * state.entries()).trace());
}

}  // namespace autotherm
