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

#ifndef AUTOTHERM_TESTS_TEST_SUPPORT_HPP
#define AUTOTHERM_TESTS_TEST_SUPPORT_HPP

#include <cmath>
#include <random>

#include "autotherm/qmat.hpp"

namespace testsupport {

using autotherm::Complex;
using autotherm::ComplexMatrix;
using autotherm::ComplexVector;
using autotherm::DensityMatrix;
using autotherm::HermitianOperator;

inline double urand(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double urand(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * urand(rng);
}

inline double nrand(std::mt19937_64& rng) {
  double u1 = urand(rng);
  while (u1 <= 0.0) u1 = urand(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * urand(rng));
}

inline ComplexMatrix random_complex(std::mt19937_64& rng, int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = Complex(nrand(rng), nrand(rng));
  }
  return m;
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, int n) {
  const ComplexMatrix m = random_complex(rng, n);
  return 0.5 * (m + m.adjoint().eval());
}

inline DensityMatrix random_state(std::mt19937_64& rng, int n) {
  const ComplexMatrix g = random_complex(rng, n);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(std::move(rho));
}

inline ComplexMatrix random_unitary(std::mt19937_64& rng, int n) {
  Eigen::HouseholderQR<ComplexMatrix> qr(random_complex(rng, n));
  ComplexMatrix q = qr.householderQ();
  // Fix phases so the factorization is unique-ish; any unitary works here.
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    const Complex d = r(i, i);
    if (std::abs(d) > 0) q.col(i) *= d / std::abs(d);
  }
  return q;
}

inline ComplexVector bell_pair() {
  ComplexVector v(4);
  v << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(1, 0);
  return v / std::sqrt(2.0);
}

}  // namespace testsupport

#endif  // AUTOTHERM_TESTS_TEST_SUPPORT_HPP
