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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "test_support.hpp"

using namespace autotherm;
using namespace testsupport;

namespace {

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("tensor product: identity and diagonal embeddings") {
  const HermitianOperator i2(ComplexMatrix::Identity(2, 2));
  const HermitianOperator prod = tensor_product({i2, i2});
  CHECK(max_abs_diff(prod.entries(), ComplexMatrix::Identity(4, 4)) == 0.0);

  const HermitianOperator n = HermitianOperator::diagonal({0.0, 1.0});
  const HermitianOperator embedded = tensor_product({n, i2});
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(2, 2) = 1.0;
  expected(3, 3) = 1.0;
  CHECK(max_abs_diff(embedded.entries(), expected) == 0.0);
}

TEST_CASE("tensor product matches the index formula entrywise") {
  std::mt19937_64 rng(11);
  const ComplexMatrix a = random_hermitian(rng, 2);
  const ComplexMatrix b = random_hermitian(rng, 3);
  const HermitianOperator prod =
      tensor_product({HermitianOperator(a), HermitianOperator(b)});
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 3; ++k) {
        for (int l = 0; l < 3; ++l) {
          CHECK(std::abs(prod.entries()(i * 3 + k, j * 3 + l) - a(i, j) * b(k, l)) ==
                doctest::Approx(0.0).epsilon(0).scale(1));
        }
      }
    }
  }
}

TEST_CASE("tensor product is associative") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const HermitianOperator a(random_hermitian(rng, 2));
    const HermitianOperator b(random_hermitian(rng, 3));
    const HermitianOperator c(random_hermitian(rng, 2));
    const HermitianOperator left = tensor_product({tensor_product({a, b}), c});
    const HermitianOperator right = tensor_product({a, tensor_product({b, c})});
    const HermitianOperator flat = tensor_product({a, b, c});
    CHECK(max_abs_diff(left.entries(), flat.entries()) < 1e-12);
    CHECK(max_abs_diff(right.entries(), flat.entries()) < 1e-12);
  }
}

TEST_CASE("tensor product refuses to exceed the dimension cap") {
  const HermitianOperator i16(ComplexMatrix::Identity(16, 16));
  CHECK_THROWS_WITH_AS(tensor_product({i16, i16, i16}, 256),
                       doctest::Contains("exceeds cap"), std::length_error);
}

TEST_CASE("partial trace recovers product factors") {
  std::mt19937_64 rng(21);
  const DensityMatrix rho_a = random_state(rng, 2);
  const DensityMatrix rho_b = random_state(rng, 3);
  const DensityMatrix joint = tensor_product({rho_a, rho_b});
  const DensityMatrix red_a = partial_trace(joint, {2, 3}, {0});
  const DensityMatrix red_b = partial_trace(joint, {2, 3}, {1});
  CHECK(max_abs_diff(red_a.entries(), rho_a.entries()) < 1e-13);
  CHECK(max_abs_diff(red_b.entries(), rho_b.entries()) < 1e-13);
}

TEST_CASE("partial trace of a Bell pair is maximally mixed") {
  const DensityMatrix bell = DensityMatrix::pure(bell_pair());
  for (int keep : {0, 1}) {
    const DensityMatrix red = partial_trace(bell, {2, 2}, {keep});
    CHECK(max_abs_diff(red.entries(), 0.5 * ComplexMatrix::Identity(2, 2)) < 1e-14);
  }
}

TEST_CASE("partial trace matches the explicit double-index summation") {
  std::mt19937_64 rng(22);
  const DensityMatrix rho = random_state(rng, 4);
  const DensityMatrix red_b = partial_trace(rho, {2, 2}, {1});
  for (int k = 0; k < 2; ++k) {
    for (int l = 0; l < 2; ++l) {
      Complex expected(0, 0);
      for (int i = 0; i < 2; ++i) expected += rho.entries()(i * 2 + k, i * 2 + l);
      CHECK(std::abs(red_b.entries()(k, l) - expected) < 1e-15);
    }
  }
}

TEST_CASE("partial trace output is a valid state; keeping everything is the identity") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix rho = random_state(rng, 12);
    const DensityMatrix red = partial_trace(rho, {2, 3, 2}, {0, 2});  // validated by ctor
    CHECK(red.dim() == 4);
    CHECK(std::abs(red.entries().trace().real() - 1.0) < 1e-12);
    CHECK(red.eigenvalues()(0) > -1e-12);

    const DensityMatrix same = partial_trace(rho, {2, 3, 2}, {0, 1, 2});
    CHECK(max_abs_diff(same.entries(), rho.entries()) == 0.0);
  }
}

TEST_CASE("partial trace rejects inconsistent dimensions") {
  std::mt19937_64 rng(24);
  const DensityMatrix rho = random_state(rng, 4);
  CHECK_THROWS_AS(partial_trace(rho, {2, 3}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(rho, {2, 2}, {}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(rho, {2, 2}, {2}), std::invalid_argument);
}

TEST_CASE("entropy: pure, maximally mixed, and a frozen scalar value") {
  std::mt19937_64 rng(31);
  ComplexVector psi = random_complex(rng, 3).col(0);
  CHECK(von_neumann_entropy(DensityMatrix::pure(psi)) < 1e-12);

  for (int d : {2, 3, 5}) {
    CHECK(von_neumann_entropy(DensityMatrix::maximally_mixed(d)) ==
          doctest::Approx(std::log(double(d))).epsilon(1e-14));
  }

  // Scalar oracle evaluated independently of the matrix code path.
  const double p0 = 0.7311;
  const double p1 = 0.2689;
  ComplexMatrix diag = ComplexMatrix::Zero(2, 2);
  diag(0, 0) = p0;
  diag(1, 1) = p1;
  const double expected = -(p0 * std::log(p0) + p1 * std::log(p1));
  CHECK(von_neumann_entropy(DensityMatrix(diag)) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("entropy is invariant under a basis change and bounded by ln dim") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix rho = random_state(rng, 4);
    const ComplexMatrix u = random_unitary(rng, 4);
    const DensityMatrix rotated(u * rho.entries() * u.adjoint());
    const double s = von_neumann_entropy(rho);
    CHECK(std::abs(s - von_neumann_entropy(rotated)) < 1e-12);
    CHECK(s >= 0.0);
    CHECK(s <= std::log(4.0) + 1e-12);
  }
}

TEST_CASE("relative entropy: identical states, disjoint support, Gibbs closed form") {
  std::mt19937_64 rng(41);
  const DensityMatrix rho = random_state(rng, 3);
  CHECK(relative_entropy(rho, rho) == 0.0);

  ComplexVector ground(2), excited(2);
  ground << Complex(1, 0), Complex(0, 0);
  excited << Complex(0, 0), Complex(1, 0);
  CHECK(std::isinf(relative_entropy(DensityMatrix::pure(excited), DensityMatrix::pure(ground))));

  // D(I/2 || Gibbs(beta=1)) for H = diag(0,1), against the closed form
  // beta * (E_rho - E_sigma) - (S_rho - S_sigma) evaluated with scalar
  // Boltzmann arithmetic.
  const double z = 1.0 + std::exp(-1.0);
  const double p_exc = std::exp(-1.0) / z;
  ComplexMatrix gibbs = ComplexMatrix::Zero(2, 2);
  gibbs(0, 0) = 1.0 - p_exc;
  gibbs(1, 1) = p_exc;
  const double e_rho = 0.5;
  const double s_rho = std::log(2.0);
  const double e_sigma = p_exc;
  const double s_sigma = -(1.0 - p_exc) * std::log(1.0 - p_exc) - p_exc * std::log(p_exc);
  const double expected = 1.0 * (e_rho - e_sigma) - (s_rho - s_sigma);
  CHECK(relative_entropy(DensityMatrix::maximally_mixed(2), DensityMatrix(gibbs)) ==
        doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("relative entropy is nonnegative and zero only for equal states") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    const DensityMatrix rho = random_state(rng, 3);
    const DensityMatrix sigma = random_state(rng, 3);
    const double d = relative_entropy(rho, sigma);
    CHECK(d >= 0.0);
    const double gap = (rho.entries() - sigma.entries()).cwiseAbs().maxCoeff();
    if (gap > 1e-8) {
      CHECK(d > 0.0);
    }
    CHECK(relative_entropy(rho, rho) == 0.0);
  }
}

TEST_CASE("mutual information: product states, Bell pair, definition oracle") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityMatrix joint =
        tensor_product({random_state(rng, 2), random_state(rng, 3)});
    CHECK(std::abs(mutual_information(joint, {2, 3}, {0})) < 1e-10);
  }

  const DensityMatrix bell = DensityMatrix::pure(bell_pair());
  CHECK(mutual_information(bell, {2, 2}, {0}) ==
        doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-12));

  // Entangled-and-evolved state: compare against the definition computed
  // from the three entropies assembled here.
  const HermitianOperator h(random_hermitian(rng, 4));
  const DensityMatrix initial =
      tensor_product({random_state(rng, 2), random_state(rng, 2)});
  const DensityMatrix evolved = evolve(initial, h, 1.7);
  const double s_a = von_neumann_entropy(partial_trace(evolved, {2, 2}, {0}));
  const double s_b = von_neumann_entropy(partial_trace(evolved, {2, 2}, {1}));
  const double s_ab = von_neumann_entropy(evolved);
  CHECK(mutual_information(evolved, {2, 2}, {0}) ==
        doctest::Approx(s_a + s_b - s_ab).epsilon(1e-12));
}

TEST_CASE("evolve: zero time, commuting case, and the half-period spin flip") {
  std::mt19937_64 rng(61);
  const DensityMatrix rho = random_state(rng, 3);
  const HermitianOperator h(random_hermitian(rng, 3));
  CHECK(max_abs_diff(evolve(rho, h, 0.0).entries(), rho.entries()) == 0.0);

  const HermitianOperator diag_h = HermitianOperator::diagonal({0.3, 1.1, 2.9});
  ComplexMatrix diag_rho = ComplexMatrix::Zero(3, 3);
  diag_rho(0, 0) = 0.5;
  diag_rho(1, 1) = 0.3;
  diag_rho(2, 2) = 0.2;
  const DensityMatrix stationary(diag_rho);
  CHECK(max_abs_diff(evolve(stationary, diag_h, 2.7).entries(), stationary.entries()) < 1e-14);

  ComplexMatrix sx = ComplexMatrix::Zero(2, 2);
  sx(0, 1) = 1.0;
  sx(1, 0) = 1.0;
  ComplexVector ground(2), excited(2);
  ground << Complex(1, 0), Complex(0, 0);
  excited << Complex(0, 0), Complex(1, 0);
  const DensityMatrix flipped =
      evolve(DensityMatrix::pure(ground), HermitianOperator(sx), M_PI / 2.0);
  CHECK(max_abs_diff(flipped.entries(), DensityMatrix::pure(excited).entries()) < 1e-10);
}

TEST_CASE("evolution preserves the spectrum and the entropy") {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix rho = random_state(rng, 4);
    const HermitianOperator h(random_hermitian(rng, 4));
    const double t = urand(rng, -5.0, 5.0);
    const DensityMatrix out = evolve(rho, h, t);

    RealVector before = rho.eigenvalues();
    RealVector after = out.eigenvalues();
    std::sort(before.data(), before.data() + before.size());
    std::sort(after.data(), after.data() + after.size());
    CHECK((before - after).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(std::abs(von_neumann_entropy(out) - von_neumann_entropy(rho)) < 1e-9);
    CHECK(std::abs(out.entries().trace().real() - 1.0) < 1e-10);
  }
}

TEST_CASE("hermitian operator symmetrization warns on large asymmetry") {
  std::string captured;
  set_warning_handler([&captured](const std::string& m) { captured = m; });
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 1) = Complex(1.0, 0.0);
  m(1, 0) = Complex(1.0 + 1e-6, 0.0);
  const HermitianOperator h(m);
  CHECK(captured.find("asymmetry") != std::string::npos);
  CHECK(std::abs(h.entries()(0, 1).real() - (1.0 + 5e-7)) < 1e-12);
  set_warning_handler({});
  set_warning_handler([](const std::string&) {});
}

TEST_CASE("density matrix validation rejects bad inputs") {
  ComplexMatrix not_normalized = 2.0 * ComplexMatrix::Identity(2, 2);
  CHECK_THROWS_AS(DensityMatrix(not_normalized), std::invalid_argument);

  ComplexMatrix not_psd = ComplexMatrix::Zero(2, 2);
  not_psd(0, 0) = 1.5;
  not_psd(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix(not_psd), std::invalid_argument);
}

TEST_CASE("spectral data: degeneracy detection and reconstruction bound") {
  const HermitianOperator h = HermitianOperator::diagonal({0.0, 0.0, 1.0});
  const SpectralData data = h.spectral_data();
  CHECK(data.ground_degeneracy == 2);
  CHECK(data.ground_energy == 0.0);

  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    const HermitianOperator r(random_hermitian(rng, 6));
    const ComplexMatrix rebuilt =
        r.eigenvectors() * r.eigenvalues().asDiagonal() * r.eigenvectors().adjoint();
    CHECK(max_abs_diff(rebuilt, r.entries()) < 1e-10);
  }
}
