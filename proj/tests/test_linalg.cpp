// Copyright 2026 The qproc authors
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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qproc/gallery.hpp"
#include "qproc/linalg.hpp"
#include "support/test_helpers.hpp"

using namespace qproc;
using qproc::testing::Rng;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("hs_inner basics") {
  CHECK(std::abs(hs_inner(identity(2), identity(2)) - Complex(2, 0)) < 1e-14);
  CHECK(std::abs(hs_inner(pauli_x(), pauli_y())) < 1e-14);

  Rng rng(11);
  const Matrix a = testing::random_ginibre(rng, 3, 3);
  const Matrix b = testing::random_ginibre(rng, 3, 3);
  CHECK(std::abs(hs_inner(a, b) - std::conj(hs_inner(b, a))) < 1e-12);
  const Complex self = hs_inner(a, a);
  CHECK(self.real() >= 0.0);
  CHECK(std::abs(self.imag()) < 1e-12);

  CHECK_THROWS_AS(hs_inner(identity(2), identity(3)), DimensionError);
}

TEST_CASE("hs_inner of rotation unitaries reproduces the cosine fidelity") {
  for (double t1 : {0.0, 0.3, 1.1}) {
    for (double t2 : {0.2, 0.9, 2.5}) {
      const Complex ip = hs_inner(gallery::u_theta(t1), gallery::u_theta(t2));
      const double f = std::norm(ip) / 4.0;
      CHECK(f == doctest::Approx(std::cos(t1 - t2) * std::cos(t1 - t2))
                     .epsilon(1e-10));
    }
  }
}

TEST_CASE("Schwartz inequality on random pairs") {
  Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    const Matrix a = testing::random_ginibre(rng, 4, 4);
    const Matrix b = testing::random_ginibre(rng, 4, 4);
    const double lhs = std::norm(hs_inner(a, b));
    const double rhs = hs_inner(a, a).real() * hs_inner(b, b).real();
    CHECK(lhs <= rhs * (1.0 + 1e-12) + 1e-12);
  }
}

TEST_CASE("hermitian_eig on diagonal and Pauli inputs") {
  Matrix d = Matrix::Zero(3, 3);
  d.diagonal() << 1.0, 3.0, 2.0;
  const EigResult e = hermitian_eig(d);
  CHECK(e.eigenvalues(0) == doctest::Approx(3.0));
  CHECK(e.eigenvalues(1) == doctest::Approx(2.0));
  CHECK(e.eigenvalues(2) == doctest::Approx(1.0));
  // Distinct eigenvalues: phase-fixed eigenvectors are the basis vectors.
  CHECK((e.eigenvectors.col(0) - Vector::Unit(3, 1)).norm() < 1e-12);
  CHECK((e.eigenvectors.col(1) - Vector::Unit(3, 2)).norm() < 1e-12);
  CHECK((e.eigenvectors.col(2) - Vector::Unit(3, 0)).norm() < 1e-12);

  const EigResult ex = hermitian_eig(pauli_x());
  CHECK(ex.eigenvalues(0) == doctest::Approx(1.0));
  CHECK(ex.eigenvalues(1) == doctest::Approx(-1.0));

  Rng rng(1);
  CHECK_THROWS_AS(hermitian_eig(testing::random_ginibre(rng, 3, 3)),
                  ValidationError);
}

TEST_CASE("hermitian_eig reconstruction, orthonormality, phase fixing") {
  Rng rng(13);
  for (int i = 0; i < 50; ++i) {
    const Matrix m = testing::random_hermitian(rng, 4);
    const EigResult e = hermitian_eig(m);
    Matrix lambda = Matrix::Zero(4, 4);
    lambda.diagonal() = e.eigenvalues.cast<Complex>();
    CHECK((m - e.eigenvectors * lambda * e.eigenvectors.adjoint()).norm() <
          1e-10);
    CHECK((e.eigenvectors.adjoint() * e.eigenvectors - identity(4)).norm() <
          1e-10);
    for (Eigen::Index c = 0; c < 4; ++c) {
      for (Eigen::Index r = 0; r < 4; ++r) {
        const Complex v = e.eigenvectors(r, c);
        if (std::abs(v) > tol().phase) {
          CHECK(v.real() > 0.0);
          CHECK(std::abs(v.imag()) < 1e-10);
          break;
        }
      }
    }
    for (Eigen::Index c = 1; c < 4; ++c) {
      CHECK(e.eigenvalues(c) <= e.eigenvalues(c - 1) + 1e-14);
    }
  }
}

TEST_CASE("psd_sqrt") {
  Matrix d = Matrix::Zero(2, 2);
  d.diagonal() << 4.0 / 13.0, 9.0 / 13.0;
  const Matrix s = psd_sqrt(DensityMatrix(d));
  CHECK(std::abs(s(0, 0) - 2.0 / std::sqrt(13.0)) < 1e-12);
  CHECK(std::abs(s(1, 1) - 3.0 / std::sqrt(13.0)) < 1e-12);

  Rng rng(14);
  const Vector psi = testing::random_state(rng, 3);
  const DensityMatrix proj = testing::pure_density(psi);
  CHECK((psd_sqrt(proj) - proj.matrix()).norm() < 1e-10);

  for (int i = 0; i < 30; ++i) {
    const DensityMatrix rho = testing::random_density(rng, 4);
    const Matrix root = psd_sqrt(rho);
    CHECK((root * root - rho.matrix()).norm() < 1e-10);
    CHECK(hermiticity_deviation(root) < 1e-10);
  }
}

TEST_CASE("DensityMatrix rejects invalid inputs") {
  Matrix neg = Matrix::Zero(2, 2);
  neg.diagonal() << 1.5, -0.5;
  CHECK_THROWS_AS(DensityMatrix{neg}, ValidationError);
  CHECK_THROWS_AS(DensityMatrix{Matrix(2.0 * identity(2))}, ValidationError);
  CHECK_THROWS_AS(DensityMatrix{Matrix(Complex(0, 1) * identity(2))},
                  ValidationError);
}

TEST_CASE("matrix_exp_skew") {
  CHECK((matrix_exp_skew(Matrix::Zero(3, 3)) - identity(3)).norm() < 1e-12);

  const Matrix g = matrix_exp_skew(Complex(0, kPi / 2.0) * pauli_x());
  CHECK((g - Complex(0, 1) * pauli_x()).norm() < 1e-12);

  // Generic skew-Hermitian input: result unitary.
  Rng rng(15);
  for (int i = 0; i < 20; ++i) {
    const Matrix h = Complex(0, 1) * testing::random_hermitian(rng, 4);
    const Matrix u = matrix_exp_skew(h);
    CHECK(unitarity_deviation(u) < 1e-10);
  }

  CHECK_THROWS_AS(matrix_exp_skew(pauli_x()), ValidationError);
}

TEST_CASE("matrix_exp_skew matches the analytic rotation unitary") {
  for (double theta : {0.0, 0.1, kPi / 8, 1.7, 5.0}) {
    Matrix gen(2, 2);
    gen << 0.0, std::exp(Complex(0, theta)), std::exp(Complex(0, -theta)), 0.0;
    const Matrix via_exp = matrix_exp_skew(Complex(0, kPi / 2.0) * gen);
    CHECK((via_exp - gallery::u_theta(theta)).norm() < 1e-10);
  }
}

TEST_CASE("uhlmann_fidelity") {
  Rng rng(16);
  const DensityMatrix rho = testing::random_density(rng, 3);
  CHECK(uhlmann_fidelity(rho, rho) == doctest::Approx(1.0).epsilon(1e-10));

  const DensityMatrix zero = testing::pure_density(Vector::Unit(2, 0));
  const DensityMatrix one = testing::pure_density(Vector::Unit(2, 1));
  CHECK(uhlmann_fidelity(zero, one) < 1e-12);

  const DensityMatrix mixed{Matrix(identity(2) / 2.0)};
  CHECK(uhlmann_fidelity(zero, mixed) == doctest::Approx(0.5).epsilon(1e-10));

  for (int i = 0; i < 30; ++i) {
    const DensityMatrix a = testing::random_density(rng, 3);
    const DensityMatrix b = testing::random_density(rng, 3);
    CHECK(std::abs(uhlmann_fidelity(a, b) - uhlmann_fidelity(b, a)) < 1e-10);
  }

  // Pure first argument: fidelity reduces to Tr(rho1 rho2).
  for (int i = 0; i < 20; ++i) {
    const DensityMatrix pure = testing::pure_density(testing::random_state(rng, 3));
    const DensityMatrix b = testing::random_density(rng, 3);
    const double direct = (pure.matrix() * b.matrix()).trace().real();
    CHECK(uhlmann_fidelity(pure, b) == doctest::Approx(direct).epsilon(1e-8));
  }

  CHECK_THROWS_AS(uhlmann_fidelity(zero, testing::random_density(rng, 3)),
                  DimensionError);
}

TEST_CASE("operator_norm") {
  CHECK(operator_norm(identity(3)) == doctest::Approx(1.0));
  CHECK(operator_norm(2.0 * pauli_x()) == doctest::Approx(2.0));
}
