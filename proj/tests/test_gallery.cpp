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
#include "qproc/fidelity.hpp"
#include "qproc/gallery.hpp"
#include "support/test_helpers.hpp"

using namespace qproc;
using namespace qproc::gallery;
using qproc::testing::Rng;

namespace {
constexpr double kPi = std::numbers::pi;

double simulated_rotation_fidelity(const Processor &rot, Eigen::Index n,
                                   double theta) {
  return process_fidelity_unitary(u_theta(theta),
                                  program_kraus(rot, theta_program(n, theta)));
}

}  // namespace

TEST_CASE("every gallery processor passes validation") {
  const std::vector<Processor> procs = {
      rotation_processor(1), rotation_processor(4),  rotation_processor(8),
      vidal_cirac_processor(2, 4), vidal_cirac_processor(3, 8),
      segmented_processor(2, 8),   swap_processor(2),
      swap_processor(4),           cnot_processor()};
  for (const Processor &p : procs) {
    const ProcessorValidation v = p.validate();
    const double dim = double(p.data_dim() * p.program_dim());
    CHECK(v.column_dev <= 1e-10 * dim);
    CHECK(v.row_dev <= 1e-10 * dim);
    CHECK(v.unitarity_dev <= 1e-10 * dim);
  }
}

TEST_CASE("shift_ops") {
  const auto [p1, m1] = shift_ops(1);
  CHECK((p1 - identity(1)).norm() < 1e-15);
  CHECK((m1 - identity(1)).norm() < 1e-15);

  const auto [p3, m3] = shift_ops(3);
  Vector e0 = Vector::Unit(3, 0);
  CHECK(((p3 * e0) - Vector::Unit(3, 1)).norm() < 1e-15);
  CHECK((m3 - p3.adjoint()).norm() < 1e-15);
  CHECK((p3 * m3 - identity(3)).norm() < 1e-15);

  // Grid program states are eigenstates of the shifts.
  for (Eigen::Index n : {2, 4, 8}) {
    const auto [plus, minus] = shift_ops(n);
    for (Eigen::Index m = 0; m < n; ++m) {
      const double theta_m = 2.0 * kPi * double(m) / double(n);
      const Vector v = theta_program(n, theta_m).amplitudes();
      CHECK((plus * v - std::exp(Complex(0, theta_m)) * v).norm() < 1e-12);
      CHECK((minus * v - std::exp(Complex(0, -theta_m)) * v).norm() < 1e-12);
    }
  }
}

TEST_CASE("theta_program") {
  CHECK(std::abs(theta_program(1, 0.7).amplitudes()(0) - Complex(1, 0)) <
        1e-15);

  const Vector flat = theta_program(4, 0.0).amplitudes();
  for (Eigen::Index k = 0; k < 4; ++k) {
    CHECK(std::abs(flat(k) - Complex(0.5, 0)) < 1e-15);
  }

  // Grid states are orthonormal.
  const Eigen::Index n = 6;
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      const Complex ip =
          theta_program(n, 2.0 * kPi * a / n)
              .amplitudes()
              .dot(theta_program(n, 2.0 * kPi * b / n).amplitudes());
      CHECK(std::abs(ip - (a == b ? Complex(1, 0) : Complex(0, 0))) < 1e-12);
    }
  }
}

TEST_CASE("rotation processor performs grid rotations perfectly") {
  for (Eigen::Index n : {1, 2, 4, 8, 16}) {
    const Processor rot = rotation_processor(n);
    for (Eigen::Index m = 0; m < n; ++m) {
      const double theta_m = 2.0 * kPi * double(m) / double(n);
      const double f = simulated_rotation_fidelity(rot, n, theta_m);
      CHECK(f == doctest::Approx(1.0).epsilon(1e-8));
    }
  }
}

TEST_CASE("rotation processor off-grid values") {
  const Processor rot8 = rotation_processor(8);
  CHECK(simulated_rotation_fidelity(rot8, 8, kPi / 8) ==
        doctest::Approx(0.75).epsilon(1e-8));

  const Processor rot4 = rotation_processor(4);
  const Channel c = program_kraus(rot4, theta_program(4, kPi / 2));
  CHECK(process_fidelity_unitary(u_theta(kPi / 2), c) ==
        doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("u_theta") {
  Rng rng(61);
  for (int i = 0; i < 10; ++i) {
    const double theta = 2.0 * kPi * double(rng() % 1000) / 1000.0;
    CHECK(unitarity_deviation(u_theta(theta)) < 1e-12);
  }
  CHECK(process_fidelity_unitary(u_theta(0.0),
                                 unitary_channel(u_theta(kPi / 2))) < 1e-12);
  CHECK(process_fidelity_unitary(u_theta(1.3), unitary_channel(u_theta(1.3))) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("rotation closed form equals full simulation") {
  for (Eigen::Index n : {2, 4, 8}) {
    const Processor rot = rotation_processor(n);
    for (int i = 0; i < 100; ++i) {
      const double theta = 2.0 * kPi * double(i) / 100.0;
      const double sim = simulated_rotation_fidelity(rot, n, theta);
      CHECK(std::abs(sim - rotation_fidelity_closed_form(n, theta)) < 1e-8);
    }
    // Grid points are perfect; the minimum sits at pi/N off the grid.
    CHECK(rotation_fidelity_closed_form(n, 2.0 * kPi / double(n)) ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK(rotation_fidelity_closed_form(n, kPi / double(n)) ==
          doctest::Approx(1.0 - 2.0 / double(n)).epsilon(1e-8));
  }
}

TEST_CASE("optimal programs scale better than simple theta programs") {
  for (Eigen::Index n : {4, 8, 16, 32}) {
    const Processor rot = rotation_processor(n);
    const double theta = kPi / double(n);  // worst case for the simple program
    const double f_simple = rotation_fidelity_closed_form(n, theta);
    CHECK(double(n) * (1.0 - f_simple) == doctest::Approx(2.0).epsilon(1e-6));

    const double f_opt = optimal_program(rot, u_theta(theta)).fidelity;
    CHECK(f_opt >= std::cos(kPi / double(n)) * std::cos(kPi / double(n)) - 1e-10);
    CHECK(double(n * n) * (1.0 - f_opt) <= kPi * kPi + 0.1);
    CHECK(f_opt >= f_simple - 1e-10);
  }
}

TEST_CASE("phase_shift_unitary") {
  CHECK((phase_shift_unitary(3, 0.0) - identity(3)).norm() < 1e-15);
  Matrix expect = identity(2);
  expect(0, 0) = -1.0;
  CHECK((phase_shift_unitary(2, kPi) - expect).norm() < 1e-12);
  CHECK_THROWS_AS(phase_shift_unitary(1, 0.3), DimensionError);

  // |e^{i dt} + (D-1)|^2 / D^2 against the general closed form.
  for (Eigen::Index d : {2, 3, 5}) {
    for (double t1 : {0.2, 1.1}) {
      for (double t2 : {0.0, 2.3}) {
        const double f = process_fidelity_unitary(
            phase_shift_unitary(d, t1), unitary_channel(phase_shift_unitary(d, t2)));
        const double expect_f =
            std::norm(std::exp(Complex(0, t2 - t1)) + Complex(d - 1, 0)) /
            double(d * d);
        CHECK(f == doctest::Approx(expect_f).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("vidal_cirac Kraus forms with the theta program") {
  const Eigen::Index d = 3, n = 4;
  const double theta = 0.83;
  const Channel c =
      program_kraus(vidal_cirac_processor(d, n), vc_program(n, theta));
  const Matrix u = phase_shift_unitary(d, theta);
  const double root_n = std::sqrt(double(n));
  for (Eigen::Index j = 0; j + 1 < n; ++j) {
    const Matrix expect = std::exp(Complex(0, double(j) * theta)) * u / root_n;
    CHECK((c.kraus[j] - expect).norm() < 1e-12);
  }
  Matrix x = identity(d);
  x(0, 0) = 0.0;
  Matrix proj = Matrix::Zero(d, d);
  proj(0, 0) = 1.0;
  const Matrix last =
      (std::exp(Complex(0, double(n - 1) * theta)) * x + proj) / root_n;
  CHECK((c.kraus[n - 1] - last).norm() < 1e-12);
}

TEST_CASE("vc_program") {
  CHECK(std::abs(vc_program(1, 2.2).amplitudes()(0) - Complex(1, 0)) < 1e-15);
  const Vector flat = vc_program(4, 0.0).amplitudes();
  for (Eigen::Index k = 0; k < 4; ++k) {
    CHECK(std::abs(flat(k) - Complex(0.5, 0)) < 1e-15);
  }
  const Vector v = vc_program(4, kPi / 3).amplitudes();
  for (Eigen::Index k = 0; k < 4; ++k) {
    CHECK(std::abs(v(k) - 0.5 * std::exp(Complex(0, double(k) * kPi / 3))) <
          1e-14);
  }
}

TEST_CASE("vc closed form equals simulation on a grid") {
  for (Eigen::Index d : {2, 3, 4}) {
    for (Eigen::Index n : {2, 4, 8}) {
      const Processor p = vidal_cirac_processor(d, n);
      for (int i = 0; i < 25; ++i) {
        const double theta = 2.0 * kPi * double(i) / 25.0;
        const double sim = process_fidelity_unitary(
            phase_shift_unitary(d, theta),
            program_kraus(p, vc_program(n, theta)));
        CHECK(std::abs(sim - vc_fidelity_closed_form(d, n, theta)) < 1e-8);
      }
    }
  }
  CHECK(vc_fidelity_closed_form(2, 4, 0.0) == doctest::Approx(1.0));
  CHECK(vc_fidelity_closed_form(2, 4, kPi / 4.0) ==
        doctest::Approx(0.75).epsilon(1e-12));
  CHECK(vc_fidelity_closed_form(3, 8, kPi / 2.0) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("segmented processor") {
  const Eigen::Index d = 2, n = 8;
  const Processor seg = segmented_processor(d, n);
  const double delta = kPi / double(n);

  // Segment centers are perfect.
  for (Eigen::Index j = 0; j < n; ++j) {
    const double theta = (2.0 * double(j) + 1.0) * delta;
    const double f = process_fidelity_unitary(
        phase_shift_unitary(d, theta),
        program_kraus(seg, ProgramState::basis(n, j)));
    CHECK(f == doctest::Approx(1.0).epsilon(1e-10));
  }

  // Worst case over a sweep stays below the closed-form bound.
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double theta = 2.0 * kPi * double(i) / 1000.0;
    const double f =
        optimal_program(seg, phase_shift_unitary(d, theta)).fidelity;
    worst = std::max(worst, 1.0 - f);
  }
  CHECK(worst <= segmented_infidelity_bound(d, n) + 1e-10);
}

TEST_CASE("segmented beats the approximate probabilistic processor") {
  for (Eigen::Index n : {4, 8, 16}) {
    const Eigen::Index d = 2;
    const Processor seg = segmented_processor(d, n);
    double worst_seg = 0.0;
    double worst_vc = 0.0;
    for (int i = 0; i < 400; ++i) {
      const double theta = 2.0 * kPi * double(i) / 400.0;
      worst_seg = std::max(
          worst_seg,
          1.0 - optimal_program(seg, phase_shift_unitary(d, theta)).fidelity);
      worst_vc = std::max(worst_vc, 1.0 - vc_fidelity_closed_form(d, n, theta));
    }
    CHECK(worst_seg < worst_vc);
  }
}

TEST_CASE("swap processor semantics") {
  Rng rng(62);
  for (Eigen::Index d : {2, 3}) {
    const Processor swap = swap_processor(d);
    const ProgramState phi = testing::random_program(rng, d);
    const Channel c = program_kraus(swap, phi);
    const DensityMatrix rho = testing::random_density(rng, d);
    const Matrix expect =
        phi.amplitudes() * phi.amplitudes().adjoint();
    CHECK((apply_channel(c, rho).matrix() - expect).norm() < 1e-12);

    const double f =
        process_fidelity_unitary(testing::random_unitary(rng, d), c);
    CHECK(f == doctest::Approx(1.0 / double(d * d)).epsilon(1e-10));
  }
}

TEST_CASE("cnot processor") {
  const Processor cnot = cnot_processor();
  Rng rng(63);
  const DensityMatrix rho = testing::random_density(rng, 2);

  const Channel c0 = program_kraus(cnot, ProgramState::basis(2, 0));
  CHECK((apply_channel(c0, rho).matrix() - rho.matrix()).norm() < 1e-12);

  const Channel c1 = program_kraus(cnot, ProgramState::basis(2, 1));
  CHECK((apply_channel(c1, rho).matrix() -
         pauli_x() * rho.matrix() * pauli_x()).norm() < 1e-12);

  Vector plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const Channel cp = program_kraus(cnot, ProgramState(plus));
  const DensityMatrix zero = testing::pure_density(Vector::Unit(2, 0));
  CHECK((apply_channel(cp, zero).matrix() - identity(2) / 2.0).norm() < 1e-12);
}

TEST_CASE("rotation processor is diagonal in the theta basis") {
  const Eigen::Index n = 4;
  const Processor rot = rotation_processor(n);
  Matrix basis(n, n);
  for (Eigen::Index m = 0; m < n; ++m) {
    basis.col(m) = theta_program(n, 2.0 * kPi * double(m) / double(n)).amplitudes();
  }
  const Processor diag = rot.change_program_basis(basis);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      if (j == k) {
        CHECK((diag.block(j, j) - u_theta(2.0 * kPi * double(j) / double(n)))
                  .norm() < 1e-10);
      } else {
        CHECK(diag.block(j, k).norm() < 1e-10);
      }
    }
  }
}
