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

#include "qproc/gallery.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qproc {
namespace gallery {

namespace {

constexpr double kPi = std::numbers::pi;

// s+ = |1><0|, s- = |0><1| on the qubit basis {|0>, |1>}.
Matrix sigma_plus() {
  Matrix m = Matrix::Zero(2, 2);
  m(1, 0) = 1.0;
  return m;
}

// Wraps an angle to (-pi, pi].
double wrap_angle(double t) {
  t = std::fmod(t, 2.0 * kPi);
  if (t > kPi) t -= 2.0 * kPi;
  if (t <= -kPi) t += 2.0 * kPi;
  return t;
}

}  // namespace

Processor controlled_u_processor(const std::vector<Matrix> &ops) {
  if (ops.empty()) {
    throw DimensionError("controlled_u_processor: empty operator list");
  }
  const Eigen::Index d = ops.front().rows();
  std::vector<std::vector<Matrix>> blocks(
      ops.size(), std::vector<Matrix>(ops.size(), Matrix::Zero(d, d)));
  for (std::size_t k = 0; k < ops.size(); ++k) {
    if (!is_unitary(ops[k])) {
      throw ValidationError("controlled_u_processor: member not unitary");
    }
    if (ops[k].rows() != d) {
      throw DimensionError("controlled_u_processor: member dimension mismatch");
    }
    blocks[k][k] = ops[k];
  }
  return Processor(d, std::move(blocks));
}

std::pair<Matrix, Matrix> shift_ops(Eigen::Index n) {
  if (n < 1) throw DimensionError("shift_ops: N must be >= 1");
  Matrix plus = Matrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) plus((k + 1) % n, k) = 1.0;
  return {plus, plus.adjoint()};
}

ProgramState theta_program(Eigen::Index n, double theta) {
  if (n < 1) throw DimensionError("theta_program: N must be >= 1");
  Vector v(n);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    v(k) = norm * std::exp(Complex(0.0, -static_cast<double>(k) * theta));
  }
  return ProgramState(std::move(v));
}

Processor rotation_processor(Eigen::Index n) {
  if (n < 1) throw DimensionError("rotation_processor: N must be >= 1");
  const auto [eplus, eminus] = shift_ops(n);
  const Matrix gen =
      kron(sigma_plus(), eminus) + kron(sigma_plus().adjoint(), eplus);
  const Matrix g = matrix_exp_skew(Complex(0.0, kPi / 2.0) * gen);
  return Processor::from_global_unitary(g, 2, n);
}

Matrix u_theta(double theta) {
  // exp[i (pi/2) K] with K = e^{-i theta} s+ + e^{i theta} s-; K^2 = I, so
  // the exponential is cos(pi/2) I + i sin(pi/2) K.
  Matrix k(2, 2);
  k << 0.0, std::exp(Complex(0.0, theta)), std::exp(Complex(0.0, -theta)), 0.0;
  return std::cos(kPi / 2.0) * Matrix::Identity(2, 2) +
         Complex(0.0, std::sin(kPi / 2.0)) * k;
}

double rotation_fidelity_closed_form(Eigen::Index n, double theta) {
  if (n < 1) throw DimensionError("rotation_fidelity_closed_form: N >= 1");
  const double nn = static_cast<double>(n);
  double sum = 0.0;
  for (Eigen::Index m = 0; m < n; ++m) {
    const double tm = 2.0 * kPi * static_cast<double>(m) / nn - theta;
    const double c2 = std::cos(tm) * std::cos(tm);
    double ratio;
    if (std::abs(wrap_angle(tm)) < 1e-9) {
      ratio = nn * nn;  // limit of sin^2(N t/2) / sin^2(t/2) as t -> 0
    } else {
      const double s_half = std::sin(tm / 2.0);
      const double s_n = std::sin(nn * tm / 2.0);
      ratio = (s_n * s_n) / (s_half * s_half);
    }
    sum += c2 * ratio;
  }
  return std::clamp(sum / (nn * nn), 0.0, 1.0);
}

Matrix phase_shift_unitary(Eigen::Index d, double theta) {
  if (d < 2) throw DimensionError("phase_shift_unitary: D must be >= 2");
  Matrix u = Matrix::Identity(d, d);
  u(0, 0) = std::exp(Complex(0.0, theta));
  return u;
}

Processor vidal_cirac_processor(Eigen::Index d, Eigen::Index n) {
  if (d < 2) throw DimensionError("vidal_cirac_processor: D must be >= 2");
  if (n < 1) throw DimensionError("vidal_cirac_processor: N must be >= 1");
  Matrix x = Matrix::Identity(d, d);
  x(0, 0) = 0.0;
  Matrix proj = Matrix::Zero(d, d);
  proj(0, 0) = 1.0;
  std::vector<std::vector<Matrix>> blocks(
      static_cast<std::size_t>(n),
      std::vector<Matrix>(static_cast<std::size_t>(n), Matrix::Zero(d, d)));
  for (Eigen::Index j = 0; j < n; ++j) {
    blocks[j][j] += x;
    blocks[j][(j + 1) % n] += proj;
  }
  return Processor(d, std::move(blocks));
}

ProgramState vc_program(Eigen::Index n, double theta) {
  if (n < 1) throw DimensionError("vc_program: N must be >= 1");
  Vector v(n);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    v(k) = norm * std::exp(Complex(0.0, static_cast<double>(k) * theta));
  }
  return ProgramState(std::move(v));
}

double vc_fidelity_closed_form(Eigen::Index d, Eigen::Index n, double theta) {
  if (d < 2) throw DimensionError("vc_fidelity_closed_form: D must be >= 2");
  if (n < 1) throw DimensionError("vc_fidelity_closed_form: N must be >= 1");
  const double dd = static_cast<double>(d);
  const double nn = static_cast<double>(n);
  const double f =
      1.0 - (2.0 * (dd - 1.0) / (nn * dd * dd)) * (1.0 - std::cos(nn * theta));
  return std::clamp(f, 0.0, 1.0);
}

Processor segmented_processor(Eigen::Index d, Eigen::Index n) {
  if (d < 2) throw DimensionError("segmented_processor: D must be >= 2");
  if (n < 1) throw DimensionError("segmented_processor: N must be >= 1");
  std::vector<Matrix> ops;
  ops.reserve(static_cast<std::size_t>(n));
  const double delta = kPi / static_cast<double>(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    ops.push_back(
        phase_shift_unitary(d, (2.0 * static_cast<double>(j) + 1.0) * delta));
  }
  return controlled_u_processor(ops);
}

double segmented_infidelity_bound(Eigen::Index d, Eigen::Index n) {
  const double dd = static_cast<double>(d);
  return (2.0 * (dd - 1.0) / (dd * dd)) *
         (1.0 - std::cos(kPi / static_cast<double>(n)));
}

Processor swap_processor(Eigen::Index d) {
  if (d < 1) throw DimensionError("swap_processor: D must be >= 1");
  // A_jk = |k><j|.
  std::vector<std::vector<Matrix>> blocks(
      static_cast<std::size_t>(d),
      std::vector<Matrix>(static_cast<std::size_t>(d), Matrix::Zero(d, d)));
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index k = 0; k < d; ++k) {
      blocks[j][k](k, j) = 1.0;
    }
  }
  return Processor(d, std::move(blocks));
}

Processor cnot_processor() {
  return controlled_u_processor({Matrix::Identity(2, 2), pauli_x()});
}

}  // namespace gallery
}  // namespace qproc
