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

#include "qproc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

namespace qproc {

const Tolerances &tol() {
  static const Tolerances scaled = [] {
    Tolerances t;
    if (const char *env = std::getenv("QPROC_TOLERANCE_SCALE")) {
      const double s = std::atof(env);
      if (s > 0) {
        t.herm *= s;
        t.unit *= s;
        t.psd *= s;
        t.eig *= s;
        t.trace *= s;
        t.fid *= s;
        t.phase *= s;
        t.eta *= s;
        t.prop *= s;
        t.rank *= s;
      }
    }
    return t;
  }();
  return scaled;
}

double hs_norm(const Matrix &a) { return a.norm(); }

Complex hs_inner(const Matrix &a, const Matrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("hs_inner: shape mismatch " +
                         std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " +
                         std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
  return (a.adjoint() * b).trace();
}

double hermiticity_deviation(const Matrix &m) {
  return (m - m.adjoint()).norm();
}

double unitarity_deviation(const Matrix &m) {
  return (m.adjoint() * m - Matrix::Identity(m.cols(), m.cols())).norm();
}

bool is_hermitian(const Matrix &m, double scale_tol) {
  return m.rows() == m.cols() &&
         hermiticity_deviation(m) <= scale_tol * static_cast<double>(m.rows());
}

bool is_unitary(const Matrix &m, double scale_tol) {
  return m.rows() == m.cols() &&
         unitarity_deviation(m) <= scale_tol * static_cast<double>(m.rows());
}

double operator_norm(const Matrix &a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues()(0);
}

DensityMatrix::DensityMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) {
    throw DimensionError("DensityMatrix: matrix not square");
  }
  const double dim = static_cast<double>(m_.rows());
  if (hermiticity_deviation(m_) > tol().herm * dim) {
    throw ValidationError("DensityMatrix: not Hermitian");
  }
  if (std::abs(m_.trace() - Complex(1.0, 0.0)) > tol().trace) {
    throw ValidationError("DensityMatrix: trace != 1");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(m_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol().psd * dim) {
    throw ValidationError("DensityMatrix: negative eigenvalue");
  }
}

EigResult hermitian_eig(const Matrix &m) {
  if (!is_hermitian(m)) {
    throw ValidationError("hermitian_eig: input not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  const Eigen::Index n = m.rows();
  EigResult r;
  r.eigenvalues.resize(n);
  r.eigenvectors.resize(n, n);
  // Eigen returns ascending order; flip to descending.
  for (Eigen::Index i = 0; i < n; ++i) {
    r.eigenvalues(i) = es.eigenvalues()(n - 1 - i);
    r.eigenvectors.col(i) = es.eigenvectors().col(n - 1 - i);
  }
  // Phase fixing: first component of modulus > tol().phase made real positive.
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const Complex c = r.eigenvectors(j, i);
      if (std::abs(c) > tol().phase) {
        r.eigenvectors.col(i) *= std::conj(c) / std::abs(c);
        break;
      }
    }
  }
  return r;
}

Matrix psd_sqrt(const DensityMatrix &rho) {
  const EigResult e = hermitian_eig(rho.matrix());
  const Eigen::Index n = rho.dim();
  RealVector roots(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double lambda = e.eigenvalues(i);
    if (lambda < -tol().psd * static_cast<double>(n)) {
      throw ValidationError("psd_sqrt: matrix not PSD");
    }
    // Eigenvalues that are zero up to roundoff are flushed to exactly zero:
    // sqrt amplifies O(1e-16) noise to O(1e-8), which would dominate the
    // error of downstream trace-of-square-root computations.
    roots(i) = lambda <= tol().psd ? 0.0 : std::sqrt(lambda);
  }
  return e.eigenvectors * roots.asDiagonal() * e.eigenvectors.adjoint();
}

Matrix matrix_exp_skew(const Matrix &h) {
  const Matrix herm = Complex(0.0, 1.0) * h;
  if (!is_hermitian(herm)) {
    throw ValidationError("matrix_exp_skew: input not skew-Hermitian");
  }
  const EigResult e = hermitian_eig(herm);
  const Eigen::Index n = h.rows();
  Vector phases(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    // iH = V L V^dag  =>  exp(H) = V exp(-iL) V^dag.
    phases(i) = std::exp(Complex(0.0, -e.eigenvalues(i)));
  }
  return e.eigenvectors * phases.asDiagonal() * e.eigenvectors.adjoint();
}

double uhlmann_fidelity(const DensityMatrix &rho1, const DensityMatrix &rho2) {
  if (rho1.dim() != rho2.dim()) {
    throw DimensionError("uhlmann_fidelity: dimension mismatch");
  }
  // Pure states admit an exact shortcut, F = Tr(rho1 rho2), that avoids the
  // sqrt noise floor entirely.
  const double purity1 = (rho1.matrix() * rho1.matrix()).trace().real();
  const double purity2 = (rho2.matrix() * rho2.matrix()).trace().real();
  if (purity1 > 1.0 - 1e-12 || purity2 > 1.0 - 1e-12) {
    const double f = (rho1.matrix() * rho2.matrix()).trace().real();
    return std::clamp(f, 0.0, 1.0);
  }
  const Matrix s1 = psd_sqrt(rho1);
  const Matrix inner = s1 * rho2.matrix() * s1;
  // inner is Hermitian PSD up to roundoff; flush eigenvalues that are zero
  // up to roundoff so sqrt does not amplify them.
  Eigen::SelfAdjointEigenSolver<Matrix> es((inner + inner.adjoint()) / 2.0,
                                           Eigen::EigenvaluesOnly);
  const double floor = 1e-14 * std::max(es.eigenvalues().maxCoeff(), 0.0);
  double trace_sqrt = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double lambda = es.eigenvalues()(i);
    if (lambda > floor) trace_sqrt += std::sqrt(lambda);
  }
  const double f = trace_sqrt * trace_sqrt;
  return std::clamp(f, 0.0, 1.0);
}

Matrix kron(const Matrix &a, const Matrix &b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix identity(Eigen::Index d) { return Matrix::Identity(d, d); }

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

}  // namespace qproc
