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

#pragma once

#include <vector>

#include "qproc/tolerances.hpp"
#include "qproc/types.hpp"

namespace qproc {

/// Hilbert-Schmidt norm ||A||_HS = sqrt(Tr A^dag A).
double hs_norm(const Matrix &a);

/// Hilbert-Schmidt inner product (A|B) = Tr(A^dag B).
/// Throws DimensionError on shape mismatch.
Complex hs_inner(const Matrix &a, const Matrix &b);

/// Hermiticity deviation ||M - M^dag||_HS.
double hermiticity_deviation(const Matrix &m);

/// Unitarity deviation ||M^dag M - I||_HS.
double unitarity_deviation(const Matrix &m);

bool is_hermitian(const Matrix &m, double scale_tol = tol().herm);
bool is_unitary(const Matrix &m, double scale_tol = tol().unit);

/// Largest singular value.
double operator_norm(const Matrix &a);

/// A square matrix validated as a density operator: Hermitian, unit trace,
/// positive semidefinite (all within tolerance).
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix m);

  const Matrix &matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  Matrix m_;
};

/// Result of a Hermitian eigendecomposition.  Eigenvalues are sorted
/// descending; eigenvector columns are orthonormal and phase-fixed so that
/// the first component of modulus > tol().phase is real positive.
struct EigResult {
  RealVector eigenvalues;
  Matrix eigenvectors;  // columns
};

/// Eigendecomposition of a Hermitian matrix.  Throws ValidationError if the
/// input is not Hermitian within tolerance.
EigResult hermitian_eig(const Matrix &m);

/// Hermitian PSD square root of a density operator.  Eigenvalues in
/// [-tol().psd, 0) are clamped to 0; anything more negative throws.
Matrix psd_sqrt(const DensityMatrix &rho);

/// exp(H) for skew-Hermitian H, via the eigendecomposition of iH.
/// The result is unitary.  Throws ValidationError if H is not
/// skew-Hermitian within tolerance.
Matrix matrix_exp_skew(const Matrix &h);

/// Uhlmann fidelity [Tr sqrt(sqrt(rho1) rho2 sqrt(rho1))]^2, in [0,1].
double uhlmann_fidelity(const DensityMatrix &rho1, const DensityMatrix &rho2);

/// Kronecker product a (x) b; the second factor's index varies fastest.
Matrix kron(const Matrix &a, const Matrix &b);

Matrix identity(Eigen::Index d);
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

}  // namespace qproc
