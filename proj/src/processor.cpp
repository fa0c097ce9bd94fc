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

#include "qproc/processor.hpp"

#include <cmath>
#include <utility>

namespace qproc {

ProgramState::ProgramState(Vector amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.size() == 0) {
    throw DimensionError("ProgramState: empty amplitude vector");
  }
  if (std::abs(amps_.norm() - 1.0) > tol().unit * static_cast<double>(amps_.size())) {
    throw ValidationError("ProgramState: not unit norm");
  }
}

ProgramState ProgramState::basis(Eigen::Index n, Eigen::Index k) {
  if (k < 0 || k >= n) {
    throw DimensionError("ProgramState::basis: index out of range");
  }
  Vector v = Vector::Zero(n);
  v(k) = 1.0;
  return ProgramState(std::move(v));
}

double Channel::completeness_deviation() const {
  Matrix sum = Matrix::Zero(data_dim, data_dim);
  for (const Matrix &k : kraus) sum += k.adjoint() * k;
  return (sum - Matrix::Identity(data_dim, data_dim)).norm();
}

Processor::Processor(Eigen::Index data_dim,
                     std::vector<std::vector<Matrix>> blocks)
    : data_dim_(data_dim),
      program_dim_(static_cast<Eigen::Index>(blocks.size())),
      blocks_(std::move(blocks)) {
  if (data_dim_ < 1 || program_dim_ < 1) {
    throw DimensionError("Processor: dimensions must be positive");
  }
  for (const auto &row : blocks_) {
    if (static_cast<Eigen::Index>(row.size()) != program_dim_) {
      throw DimensionError("Processor: block grid not square");
    }
    for (const Matrix &b : row) {
      if (b.rows() != data_dim_ || b.cols() != data_dim_) {
        throw DimensionError("Processor: block shape mismatch");
      }
    }
  }
}

Processor Processor::from_global_unitary(const Matrix &g, Eigen::Index data_dim,
                                         Eigen::Index program_dim) {
  const Eigen::Index total = data_dim * program_dim;
  if (g.rows() != total || g.cols() != total) {
    throw DimensionError("from_global_unitary: G has wrong shape");
  }
  if (!is_unitary(g)) {
    throw ValidationError("from_global_unitary: G not unitary");
  }
  std::vector<std::vector<Matrix>> blocks(
      static_cast<std::size_t>(program_dim),
      std::vector<Matrix>(static_cast<std::size_t>(program_dim)));
  for (Eigen::Index j = 0; j < program_dim; ++j) {
    for (Eigen::Index k = 0; k < program_dim; ++k) {
      Matrix a(data_dim, data_dim);
      for (Eigen::Index r = 0; r < data_dim; ++r) {
        for (Eigen::Index c = 0; c < data_dim; ++c) {
          a(r, c) = g(r * program_dim + j, c * program_dim + k);
        }
      }
      blocks[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
          std::move(a);
    }
  }
  return Processor(data_dim, std::move(blocks));
}

Matrix Processor::global_unitary() const {
  const Eigen::Index total = data_dim_ * program_dim_;
  Matrix g = Matrix::Zero(total, total);
  for (Eigen::Index j = 0; j < program_dim_; ++j) {
    for (Eigen::Index k = 0; k < program_dim_; ++k) {
      const Matrix &a = block(j, k);
      for (Eigen::Index r = 0; r < data_dim_; ++r) {
        for (Eigen::Index c = 0; c < data_dim_; ++c) {
          g(r * program_dim_ + j, c * program_dim_ + k) = a(r, c);
        }
      }
    }
  }
  return g;
}

ProcessorValidation Processor::validate() const {
  ProcessorValidation v;
  const Matrix id = Matrix::Identity(data_dim_, data_dim_);
  for (Eigen::Index k1 = 0; k1 < program_dim_; ++k1) {
    for (Eigen::Index k2 = 0; k2 < program_dim_; ++k2) {
      Matrix col_sum = Matrix::Zero(data_dim_, data_dim_);
      Matrix row_sum = Matrix::Zero(data_dim_, data_dim_);
      Matrix row_sum_t = Matrix::Zero(data_dim_, data_dim_);
      for (Eigen::Index j = 0; j < program_dim_; ++j) {
        col_sum += block(j, k1).adjoint() * block(j, k2);
        row_sum += block(k1, j) * block(k2, j).adjoint();
        row_sum_t += block(k1, j).adjoint() * block(k2, j);
      }
      const Matrix target = (k1 == k2) ? id : Matrix::Zero(data_dim_, data_dim_);
      v.column_dev = std::max(v.column_dev, (col_sum - target).norm());
      v.row_dev = std::max(v.row_dev, (row_sum - target).norm());
      v.row_dev_transposed =
          std::max(v.row_dev_transposed, (row_sum_t - target).norm());
    }
  }
  v.unitarity_dev = unitarity_deviation(global_unitary());
  return v;
}

Processor Processor::change_program_basis(const Matrix &basis) const {
  if (basis.rows() != program_dim_ || basis.cols() != program_dim_) {
    throw DimensionError("change_program_basis: basis has wrong shape");
  }
  if (!is_unitary(basis)) {
    throw ValidationError("change_program_basis: basis not unitary");
  }
  // A'_jk = sum_{ab} conj(B_aj) A_ab B_bk.
  std::vector<std::vector<Matrix>> blocks(
      static_cast<std::size_t>(program_dim_),
      std::vector<Matrix>(static_cast<std::size_t>(program_dim_)));
  for (Eigen::Index j = 0; j < program_dim_; ++j) {
    for (Eigen::Index k = 0; k < program_dim_; ++k) {
      Matrix sum = Matrix::Zero(data_dim_, data_dim_);
      for (Eigen::Index a = 0; a < program_dim_; ++a) {
        for (Eigen::Index b = 0; b < program_dim_; ++b) {
          sum += std::conj(basis(a, j)) * basis(b, k) * block(a, b);
        }
      }
      blocks[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
          std::move(sum);
    }
  }
  return Processor(data_dim_, std::move(blocks));
}

Channel program_kraus(const Processor &p, const ProgramState &xi) {
  if (xi.dim() != p.program_dim()) {
    throw DimensionError("program_kraus: program dimension mismatch");
  }
  Channel c;
  c.data_dim = p.data_dim();
  c.kraus.reserve(static_cast<std::size_t>(p.program_dim()));
  for (Eigen::Index j = 0; j < p.program_dim(); ++j) {
    Matrix a = Matrix::Zero(p.data_dim(), p.data_dim());
    for (Eigen::Index k = 0; k < p.program_dim(); ++k) {
      a += p.block(j, k) * xi.amplitudes()(k);
    }
    c.kraus.push_back(std::move(a));
  }
  return c;
}

Channel mixed_program_channel(const Processor &p, const MixedProgram &xi) {
  if (xi.dim() != p.program_dim()) {
    throw DimensionError("mixed_program_channel: program dimension mismatch");
  }
  const EigResult e = hermitian_eig(xi.density.matrix());
  Channel c;
  c.data_dim = p.data_dim();
  for (Eigen::Index i = 0; i < e.eigenvalues.size(); ++i) {
    const double w = e.eigenvalues(i);
    if (w <= tol().psd) continue;
    const Channel pure = program_kraus(p, ProgramState(e.eigenvectors.col(i)));
    for (const Matrix &k : pure.kraus) {
      c.kraus.push_back(std::sqrt(w) * k);
    }
  }
  return c;
}

DensityMatrix apply_channel(const Channel &c, const DensityMatrix &rho) {
  if (rho.dim() != c.data_dim) {
    throw DimensionError("apply_channel: dimension mismatch");
  }
  Matrix out = Matrix::Zero(c.data_dim, c.data_dim);
  for (const Matrix &k : c.kraus) out += k * rho.matrix() * k.adjoint();
  return DensityMatrix(std::move(out));
}

DensityMatrix choi_state(const Channel &c) {
  const Eigen::Index d = c.data_dim;
  Vector phi = Vector::Zero(d * d);
  for (Eigen::Index j = 0; j < d; ++j) phi(j * d + j) = 1.0 / std::sqrt(double(d));
  Matrix rho = Matrix::Zero(d * d, d * d);
  const Matrix id = Matrix::Identity(d, d);
  for (const Matrix &k : c.kraus) {
    const Vector v = kron(id, k) * phi;
    rho += v * v.adjoint();
  }
  return DensityMatrix(std::move(rho));
}

Channel unitary_channel(const Matrix &u) {
  if (!is_unitary(u)) {
    throw ValidationError("unitary_channel: operator not unitary");
  }
  Channel c;
  c.data_dim = u.rows();
  c.kraus.push_back(u);
  return c;
}

std::vector<double> outcome_probabilities(const Channel &c, const Vector &psi) {
  if (psi.size() != c.data_dim) {
    throw DimensionError("outcome_probabilities: dimension mismatch");
  }
  if (std::abs(psi.norm() - 1.0) > tol().unit * static_cast<double>(psi.size())) {
    throw ValidationError("outcome_probabilities: state not unit norm");
  }
  std::vector<double> probs;
  probs.reserve(c.kraus.size());
  for (const Matrix &k : c.kraus) probs.push_back((k * psi).squaredNorm());
  return probs;
}

double success_probability(const Channel &c, const Matrix &u, double prop_tol) {
  if (!is_unitary(u)) {
    throw ValidationError("success_probability: target not unitary");
  }
  if (u.rows() != c.data_dim) {
    throw DimensionError("success_probability: dimension mismatch");
  }
  const double d = static_cast<double>(c.data_dim);
  double total = 0.0;
  for (const Matrix &k : c.kraus) {
    if (k.norm() < 1e-12) continue;
    const Complex overlap = hs_inner(u, k);
    const double norm_sq = k.squaredNorm();
    // K proportional to U iff the Schwartz inequality is saturated:
    // |(U|K)|^2 = (U|U)(K|K) = D (K|K).
    if (std::abs(std::norm(overlap) - d * norm_sq) <=
        prop_tol * std::max(1.0, d * norm_sq)) {
      total += std::norm(overlap / d);
    }
  }
  return total;
}

}  // namespace qproc
