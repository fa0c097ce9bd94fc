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

#include "qproc/linalg.hpp"
#include "qproc/types.hpp"

namespace qproc {

/// Pure program state: unit vector in the N-dimensional program space.
class ProgramState {
 public:
  explicit ProgramState(Vector amplitudes);

  const Vector &amplitudes() const { return amps_; }
  Eigen::Index dim() const { return amps_.size(); }

  /// Basis state |k>.
  static ProgramState basis(Eigen::Index n, Eigen::Index k);

 private:
  Vector amps_;
};

/// Mixed program: a density operator on the program space.
struct MixedProgram {
  DensityMatrix density;

  Eigen::Index dim() const { return density.dim(); }
};

/// A channel on the data space given by a finite Kraus-operator list.
struct Channel {
  Eigen::Index data_dim = 0;
  std::vector<Matrix> kraus;

  /// ||sum_j K_j^dag K_j - I||_HS.
  double completeness_deviation() const;
};

/// Maximum constraint violations of a processor's block grid.
/// `column_dev` and `row_dev` are the two completeness relations implied by
/// unitarity of the global operator (sum over j of A_jk1^dag A_jk2 and
/// sum over k of A_j1k A_j2k^dag); `row_dev_transposed` is the variant with
/// the dagger on the first factor in the row sum, which a generic unitary
/// global operator does not satisfy and is reported for diagnosis only.
struct ProcessorValidation {
  double column_dev = 0.0;
  double row_dev = 0.0;
  double row_dev_transposed = 0.0;
  double unitarity_dev = 0.0;

  bool passed(double scale_tol, double dim) const {
    const double t = scale_tol * dim;
    return column_dev <= t && row_dev <= t && unitarity_dev <= t;
  }
};

/// A programmable processor: a fixed unitary G on data (x) program,
/// stored as its N x N grid of D x D blocks A_jk.
///
/// Convention: the global basis index is i = d*N + p (program index varies
/// fastest), i.e. the global operator is G = sum_jk A_jk (x) |j><k| with the
/// program factor second.
class Processor {
 public:
  Processor(Eigen::Index data_dim, std::vector<std::vector<Matrix>> blocks);

  /// Extract the block grid from a (D*N)x(D*N) global unitary.
  /// Throws ValidationError if G is not unitary, DimensionError on shape
  /// mismatch.
  static Processor from_global_unitary(const Matrix &g, Eigen::Index data_dim,
                                       Eigen::Index program_dim);

  Eigen::Index data_dim() const { return data_dim_; }
  Eigen::Index program_dim() const { return program_dim_; }
  const Matrix &block(Eigen::Index j, Eigen::Index k) const {
    return blocks_[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
  }

  /// Reassemble G = sum_jk A_jk (x) |j><k|.
  Matrix global_unitary() const;

  /// Max violation per constraint; reports, never throws.
  ProcessorValidation validate() const;

  /// The same processor expressed in a new program basis: the columns of the
  /// unitary `basis` are the new program basis vectors in the old basis.
  Processor change_program_basis(const Matrix &basis) const;

 private:
  Eigen::Index data_dim_;
  Eigen::Index program_dim_;
  std::vector<std::vector<Matrix>> blocks_;
};

/// Kraus operators A_j(Xi) = sum_k A_jk <k|Xi> of the channel induced by a
/// pure program.
Channel program_kraus(const Processor &p, const ProgramState &xi);

/// Channel induced by a mixed program: Kraus list {sqrt(w_i) A_j(Xi_i)} over
/// the eigenpairs of the program density operator.
Channel mixed_program_channel(const Processor &p, const MixedProgram &xi);

/// sum_j K_j rho K_j^dag.
DensityMatrix apply_channel(const Channel &c, const DensityMatrix &rho);

/// Choi-Jamiolkowski state (I (x) T)(|Phi><Phi|) with
/// |Phi> = (1/sqrt(D)) sum_j |j>|j>.
DensityMatrix choi_state(const Channel &c);

/// Channel whose single Kraus operator is the unitary U.
Channel unitary_channel(const Matrix &u);

/// Probabilities p_j = ||K_j psi||^2 of the program-measurement outcomes.
std::vector<double> outcome_probabilities(const Channel &c, const Vector &psi);

/// Total weight of Kraus operators proportional to U: sum of |beta_j|^2 over
/// indices with K_j = beta_j U, beta_j = (U|K_j)/D.  Proportionality is
/// tested via |(U|K_j)|^2 = D (K_j|K_j) within prop_tol; Kraus operators with
/// HS norm below 1e-12 are skipped.
double success_probability(const Channel &c, const Matrix &u,
                           double prop_tol = tol().prop);

}  // namespace qproc
