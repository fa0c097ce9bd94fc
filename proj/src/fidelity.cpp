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

#include "qproc/fidelity.hpp"

#include <algorithm>
#include <cmath>

namespace qproc {

double process_fidelity(const Channel &c1, const Channel &c2) {
  if (c1.data_dim != c2.data_dim) {
    throw DimensionError("process_fidelity: data dimension mismatch");
  }
  return uhlmann_fidelity(choi_state(c1), choi_state(c2));
}

double process_fidelity_unitary(const Matrix &u, const Channel &c) {
  if (!is_unitary(u)) {
    throw ValidationError("process_fidelity_unitary: target not unitary");
  }
  if (u.rows() != c.data_dim) {
    throw DimensionError("process_fidelity_unitary: dimension mismatch");
  }
  const double d = static_cast<double>(c.data_dim);
  double f = 0.0;
  for (const Matrix &k : c.kraus) f += std::norm(hs_inner(u, k));
  return std::clamp(f / (d * d), 0.0, 1.0);
}

MMatrix m_matrix(const Processor &p, const Matrix &u) {
  if (!is_unitary(u)) {
    throw ValidationError("m_matrix: target not unitary");
  }
  if (u.rows() != p.data_dim()) {
    throw DimensionError("m_matrix: dimension mismatch");
  }
  const Eigen::Index n = p.program_dim();
  Matrix c(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      c(j, k) = hs_inner(u, p.block(j, k));  // Tr(U^dag A_jk)
    }
  }
  const double d = static_cast<double>(p.data_dim());
  MMatrix m;
  m.entries = (c.adjoint() * c) / (d * d);
  m.target = u;
  return m;
}

OptimalProgramResult optimal_program(const Processor &p, const Matrix &u) {
  const MMatrix m = m_matrix(p, u);
  const EigResult e = hermitian_eig(m.entries);
  OptimalProgramResult r{ProgramState(e.eigenvectors.col(0)),
                         std::clamp(e.eigenvalues(0), 0.0, 1.0)};
  return r;
}

std::pair<Eigen::Index, double> best_basis_program(
    const std::vector<Matrix> &u_ops, const Matrix &u) {
  if (u_ops.empty()) {
    throw DimensionError("best_basis_program: empty operator list");
  }
  if (!is_unitary(u)) {
    throw ValidationError("best_basis_program: target not unitary");
  }
  const double d = static_cast<double>(u.rows());
  Eigen::Index best = 0;
  double best_f = -1.0;
  for (std::size_t k = 0; k < u_ops.size(); ++k) {
    if (!is_unitary(u_ops[k])) {
      throw ValidationError("best_basis_program: member not unitary");
    }
    const double f = std::norm(hs_inner(u, u_ops[k])) / (d * d);
    if (f > best_f + 1e-15) {
      best_f = f;
      best = static_cast<Eigen::Index>(k);
    }
  }
  return {best, std::clamp(best_f, 0.0, 1.0)};
}

double epsilon_g(const Processor &p, const std::vector<Matrix> &targets,
                 const std::optional<std::vector<ProgramState>>
                     &program_candidates) {
  if (targets.empty()) {
    throw DimensionError("epsilon_g: empty target list");
  }
  double min_best = 1.0;
  for (const Matrix &u : targets) {
    double best = 0.0;
    if (program_candidates) {
      const MMatrix m = m_matrix(p, u);
      for (const ProgramState &xi : *program_candidates) {
        const double f = std::real(
            (xi.amplitudes().adjoint() * m.entries * xi.amplitudes())(0, 0));
        best = std::max(best, f);
      }
    } else {
      best = optimal_program(p, u).fidelity;
    }
    min_best = std::min(min_best, best);
  }
  return 1.0 - min_best;
}

}  // namespace qproc
