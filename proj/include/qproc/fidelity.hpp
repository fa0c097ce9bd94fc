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

#include <optional>
#include <vector>

#include "qproc/processor.hpp"

namespace qproc {

/// Hermitian PSD kernel of the fidelity quadratic form in program
/// amplitudes: M = (1/D^2) C^dag C with C_jk = Tr(A_jk^dag U).  For any
/// program Xi, Xi^dag M Xi is the process fidelity between U and the channel
/// the processor induces from Xi.
struct MMatrix {
  Matrix entries;  // N x N
  Matrix target;   // the unitary U it was built for
};

struct OptimalProgramResult {
  ProgramState program;
  double fidelity = 0.0;
};

/// Uhlmann fidelity between the Choi states of two channels.
double process_fidelity(const Channel &c1, const Channel &c2);

/// Closed form for a unitary target: (1/D^2) sum_j |Tr(U^dag K_j)|^2.
/// Invariant under a global phase on U and under Kraus re-mixing.
double process_fidelity_unitary(const Matrix &u, const Channel &c);

MMatrix m_matrix(const Processor &p, const Matrix &u);

/// Top eigenpair of the M matrix: the best program and the fidelity it
/// achieves.  Within a degenerate top eigenspace any unit vector is equally
/// optimal; the phase-fixed eigenvector is returned for determinism.
OptimalProgramResult optimal_program(const Processor &p, const Matrix &u);

/// Best member of a controlled-unitary family: the index maximizing
/// (1/D^2) |Tr(U^dag U_k)|^2, ties broken by lowest index.
std::pair<Eigen::Index, double> best_basis_program(
    const std::vector<Matrix> &u_ops, const Matrix &u);

/// Processor accuracy over a finite target set:
/// 1 - min over targets of the best achievable fidelity.  The maximum over
/// mixed programs is attained at a pure program because the fidelity against
/// a unitary target is linear in the program density operator, so the best
/// achievable fidelity is the top M-matrix eigenvalue.  When
/// program_candidates is given the maximization runs over that discrete set
/// instead.
double epsilon_g(const Processor &p, const std::vector<Matrix> &targets,
                 const std::optional<std::vector<ProgramState>>
                     &program_candidates = std::nullopt);

}  // namespace qproc
