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
#include <string>
#include <vector>

#include "qproc/linalg.hpp"
#include "qproc/types.hpp"

namespace qproc {
namespace bounds {

/// A labeled set of same-dimension unitaries.
struct UnitarySet {
  Eigen::Index dim = 0;
  std::vector<Matrix> members;
  std::vector<std::string> labels;  // parallel to members; may be empty

  void validate() const;
};

/// Which form of the pairwise-overlap ceiling q to use.  `general` is
/// q = Y_max + 2 sqrt(eps) + eps; `alt` substitutes 2 sqrt(2 eps) for the
/// middle term (a variant that appears in some statements of the bound but
/// is inconsistent with the general derivation; see NOTES.md).
enum class QFormula { general, alt };

/// Pairwise overlap/eta tables and the derived minimum program dimension
/// for implementing a unitary set with per-operator infidelity <= epsilon.
struct BoundReport {
  RealMatrix y;        // Y_jk = (F_jk / D) |(U_j|U_k)|, zero diagonal
  RealMatrix eta;      // pairwise distinguishability
  double y_max = 0.0;  // max over off-diagonal pairs
  double q = 0.0;
  std::optional<Eigen::Index> k_q;  // empty: no constraint (all independent)
  Eigen::Index min_dimension = 1;
  double epsilon = 0.0;
};

/// Distinguishability eta = max_psi [1 - |<psi|U1^dag U2|psi>|^2].
/// For the normal operator W = U1^dag U2 the minimum of |<psi|W|psi>| is the
/// Euclidean distance from the origin to the convex hull of W's eigenvalues,
/// so eta = 1 - d^2.  Zero iff the unitaries agree up to a global phase.
double eta(const Matrix &u1, const Matrix &u2);

/// Upper bound on the overlap of two near-perfect program vectors:
/// (F/D) |(U1|U2)| + 2 sqrt(eps) + eps with
/// F = min(1, (eps D + 2 sqrt(eps D)) / eta).  When eta <= tol().eta the
/// pair counts as indistinguishable and F = 1 (the bound is vacuous).
double overlap_bound(const Matrix &u1, const Matrix &u2, double epsilon,
                     Eigen::Index d);

/// q(Y_max, eps) = Y_max + 2 sqrt(eps) + eps.
double q_value(double y_max, double epsilon,
               QFormula formula = QFormula::general);

/// Largest integer strictly less than 1/q + 1: any family of up to k_q
/// program vectors with pairwise overlap <= q is linearly independent.
/// Empty when q <= 0 (no overlap, every family independent).
std::optional<Eigen::Index> k_q(double q);

/// Full pairwise report and the resulting lower bound on the program-space
/// dimension: M if M <= K_q, else K_q.
BoundReport dimension_bound(const UnitarySet &set, double epsilon,
                            QFormula formula = QFormula::general);

/// Gram-matrix rank test: true iff the vectors are linearly independent
/// (all Gram eigenvalues > tol().rank).
bool linear_independence_oracle(const std::vector<Vector> &vectors);

/// The four-element set {I, sigma_x, sigma_y, sigma_z}.
UnitarySet pauli_set();

}  // namespace bounds
}  // namespace qproc
