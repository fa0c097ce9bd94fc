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

namespace qproc {

/// Numerical tolerances used across the library.  Norm-based checks
/// (Hermiticity, unitarity, positivity) are absolute in the Hilbert-Schmidt
/// norm, scaled by the matrix dimension at the point of use.
struct Tolerances {
  double herm = 1e-10;   ///< Hermiticity deviation.
  double unit = 1e-10;   ///< Unitarity / Kraus-completeness deviation.
  double psd = 1e-10;    ///< Allowed negative eigenvalue magnitude.
  double eig = 1e-10;    ///< Eigendecomposition residuals, per dimension.
  double trace = 1e-8;   ///< Density-matrix trace deviation.
  double fid = 1e-8;     ///< Fidelity comparisons.
  double phase = 1e-8;   ///< Component threshold for eigenvector phase fixing.
  double eta = 1e-12;    ///< Below this, two unitaries count as equal up to phase.
  double prop = 1e-8;    ///< Kraus-proportionality test in success probability.
  double rank = 1e-10;   ///< Gram-eigenvalue threshold for rank decisions.
};

/// Process-wide tolerances.  All values are multiplied by the
/// QPROC_TOLERANCE_SCALE environment variable (default 1), read once at
/// first use.
const Tolerances &tol();

}  // namespace qproc
