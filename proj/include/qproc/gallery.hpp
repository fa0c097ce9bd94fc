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

#include <utility>
#include <vector>

#include "qproc/processor.hpp"

namespace qproc {
namespace gallery {

/// Controlled-unitary processor: blocks A_jk = delta_jk U_k, one perfectly
/// implemented unitary per program basis state.
Processor controlled_u_processor(const std::vector<Matrix> &ops);

/// Cyclic shift operators on an N-dimensional space:
/// E+|k> = |k+1 mod N>, E- = E+^dag.
std::pair<Matrix, Matrix> shift_ops(Eigen::Index n);

/// |theta> = (1/sqrt(N)) sum_k e^{-ik theta} |k>.  At theta = 2 pi m / N it
/// is a simultaneous eigenstate of the shift operators.
ProgramState theta_program(Eigen::Index n, double theta);

/// Qubit rotation processor: G = exp[i (pi/2) (s+ (x) E- + s- (x) E+)] on a
/// 2 x N space, built through the skew-Hermitian matrix exponential.
Processor rotation_processor(Eigen::Index n);

/// U(theta) = exp[i (pi/2) (e^{-i theta} s+ + e^{i theta} s-)], the 2x2
/// rotation the processor above performs perfectly at theta = 2 pi m / N.
Matrix u_theta(double theta);

/// Process fidelity of the rotation processor driven by the simple |theta>
/// program:
///   F = (1/N^2) sum_m cos^2(t_m) sin^2(N t_m / 2) / sin^2(t_m / 2),
/// t_m = theta_m - theta.  The removable singularity at t_m = 0 (mod 2 pi)
/// is replaced by its limit N^2 cos^2(t_m).
double rotation_fidelity_closed_form(Eigen::Index n, double theta);

/// Qudit phase shift diag(e^{i theta}, 1, ..., 1).
Matrix phase_shift_unitary(Eigen::Index d, double theta);

/// Probabilistic phase-shift processor (program dimension N) used here as an
/// approximate one: blocks A_jk = delta_jk X + delta_{k,(j+1) mod N} P with
/// X = I - |0><0| and P = |0><0|.
Processor vidal_cirac_processor(Eigen::Index d, Eigen::Index n);

/// |Xi> = (1/sqrt(N)) sum_k e^{ik theta} |k>.
ProgramState vc_program(Eigen::Index n, double theta);

/// F = 1 - (2(D-1)/(N D^2)) (1 - cos(N theta)).
double vc_fidelity_closed_form(Eigen::Index d, Eigen::Index n, double theta);

/// Controlled-unitary processor over the segment centers
/// U((2j+1) pi / N), j = 0..N-1, approximating the whole phase-shift group.
Processor segmented_processor(Eigen::Index d, Eigen::Index n);

/// Worst-case infidelity bound of the segmented processor:
/// (2(D-1)/D^2) (1 - cos(pi/N)).
double segmented_infidelity_bound(Eigen::Index d, Eigen::Index n);

/// SWAP gate as a processor (program dimension = data dimension D).  The
/// induced channel replaces the data state by the program state; the process
/// fidelity against any unitary is 1/D^2 for every program.
Processor swap_processor(Eigen::Index d);

/// C-NOT as a processor: controlled-unitary over {I, sigma_x}.
Processor cnot_processor();

}  // namespace gallery
}  // namespace qproc
