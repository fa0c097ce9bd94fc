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

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "qproc/bounds.hpp"
#include "qproc/processor.hpp"

namespace qproc {
namespace io {

/// Matrix wire format: {"rows": r, "cols": c, "re": [...], "im": [...]},
/// entries row-major.  All entries must be finite.
Matrix matrix_from_json(const nlohmann::json &j);
nlohmann::json matrix_to_json(const Matrix &m);

Matrix load_matrix(const std::string &path);
void save_matrix(const std::string &path, const Matrix &m);

/// Processor file: {"data_dim": D, "program_dim": N, "blocks": [[m,...],...]}
/// or {"data_dim": D, "program_dim": N, "global_unitary": m}.
Processor processor_from_json(const nlohmann::json &j);
nlohmann::json processor_to_json(const Processor &p);
Processor load_processor_file(const std::string &path);

/// Unitary set file: {"dim": D, "members": [{"label": s, "matrix": m}, ...]}.
bounds::UnitarySet unitary_set_from_json(const nlohmann::json &j);
bounds::UnitarySet load_unitary_set_file(const std::string &path);

/// Parses an angle in radians; accepts plain decimals and exact pi
/// fractions such as "pi", "-pi/8", "3pi/4", "0.35".
double parse_angle(const std::string &text);

/// Resolves a processor spec: gallery names (`rotation:N=8`, `vc:D=2,N=8`,
/// `segmented:D=2,N=8`, `swap:D=2`, `cnot`, `cu:<file>`), `file:<path>`, or
/// a plain path (no `:`).
Processor resolve_processor(const std::string &spec);

/// Resolves a program spec against a processor: `theta:<angle>`,
/// `vctheta:<angle>`, `basis:<k>`, `file:<path>`, or a plain path.
ProgramState resolve_program(const std::string &spec, const Processor &p);

/// Resolves a target unitary spec: `utheta:<angle>`, `phase:D,<angle>`,
/// `file:<path>`, or a plain path.
Matrix resolve_target(const std::string &spec);

/// Resolves a unitary-set spec: builtin `pauli` or a file path.
bounds::UnitarySet resolve_unitary_set(const std::string &spec);

}  // namespace io
}  // namespace qproc
