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

#include "qproc/io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qproc/gallery.hpp"

namespace qproc {
namespace io {

using nlohmann::json;

namespace {

json load_json(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error &e) {
    throw IoError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

// Parses "k1=v1,k2=v2" into a map of integers.
std::map<std::string, Eigen::Index> parse_params(const std::string &text) {
  std::map<std::string, Eigen::Index> params;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw IoError("malformed parameter '" + item + "', expected k=v");
    }
    try {
      params[item.substr(0, eq)] = std::stol(item.substr(eq + 1));
    } catch (const std::exception &) {
      throw IoError("malformed parameter value in '" + item + "'");
    }
  }
  return params;
}

Eigen::Index require_param(const std::map<std::string, Eigen::Index> &params,
                           const std::string &key, const std::string &spec) {
  const auto it = params.find(key);
  if (it == params.end()) {
    throw IoError("spec '" + spec + "' is missing parameter " + key);
  }
  return it->second;
}

Vector column_vector(const Matrix &m, const std::string &what) {
  if (m.cols() == 1) return m.col(0);
  if (m.rows() == 1) return m.row(0).transpose();
  throw IoError(what + ": expected a vector-shaped matrix");
}

}  // namespace

Matrix matrix_from_json(const json &j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("re") || !j.contains("im")) {
    throw IoError("matrix object requires fields rows, cols, re, im");
  }
  const Eigen::Index rows = j.at("rows").get<Eigen::Index>();
  const Eigen::Index cols = j.at("cols").get<Eigen::Index>();
  const auto &re = j.at("re");
  const auto &im = j.at("im");
  if (rows < 0 || cols < 0 ||
      static_cast<Eigen::Index>(re.size()) != rows * cols ||
      static_cast<Eigen::Index>(im.size()) != rows * cols) {
    throw IoError("matrix entry count does not match rows*cols");
  }
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      const std::size_t idx = static_cast<std::size_t>(r * cols + c);
      const double x = re.at(idx).get<double>();
      const double y = im.at(idx).get<double>();
      if (!std::isfinite(x) || !std::isfinite(y)) {
        throw IoError("matrix entry not finite");
      }
      m(r, c) = Complex(x, y);
    }
  }
  return m;
}

json matrix_to_json(const Matrix &m) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re.push_back(m(r, c).real());
      im.push_back(m(r, c).imag());
    }
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"re", std::move(re)},
              {"im", std::move(im)}};
}

Matrix load_matrix(const std::string &path) {
  return matrix_from_json(load_json(path));
}

void save_matrix(const std::string &path, const Matrix &m) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write file: " + path);
  out << matrix_to_json(m).dump(2) << "\n";
}

Processor processor_from_json(const json &j) {
  if (!j.is_object() || !j.contains("data_dim") || !j.contains("program_dim")) {
    throw IoError("processor object requires data_dim and program_dim");
  }
  const Eigen::Index d = j.at("data_dim").get<Eigen::Index>();
  const Eigen::Index n = j.at("program_dim").get<Eigen::Index>();
  if (j.contains("global_unitary")) {
    return Processor::from_global_unitary(
        matrix_from_json(j.at("global_unitary")), d, n);
  }
  if (!j.contains("blocks")) {
    throw IoError("processor object requires blocks or global_unitary");
  }
  const auto &rows = j.at("blocks");
  if (static_cast<Eigen::Index>(rows.size()) != n) {
    throw IoError("processor blocks grid must be program_dim x program_dim");
  }
  std::vector<std::vector<Matrix>> blocks;
  blocks.reserve(rows.size());
  for (const auto &row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != n) {
      throw IoError("processor blocks grid must be program_dim x program_dim");
    }
    std::vector<Matrix> out_row;
    out_row.reserve(row.size());
    for (const auto &cell : row) out_row.push_back(matrix_from_json(cell));
    blocks.push_back(std::move(out_row));
  }
  return Processor(d, std::move(blocks));
}

json processor_to_json(const Processor &p) {
  json rows = json::array();
  for (Eigen::Index j = 0; j < p.program_dim(); ++j) {
    json row = json::array();
    for (Eigen::Index k = 0; k < p.program_dim(); ++k) {
      row.push_back(matrix_to_json(p.block(j, k)));
    }
    rows.push_back(std::move(row));
  }
  return json{{"data_dim", p.data_dim()},
              {"program_dim", p.program_dim()},
              {"blocks", std::move(rows)}};
}

Processor load_processor_file(const std::string &path) {
  return processor_from_json(load_json(path));
}

bounds::UnitarySet unitary_set_from_json(const json &j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("members")) {
    throw IoError("unitary set requires fields dim and members");
  }
  bounds::UnitarySet s;
  s.dim = j.at("dim").get<Eigen::Index>();
  for (const auto &member : j.at("members")) {
    if (!member.contains("matrix")) {
      throw IoError("unitary set member requires a matrix field");
    }
    s.members.push_back(matrix_from_json(member.at("matrix")));
    s.labels.push_back(member.value("label", ""));
  }
  s.validate();
  return s;
}

bounds::UnitarySet load_unitary_set_file(const std::string &path) {
  return unitary_set_from_json(load_json(path));
}

double parse_angle(const std::string &text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '*') s += c;
  }
  if (s.empty()) throw IoError("empty angle");
  double sign = 1.0;
  std::size_t pos = 0;
  if (s[pos] == '+' || s[pos] == '-') {
    if (s[pos] == '-') sign = -1.0;
    ++pos;
  }
  const auto pi_pos = s.find("pi", pos);
  if (pi_pos == std::string::npos) {
    std::size_t used = 0;
    double v;
    try {
      v = std::stod(s.substr(pos), &used);
    } catch (const std::exception &) {
      throw IoError("cannot parse angle '" + text + "'");
    }
    if (pos + used != s.size()) {
      throw IoError("cannot parse angle '" + text + "'");
    }
    return sign * v;
  }
  double coef = 1.0;
  if (pi_pos > pos) {
    std::size_t used = 0;
    try {
      coef = std::stod(s.substr(pos, pi_pos - pos), &used);
    } catch (const std::exception &) {
      throw IoError("cannot parse angle '" + text + "'");
    }
    if (used != pi_pos - pos) throw IoError("cannot parse angle '" + text + "'");
  }
  double denom = 1.0;
  std::size_t after = pi_pos + 2;
  if (after < s.size()) {
    if (s[after] != '/') throw IoError("cannot parse angle '" + text + "'");
    std::size_t used = 0;
    try {
      denom = std::stod(s.substr(after + 1), &used);
    } catch (const std::exception &) {
      throw IoError("cannot parse angle '" + text + "'");
    }
    if (after + 1 + used != s.size() || denom == 0.0) {
      throw IoError("cannot parse angle '" + text + "'");
    }
  }
  return sign * coef * std::numbers::pi / denom;
}

Processor resolve_processor(const std::string &spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    if (spec == "cnot") return gallery::cnot_processor();
    return load_processor_file(spec);
  }
  const std::string name = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  if (name == "file") return load_processor_file(rest);
  if (name == "cu") {
    const bounds::UnitarySet s = load_unitary_set_file(rest);
    return gallery::controlled_u_processor(s.members);
  }
  const auto params = parse_params(rest);
  if (name == "rotation") {
    return gallery::rotation_processor(require_param(params, "N", spec));
  }
  if (name == "vc") {
    return gallery::vidal_cirac_processor(require_param(params, "D", spec),
                                          require_param(params, "N", spec));
  }
  if (name == "segmented") {
    return gallery::segmented_processor(require_param(params, "D", spec),
                                        require_param(params, "N", spec));
  }
  if (name == "swap") {
    return gallery::swap_processor(require_param(params, "D", spec));
  }
  throw IoError("unknown processor spec '" + spec + "'");
}

ProgramState resolve_program(const std::string &spec, const Processor &p) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    return ProgramState(column_vector(load_matrix(spec), "program"));
  }
  const std::string name = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  if (name == "file") {
    return ProgramState(column_vector(load_matrix(rest), "program"));
  }
  if (name == "theta") {
    return gallery::theta_program(p.program_dim(), parse_angle(rest));
  }
  if (name == "vctheta") {
    return gallery::vc_program(p.program_dim(), parse_angle(rest));
  }
  if (name == "basis") {
    Eigen::Index k = 0;
    try {
      k = std::stol(rest);
    } catch (const std::exception &) {
      throw IoError("malformed basis index '" + rest + "'");
    }
    return ProgramState::basis(p.program_dim(), k);
  }
  throw IoError("unknown program spec '" + spec + "'");
}

Matrix resolve_target(const std::string &spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) return load_matrix(spec);
  const std::string name = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  if (name == "file") return load_matrix(rest);
  if (name == "utheta") return gallery::u_theta(parse_angle(rest));
  if (name == "phase") {
    const auto comma = rest.find(',');
    if (comma == std::string::npos) {
      throw IoError("phase spec needs D and an angle: phase:D,theta");
    }
    Eigen::Index d = 0;
    try {
      d = std::stol(rest.substr(0, comma));
    } catch (const std::exception &) {
      throw IoError("malformed phase dimension in '" + spec + "'");
    }
    return gallery::phase_shift_unitary(d, parse_angle(rest.substr(comma + 1)));
  }
  throw IoError("unknown target spec '" + spec + "'");
}

bounds::UnitarySet resolve_unitary_set(const std::string &spec) {
  if (spec == "pauli") return bounds::pauli_set();
  if (spec.rfind("file:", 0) == 0) {
    return load_unitary_set_file(spec.substr(5));
  }
  return load_unitary_set_file(spec);
}

}  // namespace io
}  // namespace qproc
