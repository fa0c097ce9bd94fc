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

// Command-line front end for the programmable-processor library.
//
// Exit codes: 0 success, 1 tolerance/assertion failure, 2 input error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "qproc/bounds.hpp"
#include "qproc/fidelity.hpp"
#include "qproc/gallery.hpp"
#include "qproc/io.hpp"
#include "qproc/processor.hpp"

using namespace qproc;
using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kSchemaVersion = 1;

// All emitted numbers are rounded to 12 significant digits so repeated runs
// produce identical bytes and downstream 1e-8 checks still have headroom.
double round12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::stod(buf);
}

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

json real_matrix_json(const RealMatrix &m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(round12(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

struct Grid {
  double start = 0.0;
  double stop = 2.0 * kPi;
  int points = 100;
};

Grid parse_grid(const std::string &text) {
  const auto first = text.find(':');
  const auto second = text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos) {
    throw IoError("grid spec must be start:stop:points");
  }
  Grid g;
  g.start = io::parse_angle(text.substr(0, first));
  g.stop = io::parse_angle(text.substr(first + 1, second - first - 1));
  try {
    g.points = std::stoi(text.substr(second + 1));
  } catch (const std::exception &) {
    throw IoError("malformed grid point count in '" + text + "'");
  }
  if (g.points < 1) throw IoError("grid needs at least one point");
  return g;
}

double grid_value(const Grid &g, int i) {
  if (g.points == 1) return g.start;
  return g.start + (g.stop - g.start) * double(i) / double(g.points - 1);
}

void emit(const std::string &text, const std::string &out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw IoError("cannot write file: " + out_path);
  out << text;
}

void emit_json(json j, const std::string &out_path, long seed) {
  j["schema_version"] = kSchemaVersion;
  j["seed"] = seed;
  emit(j.dump(2) + "\n", out_path);
}

// Sweep support: the simple program, per-point closed form, and target
// family depend on which gallery family the processor spec names.
struct SweepFamily {
  Processor processor;
  std::function<ProgramState(double)> simple_program;
  std::function<double(double)> closed_form;
  std::function<Matrix(double)> target;
};

SweepFamily make_sweep_family(const std::string &spec) {
  const auto colon = spec.find(':');
  const std::string name =
      colon == std::string::npos ? spec : spec.substr(0, colon);
  const Processor p = io::resolve_processor(spec);
  const Eigen::Index d = p.data_dim();
  const Eigen::Index n = p.program_dim();
  if (name == "rotation") {
    return {p, [n](double t) { return gallery::theta_program(n, t); },
            [n](double t) { return gallery::rotation_fidelity_closed_form(n, t); },
            [](double t) { return gallery::u_theta(t); }};
  }
  if (name == "vc") {
    return {p, [n](double t) { return gallery::vc_program(n, t); },
            [d, n](double t) { return gallery::vc_fidelity_closed_form(d, n, t); },
            [d](double t) { return gallery::phase_shift_unitary(d, t); }};
  }
  if (name == "segmented") {
    // Simple program: the basis state of the segment containing theta; the
    // closed-form column is the exact fidelity against that segment center.
    const double width = 2.0 * kPi / double(n);
    const auto segment = [n, width](double t) {
      double wrapped = std::fmod(t, 2.0 * kPi);
      if (wrapped < 0) wrapped += 2.0 * kPi;
      Eigen::Index j = static_cast<Eigen::Index>(wrapped / width);
      return std::min(j, n - 1);
    };
    return {p,
            [n, segment](double t) { return ProgramState::basis(n, segment(t)); },
            [d, n, width, segment](double t) {
              const double center = (2.0 * double(segment(t)) + 1.0) * kPi /
                                    double(n);
              (void)width;
              const double delta = t - center;
              return std::norm(std::exp(Complex(0, delta)) +
                               Complex(double(d - 1), 0)) /
                     double(d * d);
            },
            [d](double t) { return gallery::phase_shift_unitary(d, t); }};
  }
  throw IoError("sweep requires a rotation:, vc: or segmented: processor spec");
}

int cmd_validate(const std::string &proc_spec, const std::string &format,
                 const std::string &out, long seed) {
  const Processor p = io::resolve_processor(proc_spec);
  const ProcessorValidation v = p.validate();
  const double dim = double(p.data_dim() * p.program_dim());
  const bool ok = v.passed(tol().unit, dim);
  if (format == "csv") {
    std::string text =
        "column_dev,row_dev,unitarity_dev,passed\n" + fmt12(v.column_dev) +
        "," + fmt12(v.row_dev) + "," + fmt12(v.unitarity_dev) + "," +
        (ok ? "true" : "false") + "\n";
    emit(text, out);
  } else {
    emit_json(json{{"command", "validate"},
                   {"processor", proc_spec},
                   {"data_dim", p.data_dim()},
                   {"program_dim", p.program_dim()},
                   {"column_dev", round12(v.column_dev)},
                   {"row_dev", round12(v.row_dev)},
                   {"unitarity_dev", round12(v.unitarity_dev)},
                   {"passed", ok}},
              out, seed);
  }
  return ok ? 0 : 1;
}

int cmd_fidelity(const std::string &proc_spec, const std::string &prog_spec,
                 const std::string &target_spec, const std::string &format,
                 const std::string &out, long seed) {
  const Processor p = io::resolve_processor(proc_spec);
  const ProgramState xi = io::resolve_program(prog_spec, p);
  const Matrix u = io::resolve_target(target_spec);
  const Channel c = program_kraus(p, xi);
  const double closed = process_fidelity_unitary(u, c);
  const double choi = process_fidelity(c, unitary_channel(u));
  const double diff = closed - choi;
  const bool ok = std::abs(diff) <= tol().fid;
  if (format == "csv") {
    emit("fidelity_closed_form,fidelity_choi,difference\n" + fmt12(closed) +
             "," + fmt12(choi) + "," + fmt12(diff) + "\n",
         out);
  } else {
    emit_json(json{{"command", "fidelity"},
                   {"processor", proc_spec},
                   {"program", prog_spec},
                   {"target", target_spec},
                   {"fidelity_closed_form", round12(closed)},
                   {"fidelity_choi", round12(choi)},
                   {"difference", round12(diff)}},
              out, seed);
  }
  return ok ? 0 : 1;
}

int cmd_optimal_program(const std::string &proc_spec,
                        const std::string &target_spec,
                        const std::string &format, const std::string &out,
                        long seed) {
  const Processor p = io::resolve_processor(proc_spec);
  const Matrix u = io::resolve_target(target_spec);
  const MMatrix m = m_matrix(p, u);
  const EigResult eig = hermitian_eig(m.entries);
  const OptimalProgramResult r = optimal_program(p, u);
  if (format == "csv") {
    std::string text = "index,amplitude_re,amplitude_im,eigenvalue\n";
    for (Eigen::Index k = 0; k < r.program.dim(); ++k) {
      text += std::to_string(k) + "," + fmt12(r.program.amplitudes()(k).real()) +
              "," + fmt12(r.program.amplitudes()(k).imag()) + "," +
              fmt12(eig.eigenvalues(k)) + "\n";
    }
    text += "# fidelity," + fmt12(r.fidelity) + "\n";
    emit(text, out);
  } else {
    json amps_re = json::array();
    json amps_im = json::array();
    for (Eigen::Index k = 0; k < r.program.dim(); ++k) {
      amps_re.push_back(round12(r.program.amplitudes()(k).real()));
      amps_im.push_back(round12(r.program.amplitudes()(k).imag()));
    }
    json spectrum = json::array();
    for (Eigen::Index k = 0; k < eig.eigenvalues.size(); ++k) {
      spectrum.push_back(round12(eig.eigenvalues(k)));
    }
    emit_json(json{{"command", "optimal-program"},
                   {"processor", proc_spec},
                   {"target", target_spec},
                   {"fidelity", round12(r.fidelity)},
                   {"program_re", std::move(amps_re)},
                   {"program_im", std::move(amps_im)},
                   {"m_spectrum", std::move(spectrum)}},
              out, seed);
  }
  return 0;
}

int cmd_sweep(const std::string &proc_spec, const Grid &grid,
              const std::string &format, const std::string &out, long seed) {
  const SweepFamily fam = make_sweep_family(proc_spec);
  json rows = json::array();
  std::string csv = "theta,F_simulated,F_closed_form,F_optimal\n";
  for (int i = 0; i < grid.points; ++i) {
    const double theta = grid_value(grid, i);
    const Matrix u = fam.target(theta);
    const double sim = process_fidelity_unitary(
        u, program_kraus(fam.processor, fam.simple_program(theta)));
    const double cf = fam.closed_form(theta);
    const double opt = optimal_program(fam.processor, u).fidelity;
    if (format == "csv") {
      csv += fmt12(theta) + "," + fmt12(sim) + "," + fmt12(cf) + "," +
             fmt12(opt) + "\n";
    } else {
      rows.push_back(json{{"theta", round12(theta)},
                          {"F_simulated", round12(sim)},
                          {"F_closed_form", round12(cf)},
                          {"F_optimal", round12(opt)}});
    }
  }
  if (format == "csv") {
    emit(csv, out);
  } else {
    emit_json(json{{"command", "sweep"},
                   {"processor", proc_spec},
                   {"rows", std::move(rows)}},
              out, seed);
  }
  return 0;
}

int cmd_bounds(const std::string &set_spec, double epsilon,
               const std::string &formula_name, const std::string &format,
               const std::string &out, long seed) {
  const bounds::UnitarySet set = io::resolve_unitary_set(set_spec);
  const bounds::QFormula formula = formula_name == "alt"
                                       ? bounds::QFormula::alt
                                       : bounds::QFormula::general;
  const bounds::BoundReport r = bounds::dimension_bound(set, epsilon, formula);
  if (format == "csv") {
    std::string text = "epsilon,y_max,q,k_q,min_dimension\n";
    text += fmt12(r.epsilon) + "," + fmt12(r.y_max) + "," + fmt12(r.q) + "," +
            (r.k_q ? std::to_string(*r.k_q) : "") + "," +
            std::to_string(r.min_dimension) + "\n";
    emit(text, out);
  } else {
    json j{{"command", "bounds"},
           {"set", set_spec},
           {"epsilon", round12(r.epsilon)},
           {"q_formula", formula_name},
           {"labels", set.labels},
           {"y", real_matrix_json(r.y)},
           {"eta", real_matrix_json(r.eta)},
           {"y_max", round12(r.y_max)},
           {"q", round12(r.q)},
           {"min_dimension", r.min_dimension}};
    if (r.k_q) {
      j["k_q"] = *r.k_q;
    } else {
      j["k_q"] = nullptr;
    }
    emit_json(std::move(j), out, seed);
  }
  return 0;
}

int cmd_compare(Eigen::Index d, Eigen::Index n, int points,
                const std::string &format, const std::string &out, long seed) {
  if (d < 2 || n < 1) throw IoError("compare needs D >= 2 and N >= 1");
  const Processor seg = gallery::segmented_processor(d, n);
  double worst_seg = 0.0;
  double worst_vc = 0.0;
  for (int i = 0; i < points; ++i) {
    const double theta = 2.0 * kPi * double(i) / double(points);
    const Matrix u = gallery::phase_shift_unitary(d, theta);
    worst_seg = std::max(worst_seg, 1.0 - optimal_program(seg, u).fidelity);
    worst_vc =
        std::max(worst_vc, 1.0 - gallery::vc_fidelity_closed_form(d, n, theta));
  }
  const double p_success = double(n - 1) / double(n);
  if (format == "csv") {
    emit("D,N,vc_worst_infidelity,segmented_worst_infidelity,"
         "segmented_better,vc_success_probability\n" +
             std::to_string(d) + "," + std::to_string(n) + "," +
             fmt12(worst_vc) + "," + fmt12(worst_seg) + "," +
             (worst_seg < worst_vc ? "true" : "false") + "," +
             fmt12(p_success) + "\n",
         out);
  } else {
    emit_json(json{{"command", "compare"},
                   {"D", d},
                   {"N", n},
                   {"vc_worst_infidelity", round12(worst_vc)},
                   {"segmented_worst_infidelity", round12(worst_seg)},
                   {"segmented_better", worst_seg < worst_vc},
                   {"vc_success_probability", round12(p_success)}},
              out, seed);
  }
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Programmable quantum processor simulator"};
  app.require_subcommand(1);

  std::string proc_spec, prog_spec, target_spec, set_spec = "pauli";
  std::string grid_spec = "0:2pi:100";
  std::string format = "json";
  std::string out_path;
  std::string q_formula = "general";
  double epsilon = 0.0;
  long seed = 0;
  Eigen::Index cmp_d = 2, cmp_n = 8;
  int cmp_points = 1000;

  const auto add_common = [&](CLI::App *cmd) {
    cmd->add_option("--format", format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", out_path, "Write output to a file");
    cmd->add_option("--seed", seed, "Seed recorded in the output");
  };

  CLI::App *validate = app.add_subcommand("validate", "Check processor constraints");
  validate->add_option("--processor", proc_spec)->required();
  add_common(validate);

  CLI::App *fidelity = app.add_subcommand("fidelity", "Process fidelity of a programmed channel");
  fidelity->add_option("--processor", proc_spec)->required();
  fidelity->add_option("--program", prog_spec)->required();
  fidelity->add_option("--target", target_spec)->required();
  add_common(fidelity);

  CLI::App *optimal = app.add_subcommand("optimal-program", "Best program for a target unitary");
  optimal->add_option("--processor", proc_spec)->required();
  optimal->add_option("--target", target_spec)->required();
  add_common(optimal);

  CLI::App *sweep = app.add_subcommand("sweep", "Fidelity sweep over a theta grid");
  sweep->add_option("--processor", proc_spec)->required();
  sweep->add_option("--grid", grid_spec, "start:stop:points");
  add_common(sweep);

  CLI::App *bounds_cmd = app.add_subcommand("bounds", "Program-dimension lower bound for a unitary set");
  bounds_cmd->add_option("--set", set_spec);
  bounds_cmd->add_option("--epsilon", epsilon)->check(CLI::Range(0.0, 1.0));
  bounds_cmd->add_option("--q-formula", q_formula)
      ->check(CLI::IsMember({"general", "alt"}));
  add_common(bounds_cmd);

  CLI::App *compare = app.add_subcommand("compare", "Segmented vs probabilistic phase processor");
  compare->add_option("--D", cmp_d);
  compare->add_option("--N", cmp_n);
  compare->add_option("--points", cmp_points)->check(CLI::PositiveNumber);
  add_common(compare);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(validate)) {
      return cmd_validate(proc_spec, format, out_path, seed);
    }
    if (app.got_subcommand(fidelity)) {
      return cmd_fidelity(proc_spec, prog_spec, target_spec, format, out_path,
                          seed);
    }
    if (app.got_subcommand(optimal)) {
      return cmd_optimal_program(proc_spec, target_spec, format, out_path,
                                 seed);
    }
    if (app.got_subcommand(sweep)) {
      return cmd_sweep(proc_spec, parse_grid(grid_spec), format, out_path,
                       seed);
    }
    if (app.got_subcommand(bounds_cmd)) {
      return cmd_bounds(set_spec, epsilon, q_formula, format, out_path, seed);
    }
    if (app.got_subcommand(compare)) {
      return cmd_compare(cmp_d, cmp_n, cmp_points, format, out_path, seed);
    }
  } catch (const IoError &e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionError &e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError &e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
