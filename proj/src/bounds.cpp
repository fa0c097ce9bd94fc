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

#include "qproc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace qproc {
namespace bounds {

namespace {

// Distance from the origin to the segment [a, b] in the complex plane.
double segment_distance(Complex a, Complex b) {
  const Complex ab = b - a;
  const double len_sq = std::norm(ab);
  if (len_sq < 1e-30) return std::abs(a);
  double t = -(a.real() * ab.real() + a.imag() * ab.imag()) / len_sq;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(a + t * ab);
}

// Distance from the origin to the convex hull of points on the unit circle.
// The hull vertices are the points themselves (all extreme); edges connect
// angularly adjacent points.  The origin lies inside iff no circular gap
// between consecutive phases exceeds pi.
double hull_distance(const std::vector<Complex> &points) {
  if (points.empty()) return 0.0;
  std::vector<double> phases;
  phases.reserve(points.size());
  for (const Complex &p : points) phases.push_back(std::arg(p));
  std::sort(phases.begin(), phases.end());
  const std::size_t n = phases.size();
  double max_gap = phases.front() + 2.0 * std::numbers::pi - phases.back();
  for (std::size_t i = 1; i < n; ++i) {
    max_gap = std::max(max_gap, phases[i] - phases[i - 1]);
  }
  if (n >= 3 && max_gap <= std::numbers::pi) return 0.0;
  if (n >= 2 && max_gap < std::numbers::pi) return 0.0;
  double best = 1.0;  // vertex distance: all points on the unit circle
  for (std::size_t i = 0; i < n; ++i) {
    const Complex a = std::polar(1.0, phases[i]);
    const Complex b = std::polar(1.0, phases[(i + 1) % n]);
    best = std::min(best, segment_distance(a, b));
  }
  return best;
}

}  // namespace

void UnitarySet::validate() const {
  if (members.empty()) throw DimensionError("UnitarySet: empty");
  for (const Matrix &u : members) {
    if (u.rows() != dim || u.cols() != dim) {
      throw DimensionError("UnitarySet: member dimension mismatch");
    }
    if (!is_unitary(u)) throw ValidationError("UnitarySet: member not unitary");
  }
}

double eta(const Matrix &u1, const Matrix &u2) {
  if (u1.rows() != u2.rows() || u1.cols() != u2.cols()) {
    throw DimensionError("eta: dimension mismatch");
  }
  if (!is_unitary(u1) || !is_unitary(u2)) {
    throw ValidationError("eta: input not unitary");
  }
  const Matrix w = u1.adjoint() * u2;
  Eigen::ComplexEigenSolver<Matrix> es(w, false);
  std::vector<Complex> eigs;
  eigs.reserve(static_cast<std::size_t>(w.rows()));
  for (Eigen::Index i = 0; i < w.rows(); ++i) {
    // W is unitary; project eigenvalues back onto the unit circle.
    eigs.push_back(std::polar(1.0, std::arg(es.eigenvalues()(i))));
  }
  const double d = hull_distance(eigs);
  return std::clamp(1.0 - d * d, 0.0, 1.0);
}

double overlap_bound(const Matrix &u1, const Matrix &u2, double epsilon,
                     Eigen::Index d) {
  if (epsilon < 0.0 || epsilon > 1.0) {
    throw ValidationError("overlap_bound: epsilon out of [0,1]");
  }
  const double dd = static_cast<double>(d);
  const double e = eta(u1, u2);
  double f;
  if (e <= tol().eta) {
    f = 1.0;  // indistinguishable pair, no constraint
  } else {
    f = std::min(1.0, (epsilon * dd + 2.0 * std::sqrt(epsilon * dd)) / e);
  }
  const double y = (f / dd) * std::abs(hs_inner(u1, u2));
  return y + 2.0 * std::sqrt(epsilon) + epsilon;
}

double q_value(double y_max, double epsilon, QFormula formula) {
  if (y_max < 0.0 || epsilon < 0.0) {
    throw ValidationError("q_value: negative argument");
  }
  const double mid = (formula == QFormula::general)
                         ? 2.0 * std::sqrt(epsilon)
                         : 2.0 * std::sqrt(2.0 * epsilon);
  return y_max + mid + epsilon;
}

std::optional<Eigen::Index> k_q(double q) {
  if (q <= 0.0) return std::nullopt;
  const double limit = 1.0 / q + 1.0;
  double k = std::ceil(limit) - 1.0;  // largest integer strictly below
  if (k >= limit) k -= 1.0;           // limit itself an integer
  k = std::max(k, 1.0);
  return static_cast<Eigen::Index>(k);
}

BoundReport dimension_bound(const UnitarySet &set, double epsilon,
                            QFormula formula) {
  set.validate();
  if (epsilon < 0.0 || epsilon > 1.0) {
    throw ValidationError("dimension_bound: epsilon out of [0,1]");
  }
  const Eigen::Index m = static_cast<Eigen::Index>(set.members.size());
  const double dd = static_cast<double>(set.dim);
  BoundReport r;
  r.epsilon = epsilon;
  r.y = RealMatrix::Zero(m, m);
  r.eta = RealMatrix::Zero(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index k = j + 1; k < m; ++k) {
      const double e = eta(set.members[j], set.members[k]);
      double f;
      if (e <= tol().eta) {
        f = 1.0;
      } else {
        f = std::min(1.0, (epsilon * dd + 2.0 * std::sqrt(epsilon * dd)) / e);
      }
      const double y =
          (f / dd) * std::abs(hs_inner(set.members[j], set.members[k]));
      r.eta(j, k) = r.eta(k, j) = e;
      r.y(j, k) = r.y(k, j) = y;
      r.y_max = std::max(r.y_max, y);
    }
  }
  r.q = q_value(r.y_max, epsilon, formula);
  r.k_q = k_q(r.q);
  if (!r.k_q) {
    r.min_dimension = m;
  } else {
    r.min_dimension = std::min(m, *r.k_q);
  }
  return r;
}

bool linear_independence_oracle(const std::vector<Vector> &vectors) {
  if (vectors.empty()) return true;
  const Eigen::Index k = static_cast<Eigen::Index>(vectors.size());
  Matrix gram(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      if (vectors[i].size() != vectors[j].size()) {
        throw DimensionError("linear_independence_oracle: dimension mismatch");
      }
      gram(i, j) = vectors[static_cast<std::size_t>(i)].dot(
          vectors[static_cast<std::size_t>(j)]);
    }
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(gram, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() > tol().rank;
}

UnitarySet pauli_set() {
  UnitarySet s;
  s.dim = 2;
  s.members = {Matrix::Identity(2, 2), pauli_x(), pauli_y(), pauli_z()};
  s.labels = {"I", "X", "Y", "Z"};
  return s;
}

}  // namespace bounds
}  // namespace qproc
