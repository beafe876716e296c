// Copyright 2026 The bayescorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <vector>

#include "bayescorr/errors.hpp"

namespace bayescorr {

struct Phase1Result {
  double value = 0.0;     // min sum of artificials
  Eigen::VectorXd x;      // primal point (feasible iff value ~ 0)
  Eigen::VectorXd y;      // duals: A^T y <= 0 and b^T y = value at optimum
  long pivots = 0;
};

// Feasibility of {x >= 0 : A x = b} by the phase-1 simplex method on a
// dense tableau, Bland's rule for both entering and leaving variables.
inline Phase1Result Phase1Simplex(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                                  double pivot_tol = 1e-11) {
  const Eigen::Index m = a.rows(), k = a.cols();
  if (b.size() != m) Fail(ErrorKind::kDimensionMismatch, "LP shape");
  const Eigen::Index width = k + m + 1;
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m + 1, width);
  std::vector<double> sign(m, 1.0);
  std::vector<Eigen::Index> basis(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    sign[i] = b(i) < 0.0 ? -1.0 : 1.0;
    t.row(i).head(k) = sign[i] * a.row(i);
    t(i, k + i) = 1.0;
    t(i, width - 1) = sign[i] * b(i);
    basis[i] = k + i;
  }
  // Objective row holds reduced costs; last entry is minus the objective.
  for (Eigen::Index i = 0; i < m; ++i) {
    t.row(m).head(k) -= t.row(i).head(k);
    t(m, width - 1) -= t(i, width - 1);
  }

  Phase1Result out;
  for (;;) {
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < k + m; ++j) {
      if (t(m, j) < -pivot_tol) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;
    Eigen::Index leave = -1;
    double best = 0.0;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (t(i, enter) <= pivot_tol) continue;
      const double ratio = t(i, width - 1) / t(i, enter);
      if (leave < 0 || ratio < best - 1e-15 ||
          (std::abs(ratio - best) <= 1e-15 && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) Fail(ErrorKind::kInternal, "phase-1 LP unbounded");
    t.row(leave) /= t(leave, enter);
    for (Eigen::Index i = 0; i <= m; ++i) {
      if (i == leave) continue;
      const double f = t(i, enter);
      if (f != 0.0) t.row(i) -= f * t.row(leave);
    }
    basis[leave] = enter;
    ++out.pivots;
  }

  out.value = -t(m, width - 1);
  out.x = Eigen::VectorXd::Zero(k);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (basis[i] < k) out.x(basis[i]) = std::max(0.0, t(i, width - 1));
  }
  out.y.resize(m);
  for (Eigen::Index i = 0; i < m; ++i) out.y(i) = sign[i] * (1.0 - t(m, k + i));
  return out;
}

}  // namespace bayescorr
