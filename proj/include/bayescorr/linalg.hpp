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

#include <algorithm>
#include <cmath>
#include <vector>

#include "bayescorr/errors.hpp"

namespace bayescorr {

struct FixedPointOptions {
  double tol = kFixedPointTol;
  int max_iterations = 100000;
};

struct FixedPointResult {
  enum class Method { kPower, kLinearSolve, kLazyPower };
  Eigen::VectorXd x;
  double residual = 0.0;
  int iterations = 0;
  Method method = Method::kPower;
};

inline double FixedPointResidual(const Eigen::MatrixXd& q, const Eigen::VectorXd& x) {
  return (q * x - x).cwiseAbs().maxCoeff();
}

namespace internal {

inline void NormalizeBlocks(Eigen::VectorXd& x, int blocks, int block_size) {
  for (int b = 0; b < blocks; ++b) {
    auto seg = x.segment(static_cast<Eigen::Index>(b) * block_size, block_size);
    seg = seg.cwiseMax(0.0);
    const double s = seg.sum();
    if (s > 0.0) {
      seg /= s;
    } else {
      seg.setConstant(1.0 / block_size);
    }
  }
}

}  // namespace internal

// Fixed point of a linear map that sends block-stochastic vectors (blocks
// of block_size entries, each a distribution) to block-stochastic vectors.
// Power iteration from the seed; on a residual plateau a dense solve of
// (Q - I)x = 0 with per-block normalization rows; if that is rank
// deficient, lazy iteration x <- (x + Qx)/2 from the uniform vector.
inline FixedPointResult BlockFixedPoint(const Eigen::MatrixXd& q, int blocks,
                                        int block_size, const Eigen::VectorXd& seed,
                                        const FixedPointOptions& opt = {}) {
  const Eigen::Index m = static_cast<Eigen::Index>(blocks) * block_size;
  if (q.rows() != m || q.cols() != m || seed.size() != m) {
    Fail(ErrorKind::kDimensionMismatch, "fixed point shape");
  }
  FixedPointResult out;
  Eigen::VectorXd x = seed;
  Eigen::VectorXd y(m);
  constexpr int kWindow = 32;
  std::vector<double> history;
  history.reserve(256);
  for (int k = 0; k < opt.max_iterations; ++k) {
    y.noalias() = q * x;
    const double r = (y - x).cwiseAbs().maxCoeff();
    if (r <= opt.tol) {
      out.x = x;
      out.residual = r;
      out.iterations = k;
      out.method = FixedPointResult::Method::kPower;
      return out;
    }
    history.push_back(r);
    const int h = static_cast<int>(history.size());
    if (h > 2 * kWindow && r > 0.5 * history[h - 1 - kWindow]) break;
    x = y;
    internal::NormalizeBlocks(x, blocks, block_size);
  }

  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m + blocks, m);
  a.topRows(m) = q - Eigen::MatrixXd::Identity(m, m);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(m + blocks);
  for (int blk = 0; blk < blocks; ++blk) {
    a.row(m + blk).segment(static_cast<Eigen::Index>(blk) * block_size, block_size)
        .setOnes();
    b(m + blk) = 1.0;
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  qr.setThreshold(1e-12);
  if (qr.rank() == m) {
    x = qr.solve(b);
    internal::NormalizeBlocks(x, blocks, block_size);
    const double r = FixedPointResidual(q, x);
    if (r <= opt.tol) {
      out.x = x;
      out.residual = r;
      out.iterations = static_cast<int>(history.size());
      out.method = FixedPointResult::Method::kLinearSolve;
      return out;
    }
  }

  x = Eigen::VectorXd::Constant(m, 1.0 / block_size);
  for (int k = 0; k < opt.max_iterations; ++k) {
    y.noalias() = q * x;
    const double r = (y - x).cwiseAbs().maxCoeff();
    if (r <= opt.tol) {
      out.x = x;
      out.residual = r;
      out.iterations = k;
      out.method = FixedPointResult::Method::kLazyPower;
      return out;
    }
    x = 0.5 * (x + y);
    internal::NormalizeBlocks(x, blocks, block_size);
  }
  Fail(ErrorKind::kNoConvergence, "fixed point did not converge");
}

}  // namespace bayescorr
