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

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "bayescorr/errors.hpp"

namespace bayescorr {

namespace internal {

inline void CheckRewards(std::span<const double> reward, double range, std::size_t d) {
  if (reward.size() != d) Fail(ErrorKind::kDimensionMismatch, "reward length");
  const double slack = kDerivedTol * std::max(1.0, range);
  for (double r : reward) {
    if (!std::isfinite(r) || r < -slack || r > range + slack) {
      Fail(ErrorKind::kRewardOutOfRange, "reward outside [0, range]");
    }
  }
}

// Exponential weights kept in log space, shifted so the max is 0.
inline void Distribution(const std::vector<double>& logw, std::vector<double>& out) {
  const double mx = *std::max_element(logw.begin(), logw.end());
  double s = 0.0;
  for (std::size_t j = 0; j < logw.size(); ++j) {
    out[j] = std::exp(logw[j] - mx);
    s += out[j];
  }
  for (double& v : out) v /= s;
}

}  // namespace internal

// Hedge with a fixed rate eta = sqrt(8 ln d / T); rewards in [0, range].
class Mwu {
 public:
  Mwu() = default;
  Mwu(int d, int horizon, double range = 1.0)
      : Mwu(d, d > 1 ? std::sqrt(8.0 * std::log(static_cast<double>(d)) / horizon) : 0.0,
            range) {}
  Mwu(int d, double eta, double range)
      : d_(d), eta_(eta), range_(range), logw_(d, 0.0), p_(d, 1.0 / d) {
    if (d < 1) Fail(ErrorKind::kDimensionMismatch, "MWU needs at least one arm");
  }

  int size() const { return d_; }
  double eta() const { return eta_; }
  double range() const { return range_; }
  const std::vector<double>& distribution() const { return p_; }

  void Update(std::span<const double> reward) {
    internal::CheckRewards(reward, range_, d_);
    if (range_ <= 0.0 || d_ == 1) return;
    for (int j = 0; j < d_; ++j) logw_[j] += eta_ * reward[j] / range_;
    internal::Distribution(logw_, p_);
  }

  // r * sqrt(T ln d / 2).
  static double Bound(int d, int horizon, double range = 1.0) {
    return range * std::sqrt(0.5 * horizon * std::log(static_cast<double>(d)));
  }

 private:
  int d_ = 0;
  double eta_ = 0.0, range_ = 1.0;
  std::vector<double> logw_, p_;
};

// Anytime Hedge via a doubling budget on the best arm's in-epoch reward:
// U_0 = ln d, eta_k = sqrt(ln d / U_k), restart at uniform when the best
// in-epoch cumulative (in units of range) exceeds U_k, then U_{k+1} = 2 U_k.
class DoublingMwu {
 public:
  DoublingMwu() = default;
  explicit DoublingMwu(int d, double range = 1.0)
      : d_(d), range_(range), logw_(d, 0.0), cum_(d, 0.0), p_(d, 1.0 / d) {
    if (d < 1) Fail(ErrorKind::kDimensionMismatch, "MWU needs at least one arm");
    lnd_ = std::log(static_cast<double>(d));
    budget_ = lnd_;
    eta_ = d > 1 ? std::sqrt(lnd_ / budget_) : 0.0;
  }

  int size() const { return d_; }
  double range() const { return range_; }
  double eta() const { return eta_; }
  double budget() const { return budget_; }
  int epoch() const { return epoch_; }
  const std::vector<double>& distribution() const { return p_; }

  void Update(std::span<const double> reward) {
    internal::CheckRewards(reward, range_, d_);
    if (range_ <= 0.0 || d_ == 1) return;
    double best = 0.0;
    for (int j = 0; j < d_; ++j) {
      const double g = reward[j] / range_;
      logw_[j] += eta_ * g;
      cum_[j] += g;
      best = std::max(best, cum_[j]);
    }
    if (best > budget_) {
      budget_ *= 2.0;
      eta_ = std::sqrt(lnd_ / budget_);
      ++epoch_;
      std::fill(logw_.begin(), logw_.end(), 0.0);
      std::fill(cum_.begin(), cum_.end(), 0.0);
      std::fill(p_.begin(), p_.end(), 1.0 / d_);
      return;
    }
    internal::Distribution(logw_, p_);
  }

  // 6 sqrt(u* ln d) + 2 ln d, in units of range.
  static double Bound(int d, double best_total, double range = 1.0) {
    const double lnd = std::log(static_cast<double>(d));
    return range * (6.0 * std::sqrt(best_total / range * lnd) + 2.0 * lnd);
  }

 private:
  int d_ = 0;
  double range_ = 1.0, lnd_ = 0.0, budget_ = 0.0, eta_ = 0.0;
  int epoch_ = 0;
  std::vector<double> logw_, cum_, p_;
};

}  // namespace bayescorr
