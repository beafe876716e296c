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
#include <cstddef>
#include <memory>
#include <vector>

#include "bayescorr/errors.hpp"
#include "bayescorr/game.hpp"
#include "bayescorr/linalg.hpp"
#include "bayescorr/mwu.hpp"
#include "bayescorr/transforms.hpp"

namespace bayescorr {

// Rewards share the |Theta| x |A| layout of a policy; rows are unconstrained.
using RewardTable = TypeWisePolicy;

// One player's online learner over type-wise policies. Each round the
// caller takes Decide(), computes rewards for it, then calls Observe().
class Learner {
 public:
  virtual ~Learner() = default;
  virtual const TypeWisePolicy& Decide() = 0;
  virtual void Observe(const RewardTable& reward) = 0;

  // Feed the previous round's reward (if any), then decide.
  const TypeWisePolicy& Step(const RewardTable* previous) {
    if (previous != nullptr) Observe(*previous);
    return Decide();
  }
};

namespace internal {

inline void CheckRewardShape(const RewardTable& u, int nt, int na) {
  if (u.num_types() != nt || u.num_actions() != na) {
    Fail(ErrorKind::kDimensionMismatch, "reward table shape");
  }
}

}  // namespace internal

// Minimizes untruthful swap regret. Subroutines: a fixed-rate Hedge over
// reported types per true type, and a doubling Hedge over actions per
// (true type, reported type, recommended action). The decision is the
// fixed point of the transform they jointly define.
class UntruthfulLearner : public Learner {
 public:
  UntruthfulLearner(int num_types, int num_actions, int horizon,
                    std::vector<double> type_weights,
                    FixedPointOptions fp = {})
      : nt_(num_types), na_(num_actions), rho_(std::move(type_weights)), fp_(fp),
        x_(TypeWisePolicy::Uniform(num_types, num_actions)),
        q_(num_types * num_actions, num_types * num_actions) {
    if (static_cast<int>(rho_.size()) != nt_) Fail(ErrorKind::kDimensionMismatch, "type weights");
    for (int t = 0; t < nt_; ++t) {
      type_experts_.emplace_back(nt_, horizon, rho_[t]);
      for (int tp = 0; tp < nt_; ++tp)
        for (int ap = 0; ap < na_; ++ap) action_experts_.emplace_back(na_, rho_[t]);
    }
  }

  int num_types() const { return nt_; }
  int num_actions() const { return na_; }

  const TypeWisePolicy& Decide() override {
    if (!started_) {
      started_ = true;
      return x_;
    }
    for (int t = 0; t < nt_; ++t) {
      const auto& w = type_experts_[t].distribution();
      for (int tp = 0; tp < nt_; ++tp)
        for (int ap = 0; ap < na_; ++ap) {
          const auto& y = expert(t, tp, ap).distribution();
          for (int a = 0; a < na_; ++a) q_(t * na_ + a, tp * na_ + ap) = w[tp] * y[a];
        }
    }
    x_ = FixedPoint(q_, nt_, na_, x_, fp_, &last_);
    return x_;
  }

  void Observe(const RewardTable& u) override {
    internal::CheckRewardShape(u, nt_, na_);
    std::vector<double> type_reward(nt_), action_reward(na_);
    for (int t = 0; t < nt_; ++t) {
      const double r = rho_[t];
      for (int tp = 0; tp < nt_; ++tp) {
        double acc = 0.0;
        for (int ap = 0; ap < na_; ++ap) {
          const double xp = x_(tp, ap);
          auto& e = expert(t, tp, ap);
          const auto& y = e.distribution();
          for (int a = 0; a < na_; ++a) {
            action_reward[a] = std::min(xp * r * u(t, a), r);
            acc += y[a] * action_reward[a];
          }
          e.Update(action_reward);
        }
        type_reward[tp] = std::min(acc, r);
      }
      type_experts_[t].Update(type_reward);
    }
  }

  const TypeWisePolicy& current() const { return x_; }
  const FixedPointResult& last_fixed_point() const { return last_; }

  // sqrt(T ln|Theta| / 2) + 6 sqrt(T |A| ln|A|) + 2 |A| ln|A|.
  static double Bound(int num_types, int num_actions, int horizon) {
    const double lt = std::log(static_cast<double>(num_types));
    const double la = std::log(static_cast<double>(num_actions));
    return std::sqrt(0.5 * horizon * lt) + 6.0 * std::sqrt(horizon * num_actions * la) +
           2.0 * num_actions * la;
  }

 private:
  DoublingMwu& expert(int t, int tp, int ap) {
    return action_experts_[(static_cast<std::size_t>(t) * nt_ + tp) * na_ + ap];
  }

  int nt_, na_;
  std::vector<double> rho_;
  FixedPointOptions fp_;
  TypeWisePolicy x_;
  Eigen::MatrixXd q_;
  std::vector<Mwu> type_experts_;
  std::vector<DoublingMwu> action_experts_;
  FixedPointResult last_;
  bool started_ = false;
};

// Blum-Mansour swap-regret learner over |A| actions, one doubling Hedge
// per recommended action; the decision is the stationary distribution.
class SwapLearner {
 public:
  explicit SwapLearner(int num_actions, double range = 1.0, FixedPointOptions fp = {})
      : na_(num_actions), range_(range), fp_(fp),
        x_(TypeWisePolicy::Uniform(1, num_actions)), p_(num_actions, num_actions) {
    for (int a = 0; a < na_; ++a) experts_.emplace_back(na_, range_);
  }

  const std::vector<double>& Decide() {
    if (!started_) {
      started_ = true;
      return x_.data();
    }
    for (int ap = 0; ap < na_; ++ap) {
      const auto& y = experts_[ap].distribution();
      for (int a = 0; a < na_; ++a) p_(a, ap) = y[a];
    }
    x_ = FixedPoint(p_, 1, na_, x_, fp_);
    return x_.data();
  }

  // reward in [0, range] per action.
  void Observe(std::span<const double> reward) {
    std::vector<double> r(na_);
    for (int ap = 0; ap < na_; ++ap) {
      const double xp = x_(0, ap);
      for (int a = 0; a < na_; ++a) r[a] = std::min(xp * reward[a], range_);
      experts_[ap].Update(r);
    }
  }

 private:
  int na_;
  double range_;
  FixedPointOptions fp_;
  TypeWisePolicy x_;
  Eigen::MatrixXd p_;
  std::vector<DoublingMwu> experts_;
  bool started_ = false;
};

// Minimizes type-wise swap regret: an independent swap learner per type,
// fed rewards scaled by the type's prior weight.
class TypewiseLearner : public Learner {
 public:
  TypewiseLearner(int num_types, int num_actions, std::vector<double> type_weights,
                  FixedPointOptions fp = {})
      : nt_(num_types), na_(num_actions), rho_(std::move(type_weights)),
        x_(TypeWisePolicy::Uniform(num_types, num_actions)) {
    if (static_cast<int>(rho_.size()) != nt_) Fail(ErrorKind::kDimensionMismatch, "type weights");
    for (int t = 0; t < nt_; ++t) per_type_.emplace_back(na_, rho_[t], fp);
  }

  const TypeWisePolicy& Decide() override {
    for (int t = 0; t < nt_; ++t) {
      const auto& d = per_type_[t].Decide();
      for (int a = 0; a < na_; ++a) x_(t, a) = d[a];
    }
    return x_;
  }

  void Observe(const RewardTable& u) override {
    internal::CheckRewardShape(u, nt_, na_);
    std::vector<double> r(na_);
    for (int t = 0; t < nt_; ++t) {
      for (int a = 0; a < na_; ++a) r[a] = rho_[t] * u(t, a);
      per_type_[t].Observe(r);
    }
  }

  // Sum over types of rho(theta) (6 sqrt(T |A| ln|A|) + 2 |A| ln|A|).
  static double Bound(int num_actions, int horizon) {
    const double la = std::log(static_cast<double>(num_actions));
    return 6.0 * std::sqrt(horizon * num_actions * la) + 2.0 * num_actions * la;
  }

 private:
  int nt_, na_;
  std::vector<double> rho_;
  TypeWisePolicy x_;
  std::vector<SwapLearner> per_type_;
};

inline constexpr std::size_t kDefaultLearnerStrategyCap = 1024;

// Swap regret over pure type-to-action strategies: a doubling Hedge over
// actions per (strategy, type); the transition s -> s' has probability
// prod_theta z_{s', theta}(s(theta)) and sigma is its stationary vector.
class StrategySwapLearner : public Learner {
 public:
  StrategySwapLearner(int num_types, int num_actions,
                      std::size_t cap = kDefaultLearnerStrategyCap, FixedPointOptions fp = {})
      : nt_(num_types), na_(num_actions), fp_(fp),
        x_(TypeWisePolicy::Uniform(num_types, num_actions)) {
    const double s = std::pow(static_cast<double>(na_), nt_);
    if (s > static_cast<double>(cap)) Fail(ErrorKind::kCapExceeded, "strategy set exceeds cap");
    ns_ = static_cast<int>(s);
    radix_ = MixedRadix(std::vector<int>(nt_, na_));
    sigma_ = Eigen::VectorXd::Constant(ns_, 1.0 / ns_);
    p_.resize(ns_, ns_);
    for (int k = 0; k < ns_ * nt_; ++k) experts_.emplace_back(na_, 1.0);
  }

  int num_strategies() const { return ns_; }
  const MixedRadix& strategies() const { return radix_; }
  const Eigen::VectorXd& sigma() const { return sigma_; }

  const TypeWisePolicy& Decide() override {
    if (started_) {
      for (int sp = 0; sp < ns_; ++sp) {
        for (int s = 0; s < ns_; ++s) {
          double v = 1.0;
          for (int t = 0; t < nt_ && v != 0.0; ++t) {
            v *= experts_[static_cast<std::size_t>(sp) * nt_ + t].distribution()[radix_.Digit(s, t)];
          }
          p_(s, sp) = v;
        }
      }
      sigma_ = BlockFixedPoint(p_, 1, ns_, sigma_, fp_).x;
    }
    started_ = true;
    std::fill(x_.data().begin(), x_.data().end(), 0.0);
    for (int s = 0; s < ns_; ++s)
      for (int t = 0; t < nt_; ++t) x_(t, radix_.Digit(s, t)) += sigma_(s);
    return x_;
  }

  void Observe(const RewardTable& u) override {
    internal::CheckRewardShape(u, nt_, na_);
    std::vector<double> r(na_);
    for (int s = 0; s < ns_; ++s)
      for (int t = 0; t < nt_; ++t) {
        for (int a = 0; a < na_; ++a) r[a] = std::min(sigma_(s) * u(t, a), 1.0);
        experts_[static_cast<std::size_t>(s) * nt_ + t].Update(r);
      }
  }

  // 6 sqrt(T |S| ln|A|) + 2 |S| ln|A|.
  static double Bound(int num_strategies, int num_actions, int horizon) {
    const double la = std::log(static_cast<double>(num_actions));
    return 6.0 * std::sqrt(static_cast<double>(horizon) * num_strategies * la) +
           2.0 * num_strategies * la;
  }

 private:
  int nt_, na_, ns_ = 0;
  FixedPointOptions fp_;
  TypeWisePolicy x_;
  MixedRadix radix_;
  Eigen::VectorXd sigma_;
  Eigen::MatrixXd p_;
  std::vector<DoublingMwu> experts_;
  bool started_ = false;
};

}  // namespace bayescorr
