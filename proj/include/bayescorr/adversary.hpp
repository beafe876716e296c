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
#include <cstdint>
#include <numeric>
#include <ostream>
#include <vector>

#include "bayescorr/errors.hpp"
#include "bayescorr/learners.hpp"
#include "bayescorr/regret.hpp"
#include "bayescorr/rng.hpp"

namespace bayescorr {

// Two actions, 2^(B+1) types under a uniform prior. The first 2^B types
// carry a distinct B-bit pattern (a random bijection); during block b of
// length T/B the reward of action 0 equals bit b of the pattern. The other
// 2^B types see independent fair-coin rewards. Action 1 always gets the
// complementary reward.
class LowerBoundInstance {
 public:
  LowerBoundInstance(int bits, long horizon, std::uint64_t seed)
      : bits_(bits), horizon_(horizon) {
    if (bits < 1 || bits > 20) Fail(ErrorKind::kInvalidGame, "bits must be in [1, 20]");
    if (horizon < bits || horizon % bits != 0) {
      Fail(ErrorKind::kInvalidGame, "horizon must be a positive multiple of the block count");
    }
    half_ = 1 << bits;
    block_ = horizon / bits;
    pattern_.resize(half_);
    std::iota(pattern_.begin(), pattern_.end(), 0u);
    RandomStream rng(seed, 0xad, 1);
    for (int k = half_ - 1; k > 0; --k) {
      std::swap(pattern_[k], pattern_[rng.Below(static_cast<std::uint64_t>(k) + 1)]);
    }
    noise_.resize(static_cast<std::size_t>(half_) * horizon);
    RandomStream coins(seed, 0xad, 2);
    for (auto& c : noise_) c = static_cast<std::uint8_t>(coins.Bits() >> 63);
  }

  int bits() const { return bits_; }
  long horizon() const { return horizon_; }
  long block_length() const { return block_; }
  int num_types() const { return 2 * half_; }
  int num_actions() const { return 2; }
  std::vector<double> prior() const { return std::vector<double>(num_types(), 1.0 / num_types()); }
  unsigned pattern(int theta) const { return pattern_[theta]; }

  int Block(long t) const { return static_cast<int>(t / block_); }

  // Reward of action 0 at 0-based round t for type theta.
  double RewardA0(long t, int theta) const {
    if (theta < half_) return static_cast<double>((pattern_[theta] >> (bits_ - 1 - Block(t))) & 1u);
    return static_cast<double>(noise_[static_cast<std::size_t>(theta - half_) * horizon_ + t]);
  }

  RewardTable Rewards(long t) const {
    RewardTable u(num_types(), 2);
    for (int th = 0; th < num_types(); ++th) {
      u(th, 0) = RewardA0(t, th);
      u(th, 1) = 1.0 - u(th, 0);
    }
    return u;
  }

  // The type whose action-0 reward is 1 in every block, and the one whose
  // action-1 reward is.
  int AlwaysA0Type() const { return Find(static_cast<unsigned>(half_ - 1)); }
  int AlwaysA1Type() const { return Find(0u); }

  void ExportCsv(std::ostream& os) const {
    os << "t,theta,reward_a0\n";
    for (long t = 0; t < horizon_; ++t)
      for (int th = 0; th < num_types(); ++th)
        os << (t + 1) << ',' << th << ',' << static_cast<int>(RewardA0(t, th)) << '\n';
  }

 private:
  int Find(unsigned p) const {
    return static_cast<int>(std::find(pattern_.begin(), pattern_.end(), p) - pattern_.begin());
  }

  int bits_;
  long horizon_, block_ = 1;
  int half_ = 2;
  std::vector<unsigned> pattern_;
  std::vector<std::uint8_t> noise_;
};

enum class AdversaryLearner { kUntruthful, kTypewise, kOracle, kUniform };

struct ExperimentResult {
  double untruthful_regret = 0.0;
  double typewise_regret = 0.0;
  double bound = 0.0;             // untruthful learner's guarantee at T
  double a0_mass_on_theta0 = 0.0;  // sum_t pi^t(theta^0; a0)
  double a1_mass_on_theta1 = 0.0;  // sum_t pi^t(theta^1; a1)
  double diagnostic_threshold = 0.0;  // T - |Theta| R
};

inline ExperimentResult RunExperiment(const LowerBoundInstance& inst, AdversaryLearner kind) {
  const int nt = inst.num_types();
  const long T = inst.horizon();
  const std::vector<double> rho = inst.prior();
  RegretLedger ledger(nt, 2, rho);
  std::unique_ptr<Learner> learner;
  if (kind == AdversaryLearner::kUntruthful) {
    learner = std::make_unique<UntruthfulLearner>(nt, 2, static_cast<int>(T), rho);
  } else if (kind == AdversaryLearner::kTypewise) {
    learner = std::make_unique<TypewiseLearner>(nt, 2, rho);
  }
  const int t0 = inst.AlwaysA0Type(), t1 = inst.AlwaysA1Type();
  ExperimentResult out;
  TypeWisePolicy x(nt, 2);
  for (long t = 0; t < T; ++t) {
    const RewardTable u = inst.Rewards(t);
    switch (kind) {
      case AdversaryLearner::kUntruthful:
      case AdversaryLearner::kTypewise:
        x = learner->Decide();
        learner->Observe(u);
        break;
      case AdversaryLearner::kOracle:
        for (int th = 0; th < nt; ++th) {
          x(th, 0) = u(th, 0) >= u(th, 1) ? 1.0 : 0.0;
          x(th, 1) = 1.0 - x(th, 0);
        }
        break;
      case AdversaryLearner::kUniform:
        x = TypeWisePolicy::Uniform(nt, 2);
        break;
    }
    ledger.Accumulate(x, u);
    out.a0_mass_on_theta0 += x(t0, 0);
    out.a1_mass_on_theta1 += x(t1, 1);
  }
  out.untruthful_regret = ledger.Untruthful().value;
  out.typewise_regret = ledger.Typewise().value;
  out.bound = UntruthfulLearner::Bound(nt, 2, static_cast<int>(T));
  out.diagnostic_threshold = static_cast<double>(T) - nt * out.untruthful_regret;
  return out;
}

}  // namespace bayescorr
