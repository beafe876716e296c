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
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "bayescorr/errors.hpp"
#include "bayescorr/game.hpp"
#include "bayescorr/learners.hpp"
#include "bayescorr/parallel.hpp"
#include "bayescorr/regret.hpp"
#include "bayescorr/rng.hpp"

namespace bayescorr {

inline constexpr std::size_t kDefaultEnumerationCap = 10'000'000;

// u_i(theta_i, a_i) = E_{theta_-i | theta_i} E_{a_-i ~ pi_-i} v_i, exactly.
inline RewardTable ExactReward(const BayesianGame& g, int i,
                               const std::vector<TypeWisePolicy>& profile,
                               std::size_t cap = kDefaultEnumerationCap) {
  if (g.OthersEnumerationSize(i) > cap) {
    Fail(ErrorKind::kEnumerationTooLarge, "exact reward enumeration exceeds cap");
  }
  const int nt = g.num_types(i), na = g.num_actions(i), n = g.num_players();
  RewardTable u(nt, na);
  const MixedRadix& ot = g.others_types(i);
  const MixedRadix& oa = g.others_actions(i);
  std::vector<int> others(n - 1), types(n - 1), acts(n - 1);
  for (int j = 0, k = 0; j < n; ++j)
    if (j != i) others[k++] = j;
  for (int ti = 0; ti < nt; ++ti) {
    const auto& cond = g.conditional(i, ti);
    for (std::size_t o = 0; o < ot.size(); ++o) {
      const double p = cond[o];
      if (p == 0.0) continue;
      ot.Decode(o, types);
      const std::size_t theta = g.JoinTypes(i, ti, o);
      for (std::size_t b = 0; b < oa.size(); ++b) {
        oa.Decode(b, acts);
        double q = p;
        for (int k = 0; k < n - 1 && q != 0.0; ++k) q *= profile[others[k]](types[k], acts[k]);
        if (q == 0.0) continue;
        for (int a = 0; a < na; ++a) u(ti, a) += q * g.payoff(i, theta, g.JoinActions(i, a, b));
      }
    }
  }
  for (double& v : u.data()) v = std::clamp(v, 0.0, 1.0);
  return u;
}

// ceil((8 / eps^2) ln(2 n T m / delta)) with m = max_i |Theta_i| |A_i|.
inline long SampleCount(int players, long horizon, long max_type_actions, double eps,
                        double delta) {
  return static_cast<long>(std::ceil(8.0 / (eps * eps) *
                                     std::log(2.0 * players * horizon * max_type_actions / delta)));
}

// Monte-Carlo reward: for each own type, `samples` draws of
// (theta_-i, a_-i) shared across the own actions.
inline RewardTable SampledReward(const BayesianGame& g, int i,
                                 const std::vector<TypeWisePolicy>& profile, long samples,
                                 RandomStream& rng) {
  const int nt = g.num_types(i), na = g.num_actions(i), n = g.num_players();
  RewardTable u(nt, na);
  const MixedRadix& ot = g.others_types(i);
  std::vector<int> others(n - 1), types(n - 1), acts(n - 1);
  for (int j = 0, k = 0; j < n; ++j)
    if (j != i) others[k++] = j;
  for (int ti = 0; ti < nt; ++ti) {
    if (g.marginal(i)[ti] <= 0.0) continue;
    const auto& cond = g.conditional(i, ti);
    for (long s = 0; s < samples; ++s) {
      const std::size_t o = rng.Discrete(cond);
      ot.Decode(o, types);
      for (int k = 0; k < n - 1; ++k) acts[k] = static_cast<int>(rng.Discrete(profile[others[k]].row(types[k])));
      const std::size_t theta = g.JoinTypes(i, ti, o);
      const std::size_t b = g.others_actions(i).Encode(acts);
      for (int a = 0; a < na; ++a) u(ti, a) += g.payoff(i, theta, g.JoinActions(i, a, b));
    }
    for (int a = 0; a < na; ++a) u(ti, a) /= static_cast<double>(samples);
  }
  return u;
}

enum class LearnerKind { kUntruthful, kTypewise, kStrategySwap };
enum class RewardMode { kExact, kSampled };

struct DynamicsConfig {
  LearnerKind learner = LearnerKind::kUntruthful;
  long horizon = 1000;
  RewardMode reward = RewardMode::kExact;
  double epsilon = 0.1;  // sampled mode accuracy
  double delta = 0.1;    // sampled mode failure probability
  std::uint64_t seed = 0;
  int threads = 1;
  int thinning = 1;      // keep every k-th round in the mixture
  int curve_every = 0;   // 0: no per-round regret curve
  bool audit_exact = false;  // sampled mode: also keep an exact-reward ledger
  std::size_t enumeration_cap = kDefaultEnumerationCap;
  std::size_t strategy_cap = kDefaultLearnerStrategyCap;
};

struct RegretPoint {
  long t = 0;
  int player = 0;
  double external = 0.0, typewise = 0.0, untruthful = 0.0, bound = 0.0;
};

struct RunResult {
  MixtureDistribution mixture;
  long horizon = 0;
  double certificate = 0.0;  // max_i untruthful regret_i / T
  std::vector<double> untruthful, typewise, external;
  std::vector<DeviationPair> witnesses;
  std::vector<double> bound;  // per player at T, for the learner's target regret
  std::vector<RegretPoint> curve;
  long samples_per_entry = 0;
  std::optional<double> audit_certificate;  // exact-reward ledger, sampled mode
};

// Anytime regret bound at round t for a learner tuned to horizon T.
inline double LearnerBound(LearnerKind kind, int nt, int na, long t, long horizon) {
  const double la = std::log(static_cast<double>(na));
  const double doubling = 6.0 * std::sqrt(static_cast<double>(t) * na * la) + 2.0 * na * la;
  switch (kind) {
    case LearnerKind::kUntruthful: {
      const double lt = std::log(static_cast<double>(nt));
      const double hedge = std::sqrt(lt / 8.0) *
                           (std::sqrt(static_cast<double>(horizon)) +
                            static_cast<double>(t) / std::sqrt(static_cast<double>(horizon)));
      return hedge + doubling;
    }
    case LearnerKind::kTypewise:
      return doubling;
    case LearnerKind::kStrategySwap: {
      const double s = std::pow(static_cast<double>(na), nt);
      return 6.0 * std::sqrt(static_cast<double>(t) * s * la) + 2.0 * s * la;
    }
  }
  return 0.0;
}

inline std::unique_ptr<Learner> MakeLearner(const BayesianGame& g, int i,
                                            const DynamicsConfig& cfg) {
  const int nt = g.num_types(i), na = g.num_actions(i);
  switch (cfg.learner) {
    case LearnerKind::kUntruthful:
      return std::make_unique<UntruthfulLearner>(nt, na, static_cast<int>(cfg.horizon),
                                                 g.marginal(i));
    case LearnerKind::kTypewise:
      return std::make_unique<TypewiseLearner>(nt, na, g.marginal(i));
    case LearnerKind::kStrategySwap:
      return std::make_unique<StrategySwapLearner>(nt, na, cfg.strategy_cap);
  }
  Fail(ErrorKind::kInternal, "unknown learner");
}

// Every player runs its learner against the others; returns the uniform
// mixture of the per-round product profiles and the regret certificate.
inline RunResult RunDynamics(const BayesianGame& g, const DynamicsConfig& cfg) {
  const int n = g.num_players();
  if (cfg.horizon < 1) Fail(ErrorKind::kInvalidDistribution, "horizon must be positive");
  if (cfg.thinning < 1) Fail(ErrorKind::kInvalidDistribution, "thinning must be positive");
  const bool sampled = cfg.reward == RewardMode::kSampled;
  const bool need_exact = !sampled || cfg.audit_exact;
  if (need_exact) {
    for (int i = 0; i < n; ++i) {
      if (g.OthersEnumerationSize(i) > cfg.enumeration_cap) {
        Fail(ErrorKind::kEnumerationTooLarge, "exact reward enumeration exceeds cap");
      }
    }
  }

  RunResult res;
  res.horizon = cfg.horizon;
  if (sampled) {
    long m = 0;
    for (int i = 0; i < n; ++i) m = std::max<long>(m, static_cast<long>(g.num_types(i)) * g.num_actions(i));
    res.samples_per_entry = SampleCount(n, cfg.horizon, m, cfg.epsilon, cfg.delta);
  }

  std::vector<std::unique_ptr<Learner>> learners;
  std::vector<RegretLedger> ledgers, audit;
  for (int i = 0; i < n; ++i) {
    learners.push_back(MakeLearner(g, i, cfg));
    ledgers.emplace_back(g.num_types(i), g.num_actions(i), g.marginal(i));
    if (sampled && cfg.audit_exact) audit.emplace_back(g.num_types(i), g.num_actions(i), g.marginal(i));
  }

  ThreadPool pool(cfg.threads);
  std::vector<TypeWisePolicy> profile(n);
  std::vector<RewardTable> rewards(n), exact(n);
  const long kept = cfg.horizon / cfg.thinning + (cfg.horizon % cfg.thinning != 0 ? 1 : 0);
  res.mixture.components.reserve(kept);

  for (long t = 1; t <= cfg.horizon; ++t) {
    pool.ParallelFor(n, [&](int i) { profile[i] = learners[i]->Decide(); });
    pool.ParallelFor(n, [&](int i) {
      if (sampled) {
        RandomStream rng(cfg.seed, static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(t), 1);
        rewards[i] = SampledReward(g, i, profile, res.samples_per_entry, rng);
        if (cfg.audit_exact) {
          exact[i] = ExactReward(g, i, profile, cfg.enumeration_cap);
          audit[i].Accumulate(profile[i], exact[i]);
        }
      } else {
        rewards[i] = ExactReward(g, i, profile, cfg.enumeration_cap);
      }
      learners[i]->Observe(rewards[i]);
      ledgers[i].Accumulate(profile[i], rewards[i]);
    });
    if ((t - 1) % cfg.thinning == 0) {
      res.mixture.components.push_back({1.0 / static_cast<double>(kept), profile});
    }
    if (cfg.curve_every > 0 && (t % cfg.curve_every == 0 || t == cfg.horizon)) {
      for (int i = 0; i < n; ++i) {
        RegretPoint p;
        p.t = t;
        p.player = i;
        p.external = ledgers[i].External().value;
        p.typewise = ledgers[i].Typewise().value;
        p.untruthful = ledgers[i].Untruthful().value;
        p.bound = LearnerBound(cfg.learner, g.num_types(i), g.num_actions(i), t, cfg.horizon);
        res.curve.push_back(p);
      }
    }
  }

  const double T = static_cast<double>(cfg.horizon);
  for (int i = 0; i < n; ++i) {
    const RegretValue us = ledgers[i].Untruthful();
    res.untruthful.push_back(us.value);
    res.witnesses.push_back(us.witness);
    res.typewise.push_back(ledgers[i].Typewise().value);
    res.external.push_back(ledgers[i].External().value);
    res.bound.push_back(
        LearnerBound(cfg.learner, g.num_types(i), g.num_actions(i), cfg.horizon, cfg.horizon));
    res.certificate = std::max(res.certificate, us.value / T);
  }
  if (sampled && cfg.audit_exact) {
    double a = 0.0;
    for (int i = 0; i < n; ++i) a = std::max(a, audit[i].Untruthful().value / T);
    res.audit_certificate = a;
  }
  return res;
}

}  // namespace bayescorr
