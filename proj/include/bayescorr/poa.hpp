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
#include <limits>
#include <vector>

#include "bayescorr/errors.hpp"
#include "bayescorr/game.hpp"
#include "bayescorr/verifier.hpp"

namespace bayescorr {

// Quasilinear split of each payoff: utility_i(theta_i; a) =
// value_i(theta_i; a) - payment_i(a), with the game's payoff tensor equal
// to scale * utility + offset (an affine map into [0, 1]).
struct QuasilinearGame {
  BayesianGame game;
  std::vector<std::vector<double>> values;    // [i][theta_i * |A| + a]
  std::vector<std::vector<double>> payments;  // [i][a]
  double scale = 1.0, offset = 0.0;

  double Value(int i, int theta_i, std::size_t a) const {
    return values[i][static_cast<std::size_t>(theta_i) * game.num_action_profiles() + a];
  }
  double Payment(int i, std::size_t a) const { return payments[i][a]; }
  double Utility(int i, int theta_i, std::size_t a) const { return Value(i, theta_i, a) - Payment(i, a); }

  bool NonnegativeUtilities() const {
    for (int i = 0; i < game.num_players(); ++i)
      for (int t = 0; t < game.num_types(i); ++t)
        for (std::size_t a = 0; a < game.num_action_profiles(); ++a)
          if (Utility(i, t, a) < -kDerivedTol) return false;
    return true;
  }

  void Validate() const {
    const int n = game.num_players();
    const std::size_t na = game.num_action_profiles();
    if (game.scope() != PayoffScope::kOwnType) {
      Fail(ErrorKind::kInvalidGame, "quasilinear games need own-type payoffs");
    }
    if (!(scale > 0.0)) Fail(ErrorKind::kInvalidGame, "scale must be positive");
    if (static_cast<int>(values.size()) != n || static_cast<int>(payments.size()) != n) {
      Fail(ErrorKind::kInvalidGame, "decomposition player count");
    }
    for (int i = 0; i < n; ++i) {
      if (values[i].size() != static_cast<std::size_t>(game.num_types(i)) * na ||
          payments[i].size() != na) {
        Fail(ErrorKind::kInvalidGame, "decomposition tensor shape");
      }
      for (std::size_t t = 0; t < game.num_type_profiles(); ++t) {
        const int ti = game.type_profiles().Digit(t, i);
        for (std::size_t a = 0; a < na; ++a) {
          const double want = scale * Utility(i, ti, a) + offset;
          if (std::abs(game.payoff(i, t, a) - want) > 1e-12) {
            Fail(ErrorKind::kInvalidGame, "decomposition does not match payoffs");
          }
        }
      }
    }
  }
};

// a*_{i, theta, a_i}: the action player i switches to at type profile
// theta when recommended a_i.
struct DeviationMap {
  std::vector<std::vector<int>> table;  // [i][theta * |A_i| + a_i]

  int At(const BayesianGame& g, int i, std::size_t theta, int a_i) const {
    return table[i][theta * g.num_actions(i) + a_i];
  }

  // Deviation depending only on the player's own type.
  static DeviationMap OwnType(const BayesianGame& g, const std::vector<std::vector<int>>& by_type) {
    DeviationMap m;
    for (int i = 0; i < g.num_players(); ++i) {
      std::vector<int> row(g.num_type_profiles() * g.num_actions(i));
      for (std::size_t t = 0; t < g.num_type_profiles(); ++t)
        for (int a = 0; a < g.num_actions(i); ++a)
          row[t * g.num_actions(i) + a] = by_type[i][g.type_profiles().Digit(t, i)];
      m.table.push_back(std::move(row));
    }
    m.Validate(g);
    return m;
  }

  void Validate(const BayesianGame& g) const {
    if (static_cast<int>(table.size()) != g.num_players()) {
      Fail(ErrorKind::kDimensionMismatch, "deviation map players");
    }
    for (int i = 0; i < g.num_players(); ++i) {
      if (table[i].size() != g.num_type_profiles() * g.num_actions(i)) {
        Fail(ErrorKind::kDimensionMismatch, "deviation map shape");
      }
      for (int a : table[i])
        if (a < 0 || a >= g.num_actions(i)) Fail(ErrorKind::kInvalidGame, "deviation action");
    }
  }
};

enum class PoaMode { kGame, kMechanism };

struct SmoothnessSpec {
  PoaMode mode = PoaMode::kGame;
  double lambda = 0.0, mu = 0.0;
  DeviationMap deviation;
  std::vector<double> mu_grid;  // optional sweep
};

struct SmoothnessResult {
  bool holds = false;
  double min_slack = std::numeric_limits<double>::infinity();
  std::size_t theta = 0, action = 0;  // tightest (type profile, action profile)
};

namespace internal {

// Per (theta, a): deviation total, welfare-side subtrahend, and best welfare.
struct SmoothnessTerms {
  double lhs, subtrahend, best;
};

template <typename Fn>
void ForEachSmoothnessCell(const BayesianGame& g, const QuasilinearGame* q, const DeviationMap& dev,
                           Fn&& fn) {
  const int n = g.num_players();
  const auto& tr = g.type_profiles();
  const auto& ar = g.action_profiles();
  std::vector<int> th(n), ac(n);
  auto welfare = [&](std::size_t t, std::size_t a) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += q ? q->Value(i, th[i], a) : g.payoff(i, t, a);
    return s;
  };
  for (std::size_t t = 0; t < tr.size(); ++t) {
    tr.Decode(t, th);
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < ar.size(); ++a) best = std::max(best, welfare(t, a));
    for (std::size_t a = 0; a < ar.size(); ++a) {
      ar.Decode(a, ac);
      double lhs = 0.0;
      for (int i = 0; i < n; ++i) {
        const int own = ac[i];
        ac[i] = dev.At(g, i, t, own);
        const std::size_t da = ar.Encode(ac);
        ac[i] = own;
        lhs += q ? q->Utility(i, th[i], da) : g.payoff(i, t, da);
      }
      double sub = 0.0;
      if (q) {
        for (int i = 0; i < n; ++i) sub += q->Payment(i, a);
      } else {
        sub = welfare(t, a);
      }
      fn(t, a, SmoothnessTerms{lhs, sub, best});
    }
  }
}

inline SmoothnessResult CheckSmoothnessImpl(const BayesianGame& g, const QuasilinearGame* q,
                                            const SmoothnessSpec& spec) {
  spec.deviation.Validate(g);
  SmoothnessResult r;
  ForEachSmoothnessCell(g, q, spec.deviation, [&](std::size_t t, std::size_t a, const SmoothnessTerms& c) {
    const double slack = c.lhs - (spec.lambda * c.best - spec.mu * c.subtrahend);
    if (slack < r.min_slack) {
      r.min_slack = slack;
      r.theta = t;
      r.action = a;
    }
  });
  r.holds = r.min_slack >= -kDerivedTol;
  return r;
}

inline void CheckPoaAssumptions(const BayesianGame& g) {
  if (!g.product_prior()) Fail(ErrorKind::kAssumptionViolated, "prior is not a product");
  if (g.scope() != PayoffScope::kOwnType) {
    Fail(ErrorKind::kAssumptionViolated, "payoffs depend on others' types");
  }
}

}  // namespace internal

inline SmoothnessResult CheckSmoothness(const BayesianGame& g, const SmoothnessSpec& spec) {
  return internal::CheckSmoothnessImpl(g, nullptr, spec);
}
inline SmoothnessResult CheckSmoothness(const QuasilinearGame& q, const SmoothnessSpec& spec) {
  return internal::CheckSmoothnessImpl(q.game, &q, spec);
}

struct LambdaAtMu {
  double mu = 0.0, lambda = 0.0, bound = 0.0;
};

// Largest lambda making the inequality hold for fixed mu and deviation
// map; the constraint is linear in lambda so this is a minimum of ratios.
inline std::vector<LambdaAtMu> SmoothnessSweep(const BayesianGame& g, const QuasilinearGame* q,
                                               const DeviationMap& dev,
                                               const std::vector<double>& mu_grid) {
  dev.Validate(g);
  std::vector<LambdaAtMu> out;
  for (double mu : mu_grid) {
    double lam = std::numeric_limits<double>::infinity();
    internal::ForEachSmoothnessCell(g, q, dev, [&](std::size_t, std::size_t, const internal::SmoothnessTerms& c) {
      const double num = c.lhs + mu * c.subtrahend;
      if (c.best > 0.0) {
        lam = std::min(lam, num / c.best);
      } else if (num < -kDerivedTol) {
        lam = -std::numeric_limits<double>::infinity();
      }
    });
    const double denom = q ? std::max(1.0, mu) : 1.0 + mu;
    out.push_back({mu, lam, lam / denom});
  }
  return out;
}

struct PoaReport {
  double expected_welfare = 0.0;
  double optimal_welfare = 0.0;
  double ratio = 1.0;
  double bound = 0.0;
  double epsilon = 0.0;        // verifier's communication-equilibrium gap (payoff units)
  double slack = 0.0;          // n * eps / optimal welfare, in welfare units
  bool holds = false;
  SmoothnessResult smoothness;
};

namespace internal {

inline PoaReport PoaReportImpl(const BayesianGame& g, const QuasilinearGame* q,
                               const MixtureDistribution& mix, const SmoothnessSpec& spec,
                               double eps_tol, int threads) {
  CheckPoaAssumptions(g);
  if (q && spec.mu > 1.0 && !q->NonnegativeUtilities()) {
    Fail(ErrorKind::kAssumptionViolated, "mu > 1 needs nonnegative utilities");
  }
  PoaReport rep;
  rep.smoothness = CheckSmoothnessImpl(g, q, spec);
  if (!rep.smoothness.holds) Fail(ErrorKind::kAssumptionViolated, "smoothness inequality fails");
  const Certificate cert = Certify(g, mix, EquilibriumClass::kComm, threads);
  rep.epsilon = cert.epsilon;
  if (cert.epsilon > eps_tol) Fail(ErrorKind::kNotAnEquilibrium, "verifier epsilon above tolerance");

  const int n = g.num_players();
  const auto& tr = g.type_profiles();
  const auto& ar = g.action_profiles();
  std::vector<int> th(n), ac(n);
  std::vector<double> sw(tr.size() * ar.size());
  for (std::size_t t = 0; t < tr.size(); ++t) {
    tr.Decode(t, th);
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < ar.size(); ++a) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += q ? q->Value(i, th[i], a) : g.payoff(i, t, a);
      sw[t * ar.size() + a] = s;
      best = std::max(best, s);
    }
    rep.optimal_welfare += g.prior(t) * best;
  }
  for (const auto& c : mix.components) {
    for (std::size_t t = 0; t < tr.size(); ++t) {
      const double pt = g.prior(t) * c.weight;
      if (pt == 0.0) continue;
      tr.Decode(t, th);
      for (std::size_t a = 0; a < ar.size(); ++a) {
        ar.Decode(a, ac);
        double p = pt;
        for (int i = 0; i < n && p != 0.0; ++i) p *= c.policies[i](th[i], ac[i]);
        rep.expected_welfare += p * sw[t * ar.size() + a];
      }
    }
  }
  rep.ratio = rep.optimal_welfare == 0.0 ? 1.0 : rep.expected_welfare / rep.optimal_welfare;
  rep.bound = q ? spec.lambda / std::max(1.0, spec.mu) : spec.lambda / (1.0 + spec.mu);
  const double eps_units = q ? rep.epsilon / q->scale : rep.epsilon;
  rep.slack = rep.optimal_welfare == 0.0 ? 0.0 : n * eps_units / rep.optimal_welfare;
  rep.holds = rep.ratio >= rep.bound - rep.slack - kDerivedTol;
  return rep;
}

}  // namespace internal

inline PoaReport MakePoaReport(const BayesianGame& g, const MixtureDistribution& mix,
                               const SmoothnessSpec& spec, double eps_tol, int threads = 1) {
  return internal::PoaReportImpl(g, nullptr, mix, spec, eps_tol, threads);
}
inline PoaReport MakePoaReport(const QuasilinearGame& q, const MixtureDistribution& mix,
                               const SmoothnessSpec& spec, double eps_tol, int threads = 1) {
  q.Validate();
  return internal::PoaReportImpl(q.game, &q, mix, spec, eps_tol, threads);
}

}  // namespace bayescorr
