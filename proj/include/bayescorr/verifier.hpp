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
#include <cstddef>
#include <exception>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bayescorr/errors.hpp"
#include "bayescorr/game.hpp"
#include "bayescorr/parallel.hpp"
#include "bayescorr/simplex.hpp"
#include "bayescorr/transforms.hpp"

namespace bayescorr {

// G_i(t, t', a', a): expected payoff of a true type t player who reports t',
// is recommended a' and plays a, weighted by the recommendation probability
// and conditioned on t. Entries lie in [0, 1].
class DeviationTensor {
 public:
  DeviationTensor(int num_types, int num_actions)
      : nt_(num_types), na_(num_actions),
        g_(static_cast<std::size_t>(num_types) * num_types * num_actions * num_actions, 0.0) {}

  int num_types() const { return nt_; }
  int num_actions() const { return na_; }
  double& operator()(int t, int tp, int ap, int a) { return g_[Index(t, tp, ap, a)]; }
  double operator()(int t, int tp, int ap, int a) const { return g_[Index(t, tp, ap, a)]; }

 private:
  std::size_t Index(int t, int tp, int ap, int a) const {
    return ((static_cast<std::size_t>(t) * nt_ + tp) * na_ + ap) * na_ + a;
  }
  int nt_, na_;
  std::vector<double> g_;
};

namespace internal {

inline std::vector<int> OtherPlayers(int n, int i) {
  std::vector<int> o;
  for (int j = 0; j < n; ++j)
    if (j != i) o.push_back(j);
  return o;
}

}  // namespace internal

inline DeviationTensor ComputeDeviationTensor(const BayesianGame& g, int i,
                                              const TabularDistribution& pi) {
  const int nt = g.num_types(i), na = g.num_actions(i);
  DeviationTensor out(nt, na);
  const MixedRadix& ot = g.others_types(i);
  const MixedRadix& oa = g.others_actions(i);
  for (int t = 0; t < nt; ++t) {
    const auto& cond = g.conditional(i, t);
    for (std::size_t o = 0; o < ot.size(); ++o) {
      const double p = cond[o];
      if (p == 0.0) continue;
      const std::size_t theta = g.JoinTypes(i, t, o);
      for (int tp = 0; tp < nt; ++tp) {
        const std::size_t reported = g.JoinTypes(i, tp, o);
        for (std::size_t b = 0; b < oa.size(); ++b)
          for (int ap = 0; ap < na; ++ap) {
            const double q = p * pi(reported, g.JoinActions(i, ap, b));
            if (q == 0.0) continue;
            for (int a = 0; a < na; ++a) {
              out(t, tp, ap, a) += q * g.payoff(i, theta, g.JoinActions(i, a, b));
            }
          }
      }
    }
  }
  return out;
}

// Expands a mixture component-wise: each component contributes
// w * pi_i(t'; a') * u(t, a) with u the reward against the other players'
// component policies.
inline DeviationTensor ComputeDeviationTensor(const BayesianGame& g, int i,
                                              const MixtureDistribution& mix) {
  const int nt = g.num_types(i), na = g.num_actions(i), n = g.num_players();
  DeviationTensor out(nt, na);
  const MixedRadix& ot = g.others_types(i);
  const MixedRadix& oa = g.others_actions(i);
  const std::vector<int> others = internal::OtherPlayers(n, i);
  std::vector<int> types(n - 1), acts(n - 1);
  std::vector<double> u(static_cast<std::size_t>(nt) * na);
  std::vector<double> weight_others(oa.size());
  for (const auto& c : mix.components) {
    if (c.weight == 0.0) continue;
    std::fill(u.begin(), u.end(), 0.0);
    for (int t = 0; t < nt; ++t) {
      const auto& cond = g.conditional(i, t);
      for (std::size_t o = 0; o < ot.size(); ++o) {
        if (cond[o] == 0.0) continue;
        ot.Decode(o, types);
        const std::size_t theta = g.JoinTypes(i, t, o);
        for (std::size_t b = 0; b < oa.size(); ++b) {
          oa.Decode(b, acts);
          double q = cond[o];
          for (int k = 0; k < n - 1 && q != 0.0; ++k) q *= c.policies[others[k]](types[k], acts[k]);
          if (q == 0.0) continue;
          for (int a = 0; a < na; ++a) u[t * na + a] += q * g.payoff(i, theta, g.JoinActions(i, a, b));
        }
      }
    }
    const TypeWisePolicy& own = c.policies[i];
    for (int t = 0; t < nt; ++t)
      for (int tp = 0; tp < nt; ++tp)
        for (int ap = 0; ap < na; ++ap) {
          const double x = c.weight * own(tp, ap);
          if (x == 0.0) continue;
          for (int a = 0; a < na; ++a) out(t, tp, ap, a) += x * u[t * na + a];
        }
  }
  return out;
}

enum class EquilibriumClass { kComm, kAnfBs, kCoarseBs, kBne, kSfce, kSfcce, kAnfcce };

inline const char* ClassName(EquilibriumClass c) {
  switch (c) {
    case EquilibriumClass::kComm: return "comm";
    case EquilibriumClass::kAnfBs: return "anf_bs";
    case EquilibriumClass::kCoarseBs: return "coarse_bs";
    case EquilibriumClass::kBne: return "bne";
    case EquilibriumClass::kSfce: return "sfce";
    case EquilibriumClass::kSfcce: return "sfcce";
    case EquilibriumClass::kAnfcce: return "anfcce";
  }
  return "unknown";
}

inline std::optional<EquilibriumClass> ParseClass(const std::string& s) {
  for (auto c : {EquilibriumClass::kComm, EquilibriumClass::kAnfBs, EquilibriumClass::kCoarseBs,
                 EquilibriumClass::kBne, EquilibriumClass::kSfce, EquilibriumClass::kSfcce,
                 EquilibriumClass::kAnfcce}) {
    if (s == ClassName(c)) return c;
  }
  return std::nullopt;
}

// The best deviation found for one player; which fields are set depends
// on the class.
struct Witness {
  std::vector<int> psi;                 // comm / anf_bs / bne
  std::vector<int> phi;                 // |Theta_i| x |A_i|
  int type = -1, action = -1;           // coarse_bs / anfcce
  std::vector<int> strategy;            // sfcce: action per own type
  std::vector<std::pair<std::size_t, std::vector<int>>> strategy_map;  // sfce
};

struct PlayerGain {
  double gain = 0.0;  // raw, may be negative
  double truthful_value = 0.0;
  Witness witness;
};

struct Certificate {
  EquilibriumClass cls = EquilibriumClass::kComm;
  double epsilon = 0.0;  // max(0, max_i gain_i)
  std::vector<PlayerGain> per_player;
  std::optional<bool> representable;
};

namespace internal {

inline double TruthfulValue(const BayesianGame& g, int i, const DeviationTensor& G) {
  double v = 0.0;
  for (int t = 0; t < G.num_types(); ++t) {
    double s = 0.0;
    for (int a = 0; a < G.num_actions(); ++a) s += G(t, t, a, a);
    v += g.marginal(i)[t] * s;
  }
  return v;
}

// max over phi of sum_{a'} G(t, t', a', phi(a')), lowest action on ties.
inline double BestRemap(const DeviationTensor& G, int t, int tp, int* phi_row) {
  double total = 0.0;
  for (int ap = 0; ap < G.num_actions(); ++ap) {
    int arg = 0;
    double best = G(t, tp, ap, 0);
    for (int a = 1; a < G.num_actions(); ++a) {
      if (G(t, tp, ap, a) > best) {
        best = G(t, tp, ap, a);
        arg = a;
      }
    }
    phi_row[ap] = arg;
    total += best;
  }
  return total;
}

inline PlayerGain SwapGain(const BayesianGame& g, int i, const DeviationTensor& G,
                           bool allow_misreport) {
  const int nt = G.num_types(), na = G.num_actions();
  PlayerGain out;
  out.truthful_value = TruthfulValue(g, i, G);
  out.witness.psi.assign(nt, 0);
  out.witness.phi.assign(static_cast<std::size_t>(nt) * na, 0);
  std::vector<int> row(na);
  double total = 0.0;
  for (int t = 0; t < nt; ++t) {
    double best = 0.0;
    bool first = true;
    for (int tp = 0; tp < nt; ++tp) {
      if (!allow_misreport && tp != t) continue;
      const double v = BestRemap(G, t, tp, row.data());
      if (first || v > best) {
        best = v;
        first = false;
        out.witness.psi[t] = tp;
        std::copy(row.begin(), row.end(), out.witness.phi.begin() + static_cast<std::ptrdiff_t>(t) * na);
      }
    }
    total += g.marginal(i)[t] * best;
  }
  out.gain = total - out.truthful_value;
  return out;
}

inline PlayerGain CoarseGain(const BayesianGame& g, int i, const DeviationTensor& G) {
  const int nt = G.num_types(), na = G.num_actions();
  PlayerGain out;
  out.truthful_value = TruthfulValue(g, i, G);
  bool first = true;
  for (int t = 0; t < nt; ++t) {
    double truthful = 0.0;
    for (int ap = 0; ap < na; ++ap) truthful += G(t, t, ap, ap);
    for (int a = 0; a < na; ++a) {
      double dev = 0.0;
      for (int ap = 0; ap < na; ++ap) dev += G(t, t, ap, a);
      const double gain = g.marginal(i)[t] * (dev - truthful);
      if (first || gain > out.gain) {
        first = false;
        out.gain = gain;
        out.witness.type = t;
        out.witness.action = a;
      }
    }
  }
  return out;
}

// Players are independent; with threads > 1 their tensors are built in
// parallel and reduced in player order.
template <typename Dist>
Certificate CertifyFromTensors(const BayesianGame& g, const Dist& pi, EquilibriumClass cls,
                               int threads) {
  if (cls != EquilibriumClass::kComm && cls != EquilibriumClass::kAnfBs &&
      cls != EquilibriumClass::kBne && cls != EquilibriumClass::kCoarseBs) {
    Fail(ErrorKind::kInvalidDistribution, "class needs a strategy distribution");
  }
  const int n = g.num_players();
  std::vector<PlayerGain> gains(n);
  std::vector<std::exception_ptr> errors(n);
  ThreadPool pool(std::min(threads, n));
  pool.ParallelFor(n, [&](int i) {
    try {
      const DeviationTensor G = ComputeDeviationTensor(g, i, pi);
      gains[i] = cls == EquilibriumClass::kComm       ? SwapGain(g, i, G, true)
                 : cls == EquilibriumClass::kCoarseBs ? CoarseGain(g, i, G)
                                                      : SwapGain(g, i, G, false);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  });
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  Certificate cert;
  cert.cls = cls;
  for (auto& pg : gains) {
    cert.epsilon = std::max(cert.epsilon, pg.gain);
    cert.per_player.push_back(std::move(pg));
  }
  return cert;
}

}  // namespace internal

// True when pi(theta; a) = prod_i pi_i(theta_i; a_i) for some type-wise
// policies (within tol).
inline bool IsTypeWiseProduct(const BayesianGame& g, const TabularDistribution& pi,
                              double tol = kDerivedTol) {
  const int n = g.num_players();
  std::vector<TypeWisePolicy> marg;
  const auto& tr = g.type_profiles();
  const auto& ar = g.action_profiles();
  for (int i = 0; i < n; ++i) marg.emplace_back(g.num_types(i), g.num_actions(i));
  // Marginal of player i's action at each own type, read off the first
  // type profile extending it; consistency is checked by the product test.
  std::vector<std::vector<bool>> seen(n);
  for (int i = 0; i < n; ++i) seen[i].assign(g.num_types(i), false);
  for (std::size_t t = 0; t < tr.size(); ++t)
    for (int i = 0; i < n; ++i) {
      const int ti = tr.Digit(t, i);
      if (seen[i][ti]) continue;
      seen[i][ti] = true;
      for (std::size_t a = 0; a < ar.size(); ++a) marg[i](ti, ar.Digit(a, i)) += pi(t, a);
    }
  for (std::size_t t = 0; t < tr.size(); ++t)
    for (std::size_t a = 0; a < ar.size(); ++a) {
      double p = 1.0;
      for (int i = 0; i < n; ++i) p *= marg[i](tr.Digit(t, i), ar.Digit(a, i));
      if (std::abs(p - pi(t, a)) > tol) return false;
    }
  return true;
}

inline Certificate Certify(const BayesianGame& g, const TabularDistribution& pi,
                           EquilibriumClass cls, int threads = 1) {
  pi.Validate(g, 1e-9);
  if (cls == EquilibriumClass::kBne && !IsTypeWiseProduct(g, pi)) {
    Fail(ErrorKind::kInvalidDistribution, "bne needs a type-wise product distribution");
  }
  return internal::CertifyFromTensors(g, pi, cls, threads);
}

inline Certificate Certify(const BayesianGame& g, const MixtureDistribution& mix,
                           EquilibriumClass cls, int threads = 1) {
  mix.Validate(g);
  if (cls == EquilibriumClass::kBne && mix.components.size() != 1 &&
      !IsTypeWiseProduct(g, mix.ToTabular(g))) {
    Fail(ErrorKind::kInvalidDistribution, "bne needs a type-wise product distribution");
  }
  Certificate c = internal::CertifyFromTensors(g, mix, cls, threads);
  c.representable = true;
  return c;
}

// Gain of player i from a fixed (psi, phi), evaluated by direct
// enumeration of (theta, a); used to replay witnesses.
inline double CommGain(const BayesianGame& g, const TabularDistribution& pi, int i,
                       const DeviationPair& d) {
  const auto& tr = g.type_profiles();
  const auto& ar = g.action_profiles();
  const int na = g.num_actions(i);
  std::vector<int> th(g.num_players()), ac(g.num_players());
  double total = 0.0;
  for (std::size_t t = 0; t < tr.size(); ++t) {
    const double p = g.prior(t);
    if (p == 0.0) continue;
    tr.Decode(t, th);
    const int own = th[i];
    th[i] = d.psi[own];
    const std::size_t reported = tr.Encode(th);
    th[i] = own;
    for (std::size_t a = 0; a < ar.size(); ++a) {
      // Truthful value at (theta, a) and the deviation value at the
      // recommendation drawn for the reported profile.
      const double pt = pi(t, a);
      if (pt != 0.0) total -= p * pt * g.payoff(i, t, a);
      const double pr = pi(reported, a);
      if (pr == 0.0) continue;
      ar.Decode(a, ac);
      ac[i] = d.phi[static_cast<std::size_t>(own) * na + ac[i]];
      total += p * pr * g.payoff(i, t, ar.Encode(ac));
    }
  }
  return total;
}

// ---- Strategy-distribution classes ----

namespace internal {

// H(t, a) = E_{theta_-i | t} E_{s ~ sigma} v_i(theta; a, s_-i(theta_-i)) and
// V(t) = E_{theta_-i | t} E_s v_i(theta; s(theta)).
struct StrategyValues {
  std::vector<double> h;  // |Theta_i| x |A_i|
  std::vector<double> v;  // |Theta_i|
};

inline StrategyValues ComputeStrategyValues(const BayesianGame& g, const StrategySpace& space,
                                            const StrategyDistribution& sigma, int i) {
  const int nt = g.num_types(i), na = g.num_actions(i), n = g.num_players();
  StrategyValues out{std::vector<double>(static_cast<std::size_t>(nt) * na, 0.0),
                     std::vector<double>(nt, 0.0)};
  const MixedRadix& ot = g.others_types(i);
  const std::vector<int> others = OtherPlayers(n, i);
  std::vector<int> types(n - 1), acts(n - 1);
  for (int t = 0; t < nt; ++t) {
    const auto& cond = g.conditional(i, t);
    for (std::size_t o = 0; o < ot.size(); ++o) {
      if (cond[o] == 0.0) continue;
      ot.Decode(o, types);
      const std::size_t theta = g.JoinTypes(i, t, o);
      for (const auto& [s, p] : sigma.support) {
        for (int k = 0; k < n - 1; ++k) acts[k] = space.Action(s, others[k], types[k]);
        const std::size_t b = g.others_actions(i).Encode(acts);
        const double q = cond[o] * p;
        for (int a = 0; a < na; ++a) out.h[t * na + a] += q * g.payoff(i, theta, g.JoinActions(i, a, b));
        out.v[t] += q * g.payoff(i, theta, g.JoinActions(i, space.Action(s, i, t), b));
      }
    }
  }
  return out;
}

}  // namespace internal

inline Certificate Certify(const BayesianGame& g, const StrategySpace& space,
                           const StrategyDistribution& sigma, EquilibriumClass cls) {
  sigma.Validate(space, 1e-9);
  if (cls != EquilibriumClass::kSfcce && cls != EquilibriumClass::kAnfcce &&
      cls != EquilibriumClass::kSfce) {
    // Swap-style classes only depend on eta(sigma).
    Certificate c = Certify(g, StrategyToTabular(g, space, sigma), cls);
    c.representable = true;
    return c;
  }
  Certificate cert;
  cert.cls = cls;
  cert.representable = true;
  const int n = g.num_players();
  for (int i = 0; i < n; ++i) {
    const int nt = g.num_types(i), na = g.num_actions(i);
    const auto& rho = g.marginal(i);
    PlayerGain pg;
    if (cls == EquilibriumClass::kSfce) {
      // K(s_i, t, a) over the support's distinct s_i.
      const MixedRadix& ot = g.others_types(i);
      const std::vector<int> others = internal::OtherPlayers(n, i);
      std::vector<int> types(n - 1), acts(n - 1);
      std::vector<std::size_t> keys;
      for (const auto& [s, p] : sigma.support) keys.push_back(space.PlayerStrategy(s, i));
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
      std::vector<double> k(keys.size() * nt * na, 0.0);
      double truthful = 0.0;
      for (const auto& [s, p] : sigma.support) {
        const std::size_t key = std::lower_bound(keys.begin(), keys.end(), space.PlayerStrategy(s, i)) - keys.begin();
        for (int t = 0; t < nt; ++t) {
          const auto& cond = g.conditional(i, t);
          for (std::size_t o = 0; o < ot.size(); ++o) {
            if (cond[o] == 0.0) continue;
            ot.Decode(o, types);
            const std::size_t theta = g.JoinTypes(i, t, o);
            for (int q = 0; q < n - 1; ++q) acts[q] = space.Action(s, others[q], types[q]);
            const std::size_t b = g.others_actions(i).Encode(acts);
            const double w = rho[t] * cond[o] * p;
            for (int a = 0; a < na; ++a) k[(key * nt + t) * na + a] += w * g.payoff(i, theta, g.JoinActions(i, a, b));
            truthful += w * g.payoff(i, theta, g.JoinActions(i, space.Action(s, i, t), b));
          }
        }
      }
      double total = 0.0;
      for (std::size_t key = 0; key < keys.size(); ++key) {
        std::vector<int> repl(nt);
        for (int t = 0; t < nt; ++t) {
          int arg = 0;
          for (int a = 1; a < na; ++a)
            if (k[(key * nt + t) * na + a] > k[(key * nt + t) * na + arg]) arg = a;
          repl[t] = arg;
          total += k[(key * nt + t) * na + arg];
        }
        pg.witness.strategy_map.emplace_back(keys[key], repl);
      }
      pg.truthful_value = truthful;
      pg.gain = total - truthful;
    } else {
      const internal::StrategyValues sv = internal::ComputeStrategyValues(g, space, sigma, i);
      double truthful = 0.0;
      for (int t = 0; t < nt; ++t) truthful += rho[t] * sv.v[t];
      pg.truthful_value = truthful;
      if (cls == EquilibriumClass::kSfcce) {
        double total = 0.0;
        pg.witness.strategy.assign(nt, 0);
        for (int t = 0; t < nt; ++t) {
          int arg = 0;
          for (int a = 1; a < na; ++a)
            if (sv.h[t * na + a] > sv.h[t * na + arg]) arg = a;
          pg.witness.strategy[t] = arg;
          total += rho[t] * sv.h[t * na + arg];
        }
        pg.gain = total - truthful;
      } else {
        bool first = true;
        for (int t = 0; t < nt; ++t)
          for (int a = 0; a < na; ++a) {
            const double gain = rho[t] * (sv.h[t * na + a] - sv.v[t]);
            if (first || gain > pg.gain) {
              first = false;
              pg.gain = gain;
              pg.witness.type = t;
              pg.witness.action = a;
            }
          }
      }
    }
    cert.epsilon = std::max(cert.epsilon, pg.gain);
    cert.per_player.push_back(std::move(pg));
  }
  return cert;
}

// ---- Representability ----

inline constexpr std::size_t kDefaultLpCap = 10'000;

struct RepresentabilityResult {
  bool feasible = false;
  StrategyDistribution sigma;      // feasible
  std::vector<double> farkas;      // infeasible: one entry per (theta, a) row, then the sum row
  double phase1_value = 0.0;
  double reproduction_error = 0.0; // feasible: max |eta(sigma) - pi|
  double farkas_margin = 0.0;      // infeasible: b^T y
};

namespace internal {

inline Eigen::MatrixXd RepresentabilityMatrix(const BayesianGame& g, const StrategySpace& space) {
  const std::size_t nt = g.num_type_profiles(), na = g.num_action_profiles();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(nt * na + 1),
                                            static_cast<Eigen::Index>(space.size()));
  std::vector<int> th(g.num_players()), ac(g.num_players());
  for (std::size_t s = 0; s < space.size(); ++s) {
    for (std::size_t t = 0; t < nt; ++t) {
      g.type_profiles().Decode(t, th);
      for (int i = 0; i < g.num_players(); ++i) ac[i] = space.Action(s, i, th[i]);
      a(static_cast<Eigen::Index>(t * na + g.action_profiles().Encode(ac)), static_cast<Eigen::Index>(s)) = 1.0;
    }
    a(static_cast<Eigen::Index>(nt * na), static_cast<Eigen::Index>(s)) = 1.0;
  }
  return a;
}

}  // namespace internal

// Largest y^T A_s over strategy columns s together with b^T y; a valid
// infeasibility certificate has the first <= 0 and the second > 0.
inline std::pair<double, double> FarkasCheck(const BayesianGame& g, const TabularDistribution& pi,
                                             const StrategySpace& space,
                                             const std::vector<double>& y) {
  const std::size_t nt = g.num_type_profiles(), na = g.num_action_profiles();
  if (y.size() != nt * na + 1) Fail(ErrorKind::kDimensionMismatch, "certificate length");
  double worst = -std::numeric_limits<double>::infinity();
  std::vector<int> th(g.num_players()), ac(g.num_players());
  for (std::size_t s = 0; s < space.size(); ++s) {
    double v = y.back();
    for (std::size_t t = 0; t < nt; ++t) {
      g.type_profiles().Decode(t, th);
      for (int i = 0; i < g.num_players(); ++i) ac[i] = space.Action(s, i, th[i]);
      v += y[t * na + g.action_profiles().Encode(ac)];
    }
    worst = std::max(worst, v);
  }
  double by = y.back();
  for (std::size_t k = 0; k < nt * na; ++k) by += y[k] * pi.p[k];
  return {worst, by};
}

inline RepresentabilityResult Representable(const BayesianGame& g, const TabularDistribution& pi,
                                            std::size_t cap = kDefaultLpCap) {
  pi.Validate(g, 1e-9);
  const StrategySpace space(g, cap);
  const Eigen::MatrixXd a = internal::RepresentabilityMatrix(g, space);
  Eigen::VectorXd b(a.rows());
  for (std::size_t k = 0; k < pi.p.size(); ++k) b(static_cast<Eigen::Index>(k)) = pi.p[k];
  b(a.rows() - 1) = 1.0;
  const Phase1Result lp = Phase1Simplex(a, b);

  RepresentabilityResult out;
  out.phase1_value = lp.value;
  if (lp.value > kDerivedTol && lp.value < kFeasibilityTol) {
    Fail(ErrorKind::kNumericallyAmbiguous, "phase-1 objective between tolerances");
  }
  if (lp.value <= kDerivedTol) {
    out.feasible = true;
    double total = 0.0;
    for (Eigen::Index s = 0; s < lp.x.size(); ++s)
      if (lp.x(s) > 0.0) total += lp.x(s);
    for (Eigen::Index s = 0; s < lp.x.size(); ++s)
      if (lp.x(s) > 0.0) out.sigma.support.emplace_back(static_cast<std::size_t>(s), lp.x(s) / total);
    const TabularDistribution back = StrategyToTabular(g, space, out.sigma);
    for (std::size_t k = 0; k < pi.p.size(); ++k) {
      out.reproduction_error = std::max(out.reproduction_error, std::abs(back.p[k] - pi.p[k]));
    }
    return out;
  }
  out.farkas.assign(lp.y.data(), lp.y.data() + lp.y.size());
  const auto [worst, margin] = FarkasCheck(g, pi, space, out.farkas);
  out.farkas_margin = margin;
  if (worst > kDerivedTol || margin <= kFeasibilityTol) {
    Fail(ErrorKind::kInternal, "phase-1 duals are not an infeasibility certificate");
  }
  return out;
}

// ---- Conditional independence ----

struct IndependenceResult {
  bool holds = true;
  double max_violation = 0.0;
  int player = -1;
  std::size_t theta = 0;  // full type profile of the worst violation
  int action = -1;
};

// Pr(a_i, theta_-i | theta_i) = Pr(a_i | theta_i) Pr(theta_-i | theta_i)
// for every player under the joint rho(theta) pi(theta; a).
inline IndependenceResult ConditionalIndependence(const BayesianGame& g,
                                                  const TabularDistribution& pi,
                                                  double tol = kDerivedTol) {
  IndependenceResult out;
  const auto& ar = g.action_profiles();
  for (int i = 0; i < g.num_players(); ++i) {
    const int nt = g.num_types(i), na = g.num_actions(i);
    const MixedRadix& ot = g.others_types(i);
    for (int t = 0; t < nt; ++t) {
      const double rt = g.marginal(i)[t];
      if (rt <= 0.0) continue;
      // Pr(a_i, theta_-i | t) for each (o, a_i).
      std::vector<double> joint(ot.size() * na, 0.0), act(na, 0.0);
      for (std::size_t o = 0; o < ot.size(); ++o) {
        const std::size_t theta = g.JoinTypes(i, t, o);
        const double w = g.prior(theta) / rt;
        if (w == 0.0) continue;
        for (std::size_t a = 0; a < ar.size(); ++a) {
          const double p = w * pi(theta, a);
          joint[o * na + ar.Digit(a, i)] += p;
          act[ar.Digit(a, i)] += p;
        }
      }
      for (std::size_t o = 0; o < ot.size(); ++o)
        for (int a = 0; a < na; ++a) {
          const double v = std::abs(joint[o * na + a] - act[a] * g.conditional(i, t)[o]);
          if (v > out.max_violation) {
            out.max_violation = v;
            out.player = i;
            out.theta = g.JoinTypes(i, t, o);
            out.action = a;
          }
        }
    }
  }
  out.holds = out.max_violation <= tol;
  return out;
}

}  // namespace bayescorr
