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
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bayescorr/errors.hpp"

namespace bayescorr {

inline constexpr std::size_t kDefaultTableCap = 100'000'000;
inline constexpr std::size_t kDefaultStrategyCap = 1'000'000;

// Mixed-radix index over digit vectors, first digit most significant.
class MixedRadix {
 public:
  MixedRadix() : size_(1) {}
  explicit MixedRadix(std::vector<int> radices) : radices_(std::move(radices)) {
    strides_.assign(radices_.size(), 1);
    size_ = 1;
    overflow_ = false;
    for (int k = static_cast<int>(radices_.size()) - 1; k >= 0; --k) {
      if (radices_[k] <= 0) Fail(ErrorKind::kInvalidGame, "empty radix");
      strides_[k] = size_;
      if (size_ > std::numeric_limits<std::size_t>::max() / radices_[k]) {
        overflow_ = true;
        size_ = std::numeric_limits<std::size_t>::max();
      } else {
        size_ *= static_cast<std::size_t>(radices_[k]);
      }
    }
  }

  std::size_t size() const { return size_; }
  bool overflow() const { return overflow_; }
  int num_digits() const { return static_cast<int>(radices_.size()); }
  int radix(int k) const { return radices_[k]; }
  std::size_t stride(int k) const { return strides_[k]; }
  const std::vector<int>& radices() const { return radices_; }

  std::size_t Encode(std::span<const int> digits) const {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < radices_.size(); ++k) {
      idx += strides_[k] * static_cast<std::size_t>(digits[k]);
    }
    return idx;
  }
  void Decode(std::size_t idx, std::span<int> digits) const {
    for (std::size_t k = 0; k < radices_.size(); ++k) {
      digits[k] = static_cast<int>((idx / strides_[k]) %
                                   static_cast<std::size_t>(radices_[k]));
    }
  }
  std::vector<int> Decode(std::size_t idx) const {
    std::vector<int> d(radices_.size());
    Decode(idx, d);
    return d;
  }
  int Digit(std::size_t idx, int k) const {
    return static_cast<int>((idx / strides_[k]) %
                            static_cast<std::size_t>(radices_[k]));
  }

 private:
  std::vector<int> radices_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
  bool overflow_ = false;
};

enum class PayoffScope { kOwnType, kFull };

// Joint prior over type profiles, either a product of marginals or a
// full table indexed like the type-profile radix.
struct Prior {
  enum class Kind { kProduct, kTabular };
  Kind kind = Kind::kProduct;
  std::vector<std::vector<double>> rows;  // kProduct
  std::vector<double> table;              // kTabular

  static Prior Product(std::vector<std::vector<double>> r) {
    Prior p;
    p.kind = Kind::kProduct;
    p.rows = std::move(r);
    return p;
  }
  static Prior Tabular(std::vector<double> t) {
    Prior p;
    p.kind = Kind::kTabular;
    p.table = std::move(t);
    return p;
  }
};

// Payoff oracle over (player, type profile, action profile).
using PayoffOracle =
    std::function<double(int, std::span<const int>, std::span<const int>)>;

class BayesianGame {
 public:
  BayesianGame() = default;

  // Payoff tensors are per player, row-major over (type profile, action
  // profile) with player 0 outermost in both.
  BayesianGame(std::vector<std::vector<std::string>> type_names,
               std::vector<std::vector<std::string>> action_names,
               Prior prior, std::vector<std::vector<double>> payoffs,
               PayoffScope scope, std::size_t table_cap = kDefaultTableCap)
      : type_names_(std::move(type_names)),
        action_names_(std::move(action_names)),
        prior_spec_(std::move(prior)),
        payoffs_(std::move(payoffs)),
        scope_(scope) {
    Init(table_cap);
    ValidatePayoffTensors();
  }

  static BayesianGame FromOracle(
      std::vector<std::vector<std::string>> type_names,
      std::vector<std::vector<std::string>> action_names, Prior prior,
      const PayoffOracle& oracle, PayoffScope scope,
      std::size_t table_cap = kDefaultTableCap) {
    BayesianGame g;
    g.type_names_ = std::move(type_names);
    g.action_names_ = std::move(action_names);
    g.prior_spec_ = std::move(prior);
    g.scope_ = scope;
    g.Init(table_cap);
    const std::size_t nt = g.type_radix_.size(), na = g.action_radix_.size();
    g.payoffs_.assign(g.n_, std::vector<double>(nt * na));
    std::vector<int> th(g.n_), ac(g.n_);
    for (std::size_t t = 0; t < nt; ++t) {
      g.type_radix_.Decode(t, th);
      for (std::size_t a = 0; a < na; ++a) {
        g.action_radix_.Decode(a, ac);
        for (int i = 0; i < g.n_; ++i) {
          g.payoffs_[i][t * na + a] = oracle(i, th, ac);
        }
      }
    }
    g.ValidatePayoffTensors();
    return g;
  }

  int num_players() const { return n_; }
  int num_types(int i) const { return type_radix_.radix(i); }
  int num_actions(int i) const { return action_radix_.radix(i); }
  const MixedRadix& type_profiles() const { return type_radix_; }
  const MixedRadix& action_profiles() const { return action_radix_; }
  std::size_t num_type_profiles() const { return type_radix_.size(); }
  std::size_t num_action_profiles() const { return action_radix_.size(); }
  PayoffScope scope() const { return scope_; }
  const Prior& prior_spec() const { return prior_spec_; }
  bool product_prior() const { return prior_spec_.kind == Prior::Kind::kProduct; }
  const std::vector<std::vector<std::string>>& type_names() const { return type_names_; }
  const std::vector<std::vector<std::string>>& action_names() const { return action_names_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  double prior(std::size_t theta) const { return prior_[theta]; }
  const std::vector<double>& prior_table() const { return prior_; }
  const std::vector<double>& marginal(int i) const { return marginals_[i]; }

  // Radix over the other players' types (or actions), players in order.
  const MixedRadix& others_types(int i) const { return others_type_radix_[i]; }
  const MixedRadix& others_actions(int i) const { return others_action_radix_[i]; }

  // rho(theta_-i | theta_i) indexed by others_types(i); all zeros when the
  // marginal of theta_i vanishes.
  const std::vector<double>& conditional(int i, int theta_i) const {
    return conditionals_[i][theta_i];
  }

  std::size_t JoinTypes(int i, int theta_i, std::size_t others) const {
    return type_join_[i][others] + type_radix_.stride(i) * theta_i;
  }
  std::size_t JoinActions(int i, int a_i, std::size_t others) const {
    return action_join_[i][others] + action_radix_.stride(i) * a_i;
  }

  double payoff(int i, std::size_t theta, std::size_t a) const {
    return payoffs_[i][theta * action_radix_.size() + a];
  }
  const std::vector<double>& payoff_tensor(int i) const { return payoffs_[i]; }

  // Upper bound on enumeration cost of one exact reward evaluation.
  std::size_t OthersEnumerationSize(int i) const {
    const std::size_t a = others_type_radix_[i].size();
    const std::size_t b = others_action_radix_[i].size();
    if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
      return std::numeric_limits<std::size_t>::max();
    }
    return a * b;
  }

 private:
  static void CheckDistribution(std::span<const double> p, const char* what) {
    double s = 0.0;
    for (double x : p) {
      if (!(x >= -kIngestTol) || !std::isfinite(x)) {
        Fail(ErrorKind::kInvalidGame, std::string(what) + " has a negative entry");
      }
      s += x;
    }
    if (std::abs(s - 1.0) > kIngestTol * std::max<std::size_t>(1, p.size())) {
      Fail(ErrorKind::kInvalidGame, std::string(what) + " does not sum to 1");
    }
  }

  void Init(std::size_t table_cap) {
    n_ = static_cast<int>(type_names_.size());
    if (n_ < 1) Fail(ErrorKind::kInvalidGame, "need at least one player");
    if (static_cast<int>(action_names_.size()) != n_) {
      Fail(ErrorKind::kInvalidGame, "types/actions player count mismatch");
    }
    std::vector<int> tr(n_), ar(n_);
    for (int i = 0; i < n_; ++i) {
      tr[i] = static_cast<int>(type_names_[i].size());
      ar[i] = static_cast<int>(action_names_[i].size());
      if (tr[i] < 1 || ar[i] < 1) {
        Fail(ErrorKind::kInvalidGame, "every player needs a type and an action");
      }
    }
    type_radix_ = MixedRadix(tr);
    action_radix_ = MixedRadix(ar);
    if (type_radix_.overflow() || action_radix_.overflow() ||
        type_radix_.size() > table_cap / action_radix_.size()) {
      Fail(ErrorKind::kEnumerationTooLarge, "payoff table exceeds cap");
    }

    const std::size_t nt = type_radix_.size();
    prior_.assign(nt, 0.0);
    if (prior_spec_.kind == Prior::Kind::kProduct) {
      if (static_cast<int>(prior_spec_.rows.size()) != n_) {
        Fail(ErrorKind::kInvalidGame, "product prior needs one row per player");
      }
      for (int i = 0; i < n_; ++i) {
        if (static_cast<int>(prior_spec_.rows[i].size()) != tr[i]) {
          Fail(ErrorKind::kInvalidGame, "prior row length mismatch");
        }
        CheckDistribution(prior_spec_.rows[i], "prior row");
      }
      std::vector<int> th(n_);
      for (std::size_t t = 0; t < nt; ++t) {
        type_radix_.Decode(t, th);
        double p = 1.0;
        for (int i = 0; i < n_; ++i) p *= prior_spec_.rows[i][th[i]];
        prior_[t] = p;
      }
    } else {
      if (prior_spec_.table.size() != nt) {
        Fail(ErrorKind::kInvalidGame, "tabular prior size mismatch");
      }
      CheckDistribution(prior_spec_.table, "prior table");
      prior_ = prior_spec_.table;
    }
    for (double& p : prior_) p = std::max(p, 0.0);

    marginals_.assign(n_, {});
    conditionals_.assign(n_, {});
    others_type_radix_.assign(n_, {});
    others_action_radix_.assign(n_, {});
    type_join_.assign(n_, {});
    action_join_.assign(n_, {});
    std::vector<int> th(n_);
    for (int i = 0; i < n_; ++i) {
      std::vector<int> otr, oar;
      for (int j = 0; j < n_; ++j) {
        if (j == i) continue;
        otr.push_back(tr[j]);
        oar.push_back(ar[j]);
      }
      others_type_radix_[i] = MixedRadix(otr);
      others_action_radix_[i] = MixedRadix(oar);
      type_join_[i] = JoinTable(type_radix_, others_type_radix_[i], i);
      action_join_[i] = JoinTable(action_radix_, others_action_radix_[i], i);

      marginals_[i].assign(tr[i], 0.0);
      for (std::size_t t = 0; t < nt; ++t) {
        marginals_[i][type_radix_.Digit(t, i)] += prior_[t];
      }
      const std::size_t no = others_type_radix_[i].size();
      conditionals_[i].assign(tr[i], std::vector<double>(no, 0.0));
      for (int ti = 0; ti < tr[i]; ++ti) {
        if (marginals_[i][ti] <= 0.0) continue;
        for (std::size_t o = 0; o < no; ++o) {
          conditionals_[i][ti][o] = prior_[JoinTypes(i, ti, o)] / marginals_[i][ti];
        }
      }
    }
  }

  // For each others-profile index, the full index with player i's digit 0.
  static std::vector<std::size_t> JoinTable(const MixedRadix& full,
                                            const MixedRadix& others, int i) {
    std::vector<std::size_t> out(others.size());
    std::vector<int> d(others.num_digits());
    for (std::size_t o = 0; o < others.size(); ++o) {
      others.Decode(o, d);
      std::size_t idx = 0;
      for (int j = 0, k = 0; j < full.num_digits(); ++j) {
        if (j == i) continue;
        idx += full.stride(j) * d[k++];
      }
      out[o] = idx;
    }
    return out;
  }

  void ValidatePayoffTensors() {
    if (static_cast<int>(payoffs_.size()) != n_) {
      Fail(ErrorKind::kInvalidGame, "need one payoff tensor per player");
    }
    const std::size_t nt = type_radix_.size(), na = action_radix_.size();
    for (int i = 0; i < n_; ++i) {
      if (payoffs_[i].size() != nt * na) {
        Fail(ErrorKind::kInvalidGame, "payoff tensor size mismatch");
      }
      for (double& v : payoffs_[i]) {
        if (!std::isfinite(v) || v < -kDerivedTol || v > 1.0 + kDerivedTol) {
          Fail(ErrorKind::kInvalidGame, "payoff outside [0,1]");
        }
        if (v < 0.0 || v > 1.0) {
          v = std::clamp(v, 0.0, 1.0);
          if (warnings_.empty()) warnings_.push_back("payoff clamped to [0,1]");
        }
      }
    }
    if (scope_ == PayoffScope::kOwnType) {
      for (int i = 0; i < n_; ++i) {
        const auto& others = others_type_radix_[i];
        for (int ti = 0; ti < num_types(i); ++ti) {
          const std::size_t base = JoinTypes(i, ti, 0);
          for (std::size_t o = 1; o < others.size(); ++o) {
            const std::size_t t = JoinTypes(i, ti, o);
            for (std::size_t a = 0; a < na; ++a) {
              if (std::abs(payoffs_[i][t * na + a] - payoffs_[i][base * na + a]) >
                  kIngestTol) {
                Fail(ErrorKind::kInvalidGame,
                     "own-type scope but payoff depends on others' types");
              }
            }
          }
        }
      }
    }
  }

  std::vector<std::vector<std::string>> type_names_, action_names_;
  Prior prior_spec_;
  std::vector<std::vector<double>> payoffs_;
  PayoffScope scope_ = PayoffScope::kFull;
  int n_ = 0;
  MixedRadix type_radix_, action_radix_;
  std::vector<double> prior_;
  std::vector<std::vector<double>> marginals_;
  std::vector<std::vector<std::vector<double>>> conditionals_;
  std::vector<MixedRadix> others_type_radix_, others_action_radix_;
  std::vector<std::vector<std::size_t>> type_join_, action_join_;
  std::vector<std::string> warnings_;
};

// Row-stochastic |types| x |actions| matrix: one action distribution per type.
class TypeWisePolicy {
 public:
  TypeWisePolicy() = default;
  TypeWisePolicy(int num_types, int num_actions)
      : nt_(num_types), na_(num_actions),
        p_(static_cast<std::size_t>(num_types) * num_actions, 0.0) {}
  TypeWisePolicy(int num_types, int num_actions, std::vector<double> p)
      : nt_(num_types), na_(num_actions), p_(std::move(p)) {
    if (p_.size() != static_cast<std::size_t>(nt_) * na_) {
      Fail(ErrorKind::kDimensionMismatch, "policy size");
    }
  }
  static TypeWisePolicy Uniform(int num_types, int num_actions) {
    return TypeWisePolicy(num_types, num_actions,
                          std::vector<double>(static_cast<std::size_t>(num_types) *
                                                  num_actions,
                                              1.0 / num_actions));
  }
  // Deterministic policy from one action per type.
  static TypeWisePolicy Pure(std::span<const int> action_of_type, int num_actions) {
    TypeWisePolicy p(static_cast<int>(action_of_type.size()), num_actions);
    for (std::size_t t = 0; t < action_of_type.size(); ++t) p(t, action_of_type[t]) = 1.0;
    return p;
  }

  int num_types() const { return nt_; }
  int num_actions() const { return na_; }
  double operator()(std::size_t theta, std::size_t a) const { return p_[theta * na_ + a]; }
  double& operator()(std::size_t theta, std::size_t a) { return p_[theta * na_ + a]; }
  std::span<const double> row(std::size_t theta) const {
    return {p_.data() + theta * na_, static_cast<std::size_t>(na_)};
  }
  std::span<double> row(std::size_t theta) {
    return {p_.data() + theta * na_, static_cast<std::size_t>(na_)};
  }
  const std::vector<double>& data() const { return p_; }
  std::vector<double>& data() { return p_; }

  // Throws InvalidDistribution unless every row is a distribution.
  void Validate(double tol = kIngestTol) const {
    for (int t = 0; t < nt_; ++t) {
      double s = 0.0;
      for (int a = 0; a < na_; ++a) {
        const double v = (*this)(t, a);
        if (!(v >= -tol)) Fail(ErrorKind::kInvalidDistribution, "negative policy entry");
        s += v;
      }
      if (std::abs(s - 1.0) > tol * std::max(1, na_)) {
        Fail(ErrorKind::kInvalidDistribution, "policy row does not sum to 1");
      }
    }
  }

 private:
  int nt_ = 0, na_ = 0;
  std::vector<double> p_;
};

// pi(theta; a) over (type profile, action profile), row-major; each row
// (fixed type profile) is a distribution over action profiles.
struct TabularDistribution {
  std::size_t num_type_profiles = 0;
  std::size_t num_action_profiles = 0;
  std::vector<double> p;

  double operator()(std::size_t theta, std::size_t a) const {
    return p[theta * num_action_profiles + a];
  }
  void Validate(const BayesianGame& g, double tol = kIngestTol) const {
    if (num_type_profiles != g.num_type_profiles() ||
        num_action_profiles != g.num_action_profiles() ||
        p.size() != num_type_profiles * num_action_profiles) {
      Fail(ErrorKind::kDimensionMismatch, "distribution shape");
    }
    for (std::size_t t = 0; t < num_type_profiles; ++t) {
      double s = 0.0;
      for (std::size_t a = 0; a < num_action_profiles; ++a) {
        const double v = (*this)(t, a);
        if (!(v >= -tol)) Fail(ErrorKind::kInvalidDistribution, "negative entry");
        s += v;
      }
      if (std::abs(s - 1.0) > tol * static_cast<double>(num_action_profiles)) {
        Fail(ErrorKind::kInvalidDistribution, "row does not sum to 1");
      }
    }
  }
};

// Weighted average of type-wise product profiles.
struct MixtureDistribution {
  struct Component {
    double weight = 0.0;
    std::vector<TypeWisePolicy> policies;  // one per player
  };
  std::vector<Component> components;

  void Validate(const BayesianGame& g, double tol = kDerivedTol) const {
    if (components.empty()) Fail(ErrorKind::kInvalidDistribution, "empty mixture");
    double s = 0.0;
    for (const auto& c : components) {
      if (!(c.weight >= 0.0)) Fail(ErrorKind::kInvalidDistribution, "negative weight");
      s += c.weight;
      if (static_cast<int>(c.policies.size()) != g.num_players()) {
        Fail(ErrorKind::kDimensionMismatch, "component player count");
      }
      for (int i = 0; i < g.num_players(); ++i) {
        if (c.policies[i].num_types() != g.num_types(i) ||
            c.policies[i].num_actions() != g.num_actions(i)) {
          Fail(ErrorKind::kDimensionMismatch, "component policy shape");
        }
        c.policies[i].Validate(kIngestTol * 100);
      }
    }
    if (std::abs(s - 1.0) > tol) Fail(ErrorKind::kInvalidDistribution, "weights do not sum to 1");
  }

  double Eval(const BayesianGame& g, std::size_t theta, std::size_t a) const {
    double total = 0.0;
    const auto& tr = g.type_profiles();
    const auto& ar = g.action_profiles();
    for (const auto& c : components) {
      double p = c.weight;
      for (int i = 0; i < g.num_players() && p != 0.0; ++i) {
        p *= c.policies[i](tr.Digit(theta, i), ar.Digit(a, i));
      }
      total += p;
    }
    return total;
  }

  TabularDistribution ToTabular(const BayesianGame& g) const {
    TabularDistribution d;
    d.num_type_profiles = g.num_type_profiles();
    d.num_action_profiles = g.num_action_profiles();
    d.p.assign(d.num_type_profiles * d.num_action_profiles, 0.0);
    const auto& tr = g.type_profiles();
    const auto& ar = g.action_profiles();
    std::vector<int> th(g.num_players()), ac(g.num_players());
    for (std::size_t t = 0; t < d.num_type_profiles; ++t) {
      tr.Decode(t, th);
      for (std::size_t a = 0; a < d.num_action_profiles; ++a) {
        ar.Decode(a, ac);
        double total = 0.0;
        for (const auto& c : components) {
          double p = c.weight;
          for (int i = 0; i < g.num_players() && p != 0.0; ++i) {
            p *= c.policies[i](th[i], ac[i]);
          }
          total += p;
        }
        d.p[t * d.num_action_profiles + a] = total;
      }
    }
    return d;
  }
};

// Pure strategy profiles s: (player, type) -> action, encoded mixed-radix
// with digits ordered (player 0, type 0), (player 0, type 1), ...
class StrategySpace {
 public:
  StrategySpace() = default;
  explicit StrategySpace(const BayesianGame& g, std::size_t cap = kDefaultStrategyCap) {
    n_ = g.num_players();
    std::vector<int> radices;
    offsets_.assign(n_ + 1, 0);
    for (int i = 0; i < n_; ++i) {
      offsets_[i] = static_cast<int>(radices.size());
      std::vector<int> own;
      for (int t = 0; t < g.num_types(i); ++t) {
        radices.push_back(g.num_actions(i));
        own.push_back(g.num_actions(i));
      }
      player_radix_.emplace_back(own);
      if (player_radix_.back().overflow()) {
        Fail(ErrorKind::kCapExceeded, "strategy space exceeds cap");
      }
    }
    offsets_[n_] = static_cast<int>(radices.size());
    radix_ = MixedRadix(radices);
    if (radix_.overflow() || radix_.size() > cap) {
      Fail(ErrorKind::kCapExceeded, "strategy space exceeds cap");
    }
  }

  std::size_t size() const { return radix_.size(); }
  int num_players() const { return n_; }
  const MixedRadix& radix() const { return radix_; }
  // S_i = A_i^{Theta_i} for one player, own type 0 most significant.
  const MixedRadix& player_radix(int i) const { return player_radix_[i]; }

  int Action(std::size_t s, int player, int theta) const {
    return radix_.Digit(s, offsets_[player] + theta);
  }
  // Index of player i's component strategy inside S_i.
  std::size_t PlayerStrategy(std::size_t s, int player) const {
    const int last = offsets_[player + 1] - 1;
    return (s / radix_.stride(last)) % player_radix_[player].size();
  }
  // Replace player i's component of s by s_i.
  std::size_t WithPlayerStrategy(std::size_t s, int player, std::size_t s_i) const {
    const int last = offsets_[player + 1] - 1;
    const std::size_t stride = radix_.stride(last);
    const std::size_t old = PlayerStrategy(s, player);
    return s - old * stride + s_i * stride;
  }

 private:
  int n_ = 0;
  MixedRadix radix_;
  std::vector<MixedRadix> player_radix_;
  std::vector<int> offsets_;
};

// Sparse distribution over pure strategy profiles.
struct StrategyDistribution {
  std::vector<std::pair<std::size_t, double>> support;  // (s, sigma(s))

  void Validate(const StrategySpace& space, double tol = kIngestTol) const {
    double s = 0.0;
    for (const auto& [idx, p] : support) {
      if (idx >= space.size()) Fail(ErrorKind::kInvalidDistribution, "strategy index");
      if (!(p >= -tol)) Fail(ErrorKind::kInvalidDistribution, "negative probability");
      s += p;
    }
    if (std::abs(s - 1.0) > tol * std::max<std::size_t>(1, support.size())) {
      Fail(ErrorKind::kInvalidDistribution, "sigma does not sum to 1");
    }
  }
};

// One deterministic component per support strategy.
inline MixtureDistribution StrategyToMixture(const BayesianGame& g,
                                             const StrategySpace& space,
                                             const StrategyDistribution& sigma) {
  MixtureDistribution m;
  for (const auto& [s, p] : sigma.support) {
    MixtureDistribution::Component c;
    c.weight = p;
    for (int i = 0; i < g.num_players(); ++i) {
      TypeWisePolicy pol(g.num_types(i), g.num_actions(i));
      for (int t = 0; t < g.num_types(i); ++t) pol(t, space.Action(s, i, t)) = 1.0;
      c.policies.push_back(std::move(pol));
    }
    m.components.push_back(std::move(c));
  }
  return m;
}

// eta(sigma): the induced type-to-action-profile distribution.
inline TabularDistribution StrategyToTabular(const BayesianGame& g,
                                             const StrategySpace& space,
                                             const StrategyDistribution& sigma) {
  TabularDistribution d;
  d.num_type_profiles = g.num_type_profiles();
  d.num_action_profiles = g.num_action_profiles();
  d.p.assign(d.num_type_profiles * d.num_action_profiles, 0.0);
  std::vector<int> th(g.num_players()), ac(g.num_players());
  for (std::size_t t = 0; t < d.num_type_profiles; ++t) {
    g.type_profiles().Decode(t, th);
    for (const auto& [s, p] : sigma.support) {
      for (int i = 0; i < g.num_players(); ++i) ac[i] = space.Action(s, i, th[i]);
      d.p[t * d.num_action_profiles + g.action_profiles().Encode(ac)] += p;
    }
  }
  return d;
}

}  // namespace bayescorr
