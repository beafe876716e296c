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

#include <cstddef>
#include <vector>

#include "bayescorr/errors.hpp"
#include "bayescorr/game.hpp"
#include "bayescorr/learners.hpp"
#include "bayescorr/transforms.hpp"

namespace bayescorr {

struct RegretValue {
  double value = 0.0;
  DeviationPair witness;  // maximizing (psi, phi), lowest ordinals on ties
};

// Cross-term accumulator C(t, t', a, a') = sum_s rho(t) u^s(t, a) x^s(t', a')
// from which every swap-type regret is a closed-form maximum.
class RegretLedger {
 public:
  RegretLedger() = default;
  RegretLedger(int num_types, int num_actions, std::vector<double> type_weights)
      : nt_(num_types), na_(num_actions), rho_(std::move(type_weights)),
        c_(static_cast<std::size_t>(num_types) * num_types * num_actions * num_actions, 0.0) {
    if (static_cast<int>(rho_.size()) != nt_) Fail(ErrorKind::kDimensionMismatch, "type weights");
  }

  int num_types() const { return nt_; }
  int num_actions() const { return na_; }
  long rounds() const { return rounds_; }

  void Accumulate(const TypeWisePolicy& x, const RewardTable& u) {
    if (x.num_types() != nt_ || x.num_actions() != na_ || u.num_types() != nt_ ||
        u.num_actions() != na_) {
      Fail(ErrorKind::kDimensionMismatch, "ledger input shape");
    }
    for (int t = 0; t < nt_; ++t)
      for (int a = 0; a < na_; ++a) {
        const double ru = rho_[t] * u(t, a);
        if (ru == 0.0) continue;
        for (int tp = 0; tp < nt_; ++tp) {
          double* row = &c_[Index(t, tp, a, 0)];
          for (int ap = 0; ap < na_; ++ap) row[ap] += ru * x(tp, ap);
        }
      }
    ++rounds_;
  }

  double C(int t, int tp, int a, int ap) const { return c_[Index(t, tp, a, ap)]; }

  // Achieved (truthful) total.
  double Achieved() const {
    double g = 0.0;
    for (int t = 0; t < nt_; ++t)
      for (int a = 0; a < na_; ++a) g += C(t, t, a, a);
    return g;
  }

  // Total gain of a fixed (psi, phi) over the truthful play.
  double Gain(const DeviationPair& d) const {
    double v = 0.0;
    for (int t = 0; t < nt_; ++t)
      for (int ap = 0; ap < na_; ++ap) v += C(t, d.psi[t], d.phi_at(t, ap), ap);
    return v - Achieved();
  }

  RegretValue Untruthful() const {
    RegretValue out;
    out.witness.psi.assign(nt_, 0);
    out.witness.phi.assign(static_cast<std::size_t>(nt_) * na_, 0);
    std::vector<int> phi_row(na_), best_row(na_);
    double total = 0.0;
    for (int t = 0; t < nt_; ++t) {
      double best = -1.0;
      for (int tp = 0; tp < nt_; ++tp) {
        const double v = BestRemap(t, tp, phi_row);
        if (tp == 0 || v > best) {
          best = v;
          best_row = phi_row;
          out.witness.psi[t] = tp;
        }
      }
      total += best;
      std::copy(best_row.begin(), best_row.end(), out.witness.phi.begin() + t * na_);
    }
    out.value = Checked(total - Achieved());
    return out;
  }

  RegretValue Typewise() const {
    RegretValue out;
    out.witness.psi.resize(nt_);
    out.witness.phi.assign(static_cast<std::size_t>(nt_) * na_, 0);
    std::vector<int> phi_row(na_);
    double total = 0.0;
    for (int t = 0; t < nt_; ++t) {
      out.witness.psi[t] = t;
      total += BestRemap(t, t, phi_row);
      std::copy(phi_row.begin(), phi_row.end(), out.witness.phi.begin() + t * na_);
    }
    out.value = Checked(total - Achieved());
    return out;
  }

  // Best constant action per type; may be negative.
  RegretValue External() const {
    RegretValue out;
    out.witness.psi.resize(nt_);
    out.witness.phi.assign(static_cast<std::size_t>(nt_) * na_, 0);
    double total = 0.0;
    for (int t = 0; t < nt_; ++t) {
      out.witness.psi[t] = t;
      double best = 0.0;
      int arg = 0;
      for (int a = 0; a < na_; ++a) {
        double v = 0.0;
        for (int ap = 0; ap < na_; ++ap) v += C(t, t, a, ap);
        if (a == 0 || v > best) {
          best = v;
          arg = a;
        }
      }
      total += best;
      for (int ap = 0; ap < na_; ++ap) out.witness.phi[static_cast<std::size_t>(t) * na_ + ap] = arg;
    }
    // Not sign-checked: play can beat every fixed action in hindsight.
    out.value = total - Achieved();
    return out;
  }

 private:
  std::size_t Index(int t, int tp, int a, int ap) const {
    return ((static_cast<std::size_t>(t) * nt_ + tp) * na_ + a) * na_ + ap;
  }

  // sum_{a'} max_a C(t, t', a, a'), recording the maximizing a per a'.
  double BestRemap(int t, int tp, std::vector<int>& phi_row) const {
    double total = 0.0;
    for (int ap = 0; ap < na_; ++ap) {
      double best = C(t, tp, 0, ap);
      int arg = 0;
      for (int a = 1; a < na_; ++a) {
        const double v = C(t, tp, a, ap);
        if (v > best) {
          best = v;
          arg = a;
        }
      }
      phi_row[ap] = arg;
      total += best;
    }
    return total;
  }

  static double Checked(double r) {
    if (r < -kDerivedTol) Fail(ErrorKind::kAuditError, "negative regret");
    return r;
  }

  int nt_ = 0, na_ = 0;
  std::vector<double> rho_;
  std::vector<double> c_;
  long rounds_ = 0;
};

// Regret of a distribution-over-strategies stream against per-strategy
// action remaps: sum_t rho(t) sum_s max_a K(s, t, a) - achieved, with
// K(s, t, a) = sum_rounds sigma(s) u(t, a).
class StrategyLedger {
 public:
  StrategyLedger(int num_types, int num_actions, std::vector<double> type_weights)
      : nt_(num_types), na_(num_actions), rho_(std::move(type_weights)),
        radix_(std::vector<int>(num_types, num_actions)),
        k_(radix_.size() * num_types * num_actions, 0.0) {}

  void Accumulate(std::span<const double> sigma, const RewardTable& u) {
    if (sigma.size() != radix_.size()) Fail(ErrorKind::kDimensionMismatch, "sigma size");
    for (std::size_t s = 0; s < radix_.size(); ++s) {
      if (sigma[s] == 0.0) continue;
      for (int t = 0; t < nt_; ++t) {
        for (int a = 0; a < na_; ++a) k_[(s * nt_ + t) * na_ + a] += sigma[s] * u(t, a);
        achieved_ += rho_[t] * sigma[s] * u(t, radix_.Digit(s, t));
      }
    }
  }

  double Regret() const {
    double total = 0.0;
    for (std::size_t s = 0; s < radix_.size(); ++s)
      for (int t = 0; t < nt_; ++t) {
        double best = k_[(s * nt_ + t) * na_];
        for (int a = 1; a < na_; ++a) best = std::max(best, k_[(s * nt_ + t) * na_ + a]);
        total += rho_[t] * best;
      }
    const double r = total - achieved_;
    if (r < -kDerivedTol) Fail(ErrorKind::kAuditError, "negative regret");
    return r;
  }

  const MixedRadix& strategies() const { return radix_; }

 private:
  int nt_, na_;
  std::vector<double> rho_;
  MixedRadix radix_;
  std::vector<double> k_;
  double achieved_ = 0.0;
};

// One round of a strategy-level trace.
struct StrategyRound {
  std::vector<double> sigma;
  RewardTable reward;
};

inline double StrategyRegret(std::span<const StrategyRound> trace, int num_types,
                             int num_actions, const std::vector<double>& type_weights) {
  StrategyLedger l(num_types, num_actions, type_weights);
  for (const auto& r : trace) l.Accumulate(r.sigma, r.reward);
  return l.Regret();
}

}  // namespace bayescorr
