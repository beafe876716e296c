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
#include <limits>
#include <vector>

#include "bayescorr/errors.hpp"
#include "bayescorr/game.hpp"
#include "bayescorr/linalg.hpp"

namespace bayescorr {

// A type misreport psi and a type-dependent action remap phi(theta, a').
struct DeviationPair {
  std::vector<int> psi;  // |Theta|
  std::vector<int> phi;  // |Theta| x |A|, row-major
  int phi_at(int theta, int a) const {
    return phi[static_cast<std::size_t>(theta) * (phi.size() / psi.size()) + a];
  }
};

// Member of the transform polytope: Q((t,a),(t',a')) = W(t,t') * B[t,t',a'](a).
class SwapTransform {
 public:
  SwapTransform() = default;
  SwapTransform(int num_types, int num_actions)
      : nt_(num_types), na_(num_actions),
        w_(static_cast<std::size_t>(num_types) * num_types, 0.0),
        blocks_(static_cast<std::size_t>(num_types) * num_types * num_actions * num_actions,
                1.0 / num_actions) {}

  int num_types() const { return nt_; }
  int num_actions() const { return na_; }
  int dim() const { return nt_ * na_; }

  double& w(int t, int tp) { return w_[static_cast<std::size_t>(t) * nt_ + tp]; }
  double w(int t, int tp) const { return w_[static_cast<std::size_t>(t) * nt_ + tp]; }
  // B[t, t', a'](a)
  double& block(int t, int tp, int ap, int a) { return blocks_[BlockIndex(t, tp, ap) + a]; }
  double block(int t, int tp, int ap, int a) const { return blocks_[BlockIndex(t, tp, ap) + a]; }

  double Entry(int t, int a, int tp, int ap) const { return w(t, tp) * block(t, tp, ap, a); }

  Eigen::MatrixXd Dense() const {
    Eigen::MatrixXd q(dim(), dim());
    for (int t = 0; t < nt_; ++t)
      for (int a = 0; a < na_; ++a)
        for (int tp = 0; tp < nt_; ++tp)
          for (int ap = 0; ap < na_; ++ap) q(t * na_ + a, tp * na_ + ap) = Entry(t, a, tp, ap);
    return q;
  }

  TypeWisePolicy Apply(const TypeWisePolicy& x) const {
    if (x.num_types() != nt_ || x.num_actions() != na_) {
      Fail(ErrorKind::kDimensionMismatch, "transform/policy shape");
    }
    TypeWisePolicy out(nt_, na_);
    for (int t = 0; t < nt_; ++t)
      for (int tp = 0; tp < nt_; ++tp) {
        const double wt = w(t, tp);
        if (wt == 0.0) continue;
        for (int ap = 0; ap < na_; ++ap) {
          const double xv = wt * x(tp, ap);
          if (xv == 0.0) continue;
          for (int a = 0; a < na_; ++a) out(t, a) += block(t, tp, ap, a) * xv;
        }
      }
    return out;
  }

  // Rows of W and every block must be distributions.
  void Validate(double tol = kDerivedTol) const {
    for (int t = 0; t < nt_; ++t) {
      double s = 0.0;
      for (int tp = 0; tp < nt_; ++tp) {
        if (!(w(t, tp) >= -tol)) Fail(ErrorKind::kInvalidTransform, "negative W entry");
        s += w(t, tp);
        for (int ap = 0; ap < na_; ++ap) {
          double bs = 0.0;
          for (int a = 0; a < na_; ++a) {
            if (!(block(t, tp, ap, a) >= -tol)) {
              Fail(ErrorKind::kInvalidTransform, "negative block entry");
            }
            bs += block(t, tp, ap, a);
          }
          if (std::abs(bs - 1.0) > tol) Fail(ErrorKind::kInvalidTransform, "block not stochastic");
        }
      }
      if (std::abs(s - 1.0) > tol) Fail(ErrorKind::kInvalidTransform, "W row not stochastic");
    }
  }

 private:
  std::size_t BlockIndex(int t, int tp, int ap) const {
    return ((static_cast<std::size_t>(t) * nt_ + tp) * na_ + ap) * na_;
  }

  int nt_ = 0, na_ = 0;
  std::vector<double> w_;
  std::vector<double> blocks_;
};

// Q_{psi,phi}: entry 1 iff t' = psi(t) and a = phi(t, a').
inline SwapTransform DeviationToTransform(const DeviationPair& d, int num_actions) {
  const int nt = static_cast<int>(d.psi.size());
  if (d.phi.size() != static_cast<std::size_t>(nt) * num_actions) {
    Fail(ErrorKind::kDimensionMismatch, "phi shape");
  }
  SwapTransform q(nt, num_actions);
  for (int t = 0; t < nt; ++t) {
    const int tp = d.psi[t];
    if (tp < 0 || tp >= nt) Fail(ErrorKind::kInvalidTransform, "psi out of range");
    q.w(t, tp) = 1.0;
    for (int ap = 0; ap < num_actions; ++ap) {
      const int a = d.phi_at(t, ap);
      if (a < 0 || a >= num_actions) Fail(ErrorKind::kInvalidTransform, "phi out of range");
      for (int b = 0; b < num_actions; ++b) q.block(t, tp, ap, b) = (b == a) ? 1.0 : 0.0;
    }
  }
  return q;
}

// Assemble from W (|Theta|^2, row-major) and blocks (|Theta|^2 |A|^2, indexed
// [t][t'][a'][a]), validating both.
inline SwapTransform AssembleTransform(int num_types, int num_actions,
                                       const std::vector<double>& w,
                                       const std::vector<double>& blocks) {
  SwapTransform q(num_types, num_actions);
  if (w.size() != static_cast<std::size_t>(num_types) * num_types ||
      blocks.size() != static_cast<std::size_t>(num_types) * num_types * num_actions *
                           num_actions) {
    Fail(ErrorKind::kDimensionMismatch, "transform component shape");
  }
  std::size_t k = 0;
  for (int t = 0; t < num_types; ++t)
    for (int tp = 0; tp < num_types; ++tp) q.w(t, tp) = w[k++];
  k = 0;
  for (int t = 0; t < num_types; ++t)
    for (int tp = 0; tp < num_types; ++tp)
      for (int ap = 0; ap < num_actions; ++ap)
        for (int a = 0; a < num_actions; ++a) q.block(t, tp, ap, a) = blocks[k++];
  q.Validate();
  return q;
}

inline TypeWisePolicy FixedPoint(const Eigen::MatrixXd& dense, int num_types,
                                 int num_actions, const TypeWisePolicy& seed,
                                 const FixedPointOptions& opt = {},
                                 FixedPointResult* info = nullptr) {
  const Eigen::Map<const Eigen::VectorXd> s(seed.data().data(),
                                            static_cast<Eigen::Index>(seed.data().size()));
  FixedPointResult r = BlockFixedPoint(dense, num_types, num_actions, s, opt);
  TypeWisePolicy x(num_types, num_actions,
                   std::vector<double>(r.x.data(), r.x.data() + r.x.size()));
  if (info != nullptr) *info = std::move(r);
  return x;
}

// x = Qx with x a type-wise policy.
inline TypeWisePolicy FixedPoint(const SwapTransform& q, const TypeWisePolicy& seed,
                                 const FixedPointOptions& opt = {},
                                 FixedPointResult* info = nullptr) {
  return FixedPoint(q.Dense(), q.num_types(), q.num_actions(), seed, opt, info);
}

inline TypeWisePolicy FixedPoint(const SwapTransform& q) {
  return FixedPoint(q, TypeWisePolicy::Uniform(q.num_types(), q.num_actions()));
}

inline constexpr std::size_t kVertexEnumerationCap = 1'000'000;

// Rewrites a linear map M that is valid on the policy set into a member of
// the transform polytope agreeing with M on every policy. M is valid when
// it sends each of the |A|^|Theta| pure policies to a policy.
inline SwapTransform LinearToTransform(const Eigen::MatrixXd& m, int num_types,
                                       int num_actions, double tol = kDerivedTol) {
  const int nt = num_types, na = num_actions, dim = nt * na;
  if (m.rows() != dim || m.cols() != dim) Fail(ErrorKind::kDimensionMismatch, "M shape");

  double vertices = std::pow(static_cast<double>(na), nt);
  if (vertices > static_cast<double>(kVertexEnumerationCap)) {
    Fail(ErrorKind::kEnumerationTooLarge, "too many vertex policies");
  }
  std::vector<int> act(nt, 0);
  Eigen::VectorXd x(dim), y(dim);
  for (std::size_t v = 0; v < static_cast<std::size_t>(vertices); ++v) {
    std::size_t rest = v;
    for (int t = nt - 1; t >= 0; --t) {
      act[t] = static_cast<int>(rest % na);
      rest /= na;
    }
    x.setZero();
    for (int t = 0; t < nt; ++t) x(t * na + act[t]) = 1.0;
    y.noalias() = m * x;
    for (int t = 0; t < nt; ++t) {
      double s = 0.0;
      for (int a = 0; a < na; ++a) {
        if (y(t * na + a) < -tol) Fail(ErrorKind::kNotValidOnX, "negative image");
        s += y(t * na + a);
      }
      if (std::abs(s - 1.0) > tol) Fail(ErrorKind::kNotValidOnX, "image row sum");
    }
  }

  // Move each non-last block's row minimum into the last type's block; on
  // policies every block of x sums to one, so the image is unchanged.
  Eigen::MatrixXd q = m;
  const int last = nt - 1;
  for (int r = 0; r < dim; ++r) {
    double moved = 0.0;
    for (int tp = 0; tp < last; ++tp) {
      double lo = std::numeric_limits<double>::infinity();
      for (int ap = 0; ap < na; ++ap) lo = std::min(lo, q(r, tp * na + ap));
      for (int ap = 0; ap < na; ++ap) q(r, tp * na + ap) -= lo;
      moved += lo;
    }
    for (int ap = 0; ap < na; ++ap) q(r, last * na + ap) += moved;
  }

  SwapTransform out(nt, na);
  for (int t = 0; t < nt; ++t) {
    for (int tp = 0; tp < nt; ++tp) {
      double wt = 0.0;
      for (int a = 0; a < na; ++a) wt += q(t * na + a, tp * na);
      for (int ap = 0; ap < na; ++ap) {
        double col = 0.0;
        for (int a = 0; a < na; ++a) {
          const double e = q(t * na + a, tp * na + ap);
          if (e < -tol) Fail(ErrorKind::kInternal, "shifted entry negative");
          col += e;
        }
        if (std::abs(col - wt) > tol) Fail(ErrorKind::kInternal, "block column sums differ");
      }
      out.w(t, tp) = std::max(wt, 0.0);
      for (int ap = 0; ap < na; ++ap) {
        for (int a = 0; a < na; ++a) {
          const double e = std::max(q(t * na + a, tp * na + ap), 0.0);
          out.block(t, tp, ap, a) = wt > 0.0 ? e / wt : 1.0 / na;
        }
        if (wt > 0.0) {
          double s = 0.0;
          for (int a = 0; a < na; ++a) s += out.block(t, tp, ap, a);
          for (int a = 0; a < na; ++a) out.block(t, tp, ap, a) /= s;
        }
      }
    }
  }
  out.Validate(1e-8);
  return out;
}

}  // namespace bayescorr
