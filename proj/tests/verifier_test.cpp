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


#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <random>

#include "bayescorr/io.hpp"
#include "bayescorr/verifier.hpp"
#include "test_util.hpp"

namespace bayescorr {
namespace {

using testing::LoadFixtureGame;
using testing::RandomGame;
using testing::RandomPolicy;

TabularDistribution LoadTabular(const BayesianGame& g, const std::string& name) {
  return std::get<TabularDistribution>(
      DistributionFromJson(g, io::ReadJsonFile(testing::Fixture(name))).value);
}

StrategyDistribution LoadSigma(const BayesianGame& g, const std::string& name) {
  return std::get<StrategyDistribution>(
      DistributionFromJson(g, io::ReadJsonFile(testing::Fixture(name))).value);
}

// Expected utility of player i when it reports psi and remaps by phi;
// psi/phi given per own type, evaluated by direct enumeration.
double DeviationValue(const BayesianGame& g, const TabularDistribution& pi, int i,
                      const std::vector<int>& psi, const std::vector<int>& phi) {
  const int n = g.num_players(), na = g.num_actions(i);
  std::vector<int> th(n), rep(n), ac(n);
  double v = 0.0;
  for (std::size_t t = 0; t < g.num_type_profiles(); ++t) {
    g.type_profiles().Decode(t, th);
    rep = th;
    rep[i] = psi[th[i]];
    const std::size_t r = g.type_profiles().Encode(rep);
    for (std::size_t a = 0; a < g.num_action_profiles(); ++a) {
      g.action_profiles().Decode(a, ac);
      ac[i] = phi[th[i] * na + ac[i]];
      v += g.prior(t) * pi(r, a) * g.payoff(i, t, g.action_profiles().Encode(ac));
    }
  }
  return v;
}

std::vector<int> Identity(int nt, int na, bool remap) {
  std::vector<int> x(remap ? nt * na : nt);
  for (std::size_t k = 0; k < x.size(); ++k) x[k] = remap ? static_cast<int>(k) % na : static_cast<int>(k);
  return x;
}

// Counts through every vector in {0..base-1}^len.
bool Next(std::vector<int>& x, int base) {
  for (int& d : x) {
    if (++d < base) return true;
    d = 0;
  }
  return false;
}

struct Oracle {
  double comm = -1e300, anf = -1e300, coarse = -1e300;
};

Oracle BruteForce(const BayesianGame& g, const TabularDistribution& pi, int i) {
  const int nt = g.num_types(i), na = g.num_actions(i);
  const double truthful = DeviationValue(g, pi, i, Identity(nt, na, false), Identity(nt, na, true));
  Oracle o;
  std::vector<int> psi(nt, 0);
  do {
    std::vector<int> phi(nt * na, 0);
    bool id = psi == Identity(nt, na, false);
    do {
      const double gain = DeviationValue(g, pi, i, psi, phi) - truthful;
      o.comm = std::max(o.comm, gain);
      if (id) o.anf = std::max(o.anf, gain);
    } while (Next(phi, na));
  } while (Next(psi, nt));
  for (int t = 0; t < nt; ++t)
    for (int a = 0; a < na; ++a) {
      std::vector<int> phi = Identity(nt, na, true);
      for (int ap = 0; ap < na; ++ap) phi[t * na + ap] = a;
      o.coarse = std::max(o.coarse, DeviationValue(g, pi, i, Identity(nt, na, false), phi) - truthful);
    }
  return o;
}

TabularDistribution RandomTabular(std::mt19937_64& rng, const BayesianGame& g) {
  TabularDistribution pi;
  pi.num_type_profiles = g.num_type_profiles();
  pi.num_action_profiles = g.num_action_profiles();
  for (std::size_t t = 0; t < g.num_type_profiles(); ++t) {
    const auto row = testing::RandomSimplex(rng, static_cast<int>(g.num_action_profiles()));
    pi.p.insert(pi.p.end(), row.begin(), row.end());
  }
  return pi;
}

MixtureDistribution RandomMixture(std::mt19937_64& rng, const BayesianGame& g, int k) {
  MixtureDistribution m;
  const auto w = testing::RandomSimplex(rng, k);
  for (int c = 0; c < k; ++c) {
    std::vector<TypeWisePolicy> pol;
    for (int i = 0; i < g.num_players(); ++i) pol.push_back(RandomPolicy(rng, g.num_types(i), g.num_actions(i)));
    m.components.push_back({w[c], pol});
  }
  return m;
}

TEST(VerifierTest, ClassesMatchBruteForceEnumeration) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 12; ++trial) {
    const BayesianGame g = RandomGame(rng, {2, 3}, {2, 2}, trial % 3 != 0);
    const TabularDistribution pi = RandomTabular(rng, g);
    const Certificate comm = Certify(g, pi, EquilibriumClass::kComm);
    const Certificate anf = Certify(g, pi, EquilibriumClass::kAnfBs);
    const Certificate coarse = Certify(g, pi, EquilibriumClass::kCoarseBs);
    for (int i = 0; i < 2; ++i) {
      const Oracle o = BruteForce(g, pi, i);
      EXPECT_NEAR(comm.per_player[i].gain, o.comm, 1e-9);
      EXPECT_NEAR(anf.per_player[i].gain, o.anf, 1e-9);
      EXPECT_NEAR(coarse.per_player[i].gain, o.coarse, 1e-9);
    }
    EXPECT_GE(comm.epsilon, anf.epsilon - 1e-12);
    EXPECT_GE(anf.epsilon, coarse.epsilon - 1e-12);
    EXPECT_GE(coarse.epsilon, 0.0);
  }
}

TEST(VerifierTest, WitnessReplaysGain) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 10; ++trial) {
    const BayesianGame g = RandomGame(rng, {3, 2, 2}, {2, 3, 2}, trial % 2 == 0);
    const TabularDistribution pi = RandomTabular(rng, g);
    for (EquilibriumClass cls : {EquilibriumClass::kComm, EquilibriumClass::kAnfBs}) {
      const Certificate c = Certify(g, pi, cls);
      for (int i = 0; i < 3; ++i) {
        const auto& w = c.per_player[i].witness;
        EXPECT_NEAR(CommGain(g, pi, i, DeviationPair{w.psi, w.phi}), c.per_player[i].gain, 1e-9);
        EXPECT_NEAR(DeviationValue(g, pi, i, w.psi, w.phi) - c.per_player[i].truthful_value,
                    c.per_player[i].gain, 1e-9);
      }
    }
  }
}

TEST(VerifierTest, MixtureAndTabularPathsAgree) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 10; ++trial) {
    const BayesianGame g = RandomGame(rng, {2, 2, 3}, {3, 2, 2}, trial % 2 == 0);
    const MixtureDistribution m = RandomMixture(rng, g, 4);
    const TabularDistribution pi = m.ToTabular(g);
    for (int i = 0; i < 3; ++i) {
      const DeviationTensor a = ComputeDeviationTensor(g, i, m), b = ComputeDeviationTensor(g, i, pi);
      const int nt = g.num_types(i), na = g.num_actions(i);
      for (int t = 0; t < nt; ++t)
        for (int tp = 0; tp < nt; ++tp)
          for (int ap = 0; ap < na; ++ap)
            for (int x = 0; x < na; ++x) {
              EXPECT_NEAR(a(t, tp, ap, x), b(t, tp, ap, x), 1e-12);
              EXPECT_GE(a(t, tp, ap, x), -1e-12);
              EXPECT_LE(a(t, tp, ap, x), 1.0 + 1e-12);
            }
    }
    EXPECT_NEAR(Certify(g, m, EquilibriumClass::kComm).epsilon,
                Certify(g, pi, EquilibriumClass::kComm).epsilon, 1e-12);
  }
}

TEST(VerifierTest, ThreadCountDoesNotChangeCertificate) {
  std::mt19937_64 rng(39);
  const BayesianGame g = RandomGame(rng, {2, 3, 2}, {3, 2, 2}, true);
  const MixtureDistribution m = RandomMixture(rng, g, 6);
  for (auto cls : {EquilibriumClass::kComm, EquilibriumClass::kAnfBs, EquilibriumClass::kCoarseBs}) {
    const Certificate a = Certify(g, m, cls), b = Certify(g, m, cls, 4);
    EXPECT_EQ(a.epsilon, b.epsilon);
    for (int i = 0; i < 3; ++i) {
      EXPECT_EQ(a.per_player[i].gain, b.per_player[i].gain);
      EXPECT_EQ(a.per_player[i].witness.phi, b.per_player[i].witness.phi);
    }
  }
  EXPECT_THROW(Certify(g, m, EquilibriumClass::kSfcce, 4), Error);
}

TEST(VerifierTest, SinglePlayerTensorIsOuterProduct) {
  std::mt19937_64 rng(34);
  const BayesianGame g = RandomGame(rng, {3}, {2}, true);
  const TabularDistribution pi = RandomTabular(rng, g);
  const DeviationTensor G = ComputeDeviationTensor(g, 0, pi);
  for (int t = 0; t < 3; ++t)
    for (int tp = 0; tp < 3; ++tp)
      for (int ap = 0; ap < 2; ++ap)
        for (int a = 0; a < 2; ++a) EXPECT_NEAR(G(t, tp, ap, a), pi(tp, ap) * g.payoff(0, t, a), 1e-15);
}

TEST(VerifierTest, ConstantPayoffsGiveZeroEpsilon) {
  std::mt19937_64 rng(35);
  const std::size_t size = 4 * 4;
  const BayesianGame g(testing::Names({2, 2}), testing::Names({2, 2}),
                       Prior::Product({{0.3, 0.7}, {0.6, 0.4}}),
                       {std::vector<double>(size, 0.4), std::vector<double>(size, 0.4)}, PayoffScope::kFull);
  const TabularDistribution pi = RandomTabular(rng, g);
  for (auto cls : {EquilibriumClass::kComm, EquilibriumClass::kAnfBs, EquilibriumClass::kCoarseBs})
    EXPECT_NEAR(Certify(g, pi, cls).epsilon, 0.0, 1e-12);
}

TEST(VerifierTest, FiveActionFixture) {
  const BayesianGame g = LoadFixtureGame("five_action_game.json");
  const TabularDistribution pi = LoadTabular(g, "five_action_dist.json");
  const Certificate c = Certify(g, pi, EquilibriumClass::kComm);
  EXPECT_NEAR(c.epsilon, 0.0, 1e-12);
  EXPECT_NEAR(c.per_player[0].truthful_value, 0.5, 1e-12);
  const StrategySpace space(g);
  const StrategyDistribution sigma = LoadSigma(g, "five_action_sigma.json");
  const TabularDistribution back = StrategyToTabular(g, space, sigma);
  for (std::size_t k = 0; k < pi.p.size(); ++k) EXPECT_NEAR(back.p[k], pi.p[k], 1e-12);
  const RepresentabilityResult r = Representable(g, pi);
  ASSERT_TRUE(r.feasible);
  EXPECT_LE(r.reproduction_error, 1e-7);
  EXPECT_TRUE(ConditionalIndependence(g, pi).holds);
}

TEST(VerifierTest, NonrepresentableFixture) {
  const BayesianGame g = LoadFixtureGame("nonrepresentable_game.json");
  const TabularDistribution pi = LoadTabular(g, "nonrepresentable_dist.json");
  const RepresentabilityResult r = Representable(g, pi);
  ASSERT_FALSE(r.feasible);
  const auto [worst, margin] = FarkasCheck(g, pi, StrategySpace(g), r.farkas);
  EXPECT_LE(worst, 1e-9);
  EXPECT_GE(margin, 1e-7);
  EXPECT_TRUE(ConditionalIndependence(g, pi).holds);
  EXPECT_EQ(Certify(g, pi, EquilibriumClass::kAnfBs).epsilon, 0.0);
}

TEST(VerifierTest, RandomMixturesAreRepresentable) {
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 15; ++trial) {
    const BayesianGame g = RandomGame(rng, {2, 2}, {2, 2}, trial % 2 == 0);
    const TabularDistribution pi = RandomMixture(rng, g, 1 + trial % 4).ToTabular(g);
    const RepresentabilityResult r = Representable(g, pi);
    ASSERT_TRUE(r.feasible);
    EXPECT_LE(r.reproduction_error, 1e-7);
    EXPECT_TRUE(ConditionalIndependence(g, pi).holds);
  }
}

TEST(VerifierTest, IndependenceFailsWhenActionCopiesOpponentType) {
  const BayesianGame g(testing::Names({2, 2}), testing::Names({2, 2}),
                       Prior::Tabular({0.4, 0.1, 0.1, 0.4}),
                       {std::vector<double>(16, 0.0), std::vector<double>(16, 0.0)}, PayoffScope::kFull);
  TabularDistribution pi;
  pi.num_type_profiles = 4;
  pi.num_action_profiles = 4;
  pi.p.assign(16, 0.0);
  for (int t1 = 0; t1 < 2; ++t1)
    for (int t2 = 0; t2 < 2; ++t2) pi.p[(t1 * 2 + t2) * 4 + t2 * 2] = 1.0;
  const IndependenceResult r = ConditionalIndependence(g, pi);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.player, 0);
  EXPECT_GT(r.max_violation, 0.1);
  EXPECT_FALSE(Representable(g, pi).feasible);
}

TEST(VerifierTest, BneRequiresProductAndDominantStrategiesGiveZero) {
  // Action 1 dominates for both players at every type.
  std::vector<std::vector<double>> pay(2, std::vector<double>(16));
  for (int t = 0; t < 4; ++t)
    for (int a1 = 0; a1 < 2; ++a1)
      for (int a2 = 0; a2 < 2; ++a2) {
        pay[0][t * 4 + a1 * 2 + a2] = 0.2 + 0.5 * a1 + 0.1 * a2;
        pay[1][t * 4 + a1 * 2 + a2] = 0.1 + 0.6 * a2 + 0.2 * a1;
      }
  const BayesianGame g(testing::Names({2, 2}), testing::Names({2, 2}),
                       Prior::Product({{0.5, 0.5}, {0.2, 0.8}}), pay, PayoffScope::kFull);
  const std::vector<int> ones{1, 1};
  MixtureDistribution m;
  m.components.push_back({1.0, {TypeWisePolicy::Pure(ones, 2), TypeWisePolicy::Pure(ones, 2)}});
  EXPECT_NEAR(Certify(g, m.ToTabular(g), EquilibriumClass::kBne).epsilon, 0.0, 1e-12);

  std::mt19937_64 rng(37);
  const TabularDistribution corr = RandomTabular(rng, g);
  try {
    Certify(g, corr, EquilibriumClass::kBne);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidDistribution);
  }
}

// Strategy-distribution oracles by enumerating replacement strategies.
double StrategyValue(const BayesianGame& g, const StrategySpace& space, const StrategyDistribution& sigma,
                     int i, const std::function<int(std::size_t, int, int)>& own) {
  const int n = g.num_players();
  std::vector<int> th(n), ac(n);
  double v = 0.0;
  for (const auto& [s, p] : sigma.support)
    for (std::size_t t = 0; t < g.num_type_profiles(); ++t) {
      g.type_profiles().Decode(t, th);
      for (int j = 0; j < n; ++j) ac[j] = space.Action(s, j, th[j]);
      ac[i] = own(s, th[i], ac[i]);
      v += p * g.prior(t) * g.payoff(i, t, g.action_profiles().Encode(ac));
    }
  return v;
}

TEST(VerifierTest, StrategyClassesMatchEnumeration) {
  std::mt19937_64 rng(38);
  for (int trial = 0; trial < 8; ++trial) {
    const BayesianGame g = RandomGame(rng, {2, 2}, {2, 3}, trial % 2 == 0);
    const StrategySpace space(g);
    StrategyDistribution sigma;
    const auto w = testing::RandomSimplex(rng, 5);
    for (int k = 0; k < 5; ++k) sigma.support.emplace_back(rng() % space.size(), w[k]);
    const Certificate sfcce = Certify(g, space, sigma, EquilibriumClass::kSfcce);
    const Certificate anfcce = Certify(g, space, sigma, EquilibriumClass::kAnfcce);
    const Certificate sfce = Certify(g, space, sigma, EquilibriumClass::kSfce);
    const Certificate comm = Certify(g, space, sigma, EquilibriumClass::kComm);
    for (int i = 0; i < 2; ++i) {
      const int nt = g.num_types(i), na = g.num_actions(i);
      const double truthful = StrategyValue(g, space, sigma, i, [](std::size_t, int, int a) { return a; });
      double best_sf = -1e300, best_anf = -1e300;
      std::vector<int> fixed(nt, 0);
      do {
        best_sf = std::max(best_sf, StrategyValue(g, space, sigma, i, [&](std::size_t, int t, int) { return fixed[t]; }) - truthful);
      } while (Next(fixed, na));
      for (int t = 0; t < nt; ++t)
        for (int a = 0; a < na; ++a)
          best_anf = std::max(best_anf, StrategyValue(g, space, sigma, i, [&](std::size_t, int tt, int x) {
                                          return tt == t ? a : x;
                                        }) - truthful);
      EXPECT_NEAR(sfcce.per_player[i].gain, best_sf, 1e-9);
      EXPECT_NEAR(anfcce.per_player[i].gain, best_anf, 1e-9);
      // sfce replay: every own strategy in the support maps to its witness.
      std::map<std::size_t, std::vector<int>> repl(sfce.per_player[i].witness.strategy_map.begin(),
                                                   sfce.per_player[i].witness.strategy_map.end());
      const double replay = StrategyValue(g, space, sigma, i, [&](std::size_t s, int t, int) {
        return repl.at(space.PlayerStrategy(s, i))[t];
      });
      EXPECT_NEAR(sfce.per_player[i].gain, replay - truthful, 1e-9);
      EXPECT_GE(sfce.per_player[i].gain, sfcce.per_player[i].gain - 1e-12);
      EXPECT_GE(comm.per_player[i].gain, -1e-12 + Certify(g, space, sigma, EquilibriumClass::kAnfBs).per_player[i].gain);
    }
  }
}

TEST(VerifierTest, CorrelatedCoarseFixture) {
  const BayesianGame g = LoadFixtureGame("correlated_coarse_game.json");
  const StrategySpace space(g);
  const StrategyDistribution sigma = LoadSigma(g, "correlated_coarse_sigma.json");
  EXPECT_NEAR(Certify(g, space, sigma, EquilibriumClass::kSfcce).epsilon, 0.0, 1e-12);
  const Certificate c = Certify(g, space, sigma, EquilibriumClass::kAnfcce);
  EXPECT_NEAR(c.epsilon, 0.25, 1e-12);
  EXPECT_EQ(c.per_player[0].witness.type, 0);
  EXPECT_EQ(c.per_player[0].witness.action, 1);
}

TEST(VerifierTest, ClassNamesRoundTrip) {
  for (auto c : {EquilibriumClass::kComm, EquilibriumClass::kAnfBs, EquilibriumClass::kCoarseBs,
                 EquilibriumClass::kBne, EquilibriumClass::kSfce, EquilibriumClass::kSfcce,
                 EquilibriumClass::kAnfcce})
    EXPECT_EQ(ParseClass(ClassName(c)), c);
  EXPECT_FALSE(ParseClass("nash").has_value());
}

}  // namespace
}  // namespace bayescorr
