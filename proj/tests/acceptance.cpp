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


// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <sys/wait.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "bayescorr/adversary.hpp"
#include "bayescorr/dynamics.hpp"
#include "bayescorr/io.hpp"
#include "bayescorr/learners.hpp"
#include "bayescorr/poa.hpp"
#include "bayescorr/regret.hpp"
#include "bayescorr/transforms.hpp"
#include "bayescorr/verifier.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace bc = bayescorr;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failures; detail keeps the first few messages.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    std::lock_guard<std::mutex> lk(mu_);
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) msgs_ += (msgs_.empty() ? "" : "; ") + what;
  }
  Outcome Done(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + " failure(s): " + msgs_};
  }

 private:
  std::mutex mu_;
  int failures_ = 0;
  std::string msgs_;
};

std::string Fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

double Seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since).count();
}

int Workers() { return std::max(1u, std::thread::hardware_concurrency()); }

// ---- 1, 2, 8: untruthful learner on i.i.d. uniform reward streams ----

struct StreamRun {
  double r_quarter = 0.0, r_full = 0.0, bound = 0.0;
  double external = 0.0, typewise = 0.0;
};

double StatedBound(int nt, int na, long T) {
  const double t = static_cast<double>(T);
  return std::sqrt(0.5 * t * std::log(nt)) + 6.0 * std::sqrt(t * na * std::log(na)) + 2.0 * na * std::log(na);
}

StreamRun RunStream(int nt, int na, long T, std::uint64_t seed) {
  const std::vector<double> rho(nt, 1.0 / nt);
  bc::UntruthfulLearner learner(nt, na, static_cast<int>(T), rho);
  bc::RegretLedger ledger(nt, na, rho);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  bc::RewardTable u(nt, na);
  StreamRun out;
  for (long t = 1; t <= T; ++t) {
    const bc::TypeWisePolicy x = learner.Decide();
    for (double& v : u.data()) v = unif(rng);
    learner.Observe(u);
    ledger.Accumulate(x, u);
    if (t == T / 4) out.r_quarter = ledger.Untruthful().value;
  }
  out.r_full = ledger.Untruthful().value;
  out.typewise = ledger.Typewise().value;
  out.external = ledger.External().value;
  out.bound = StatedBound(nt, na, T);
  return out;
}

struct StreamSuite {
  std::vector<StreamRun> runs;
  double seconds = 0.0;
};

StreamSuite RunStreamSuite() {
  struct Job {
    int nt, na;
    long T;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (std::uint64_t s = 0; s < 20; ++s) {
    jobs.push_back({4, 3, 10'000, 1000 + s});
    jobs.push_back({8, 2, 30'000, 2000 + s});
  }
  StreamSuite suite;
  suite.runs.resize(jobs.size());
  const auto start = std::chrono::steady_clock::now();
  bc::ThreadPool pool(Workers());
  pool.ParallelFor(static_cast<int>(jobs.size()), [&](int k) {
    suite.runs[k] = RunStream(jobs[k].nt, jobs[k].na, jobs[k].T, jobs[k].seed);
  });
  suite.seconds = Seconds(start);
  return suite;
}

Outcome RegretBound(const StreamSuite& s) {
  Check c;
  double worst = 0.0;
  for (const auto& r : s.runs) {
    c.Expect(r.r_full <= r.bound, "regret " + Fmt(r.r_full) + " > bound " + Fmt(r.bound));
    worst = std::max(worst, r.r_full / r.bound);
  }
  c.Expect(s.seconds < 120.0, "runtime " + Fmt(s.seconds) + "s");
  return c.Done("40 runs, max regret/bound " + Fmt(worst) + ", " + Fmt(s.seconds) + "s");
}

// Judged on the per-configuration mean regret over the 20 seeds; single
// runs carry sqrt(T)-scale noise of their own, so the per-run ratio is
// reported alongside.
Outcome Sublinearity(const StreamSuite& s) {
  Check c;
  std::string detail;
  int above = 0;
  for (int cfg = 0; cfg < 2; ++cfg) {
    double full = 0.0, quarter = 0.0;
    for (std::size_t k = cfg; k < s.runs.size(); k += 2) {
      full += s.runs[k].r_full;
      quarter += s.runs[k].r_quarter;
      above += s.runs[k].r_full > 2.2 * s.runs[k].r_quarter;
    }
    // R(T)/T <= 0.55 R(T/4)/(T/4)  <=>  R(T) <= 2.2 R(T/4)
    const double ratio = full / quarter;
    c.Expect(ratio <= 2.2, "mean R(T)/R(T/4) = " + Fmt(ratio));
    detail += (cfg ? ", " : "") + std::string(cfg ? "(8,2,3e4)" : "(4,3,1e4)") + " mean R(T)/R(T/4) " + Fmt(ratio);
  }
  return c.Done(detail + " (limit 2.2); single runs above 2.2: " + std::to_string(above) + "/40");
}

// ---- 3: certificate soundness ----

bc::BayesianGame MatchingGame() {
  // Player 0 wants to match, player 1 to mismatch; stakes depend on type.
  std::vector<std::vector<double>> pay(2, std::vector<double>(16));
  const double stake0[2] = {1.0, 0.7}, stake1[2] = {1.0, 0.5};
  for (int t0 = 0; t0 < 2; ++t0)
    for (int t1 = 0; t1 < 2; ++t1)
      for (int a0 = 0; a0 < 2; ++a0)
        for (int a1 = 0; a1 < 2; ++a1) {
          const std::size_t k = (t0 * 2 + t1) * 4 + a0 * 2 + a1;
          pay[0][k] = a0 == a1 ? stake0[t0] : 0.0;
          pay[1][k] = a0 != a1 ? stake1[t1] : 0.0;
        }
  return bc::BayesianGame(bc::testing::Names({2, 2}), bc::testing::Names({2, 2}),
                          bc::Prior::Product({{0.5, 0.5}, {0.4, 0.6}}), pay, bc::PayoffScope::kOwnType);
}

Outcome CertificateSoundness(std::vector<bc::RunResult>& runs_out, std::vector<bc::BayesianGame>& games_out) {
  Check c;
  std::mt19937_64 rng(3);
  games_out = {MatchingGame(), bc::testing::RandomGame(rng, {2, 2}, {2, 2}, true),
               bc::testing::RandomGame(rng, {2, 2}, {2, 2}, false)};
  double worst = 0.0;
  for (const auto& g : games_out) {
    bc::DynamicsConfig cfg;
    cfg.horizon = 50'000;
    cfg.threads = 2;
    const bc::RunResult r = bc::RunDynamics(g, cfg);
    const double eps = bc::Certify(g, r.mixture, bc::EquilibriumClass::kComm).epsilon;
    worst = std::max(worst, std::abs(eps - r.certificate));
    c.Expect(std::abs(eps - r.certificate) <= 1e-6, "verifier " + Fmt(eps) + " vs certificate " + Fmt(r.certificate));
    runs_out.push_back(r);
  }
  return c.Done("3 games at T=5e4, max |verifier - certificate| " + Fmt(worst));
}

// ---- 4: regret oracle equivalence ----

Outcome RegretOracle() {
  Check c;
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const int nt = 1 + static_cast<int>(rng() % 3), na = 1 + static_cast<int>(rng() % 3);
    const int T = 1 + static_cast<int>(rng() % 50);
    const auto rho = bc::testing::RandomSimplex(rng, nt);
    const auto stream = bc::testing::RandomRounds(rng, nt, na, T);
    bc::RegretLedger ledger(nt, na, rho);
    for (const auto& r : stream) ledger.Accumulate(r.x, r.u);
    const bc::testing::BruteForce bf = bc::testing::Enumerate(stream, rho, nt, na);
    const double du = std::abs(ledger.Untruthful().value - bf.untruthful);
    const double dt = std::abs(ledger.Typewise().value - bf.typewise);

    // Strategy regret: sigma over S = A^Theta, replacement maps S -> S.
    const bc::MixedRadix strat(std::vector<int>(nt, na));
    const int ns = static_cast<int>(strat.size());
    std::vector<bc::StrategyRound> trace;
    for (int t = 0; t < T; ++t) {
      bc::RewardTable u(nt, na);
      for (double& v : u.data()) v = unif(rng);
      trace.push_back({bc::testing::RandomSimplex(rng, ns), u});
    }
    // gain[s][s']: total gain from replacing s by s'.
    std::vector<double> gain(static_cast<std::size_t>(ns) * ns, 0.0);
    for (const auto& r : trace)
      for (int s = 0; s < ns; ++s)
        for (int sp = 0; sp < ns; ++sp)
          for (int t = 0; t < nt; ++t)
            gain[s * ns + sp] += rho[t] * r.sigma[s] * (r.reward(t, strat.Digit(sp, t)) - r.reward(t, strat.Digit(s, t)));
    double best = 0.0;
    if (std::pow(ns, ns) <= 1e6) {
      // Every map S -> S.
      const bc::MixedRadix maps(std::vector<int>(ns, ns));
      best = -1e300;
      for (std::size_t m = 0; m < maps.size(); ++m) {
        double v = 0.0;
        for (int s = 0; s < ns; ++s) v += gain[s * ns + maps.Digit(m, s)];
        best = std::max(best, v);
      }
    } else {
      // The objective separates over source strategies.
      for (int s = 0; s < ns; ++s) best += *std::max_element(gain.begin() + s * ns, gain.begin() + (s + 1) * ns);
    }
    const double ds = std::abs(bc::StrategyRegret(trace, nt, na, rho) - best);
    worst = std::max({worst, du, dt, ds});
    c.Expect(du <= 1e-9 && dt <= 1e-9 && ds <= 1e-9,
             "case " + std::to_string(k) + " differences " + Fmt(du) + "/" + Fmt(dt) + "/" + Fmt(ds));
  }
  return c.Done("100 cases, max difference " + Fmt(worst));
}

// ---- 5: fixed points ----

Outcome FixedPoints() {
  Check c;
  std::mt19937_64 rng(5);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const int nt = 1 + static_cast<int>(rng() % 5), na = 1 + static_cast<int>(rng() % 5);
    const bc::SwapTransform q = bc::testing::RandomTransform(rng, nt, na, 0.001);
    const bc::TypeWisePolicy x = bc::FixedPoint(q);
    const bc::TypeWisePolicy y = q.Apply(x);
    double res = 0.0;
    for (std::size_t j = 0; j < x.data().size(); ++j) res = std::max(res, std::abs(y.data()[j] - x.data()[j]));
    double valid = 0.0;
    for (int t = 0; t < nt; ++t) {
      double s = 0.0;
      for (int a = 0; a < na; ++a) {
        valid = std::max(valid, -x(t, a));
        s += x(t, a);
      }
      valid = std::max(valid, std::abs(s - 1.0));
    }
    worst = std::max({worst, res, valid});
    c.Expect(res <= 1e-8 && valid <= 1e-8, "case " + std::to_string(k) + " residual " + Fmt(res));
  }
  return c.Done("1000 transforms, max residual/policy error " + Fmt(worst));
}

// ---- 6: representability ----

Outcome Representability() {
  Check c;
  const bc::BayesianGame g = bc::testing::LoadFixtureGame("nonrepresentable_game.json");
  const auto pi = std::get<bc::TabularDistribution>(
      bc::DistributionFromJson(g, bc::io::ReadJsonFile(bc::testing::Fixture("nonrepresentable_dist.json"))).value);
  const bc::RepresentabilityResult r = bc::Representable(g, pi);
  c.Expect(!r.feasible, "fixture reported feasible");
  double margin = 0.0;
  if (!r.feasible) {
    const auto [worst_col, by] = bc::FarkasCheck(g, pi, bc::StrategySpace(g), r.farkas);
    margin = by;
    c.Expect(worst_col <= 1e-9 && by >= 1e-7, "Farkas certificate does not separate");
  }

  std::mt19937_64 rng(6);
  const std::vector<std::pair<std::vector<int>, std::vector<int>>> shapes = {
      {{2, 2}, {2, 2}}, {{2, 3}, {2, 2}}, {{2, 2}, {3, 3}}, {{2, 2, 2}, {2, 2, 2}}, {{2, 2}, {4, 4}}, {{1, 3}, {4, 2}}};
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const auto& [types, actions] = shapes[k % shapes.size()];
    const bc::BayesianGame h = bc::testing::RandomGame(rng, types, actions, k % 2 == 0);
    c.Expect(bc::StrategySpace(h).size() <= 256, "strategy space too large");
    bc::MixtureDistribution m;
    const int comps = 1 + static_cast<int>(rng() % 5);
    const auto w = bc::testing::RandomSimplex(rng, comps);
    for (int j = 0; j < comps; ++j) {
      std::vector<bc::TypeWisePolicy> pol;
      for (int i = 0; i < h.num_players(); ++i)
        pol.push_back(bc::testing::RandomPolicy(rng, h.num_types(i), h.num_actions(i)));
      m.components.push_back({w[j], pol});
    }
    const bc::RepresentabilityResult rr = bc::Representable(h, m.ToTabular(h));
    c.Expect(rr.feasible && rr.reproduction_error <= 1e-7, "mixture " + std::to_string(k) + " not reproduced");
    worst = std::max(worst, rr.reproduction_error);
  }
  return c.Done("fixture infeasible (Farkas margin " + Fmt(margin) + "), 100 mixtures feasible, max reproduction error " +
                Fmt(worst));
}

// ---- 7: linear map to transform ----

Outcome LinearConversion() {
  Check c;
  std::mt19937_64 rng(7);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const int nt = 1 + static_cast<int>(rng() % 3), na = 2 + static_cast<int>(rng() % 2);
    const int d = nt * na;
    const int verts = 1 + static_cast<int>(rng() % 5);
    const auto w = bc::testing::RandomSimplex(rng, verts);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
    for (int v = 0; v < verts; ++v)
      m += w[v] * bc::DeviationToTransform(bc::testing::RandomDeviation(rng, nt, na), na).Dense();
    // Row shifts between type blocks leave the action on policies unchanged.
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    for (int r = 0; r < d; ++r)
      for (int tp = 0; tp + 1 < nt; ++tp) {
        const double s = u(rng);
        for (int ap = 0; ap < na; ++ap) {
          m(r, tp * na + ap) += s;
          m(r, (nt - 1) * na + ap) -= s;
        }
      }
    bc::SwapTransform q;
    try {
      q = bc::LinearToTransform(m, nt, na);
      q.Validate();
    } catch (const bc::Error& e) {
      c.Expect(false, std::string("case ") + std::to_string(k) + ": " + e.what());
      continue;
    }
    // Every vertex policy (one pure action per type).
    const bc::MixedRadix pure(std::vector<int>(nt, na));
    const Eigen::MatrixXd qd = q.Dense();
    for (std::size_t p = 0; p < pure.size(); ++p) {
      Eigen::VectorXd x = Eigen::VectorXd::Zero(d);
      for (int t = 0; t < nt; ++t) x(t * na + pure.Digit(p, t)) = 1.0;
      const double diff = (qd * x - m * x).cwiseAbs().maxCoeff();
      worst = std::max(worst, diff);
      c.Expect(diff <= 1e-9, "case " + std::to_string(k) + " disagrees by " + Fmt(diff));
    }
  }
  return c.Done("100 maps, max vertex disagreement " + Fmt(worst));
}

// ---- 8: ordering and inclusion ----

Outcome Ordering(const StreamSuite& s, const std::vector<bc::RunResult>& runs,
                 const std::vector<bc::BayesianGame>& games) {
  Check c;
  int checked = 0;
  for (const auto& r : s.runs) {
    c.Expect(r.external <= r.typewise + 1e-12 && r.typewise <= r.r_full + 1e-12, "stream ordering");
    ++checked;
  }
  for (const auto& r : runs)
    for (std::size_t i = 0; i < r.untruthful.size(); ++i) {
      c.Expect(r.external[i] <= r.typewise[i] + 1e-12 && r.typewise[i] <= r.untruthful[i] + 1e-12, "dynamics ordering");
      ++checked;
    }
  std::mt19937_64 rng(8);
  int dists = 0;
  auto compare = [&](const bc::BayesianGame& g, const auto& pi) {
    const double comm = bc::Certify(g, pi, bc::EquilibriumClass::kComm).epsilon;
    const double anf = bc::Certify(g, pi, bc::EquilibriumClass::kAnfBs).epsilon;
    const double coarse = bc::Certify(g, pi, bc::EquilibriumClass::kCoarseBs).epsilon;
    c.Expect(anf <= comm + 1e-12 && coarse <= anf + 1e-12, "anf_bs above comm");
    ++dists;
  };
  for (std::size_t k = 0; k < runs.size(); ++k) compare(games[k], runs[k].mixture);
  for (int k = 0; k < 50; ++k) {
    const bc::BayesianGame g = bc::testing::RandomGame(rng, {2, 3}, {3, 2}, k % 2 == 0);
    bc::TabularDistribution pi;
    pi.num_type_profiles = g.num_type_profiles();
    pi.num_action_profiles = g.num_action_profiles();
    for (std::size_t t = 0; t < g.num_type_profiles(); ++t) {
      const auto row = bc::testing::RandomSimplex(rng, static_cast<int>(g.num_action_profiles()));
      pi.p.insert(pi.p.end(), row.begin(), row.end());
    }
    compare(g, pi);
  }
  const bc::BayesianGame t2 = bc::testing::LoadFixtureGame("correlated_coarse_game.json");
  const auto sigma = std::get<bc::StrategyDistribution>(
      bc::DistributionFromJson(t2, bc::io::ReadJsonFile(bc::testing::Fixture("correlated_coarse_sigma.json"))).value);
  const bc::StrategySpace space(t2);
  const double sfcce = bc::Certify(t2, space, sigma, bc::EquilibriumClass::kSfcce).epsilon;
  const double anfcce = bc::Certify(t2, space, sigma, bc::EquilibriumClass::kAnfcce).epsilon;
  c.Expect(std::abs(sfcce) <= 1e-12, "SFCCE epsilon " + Fmt(sfcce));
  c.Expect(std::abs(anfcce - 0.25) <= 1e-12, "ANFCCE epsilon " + Fmt(anfcce));
  return c.Done(std::to_string(checked) + " regret orderings, " + std::to_string(dists) +
                " distributions, SFCCE " + Fmt(sfcce) + " ANFCCE " + Fmt(anfcce));
}

// ---- 9: lower-bound diagnostics ----

Outcome LowerBoundDiagnostics() {
  Check c;
  double margin = 1e300;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const bc::LowerBoundInstance inst(3, 3000, seed);
    const bc::ExperimentResult r = bc::RunExperiment(inst, bc::AdversaryLearner::kUntruthful);
    c.Expect(r.a0_mass_on_theta0 >= r.diagnostic_threshold, "seed " + std::to_string(seed) + " theta0 clause");
    c.Expect(r.a1_mass_on_theta1 >= r.diagnostic_threshold, "seed " + std::to_string(seed) + " theta1 clause");
    c.Expect(r.untruthful_regret <= r.bound, "seed " + std::to_string(seed) + " regret above bound");
    margin = std::min({margin, r.a0_mass_on_theta0 - r.diagnostic_threshold,
                       r.a1_mass_on_theta1 - r.diagnostic_threshold});
  }
  return c.Done("10 seeds, min diagnostic margin " + Fmt(margin));
}

// ---- 10: price of anarchy end to end ----

Outcome PoaEndToEnd() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  const bc::Json gj = bc::io::ReadJsonFile(bc::testing::Fixture("first_price_game.json"));
  const bc::BayesianGame g = bc::GameFromJson(gj);
  const auto q = bc::QuasilinearFromJson(g, gj);
  if (!q) return {false, "fixture lacks a quasilinear decomposition"};
  const bc::SmoothnessSpec spec =
      bc::SmoothnessSpecFromJson(g, bc::io::ReadJsonFile(bc::testing::Fixture("first_price_smooth.json")));
  const bc::SmoothnessResult sm = bc::CheckSmoothness(*q, spec);
  c.Expect(sm.holds && spec.lambda == 0.5 && spec.mu == 1.0, "(1/2, 1) smoothness fails");
  bc::DynamicsConfig cfg;
  cfg.horizon = 100'000;
  cfg.threads = 2;
  const bc::RunResult run = bc::RunDynamics(g, cfg);
  c.Expect(run.certificate <= 0.01, "certificate " + Fmt(run.certificate));
  bc::PoaReport rep;
  try {
    rep = bc::MakePoaReport(*q, run.mixture, spec, 0.01, 2);
  } catch (const bc::Error& e) {
    c.Expect(false, e.what());
    return c.Done("");
  }
  const double need = 0.5 - rep.slack - 1e-9;
  c.Expect(rep.ratio >= need, "ratio " + Fmt(rep.ratio) + " < " + Fmt(need));
  c.Expect(rep.bound == 0.5, "bound " + Fmt(rep.bound));
  const double secs = Seconds(start);
  c.Expect(secs < 300.0, "runtime " + Fmt(secs) + "s");
  return c.Done("eps " + Fmt(run.certificate) + ", ratio " + Fmt(rep.ratio) + " >= " + Fmt(need) + ", " +
                Fmt(secs) + "s");
}

// ---- 11: CLI determinism ----

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs the CLI in dir with stdout captured; returns stdout plus every
// file the run wrote, as one string.
std::string Capture(const fs::path& dir, const std::string& args, int* code) {
  fs::remove_all(dir);
  fs::create_directories(dir / "out");
  const std::string cmd =
      "cd " + dir.string() + " && " + BAYESCORR_CLI + " " + args + " > stdout.txt 2> stderr.txt";
  const int status = std::system(cmd.c_str());
  *code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::string all = "stdout\n" + Slurp(dir / "stdout.txt");
  std::vector<fs::path> files;
  for (const auto& e : fs::recursive_directory_iterator(dir / "out"))
    if (e.is_regular_file()) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) all += "\n" + fs::relative(f, dir).string() + "\n" + Slurp(f);
  return all;
}

Outcome CliDeterminism() {
  Check c;
  const fs::path root = fs::temp_directory_path() / "bayescorr_acceptance";
  const std::string fx = BAYESCORR_FIXTURE_DIR;
  const fs::path eq = root / "eq.json";
  fs::create_directories(root);
  {
    int code = 0;
    Capture(root / "seed", "simulate " + fx + "/first_price_game.json -T 2000 -o out", &code);
    fs::copy_file(root / "seed" / "out" / "equilibrium.json", eq, fs::copy_options::overwrite_existing);
    c.Expect(code == 0, "seed simulation failed");
  }
  struct Cmd {
    std::string args;
    bool threads;
  };
  const std::vector<Cmd> cmds = {
      {"simulate " + fx + "/coordination_game.json -T 500 --seed 7 -o out", true},
      {"simulate " + fx + "/coordination_game.json -T 200 --reward sampled --eps 0.3 --seed 7 -o out", true},
      {"simulate " + fx + "/five_action_game.json -T 200 --learner typewise --seed 2 -o out", true},
      {"simulate " + fx + "/correlated_coarse_game.json -T 100 --learner strategy-swap --seed 3 -o out", true},
      {"verify " + fx + "/first_price_game.json " + eq.string() + " --class comm --tol 1 -o out/cert.json", true},
      {"verify " + fx + "/correlated_coarse_game.json " + fx + "/correlated_coarse_sigma.json --class anfcce", false},
      {"verify " + fx + "/nonrepresentable_game.json " + fx + "/nonrepresentable_dist.json --class representable", false},
      {"representable " + fx + "/five_action_game.json " + fx + "/five_action_dist.json -o out/rep.json", false},
      {"adversary -B 3 -T 3000 --seed 5 --export out/stream.csv", false},
      {"poa " + fx + "/first_price_game.json " + eq.string() + " " + fx + "/first_price_smooth.json --eps-tol 1", true},
  };
  int n = 0;
  for (const auto& cmd : cmds) {
    int c1 = 0, c2 = 0, c3 = 0;
    const std::string a = Capture(root / "a", cmd.args, &c1);
    const std::string b = Capture(root / "b", cmd.args, &c2);
    c.Expect(c1 == c2 && a == b, "differs on re-run: " + cmd.args);
    c.Expect(c1 <= 4 && a.size() > 8, "no output: " + cmd.args);
    if (cmd.threads) {
      const std::string t = Capture(root / "t", cmd.args + " --threads 4", &c3);
      c.Expect(c1 == c3 && a == t, "differs with --threads 4: " + cmd.args);
    }
    ++n;
  }
  fs::remove_all(root);
  return c.Done(std::to_string(n) + " commands byte-identical across re-runs and thread counts");
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  auto report = [&](int id, const char* name, const std::function<Outcome()>& fn) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << name << ": " << o.detail << std::endl;
  };

  const StreamSuite streams = RunStreamSuite();
  std::vector<bc::RunResult> runs;
  std::vector<bc::BayesianGame> games;
  report(1, "regret bound", [&] { return RegretBound(streams); });
  report(2, "sublinearity", [&] { return Sublinearity(streams); });
  report(3, "certificate soundness", [&] { return CertificateSoundness(runs, games); });
  report(4, "regret oracle equivalence", RegretOracle);
  report(5, "fixed points", FixedPoints);
  report(6, "representability", Representability);
  report(7, "linear map conversion", LinearConversion);
  report(8, "ordering and inclusion", [&] { return Ordering(streams, runs, games); });
  report(9, "lower-bound diagnostics", LowerBoundDiagnostics);
  report(10, "price of anarchy", PoaEndToEnd);
  report(11, "cli determinism", CliDeterminism);
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << " in "
            << Fmt(Seconds(start)) << "s" << std::endl;
  return failed == 0 ? 0 : 1;
}
