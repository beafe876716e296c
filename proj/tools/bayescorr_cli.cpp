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


// Command-line front end: simulate, verify, representable, adversary, poa.

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <system_error>

#include "CLI11.hpp"

#include "bayescorr/adversary.hpp"
#include "bayescorr/dynamics.hpp"
#include "bayescorr/io.hpp"
#include "bayescorr/poa.hpp"
#include "bayescorr/verifier.hpp"

namespace bc = bayescorr;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitCap = 2;
constexpr int kExitInternal = 3;
constexpr int kExitCheckFailed = 4;

int ExitCodeFor(bc::ErrorKind k) {
  switch (k) {
    case bc::ErrorKind::kEnumerationTooLarge:
    case bc::ErrorKind::kCapExceeded:
      return kExitCap;
    case bc::ErrorKind::kNoConvergence:
    case bc::ErrorKind::kAuditError:
    case bc::ErrorKind::kInternal:
    case bc::ErrorKind::kNumericallyAmbiguous:
      return kExitInternal;
    case bc::ErrorKind::kNotAnEquilibrium:
      return kExitCheckFailed;
    default:
      return kExitBadInput;
  }
}

// Shortest round-trip decimal, independent of locale.
std::string Num(double v) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, r.ptr);
}

void WriteFile(const std::filesystem::path& p, const std::string& body) {
  std::ofstream out(p, std::ios::binary);
  if (!out) bc::Fail(bc::ErrorKind::kInvalidGame, "cannot write " + p.string());
  out << body;
}

std::string Dump(const bc::Json& j) { return j.dump(1) + "\n"; }

struct SimulateArgs {
  std::string game, out = ".", learner = "untruthful", reward = "exact";
  long horizon = 1000;
  double eps = 0.1, delta = 0.1;
  std::uint64_t seed = 0;
  int threads = 1, thinning = 1;
  std::size_t cap = bc::kDefaultLearnerStrategyCap;
};

int RunSimulate(const SimulateArgs& a) {
  const bc::Json gj = bc::io::ReadJsonFile(a.game);
  const bc::BayesianGame g = bc::GameFromJson(gj);
  bc::DynamicsConfig cfg;
  if (a.learner == "untruthful") {
    cfg.learner = bc::LearnerKind::kUntruthful;
  } else if (a.learner == "typewise") {
    cfg.learner = bc::LearnerKind::kTypewise;
  } else if (a.learner == "strategy-swap") {
    cfg.learner = bc::LearnerKind::kStrategySwap;
  } else {
    bc::Fail(bc::ErrorKind::kInvalidGame, "unknown learner " + a.learner);
  }
  cfg.reward = a.reward == "sampled" ? bc::RewardMode::kSampled : bc::RewardMode::kExact;
  if (a.reward != "sampled" && a.reward != "exact") {
    bc::Fail(bc::ErrorKind::kInvalidGame, "unknown reward mode " + a.reward);
  }
  cfg.horizon = a.horizon;
  cfg.epsilon = a.eps;
  cfg.delta = a.delta;
  cfg.seed = a.seed;
  cfg.threads = a.threads;
  cfg.thinning = a.thinning;
  cfg.curve_every = 1;
  cfg.strategy_cap = a.cap;
  const bc::RunResult r = bc::RunDynamics(g, cfg);

  std::filesystem::create_directories(a.out);
  std::string csv = "t,player,external,typewise,untruthful,bound\n";
  for (const auto& p : r.curve) {
    csv += std::to_string(p.t) + "," + std::to_string(p.player) + "," + Num(p.external) + "," +
           Num(p.typewise) + "," + Num(p.untruthful) + "," + Num(p.bound) + "\n";
  }
  WriteFile(std::filesystem::path(a.out) / "regret.csv", csv);

  const double T = static_cast<double>(r.horizon);
  bc::Json per = bc::Json::array();
  double bound = 0.0;
  for (std::size_t i = 0; i < r.untruthful.size(); ++i) {
    per.push_back({{"gain", r.untruthful[i] / T},
                   {"witness", {{"psi", r.witnesses[i].psi}, {"phi", r.witnesses[i].phi}}}});
    bound = std::max(bound, r.bound[i] / T);
  }
  bc::Json eq = {{"horizon", r.horizon},
                 {"learner", a.learner},
                 {"reward", a.reward},
                 {"seed", a.seed},
                 {"certificate",
                  {{"class", "comm"}, {"epsilon", r.certificate}, {"per_player", per},
                   {"representable", true}}},
                 {"distribution", bc::MixtureToJson(r.mixture)}};
  if (cfg.reward == bc::RewardMode::kSampled) eq["samples_per_entry"] = r.samples_per_entry;
  WriteFile(std::filesystem::path(a.out) / "equilibrium.json", Dump(eq));
  WriteFile(std::filesystem::path(a.out) / "certificate.txt",
            "class comm\nepsilon " + Num(r.certificate) + "\nbound_at_T " + Num(bound) + "\n");
  std::cout << "epsilon " << Num(r.certificate) << " bound_at_T " << Num(bound) << "\n";
  return kExitOk;
}

struct VerifyArgs {
  std::string game, dist, cls = "comm", out;
  double tol = 1e-6;
  int threads = 1;
};

int RunRepresentable(const bc::BayesianGame& g, const bc::LoadedDistribution& d,
                     const std::string& out_path) {
  bc::TabularDistribution pi;
  if (const auto* t = std::get_if<bc::TabularDistribution>(&d.value)) {
    pi = *t;
  } else if (const auto* m = std::get_if<bc::MixtureDistribution>(&d.value)) {
    pi = m->ToTabular(g);
  } else {
    pi = bc::StrategyToTabular(g, bc::StrategySpace(g),
                               std::get<bc::StrategyDistribution>(d.value));
  }
  const bc::RepresentabilityResult r = bc::Representable(g, pi);
  const bc::IndependenceResult ci = bc::ConditionalIndependence(g, pi);
  bc::Json j = {{"feasible", r.feasible},
                {"status", r.feasible ? "feasible" : "infeasible"},
                {"phase1_value", r.phase1_value},
                {"conditionally_independent", ci.holds}};
  if (r.feasible) {
    j["sigma"] = bc::StrategyDistributionToJson(g, bc::StrategySpace(g), r.sigma);
    j["reproduction_error"] = r.reproduction_error;
  } else {
    j["farkas"] = r.farkas;
    j["farkas_margin"] = r.farkas_margin;
  }
  const std::string body = Dump(j);
  if (!out_path.empty()) WriteFile(out_path, body);
  std::cout << body;
  return r.feasible ? kExitOk : kExitCheckFailed;
}

int RunVerify(const VerifyArgs& a) {
  const bc::BayesianGame g = bc::GameFromJson(bc::io::ReadJsonFile(a.game));
  const bc::LoadedDistribution d = bc::DistributionFromJson(g, bc::io::ReadJsonFile(a.dist));
  if (a.cls == "representable") return RunRepresentable(g, d, a.out);
  const auto cls = bc::ParseClass(a.cls);
  if (!cls) bc::Fail(bc::ErrorKind::kInvalidGame, "unknown class " + a.cls);
  bc::Certificate cert;
  if (const auto* t = std::get_if<bc::TabularDistribution>(&d.value)) {
    cert = bc::Certify(g, *t, *cls, a.threads);
  } else if (const auto* m = std::get_if<bc::MixtureDistribution>(&d.value)) {
    cert = bc::Certify(g, *m, *cls, a.threads);
  } else {
    cert = bc::Certify(g, bc::StrategySpace(g), std::get<bc::StrategyDistribution>(d.value), *cls);
  }
  const std::string body = Dump(bc::CertificateToJson(cert));
  if (!a.out.empty()) WriteFile(a.out, body);
  std::cout << body;
  return cert.epsilon <= a.tol ? kExitOk : kExitCheckFailed;
}

struct AdversaryArgs {
  int bits = 3;
  long horizon = 3000;
  std::uint64_t seed = 0;
  std::string learner = "untruthful", export_csv;
};

int RunAdversary(const AdversaryArgs& a) {
  const bc::LowerBoundInstance inst(a.bits, a.horizon, a.seed);
  if (!a.export_csv.empty()) {
    std::ofstream out(a.export_csv, std::ios::binary);
    if (!out) bc::Fail(bc::ErrorKind::kInvalidGame, "cannot write " + a.export_csv);
    inst.ExportCsv(out);
  }
  bc::AdversaryLearner kind;
  if (a.learner == "untruthful") {
    kind = bc::AdversaryLearner::kUntruthful;
  } else if (a.learner == "typewise") {
    kind = bc::AdversaryLearner::kTypewise;
  } else if (a.learner == "oracle") {
    kind = bc::AdversaryLearner::kOracle;
  } else if (a.learner == "uniform") {
    kind = bc::AdversaryLearner::kUniform;
  } else {
    bc::Fail(bc::ErrorKind::kInvalidGame, "unknown learner " + a.learner);
  }
  const bc::ExperimentResult r = bc::RunExperiment(inst, kind);
  const bc::Json j = {{"bits", a.bits},
                      {"horizon", a.horizon},
                      {"types", inst.num_types()},
                      {"seed", a.seed},
                      {"learner", a.learner},
                      {"untruthful_regret", r.untruthful_regret},
                      {"typewise_regret", r.typewise_regret},
                      {"bound", r.bound},
                      {"a0_mass_on_theta0", r.a0_mass_on_theta0},
                      {"a1_mass_on_theta1", r.a1_mass_on_theta1},
                      {"diagnostic_threshold", r.diagnostic_threshold}};
  std::cout << Dump(j);
  return kExitOk;
}

struct PoaArgs {
  std::string game, dist, spec;
  double eps_tol = 0.01;
  int threads = 1;
};

int RunPoa(const PoaArgs& a) {
  const bc::Json gj = bc::io::ReadJsonFile(a.game);
  const bc::BayesianGame g = bc::GameFromJson(gj);
  const auto q = bc::QuasilinearFromJson(g, gj);
  const bc::SmoothnessSpec spec = bc::SmoothnessSpecFromJson(g, bc::io::ReadJsonFile(a.spec));
  if (spec.mode == bc::PoaMode::kMechanism && !q) {
    bc::Fail(bc::ErrorKind::kInvalidGame, "mechanism mode needs a quasilinear decomposition");
  }
  const bc::QuasilinearGame* qp = spec.mode == bc::PoaMode::kMechanism ? &*q : nullptr;
  const bc::SmoothnessResult sm = qp ? bc::CheckSmoothness(*qp, spec) : bc::CheckSmoothness(g, spec);
  bc::Json j = {{"mode", spec.mode == bc::PoaMode::kMechanism ? "mechanism" : "game"},
                {"lambda", spec.lambda},
                {"mu", spec.mu},
                {"smooth", sm.holds},
                {"min_slack", sm.min_slack},
                {"tightest", {{"theta", sm.theta}, {"action", sm.action}}}};
  if (!spec.mu_grid.empty()) {
    bc::Json sweep = bc::Json::array();
    for (const auto& p : bc::SmoothnessSweep(g, qp, spec.deviation, spec.mu_grid)) {
      sweep.push_back({{"mu", p.mu}, {"lambda", p.lambda}, {"bound", p.bound}});
    }
    j["sweep"] = sweep;
  }
  if (!sm.holds) {
    std::cout << Dump(j);
    return kExitCheckFailed;
  }
  if (!a.dist.empty()) {
    const bc::LoadedDistribution d = bc::DistributionFromJson(g, bc::io::ReadJsonFile(a.dist));
    const auto* m = std::get_if<bc::MixtureDistribution>(&d.value);
    if (m == nullptr) bc::Fail(bc::ErrorKind::kInvalidDistribution, "poa needs a mixture distribution");
    const bc::PoaReport rep = qp ? bc::MakePoaReport(*qp, *m, spec, a.eps_tol, a.threads)
                                 : bc::MakePoaReport(g, *m, spec, a.eps_tol, a.threads);
    j["expected_welfare"] = rep.expected_welfare;
    j["optimal_welfare"] = rep.optimal_welfare;
    j["ratio"] = rep.ratio;
    j["bound"] = rep.bound;
    j["epsilon"] = rep.epsilon;
    j["slack"] = rep.slack;
    j["holds"] = rep.holds;
    std::cout << Dump(j);
    return rep.holds ? kExitOk : kExitCheckFailed;
  }
  std::cout << Dump(j);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Learning and verifying communication equilibria in Bayesian games"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* s = app.add_subcommand("simulate", "run no-regret dynamics on a game");
  s->add_option("game", sim.game, "game JSON")->required();
  s->add_option("--learner", sim.learner, "untruthful | typewise | strategy-swap");
  s->add_option("-T,--horizon", sim.horizon, "number of rounds");
  s->add_option("--reward", sim.reward, "exact | sampled");
  s->add_option("--eps", sim.eps, "sampled-reward accuracy");
  s->add_option("--delta", sim.delta, "sampled-reward failure probability");
  s->add_option("--seed", sim.seed, "random seed");
  s->add_option("--threads", sim.threads, "worker threads");
  s->add_option("--thinning", sim.thinning, "keep every k-th round in the mixture");
  s->add_option("--cap", sim.cap, "strategy-set size cap for strategy-swap");
  s->add_option("-o,--out,--out-dir", sim.out, "output directory");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "certify a distribution against a class");
  v->add_option("game", ver.game, "game JSON")->required();
  v->add_option("dist", ver.dist, "distribution JSON")->required();
  v->add_option("--class", ver.cls,
                "comm | anf_bs | coarse_bs | bne | sfce | sfcce | anfcce | representable");
  v->add_option("--tol", ver.tol, "epsilon tolerance for the exit status");
  v->add_option("-o,--out", ver.out, "also write the JSON here");
  v->add_option("--threads", ver.threads, "worker threads (per-player tensors)");

  VerifyArgs rep;
  auto* r = app.add_subcommand("representable", "decide strategy representability");
  r->add_option("game", rep.game, "game JSON")->required();
  r->add_option("dist", rep.dist, "distribution JSON")->required();
  r->add_option("-o,--out", rep.out, "also write the JSON here");

  AdversaryArgs adv;
  auto* ad = app.add_subcommand("adversary", "run the lower-bound instance");
  ad->add_option("-B,--bits", adv.bits, "B: 2^(B+1) types");
  ad->add_option("-T,--horizon", adv.horizon, "number of rounds");
  ad->add_option("--seed", adv.seed, "instance seed");
  ad->add_option("--learner", adv.learner, "untruthful | typewise | oracle | uniform");
  ad->add_option("--export", adv.export_csv, "write the reward stream as CSV");

  PoaArgs poa;
  auto* p = app.add_subcommand("poa", "smoothness check and welfare bound");
  p->add_option("game", poa.game, "game JSON")->required();
  p->add_option("dist", poa.dist, "equilibrium distribution JSON")->required();
  p->add_option("spec", poa.spec, "smoothness spec JSON")->required();
  p->add_option("--eps-tol", poa.eps_tol, "largest accepted equilibrium epsilon");
  p->add_option("--threads", poa.threads, "worker threads (per-player tensors)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*s) return RunSimulate(sim);
    if (*v) return RunVerify(ver);
    if (*r) {
      const bc::BayesianGame g = bc::GameFromJson(bc::io::ReadJsonFile(rep.game));
      return RunRepresentable(g, bc::DistributionFromJson(g, bc::io::ReadJsonFile(rep.dist)), rep.out);
    }
    if (*ad) return RunAdversary(adv);
    if (*p) return RunPoa(poa);
  } catch (const bc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCodeFor(e.kind());
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitBadInput;
}
