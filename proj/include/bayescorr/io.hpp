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

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "bayescorr/errors.hpp"
#include "bayescorr/game.hpp"
#include "bayescorr/poa.hpp"
#include "bayescorr/verifier.hpp"

namespace bayescorr {

using Json = nlohmann::json;

namespace io {

inline void FlattenInto(const Json& j, std::vector<double>& out) {
  if (j.is_array()) {
    for (const auto& e : j) FlattenInto(e, out);
  } else if (j.is_number()) {
    out.push_back(j.get<double>());
  } else {
    Fail(ErrorKind::kInvalidGame, "expected a number");
  }
}

// Numbers from arbitrarily nested arrays, in order.
inline std::vector<double> Flatten(const Json& j) {
  std::vector<double> out;
  FlattenInto(j, out);
  return out;
}

inline std::vector<std::vector<std::string>> NameLists(const Json& j, const char* what) {
  if (!j.is_array()) Fail(ErrorKind::kInvalidGame, std::string(what) + " must be an array");
  std::vector<std::vector<std::string>> out;
  for (const auto& row : j) {
    std::vector<std::string> names;
    if (row.is_number_integer()) {
      for (int k = 0; k < row.get<int>(); ++k) names.push_back(std::to_string(k));
    } else {
      for (const auto& e : row) names.push_back(e.is_string() ? e.get<std::string>() : e.dump());
    }
    out.push_back(std::move(names));
  }
  return out;
}

inline Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorKind::kInvalidGame, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    Fail(ErrorKind::kInvalidGame, std::string("bad JSON in ") + path + ": " + e.what());
  }
}

template <typename T>
T Get(const Json& j, const char* key) {
  if (!j.contains(key)) Fail(ErrorKind::kInvalidGame, std::string("missing field ") + key);
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    Fail(ErrorKind::kInvalidGame, std::string("bad field ") + key + ": " + e.what());
  }
}

}  // namespace io

inline BayesianGame GameFromJson(const Json& j) {
  try {
    auto types = io::NameLists(j.at("types"), "types");
    auto actions = io::NameLists(j.at("actions"), "actions");
    if (j.contains("players") && j.at("players").get<int>() != static_cast<int>(types.size())) {
      Fail(ErrorKind::kInvalidGame, "players does not match types");
    }
    const Json& pj = j.at("prior");
    const std::string kind = pj.at("kind").get<std::string>();
    Prior prior;
    if (kind == "product") {
      std::vector<std::vector<double>> rows;
      for (const auto& r : pj.at("rows")) rows.push_back(io::Flatten(r));
      prior = Prior::Product(std::move(rows));
    } else if (kind == "tabular") {
      prior = Prior::Tabular(io::Flatten(pj.at("table")));
    } else {
      Fail(ErrorKind::kInvalidGame, "unknown prior kind " + kind);
    }
    std::vector<std::vector<double>> payoffs;
    for (const auto& p : j.at("payoffs")) payoffs.push_back(io::Flatten(p));
    const std::string scope = j.value("payoff_scope", std::string("full"));
    if (scope != "own-type" && scope != "full") Fail(ErrorKind::kInvalidGame, "payoff_scope");
    return BayesianGame(std::move(types), std::move(actions), std::move(prior), std::move(payoffs),
                        scope == "own-type" ? PayoffScope::kOwnType : PayoffScope::kFull);
  } catch (const Json::exception& e) {
    Fail(ErrorKind::kInvalidGame, e.what());
  }
}

inline Json GameToJson(const BayesianGame& g) {
  Json j;
  j["players"] = g.num_players();
  j["types"] = g.type_names();
  j["actions"] = g.action_names();
  if (g.product_prior()) {
    j["prior"] = {{"kind", "product"}, {"rows", g.prior_spec().rows}};
  } else {
    j["prior"] = {{"kind", "tabular"}, {"table", g.prior_spec().table}};
  }
  Json p = Json::array();
  for (int i = 0; i < g.num_players(); ++i) p.push_back(g.payoff_tensor(i));
  j["payoffs"] = p;
  j["payoff_scope"] = g.scope() == PayoffScope::kOwnType ? "own-type" : "full";
  return j;
}

inline std::optional<QuasilinearGame> QuasilinearFromJson(const BayesianGame& g, const Json& j) {
  if (!j.contains("quasilinear")) return std::nullopt;
  const Json& q = j.at("quasilinear");
  QuasilinearGame out;
  out.game = g;
  try {
    for (const auto& v : q.at("values")) out.values.push_back(io::Flatten(v));
    for (const auto& p : q.at("payments")) out.payments.push_back(io::Flatten(p));
    out.scale = q.value("scale", 1.0);
    out.offset = q.value("offset", 0.0);
  } catch (const Json::exception& e) {
    Fail(ErrorKind::kInvalidGame, e.what());
  }
  out.Validate();
  return out;
}

// ---- Distributions ----

struct LoadedDistribution {
  std::variant<TabularDistribution, MixtureDistribution, StrategyDistribution> value;
};

inline Json PolicyToJson(const TypeWisePolicy& p) {
  Json rows = Json::array();
  for (int t = 0; t < p.num_types(); ++t) {
    auto r = p.row(t);
    rows.push_back(std::vector<double>(r.begin(), r.end()));
  }
  return rows;
}

inline Json MixtureToJson(const MixtureDistribution& m) {
  Json comps = Json::array();
  for (const auto& c : m.components) {
    Json pol = Json::array();
    for (const auto& p : c.policies) pol.push_back(PolicyToJson(p));
    comps.push_back({{"weight", c.weight}, {"policies", pol}});
  }
  return {{"kind", "mixture"}, {"components", comps}};
}

inline LoadedDistribution DistributionFromJson(const BayesianGame& g, const Json& in) {
  const Json& j = in.contains("distribution") ? in.at("distribution") : in;
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "tabular") {
      TabularDistribution d;
      d.num_type_profiles = g.num_type_profiles();
      d.num_action_profiles = g.num_action_profiles();
      d.p = io::Flatten(j.at("table"));
      d.Validate(g, 1e-9);
      return {d};
    }
    if (kind == "mixture") {
      MixtureDistribution m;
      for (const auto& c : j.at("components")) {
        MixtureDistribution::Component comp;
        comp.weight = c.at("weight").get<double>();
        int i = 0;
        for (const auto& p : c.at("policies")) {
          if (i >= g.num_players()) Fail(ErrorKind::kDimensionMismatch, "too many policies");
          comp.policies.emplace_back(g.num_types(i), g.num_actions(i), io::Flatten(p));
          ++i;
        }
        m.components.push_back(std::move(comp));
      }
      m.Validate(g);
      return {m};
    }
    if (kind == "strategy") {
      const StrategySpace space(g);
      StrategyDistribution s;
      for (const auto& e : j.at("support")) {
        std::vector<int> digits;
        for (const auto& per_player : e.at("strategy"))
          for (const auto& a : per_player) digits.push_back(a.get<int>());
        if (static_cast<int>(digits.size()) != space.radix().num_digits()) {
          Fail(ErrorKind::kInvalidDistribution, "strategy length");
        }
        for (int k = 0; k < space.radix().num_digits(); ++k)
          if (digits[k] < 0 || digits[k] >= space.radix().radix(k)) {
            Fail(ErrorKind::kInvalidDistribution, "strategy action out of range");
          }
        s.support.emplace_back(space.radix().Encode(digits), e.at("prob").get<double>());
      }
      s.Validate(space, 1e-9);
      return {s};
    }
    Fail(ErrorKind::kInvalidDistribution, "unknown distribution kind " + kind);
  } catch (const Json::exception& e) {
    Fail(ErrorKind::kInvalidDistribution, e.what());
  }
}

inline Json StrategyDistributionToJson(const BayesianGame& g, const StrategySpace& space,
                                       const StrategyDistribution& s) {
  Json sup = Json::array();
  for (const auto& [idx, p] : s.support) {
    Json strat = Json::array();
    for (int i = 0; i < g.num_players(); ++i) {
      std::vector<int> acts;
      for (int t = 0; t < g.num_types(i); ++t) acts.push_back(space.Action(idx, i, t));
      strat.push_back(acts);
    }
    sup.push_back({{"strategy", strat}, {"prob", p}});
  }
  return {{"kind", "strategy"}, {"support", sup}};
}

// ---- Certificates ----

inline Json WitnessToJson(const Witness& w) {
  Json j = Json::object();
  if (!w.psi.empty()) j["psi"] = w.psi;
  if (!w.phi.empty()) j["phi"] = w.phi;
  if (w.type >= 0) {
    j["type"] = w.type;
    j["action"] = w.action;
  }
  if (!w.strategy.empty()) j["strategy"] = w.strategy;
  if (!w.strategy_map.empty()) {
    Json m = Json::array();
    for (const auto& [s, repl] : w.strategy_map) m.push_back({{"from", s}, {"to", repl}});
    j["strategy_map"] = m;
  }
  return j;
}

inline Json CertificateToJson(const Certificate& c) {
  Json per = Json::array();
  for (const auto& p : c.per_player) {
    per.push_back({{"gain", p.gain}, {"truthful_value", p.truthful_value},
                   {"witness", WitnessToJson(p.witness)}});
  }
  Json j = {{"class", ClassName(c.cls)}, {"epsilon", c.epsilon}, {"per_player", per}};
  j["representable"] = c.representable ? Json(*c.representable) : Json(nullptr);
  return j;
}

// ---- Smoothness spec ----

inline SmoothnessSpec SmoothnessSpecFromJson(const BayesianGame& g, const Json& j) {
  SmoothnessSpec s;
  try {
    const std::string mode = j.value("mode", std::string("game"));
    if (mode == "game") {
      s.mode = PoaMode::kGame;
    } else if (mode == "mechanism") {
      s.mode = PoaMode::kMechanism;
    } else {
      Fail(ErrorKind::kInvalidGame, "unknown smoothness mode " + mode);
    }
    s.lambda = j.at("lambda").get<double>();
    s.mu = j.at("mu").get<double>();
    const Json& d = j.at("deviation");
    const std::string kind = d.at("kind").get<std::string>();
    if (kind == "own-type") {
      s.deviation = DeviationMap::OwnType(g, d.at("actions").get<std::vector<std::vector<int>>>());
    } else if (kind == "table") {
      s.deviation.table = d.at("table").get<std::vector<std::vector<int>>>();
      s.deviation.Validate(g);
    } else {
      Fail(ErrorKind::kInvalidGame, "unknown deviation kind " + kind);
    }
    if (j.contains("mu_grid")) s.mu_grid = j.at("mu_grid").get<std::vector<double>>();
  } catch (const Json::exception& e) {
    Fail(ErrorKind::kInvalidGame, e.what());
  }
  return s;
}

}  // namespace bayescorr
