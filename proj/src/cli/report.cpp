// Copyright 2026 The qlgame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qlgame/cli/report.hpp"

#include <sstream>

namespace qlgame::cli {
namespace {

std::string profile_text(const json& labels) {
  std::string out = "(";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += labels[i].get<std::string>();
  }
  return out + ")";
}

json player_names_json(const ResolvedGame& g, const std::vector<std::size_t>& ids) {
  json out = json::array();
  for (auto i : ids) out.push_back(g.player_names.at(i));
  return out;
}

}  // namespace

json profile_json(const Game& game, const StrategyProfile& x) {
  json out = json::array();
  for (std::size_t i = 0; i < x.size(); ++i) {
    out.push_back(game.space(i).label(x[i]));
  }
  return out;
}

json nash_json(const ResolvedGame& g, const NashCertificate& cert) {
  json players = json::array();
  for (std::size_t i = 0; i < cert.players.size(); ++i) {
    const auto& p = cert.players[i];
    json entry{{"player", g.player_names.at(i)},
               {"payoff", to_string(p.payoff)},
               {"best_payoff", to_string(p.best_payoff)},
               {"best_response", p.is_best_response}};
    if (p.deviation_witness) {
      entry["deviation"] = g.game.space(i).label(*p.deviation_witness);
    }
    if (p.n1) entry["n1"] = *p.n1;
    if (p.n2) entry["n2"] = *p.n2;
    players.push_back(std::move(entry));
  }
  return json{{"profile", profile_json(g.game, cert.profile)},
              {"is_nash", cert.is_nash},
              {"players", players}};
}

json efficient_nash_json(const ResolvedGame& g, const EfficientNashCheck& check) {
  json players = json::array();
  for (std::size_t i = 0; i < check.efficient_for.size(); ++i) {
    json entry{{"player", g.player_names.at(i)},
               {"efficient", static_cast<bool>(check.efficient_for[i])}};
    if (check.counterexample[i]) {
      entry["counterexample"] = g.game.space(i).label(*check.counterexample[i]);
    }
    players.push_back(std::move(entry));
  }
  json cases = json::array();
  for (const auto& r : check.case_reports) {
    json entry{{"player", g.player_names.at(r.player)},
               {"case", std::string(to_string(r.efficiency_case))},
               {"own_value", to_string(r.own_value)},
               {"in_efficient_set", r.in_efficient_set},
               {"efficient", r.efficient}};
    if (r.opponents_value) entry["opponents_value"] = to_string(*r.opponents_value);
    if (r.a2_witness) {
      entry["a2_witness"] = g.game.space(r.player).label(*r.a2_witness);
    }
    cases.push_back(std::move(entry));
  }
  return json{{"profile", profile_json(g.game, check.nash.profile)},
              {"efficient", check.efficient},
              {"nash", nash_json(g, check.nash)},
              {"players", players},
              {"cases", cases}};
}

json validation_json(const ResolvedGame& g) {
  const Game& game = g.game;
  json spaces = json::array();
  for (std::size_t i = 0; i < game.players(); ++i) {
    const auto& space = game.space(i);
    const AxiomReport report = check_axioms(space);
    json violations = json::array();
    for (const auto& v : report.violations) {
      violations.push_back(v.describe(space.labels()));
    }
    json entry{{"player", g.player_names.at(i)},
               {"size", space.size()},
               {"valid", report.valid()},
               {"violations", violations}};
    if (report.bottom) entry["bottom"] = space.label(*report.bottom);
    spaces.push_back(std::move(entry));
  }
  json out{{"spaces", spaces}};
  if (game.is_global()) {
    json components = json::array();
    for (std::size_t i = 0; i < game.players(); ++i) {
      for (std::size_t j = 0; j < game.players(); ++j) {
        const auto& cert = game.component(i, j).certificate();
        components.push_back(json{{"player", g.player_names[i]},
                                  {"argument", g.player_names[j]},
                                  {"quasi_leontief", cert.is_ql},
                                  {"meet_min_law", cert.meet_min_law},
                                  {"principal_levels", cert.principal_levels}});
      }
    }
    out["components"] = components;
  } else {
    out["sections"] = json{{"quasi_leontief", true},
                           {"profiles_checked", game.profile_count()}};
  }
  return out;
}

json diagnostics_json(const ResolvedGame& g,
                      const std::vector<StrategyProfile>& nash) {
  const Game& game = g.game;
  json out = json::object();
  if (game.is_global()) {
    const bool comprehensive = game.constraints_comprehensive();
    json irrelevance = json::array();
    json normalized = json::array();
    for (const auto& x : nash) {
      irrelevance.push_back(json{
          {"profile", profile_json(game, x)},
          {"players", player_names_json(g, own_strategy_irrelevance(game, x))}});
      if (comprehensive) {
        normalized.push_back(
            json{{"profile", profile_json(game, x)},
                 {"normalized", profile_json(game, normalize_nash(game, x))}});
      }
    }
    out["own_strategy_irrelevance"] = irrelevance;
    if (comprehensive) {
      out["normalized"] = normalized;
      out["maximal_nash"] = profile_json(game, maximal_nash(game));
    }
  }
  json flagged = json::array();
  for (const auto& b : g.off_grid_breakpoints) {
    flagged.push_back(json{{"player", g.player_names.at(b.row)},
                           {"argument", g.player_names.at(b.column)},
                           {"breakpoint", to_string(b.breakpoint)}});
  }
  out["off_grid_breakpoints"] = flagged;
  out["notes"] = json::array(
      {"finite strategy spaces are not connected; the argmin refinement of "
       "case a2 is not applied"});
  return out;
}

std::vector<std::string> verify_report(const Game& game, const json& report) {
  std::vector<std::string> problems;
  const auto profile_of = [&](const json& labels) {
    return parse_profile(game, labels.dump());
  };
  if (report.contains("nash")) {
    for (const auto& entry : report["nash"]) {
      const std::string where = profile_text(entry["profile"]);
      const NashCertificate cert = is_nash(game, profile_of(entry["profile"]));
      if (!cert.is_nash || !entry.value("is_nash", false)) {
        problems.push_back(where + " is listed as Nash but is not");
        continue;
      }
      for (std::size_t i = 0; i < cert.players.size(); ++i) {
        const auto& p = entry["players"].at(i);
        if (p["payoff"].get<std::string>() != to_string(cert.players[i].payoff) ||
            p["best_payoff"].get<std::string>() !=
                to_string(cert.players[i].best_payoff)) {
          problems.push_back(where + ": payoff of player " +
                             std::to_string(i + 1) + " does not match");
        }
      }
    }
  }
  if (report.contains("efficient_nash")) {
    for (const auto& entry : report["efficient_nash"]) {
      const std::string where = profile_text(entry["profile"]);
      const EfficientNashCheck check =
          is_efficient_nash(game, profile_of(entry["profile"]));
      if (!check.efficient || !entry.value("efficient", false)) {
        problems.push_back(where + " is listed as efficient Nash but is not");
      }
    }
  }
  return problems;
}

std::string render_text(const json& report) {
  std::ostringstream out;
  out << "command: " << report.value("command", "") << "\n";
  if (report.contains("method")) out << "method: " << report["method"].get<std::string>() << "\n";
  if (report.contains("valid")) out << "valid: " << (report["valid"].get<bool>() ? "yes" : "no") << "\n";
  if (report.contains("error")) out << "error: " << report["error"].get<std::string>() << "\n";
  for (const char* key : {"nash", "efficient_nash"}) {
    if (!report.contains(key)) continue;
    out << key << " (" << report[key].size() << "):";
    for (const auto& entry : report[key]) out << " " << profile_text(entry["profile"]);
    out << "\n";
  }
  if (report.contains("iteration")) {
    const auto& it = report["iteration"];
    out << "trace:";
    for (const auto& x : it["trace"]) out << " " << profile_text(x);
    out << "\n";
    out << "fixed point: "
        << (it.contains("fixed_point") ? profile_text(it["fixed_point"]) : "none")
        << "\n";
  }
  if (report.contains("refinement")) {
    for (const auto& row : report["refinement"]) {
      out << "step " << row["step"].get<std::string>() << ": "
          << row["profiles"].get<std::uint64_t>() << " profiles, "
          << row["nash_count"].get<std::uint64_t>() << " Nash, efficient Nash";
      for (const auto& e : row["efficient_nash"]) out << " " << profile_text(e["profile"]);
      out << "\n";
    }
  }
  if (report.contains("sweep")) {
    const auto& s = report["sweep"];
    out << "games: " << s["games"].get<std::uint64_t>()
        << ", nonempty Nash: " << s["nonempty_nash"].get<std::uint64_t>()
        << ", nonempty efficient Nash: "
        << s["nonempty_efficient_nash"].get<std::uint64_t>() << "\n";
  }
  return out.str();
}

}  // namespace qlgame::cli
