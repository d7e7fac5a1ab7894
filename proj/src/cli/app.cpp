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

#include "qlgame/cli/app.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "qlgame/cli/report.hpp"
#include "qlgame/cli/spec_file.hpp"
#include "qlgame/generators.hpp"

namespace qlgame::cli {
namespace {

struct Options {
  std::uint64_t budget = kDefaultBudget;
  std::string out_path;
  std::uint64_t seed = 1;
  std::string format = "json";
  bool deterministic = false;

  std::string spec_path;
  std::string method;
  std::string nash_method = "brute";
  std::string efficient_method = "brute";
  std::string start;
  std::size_t max_steps = 64;
  std::string steps;
  std::size_t count = 200;
  std::string kind = "global";
  std::size_t max_players = 3;
  std::size_t max_space = 6;
};

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

json header(const Options& o, const std::string& command) {
  json doc{{"schema_version", kSchemaVersion},
           {"command", command},
           {"budget", o.budget}};
  if (command == "nash" || command == "efficient-nash") doc["method"] = o.method;
  if (!o.deterministic) doc["generated_at"] = utc_timestamp();
  return doc;
}

void require_verified(const Game& game, const json& doc) {
  const auto problems = verify_report(game, doc);
  if (!problems.empty()) {
    throw InvariantViolation("report failed re-validation: " + problems.front());
  }
}

std::vector<StrategyProfile> feasible_profiles(const Game& game,
                                               std::uint64_t budget) {
  if (game.feasible_count() > budget) {
    throw BudgetExceeded(game.feasible_count(), budget);
  }
  std::vector<StrategyProfile> out;
  for (std::uint32_t code = 0; code < game.profile_count(); ++code) {
    StrategyProfile x = game.decode(Element{code});
    bool feasible = true;
    for (std::size_t i = 0; i < x.size() && feasible; ++i) {
      feasible = game.constraint(i).contains(x[i]);
    }
    if (feasible) out.push_back(std::move(x));
  }
  return out;
}

json nash_list(const ResolvedGame& g, const std::vector<StrategyProfile>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(nash_json(g, is_nash(g.game, x)));
  return out;
}

json efficient_list(const ResolvedGame& g, const std::vector<StrategyProfile>& xs) {
  json out = json::array();
  for (const auto& x : xs) {
    out.push_back(efficient_nash_json(g, is_efficient_nash(g.game, x)));
  }
  return out;
}

EfficientNashMethod efficient_method(const std::string& name) {
  return name == "brute" ? EfficientNashMethod::kBrute
                         : EfficientNashMethod::kFixedPoint;
}

// Commands ------------------------------------------------------------------

json cmd_check_axioms(const Options& o, int& status) {
  json doc = header(o, "check-axioms");
  const GameSpecFile spec = read_spec_file(o.spec_path);
  json spaces = json::array();
  for (std::size_t i = 0; i < spec.players.size(); ++i) {
    const auto* e = std::get_if<ExplicitSpec>(&spec.players[i].strategy_space);
    if (!e) continue;
    const std::string where = "/players/" + std::to_string(i) + "/strategy_space";
    const AxiomReport report = check_axioms(raw_meet_table(*e, where));
    json violations = json::array();
    for (const auto& v : report.violations) violations.push_back(v.describe(e->elements));
    json entry{{"player", spec.players[i].name},
               {"size", report.size},
               {"valid", report.valid()},
               {"violations", violations}};
    if (report.bottom) entry["bottom"] = e->elements.at(report.bottom->id);
    spaces.push_back(std::move(entry));
  }
  doc["explicit_spaces"] = spaces;
  try {
    const ResolvedGame g = resolve(spec);
    doc["valid"] = true;
    doc["validation"] = validation_json(g);
  } catch (const ValidationError& e) {
    doc["valid"] = false;
    doc["error"] = e.what();
    status = kExitValidation;
  }
  return doc;
}

json cmd_nash(const Options& o) {
  const ResolvedGame g = parse_spec(o.spec_path);
  json doc = header(o, "nash");
  doc["spec"] = to_json(resolved_spec(g.game, g.player_names));
  std::vector<StrategyProfile> nash;
  if (o.method == "brute") {
    nash = nash_enumerate(g.game, o.budget);
    doc["complete"] = true;
    doc["nash"] = nash_list(g, nash);
  } else if (o.method == "decoupled") {
    nash = decoupled_nash(g.game, o.budget);
    doc["complete"] = false;
    doc["nash"] = nash_list(g, nash);
  } else {
    json list = json::array();
    for (const auto& x : feasible_profiles(g.game, o.budget)) {
      const NashCertificate cert = characterize_nash(g.game, x);
      if (cert.is_nash) {
        nash.push_back(x);
        list.push_back(nash_json(g, cert));
      }
    }
    doc["complete"] = true;
    doc["nash"] = list;
  }
  require_verified(g.game, doc);
  return doc;
}

json cmd_efficient_nash(const Options& o) {
  const ResolvedGame g = parse_spec(o.spec_path);
  json doc = header(o, "efficient-nash");
  doc["spec"] = to_json(resolved_spec(g.game, g.player_names));
  if (o.method == "iterate") {
    if (o.start.empty()) throw ValidationError("--method iterate needs --start");
    const StrategyProfile x0 = parse_profile(g.game, o.start);
    const EMapIteration it = e_map_iterate(g.game, x0, o.max_steps);
    json trace = json::array();
    for (const auto& x : it.trace) trace.push_back(profile_json(g.game, x));
    json iteration{{"start", profile_json(g.game, x0)},
                   {"max_steps", o.max_steps},
                   {"trace", trace},
                   {"cycled", it.cycled}};
    std::vector<StrategyProfile> found;
    if (it.fixed_point) {
      iteration["fixed_point"] = profile_json(g.game, *it.fixed_point);
      found.push_back(*it.fixed_point);
    }
    doc["iteration"] = iteration;
    doc["efficient_nash"] = efficient_list(g, found);
  } else {
    doc["efficient_nash"] = efficient_list(
        g, efficient_nash_enumerate(g.game, efficient_method(o.method), o.budget));
  }
  require_verified(g.game, doc);
  return doc;
}

json cmd_report(const Options& o) {
  const ResolvedGame g = parse_spec(o.spec_path);
  json doc = header(o, "report");
  doc["spec"] = to_json(resolved_spec(g.game, g.player_names));
  doc["validation"] = validation_json(g);
  const auto nash = nash_enumerate(g.game, o.budget);
  doc["nash"] = nash_list(g, nash);
  const auto efficient =
      efficient_nash_enumerate(g.game, EfficientNashMethod::kBrute, o.budget);
  json methods = json::array({"brute"});
  if (g.game.unconstrained()) {
    const auto fixed =
        efficient_nash_enumerate(g.game, EfficientNashMethod::kFixedPoint, o.budget);
    if (fixed != efficient) {
      throw InvariantViolation("brute and fixed-point efficient Nash sets differ");
    }
    methods.push_back("fixed-point");
  }
  doc["efficient_nash"] = efficient_list(g, efficient);
  doc["efficient_nash_methods"] = methods;
  doc["diagnostics"] = diagnostics_json(g, nash);
  require_verified(g.game, doc);
  return doc;
}

std::vector<Rational> split_rationals(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(parse_rational(item));
    } catch (const std::invalid_argument& e) {
      throw ValidationError("--steps: " + std::string(e.what()));
    }
  }
  if (out.empty()) throw ValidationError("--steps needs at least one step");
  return out;
}

/// Sup norm of a profile of grid (or box) labels.
Rational sup_norm(const Game& game, const StrategyProfile& x) {
  Rational norm = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::string label = game.space(i).label(x[i]);
    std::erase(label, '(');
    std::erase(label, ')');
    std::stringstream in(label);
    std::string part;
    while (std::getline(in, part, ',')) norm = std::max(norm, Rational(abs(parse_rational(part))));
  }
  return norm;
}

json cmd_refine(const Options& o) {
  const GameSpecFile base = read_spec_file(o.spec_path);
  json doc = header(o, "refine");
  json rows = json::array();
  for (const Rational& step : split_rationals(o.steps)) {
    const ResolvedGame g = resolve(with_grid_step(base, step));
    const auto nash = nash_enumerate(g.game, o.budget);
    const auto efficient =
        efficient_nash_enumerate(g.game, EfficientNashMethod::kFixedPoint, o.budget);
    json list = json::array();
    Rational max_norm = 0;
    for (const auto& x : efficient) {
      const Rational norm = sup_norm(g.game, x);
      max_norm = std::max(max_norm, norm);
      list.push_back(json{{"profile", profile_json(g.game, x)},
                          {"norm", to_string(norm)}});
    }
    rows.push_back(json{{"step", to_string(step)},
                        {"profiles", g.game.profile_count()},
                        {"nash_count", nash.size()},
                        {"efficient_nash", list},
                        {"max_norm", to_string(max_norm)}});
  }
  doc["refinement"] = rows;
  return doc;
}

json empty_case_evidence(const ResolvedGame& g,
                         const std::vector<StrategyProfile>& nash) {
  json evidence = json::array();
  if (nash.empty()) {
    // Every feasible profile with its first improving deviation.
    for (const auto& x : feasible_profiles(g.game, kDefaultBudget)) {
      const NashCertificate cert = is_nash(g.game, x);
      for (std::size_t i = 0; i < cert.players.size(); ++i) {
        const auto& p = cert.players[i];
        if (p.is_best_response) continue;
        evidence.push_back(json{{"profile", profile_json(g.game, x)},
                                {"player", g.player_names[i]},
                                {"deviation", g.game.space(i).label(*p.deviation_witness)},
                                {"payoff", to_string(p.payoff)},
                                {"best_payoff", to_string(p.best_payoff)}});
        break;
      }
    }
    return evidence;
  }
  for (const auto& x : nash) {
    const EfficientNashCheck check = is_efficient_nash(g.game, x);
    for (std::size_t i = 0; i < check.efficient_for.size(); ++i) {
      if (check.efficient_for[i]) continue;
      evidence.push_back(json{{"profile", profile_json(g.game, x)},
                              {"player", g.player_names[i]},
                              {"counterexample",
                               g.game.space(i).label(*check.counterexample[i])}});
      break;
    }
  }
  return evidence;
}

json cmd_sweep(const Options& o) {
  if (o.kind != "global" && o.kind != "individual") {
    throw ValidationError("--kind must be global or individual");
  }
  json doc = header(o, "sweep");
  gen::Rng rng(o.seed);
  gen::GameOptions options;
  options.max_players = o.max_players;
  options.max_space = o.max_space;
  if (o.kind == "global") options.constrain_probability = 0.3;
  std::uint64_t nonempty_nash = 0;
  std::uint64_t nonempty_efficient = 0;
  json empty_cases = json::array();
  for (std::size_t k = 0; k < o.count; ++k) {
    Game game = o.kind == "global" ? gen::random_global_game(rng, options)
                                   : gen::random_individual_game(rng, options);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < game.players(); ++i) names.push_back(std::to_string(i + 1));
    const ResolvedGame g{std::move(game), names, {}};
    const auto nash = nash_enumerate(g.game, o.budget);
    const auto efficient =
        efficient_nash_enumerate(g.game, EfficientNashMethod::kBrute, o.budget);
    nonempty_nash += !nash.empty();
    nonempty_efficient += !efficient.empty();
    if (efficient.empty()) {
      empty_cases.push_back(json{{"index", k},
                                 {"empty", nash.empty() ? "nash" : "efficient_nash"},
                                 {"spec", to_json(resolved_spec(g.game, names))},
                                 {"evidence", empty_case_evidence(g, nash)}});
    }
  }
  const auto fraction = [&](std::uint64_t hits) {
    return o.count ? to_string(Rational(hits, o.count)) : std::string("0");
  };
  doc["sweep"] = json{{"kind", o.kind},
                      {"seed", o.seed},
                      {"games", o.count},
                      {"nonempty_nash", nonempty_nash},
                      {"nonempty_efficient_nash", nonempty_efficient},
                      {"fraction_nash", fraction(nonempty_nash)},
                      {"fraction_efficient_nash", fraction(nonempty_efficient)},
                      {"empty_cases", empty_cases}};
  return doc;
}

void emit(const Options& o, const json& doc, std::ostream& out) {
  const std::string text =
      o.format == "text" ? render_text(doc) : doc.dump(2) + "\n";
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write '" + o.out_path + "'");
  file << text;
  if (!file) throw std::runtime_error("cannot write '" + o.out_path + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Nash and efficient Nash points of quasi-Leontief games",
               "qlgame"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--budget", o.budget, "Maximum number of profiles to enumerate")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", o.out_path, "Write the report to this file");
  app.add_option("--seed", o.seed, "Seed for randomized sweeps");
  app.add_option("--format", o.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--deterministic", o.deterministic, "Omit the timestamp");

  const auto add_spec = [&](CLI::App* sub) {
    sub->add_option("spec", o.spec_path, "Game spec (JSON)")
        ->required()
        ->check(CLI::ExistingFile);
    sub->fallthrough();
  };

  CLI::App* check = app.add_subcommand(
      "check-axioms", "Validate strategy spaces and payoff components");
  add_spec(check);

  CLI::App* nash = app.add_subcommand("nash", "Nash points");
  add_spec(nash);
  nash->add_option("--method", o.nash_method)
      ->check(CLI::IsMember({"brute", "decoupled", "characterize"}));

  CLI::App* eff = app.add_subcommand("efficient-nash", "Efficient Nash points");
  add_spec(eff);
  eff->add_option("--method", o.efficient_method)
      ->check(CLI::IsMember({"brute", "fixed-point", "iterate"}));
  eff->add_option("--start", o.start, "Start profile, e.g. 1,1");
  eff->add_option("--max-steps", o.max_steps, "Iteration limit");

  CLI::App* report = app.add_subcommand("report", "Full solve report");
  add_spec(report);

  CLI::App* refine = app.add_subcommand(
      "refine", "Re-solve a grid game for each step size");
  add_spec(refine);
  refine->add_option("--steps", o.steps, "Comma-separated steps, e.g. 1/4,1/8")
      ->required();

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Existence sweep over random games");
  sweep->fallthrough();
  sweep->add_option("--count", o.count, "Number of games");
  sweep->add_option("--kind", o.kind)->check(CLI::IsMember({"global", "individual"}));
  sweep->add_option("--max-players", o.max_players)->check(CLI::Range(1, 4));
  sweep->add_option("--max-space", o.max_space)->check(CLI::Range(1, 8));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  int status = kExitOk;
  try {
    json doc;
    if (check->parsed()) {
      doc = cmd_check_axioms(o, status);
    } else if (nash->parsed()) {
      o.method = o.nash_method;
      doc = cmd_nash(o);
    } else if (eff->parsed()) {
      o.method = o.efficient_method;
      doc = cmd_efficient_nash(o);
    } else if (report->parsed()) {
      doc = cmd_report(o);
    } else if (refine->parsed()) {
      doc = cmd_refine(o);
    } else {
      doc = cmd_sweep(o);
    }
    emit(o, doc, out);
    if (status == kExitValidation) err << "error: " << doc["error"].get<std::string>() << "\n";
    return status;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace qlgame::cli
