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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "grid_example.hpp"
#include "qlgame/cli/app.hpp"
#include "qlgame/cli/report.hpp"
#include "qlgame/cli/spec_file.hpp"
#include "qlgame/generators.hpp"

namespace qlgame::cli {
namespace {

namespace fs = std::filesystem;

const fs::path kSpecs = QLGAME_SPECS_DIR;
const fs::path kExampleSpec = kSpecs / "grid_example.json";

json load(const fs::path& path) {
  std::ifstream in(path);
  return json::parse(in);
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("qlgame_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path write(const std::string& name, const json& doc) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << doc.dump(2);
    return p;
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string spec_error_location(const json& doc) {
  try {
    resolve(spec_from_json(doc));
  } catch (const SpecError& e) {
    return e.where();
  }
  return "<accepted>";
}

json pwl(std::vector<std::pair<const char*, const char*>> pts) {
  json points = json::array();
  for (auto [x, v] : pts) points.push_back(json::array({x, v}));
  return json{{"kind", "pwl"}, {"points", points}};
}

json one_player_grid(json component, const char* step = "1/4") {
  return json{{"schema_version", 1},
              {"players", json::array({json{{"name", "p"},
                                            {"strategy_space",
                                             json{{"kind", "grid"},
                                                  {"lower", "0"},
                                                  {"upper", "1"},
                                                  {"step", step}}}}})},
              {"payoffs", json{{"model", "global"},
                               {"components", json::array({json::array({component})})}}}};
}

std::vector<std::string> profiles_of(const json& list) {
  std::vector<std::string> out;
  for (const auto& e : list) out.push_back(e["profile"].dump());
  return out;
}

// Parsing ----------------------------------------------------------------------

TEST(SpecFile, ParsesTheGridExample) {
  const ResolvedGame g = parse_spec(kExampleSpec);
  EXPECT_EQ(g.game.profile_count(), 81u);
  EXPECT_TRUE(g.game.is_global());
  EXPECT_TRUE(g.off_grid_breakpoints.empty());
  EXPECT_EQ(g.player_names, (std::vector<std::string>{"1", "2"}));
  // Same values as the directly built game.
  const Game direct = testing::grid_example();
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      EXPECT_EQ(g.game.component(i, j), direct.component(i, j));
    }
  }
}

TEST(SpecFile, RejectsNonIsotoneComponents) {
  const json doc = one_player_grid(pwl({{"0", "1"}, {"1", "0"}}));
  try {
    spec_from_json(doc);
    FAIL() << "accepted";
  } catch (const SpecError& e) {
    EXPECT_EQ(e.where(), "/payoffs/components/0/0/points");
    EXPECT_NE(std::string(e.what()).find("non-isotone"), std::string::npos);
  }
}

TEST(SpecFile, RejectsBadMeetTableWithViolatingTuple) {
  try {
    parse_spec(kSpecs / "v3_bad_meet.json");
    FAIL() << "accepted";
  } catch (const SpecError& e) {
    EXPECT_EQ(e.where(), "/players/0/strategy_space");
    EXPECT_NE(std::string(e.what()).find("commutativity at (a,b)"), std::string::npos)
        << e.what();
  }
}

TEST(SpecFile, ErrorsCarryLocations) {
  json doc = load(kExampleSpec);
  doc["players"][0]["strategy_space"]["step"] = "0.25";
  EXPECT_EQ(spec_error_location(doc), "/players/0/strategy_space/step");

  doc = load(kExampleSpec);
  doc["players"][1]["strategy_space"]["upper"] = 2;
  EXPECT_EQ(spec_error_location(doc), "/players/1/strategy_space/upper");

  doc = load(kExampleSpec);
  doc["players"][1]["strategy_space"]["step"] = "3/8";
  EXPECT_EQ(spec_error_location(doc), "/players/1/strategy_space");

  doc = load(kExampleSpec);
  doc["schema_version"] = 2;
  EXPECT_EQ(spec_error_location(doc), "/schema_version");

  doc = load(kExampleSpec);
  doc["payoffs"]["components"][1][0]["points"][1][0] = "0";
  EXPECT_EQ(spec_error_location(doc), "/payoffs/components/1/0/points");

  doc = load(kExampleSpec);
  doc["payoffs"]["components"][0].erase(1);
  EXPECT_EQ(spec_error_location(doc), "/payoffs/components/0");

  doc = load(kExampleSpec);
  doc["payoffs"]["model"] = "mixed";
  EXPECT_EQ(spec_error_location(doc), "/payoffs/model");

  doc = load(kExampleSpec);
  doc["players"][1]["name"] = "1";
  EXPECT_EQ(spec_error_location(doc), "/players/1/name");

  doc = load(kExampleSpec);
  doc["constraints"] = json{{"3", json::array({"0"})}};
  EXPECT_EQ(spec_error_location(doc), "/constraints/3");

  doc = load(kExampleSpec);
  doc["constraints"] = json{{"2", json::array({"0", "5"})}};
  EXPECT_EQ(spec_error_location(doc), "/constraints/2/1");

  doc = load(kExampleSpec);
  doc.erase("players");
  EXPECT_EQ(spec_error_location(doc), "/players");

  doc = load(kExampleSpec);
  doc["players"][0]["strategy_space"]["kind"] = "ball";
  EXPECT_EQ(spec_error_location(doc), "/players/0/strategy_space/kind");
}

TEST(SpecFile, ComponentsMustCoverTheGrid) {
  const json doc = one_player_grid(pwl({{"0", "0"}, {"1/2", "1"}}));
  EXPECT_EQ(spec_error_location(doc), "/payoffs/components/0/0");
}

TEST(SpecFile, NonQuasiLeontiefComponentIsRejected) {
  json doc = load(kSpecs / "v3_constrained.json");
  doc["payoffs"]["components"][0][0]["values"] = json{{"bot", "0"}, {"a", "1"}, {"b", "1"}};
  EXPECT_EQ(spec_error_location(doc), "/payoffs/components/0/0");
}

TEST(SpecFile, LabelKeyedTables) {
  json doc = load(kSpecs / "v3_constrained.json");
  const ResolvedGame g = resolve(spec_from_json(doc));
  EXPECT_EQ(g.game.component(0, 0).values()[1], 1);
  doc["payoffs"]["components"][0][0]["values"].erase("b");
  EXPECT_EQ(spec_error_location(doc), "/payoffs/components/0/0/values");
  doc["payoffs"]["components"][0][0]["values"]["c"] = "0";
  EXPECT_EQ(spec_error_location(doc), "/payoffs/components/0/0/values/c");
}

TEST(SpecFile, IndividualModelChecksSections) {
  // Player 1 on V3, player 2 on a two-point chain. The row payoff at
  // x2 = 0 is (0, 1, 2) over (bot, a, b): not quasi-Leontief.
  json doc = load(kSpecs / "v3_constrained.json");
  doc.erase("constraints");
  doc["players"][1]["strategy_space"] =
      json{{"kind", "grid"}, {"lower", "0"}, {"upper", "1"}, {"step", "1"}};
  doc["payoffs"] = json{{"model", "individual"},
                        {"tables", json::array({json::array({"0", "0", "1", "1", "2", "2"}),
                                                json::array({"0", "0", "0", "0", "0", "0"})})}};
  EXPECT_EQ(spec_error_location(doc), "/payoffs");
  doc["payoffs"]["tables"][0] = json::array({"0", "0", "1", "1", "0", "0"});
  EXPECT_EQ(spec_error_location(doc), "<accepted>");
  doc["payoffs"]["tables"][1].erase(0);
  EXPECT_EQ(spec_error_location(doc), "/payoffs");
}

TEST(SpecFile, BoxSpaces) {
  json doc = one_player_grid(json{{"kind", "table"}, {"values", json::array()}});
  doc["players"][0]["strategy_space"] =
      json{{"kind", "box"},
           {"axes", json::array({json{{"lower", "0"}, {"upper", "1"}, {"step", "1"}},
                                 json{{"lower", "0"}, {"upper", "1"}, {"step", "1"}}})}};
  doc["payoffs"]["components"][0][0]["values"] = json{{"(0,0)", "0"}, {"(0,1)", "0"},
                                                      {"(1,0)", "1"}, {"(1,1)", "1"}};
  const ResolvedGame g = resolve(spec_from_json(doc));
  EXPECT_EQ(g.game.space(0).size(), 4u);
  EXPECT_EQ(nash_enumerate(g.game).size(), 2u);
  doc["payoffs"]["components"][0][0] = pwl({{"0", "0"}, {"1", "1"}});
  EXPECT_EQ(spec_error_location(doc), "/payoffs/components/0/0");
}

// Discretization -------------------------------------------------------------------

TEST(Discretize, EvaluatesExactly) {
  const GridSpec grid{0, 2, Rational(1, 4)};
  const auto space = std::make_shared<const FiniteInfSemilattice>(
      FiniteInfSemilattice::grid(0, 2, Rational(1, 4)));
  const PiecewiseLinear own({{0, 0}, {1, 2}, {2, 2}});
  const PiecewiseLinear cross({{0, 0}, {2, 1}});
  const auto u11 = discretize(own, grid, space);
  const auto u12 = discretize(cross, grid, space);
  EXPECT_EQ(u11(space->find("3/4").value()), Rational(3, 2));
  EXPECT_EQ(u12(space->find("2").value()), 1);
  EXPECT_EQ(u11(space->bottom()), own(0));
  EXPECT_EQ(own(Rational(1, 3)), Rational(2, 3));
  EXPECT_THROW(own(3), ValidationError);

  const GridSpec wide{0, 3, 1};
  const auto wide_space = std::make_shared<const FiniteInfSemilattice>(
      FiniteInfSemilattice::grid(0, 3, 1));
  EXPECT_THROW(discretize(own, wide, wide_space), ValidationError);
}

TEST(Discretize, FlagsOffGridBreakpoints) {
  const json doc = one_player_grid(pwl({{"0", "0"}, {"1/3", "1"}, {"1", "1"}}));
  const ResolvedGame g = resolve(spec_from_json(doc));
  ASSERT_EQ(g.off_grid_breakpoints.size(), 1u);
  EXPECT_EQ(g.off_grid_breakpoints[0].breakpoint, Rational(1, 3));
  const json diag = diagnostics_json(g, nash_enumerate(g.game));
  EXPECT_EQ(diag["off_grid_breakpoints"][0]["breakpoint"], "1/3");
}

TEST(Discretize, RejectsMalformedPieces) {
  EXPECT_THROW(PiecewiseLinear({}), ValidationError);
  EXPECT_THROW(PiecewiseLinear({{0, 0}, {0, 1}}), ValidationError);
  EXPECT_THROW(PiecewiseLinear({{0, 1}, {1, 0}}), ValidationError);
}

// Round trips -------------------------------------------------------------------------

void expect_same_game(const Game& a, const Game& b) {
  ASSERT_EQ(a.players(), b.players());
  for (std::size_t i = 0; i < a.players(); ++i) {
    EXPECT_EQ(a.space(i), b.space(i));
    EXPECT_EQ(a.constraint(i), b.constraint(i));
  }
  ASSERT_EQ(a.profile_count(), b.profile_count());
  for (std::uint32_t code = 0; code < a.profile_count(); ++code) {
    const StrategyProfile x = a.decode(Element{code});
    for (std::size_t i = 0; i < a.players(); ++i) {
      ASSERT_EQ(a.payoff(i, x), b.payoff(i, x));
    }
  }
  EXPECT_EQ(a.is_global(), b.is_global());
}

TEST(RoundTrip, SpecJsonIsStable) {
  for (const char* name : {"grid_example.json", "v3_constrained.json"}) {
    const GameSpecFile spec = read_spec_file(kSpecs / name);
    EXPECT_EQ(spec_from_json(to_json(spec)), spec) << name;
  }
}

TEST(RoundTrip, ResolvedSpecReproducesTheGame) {
  TempDir dir;
  for (const char* name : {"grid_example.json", "v3_constrained.json"}) {
    const ResolvedGame g = parse_spec(kSpecs / name);
    const fs::path written = dir.write(name, to_json(resolved_spec(g.game, g.player_names)));
    const ResolvedGame back = parse_spec(written);
    expect_same_game(g.game, back.game);
    EXPECT_EQ(back.player_names, g.player_names);
  }
  gen::Rng rng(17);
  gen::GameOptions o;
  o.constrain_probability = 0.5;
  for (int k = 0; k < 40; ++k) {
    const Game game = k % 2 ? gen::random_global_game(rng, o) : gen::random_individual_game(rng, o);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < game.players(); ++i) names.push_back("p" + std::to_string(i));
    const ResolvedGame back = resolve(spec_from_json(to_json(resolved_spec(game, names))));
    expect_same_game(game, back.game);
  }
}

TEST(Profiles, ParseBothForms) {
  const Game g = testing::grid_example();
  EXPECT_EQ(parse_profile(g, "1,1/4"), testing::at(g, {"1", "1/4"}));
  EXPECT_EQ(parse_profile(g, R"(["2","0"])"), testing::at(g, {"2", "0"}));
  EXPECT_THROW(parse_profile(g, "1"), ValidationError);
  EXPECT_THROW(parse_profile(g, "1,3"), ValidationError);
  EXPECT_THROW(parse_profile(g, "[1,"), ValidationError);
}

// Command line ------------------------------------------------------------------------

TEST(Cli, NashReportListsTheExamplePoints) {
  const RunResult r = run_cli({"nash", kExampleSpec.string(), "--method", "brute", "--deterministic"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["schema_version"], 1);
  EXPECT_EQ(doc["method"], "brute");
  const auto profiles = profiles_of(doc["nash"]);
  EXPECT_NE(std::find(profiles.begin(), profiles.end(), R"(["1","1"])"), profiles.end());
  EXPECT_NE(std::find(profiles.begin(), profiles.end(), R"(["2","2"])"), profiles.end());
  EXPECT_EQ(profiles.size(), 57u);
  EXPECT_TRUE(verify_report(parse_spec(kExampleSpec).game, doc).empty());
}

TEST(Cli, MethodsAgree) {
  for (const char* spec : {"grid_example.json", "v3_constrained.json"}) {
    const std::string path = (kSpecs / spec).string();
    const auto brute = run_cli({"nash", path, "--method", "brute", "--deterministic"});
    const auto charz = run_cli({"nash", path, "--method", "characterize", "--deterministic"});
    ASSERT_EQ(brute.code, 0) << brute.err;
    ASSERT_EQ(charz.code, 0) << charz.err;
    EXPECT_EQ(profiles_of(json::parse(brute.out)["nash"]),
              profiles_of(json::parse(charz.out)["nash"]));
  }
  const std::string path = kExampleSpec.string();
  const auto brute = run_cli({"efficient-nash", path, "--method", "brute", "--deterministic"});
  const auto fixed = run_cli({"efficient-nash", path, "--method", "fixed-point", "--deterministic"});
  ASSERT_EQ(fixed.code, 0) << fixed.err;
  const auto list = profiles_of(json::parse(fixed.out)["efficient_nash"]);
  EXPECT_EQ(list, profiles_of(json::parse(brute.out)["efficient_nash"]));
  EXPECT_EQ(list, (std::vector<std::string>{R"(["0","0"])", R"(["1/4","1/4"])"}));
}

TEST(Cli, DeterministicReportsAreByteIdentical) {
  const std::vector<std::string> args = {"report", kExampleSpec.string(), "--deterministic"};
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(json::parse(a.out).contains("generated_at"));
  const auto stamped = run_cli({"report", kExampleSpec.string()});
  EXPECT_TRUE(json::parse(stamped.out).contains("generated_at"));

  const std::vector<std::string> sweep = {"sweep", "--count", "20", "--seed", "9", "--deterministic"};
  EXPECT_EQ(run_cli(sweep).out, run_cli(sweep).out);
}

TEST(Cli, FullReportContents) {
  const auto r = run_cli({"report", kExampleSpec.string(), "--deterministic"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["diagnostics"]["maximal_nash"], json::array({"2", "2"}));
  EXPECT_EQ(doc["efficient_nash_methods"], json::array({"brute", "fixed-point"}));
  bool irrelevance_11 = false;
  for (const auto& e : doc["diagnostics"]["own_strategy_irrelevance"]) {
    if (e["profile"] == json::array({"1", "1"})) {
      irrelevance_11 = e["players"] == json::array({"1", "2"});
    }
  }
  EXPECT_TRUE(irrelevance_11);
  const auto& first = doc["efficient_nash"][1];
  EXPECT_EQ(first["profile"], json::array({"1/4", "1/4"}));
  EXPECT_EQ(first["cases"][0]["case"], "a2");
  EXPECT_EQ(doc["efficient_nash"][0]["cases"][0]["case"], "a1");
  // The resolved spec echo parses back to the same game.
  const ResolvedGame echoed = resolve(spec_from_json(doc["spec"]));
  expect_same_game(echoed.game, parse_spec(kExampleSpec).game);
}

TEST(Cli, VerifyReportCatchesTampering) {
  const auto r = run_cli({"nash", kExampleSpec.string(), "--deterministic"});
  json doc = json::parse(r.out);
  const Game g = parse_spec(kExampleSpec).game;
  doc["nash"][3]["players"][0]["payoff"] = "7";
  EXPECT_EQ(verify_report(g, doc).size(), 1u);
  doc["nash"][4]["profile"] = json::array({"1", "0"});
  EXPECT_EQ(verify_report(g, doc).size(), 2u);
}

TEST(Cli, IterateAndRefine) {
  const auto it = run_cli({"efficient-nash", kExampleSpec.string(), "--method", "iterate",
                           "--start", "2,2", "--deterministic"});
  ASSERT_EQ(it.code, 0) << it.err;
  const json doc = json::parse(it.out);
  EXPECT_EQ(doc["iteration"]["trace"],
            json::parse(R"([["2","2"],["1/2","1/2"],["1/4","1/4"]])"));
  EXPECT_EQ(doc["iteration"]["fixed_point"], json::array({"1/4", "1/4"}));

  const auto refine = run_cli({"refine", kExampleSpec.string(), "--steps", "1/4,1/8,1/16",
                               "--deterministic"});
  ASSERT_EQ(refine.code, 0) << refine.err;
  const json rows = json::parse(refine.out)["refinement"];
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& row : rows) {
    const std::string h = row["step"];
    EXPECT_EQ(profiles_of(row["efficient_nash"]),
              (std::vector<std::string>{R"(["0","0"])", json::array({h, h}).dump()}));
    EXPECT_EQ(row["max_norm"], h);
  }
}

TEST(Cli, TextAndFileOutput) {
  TempDir dir;
  const fs::path out = dir.path() / "report.txt";
  const auto r = run_cli({"efficient-nash", kExampleSpec.string(), "--format", "text",
                          "--out", out.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_NE(text.find("efficient_nash (2): (0,0) (1/4,1/4)"), std::string::npos) << text;
}

TEST(Cli, ExitCodes) {
  const std::string example = kExampleSpec.string();
  EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
  EXPECT_EQ(run_cli({}).code, kExitValidation);
  EXPECT_EQ(run_cli({"solve", example}).code, kExitValidation);
  EXPECT_EQ(run_cli({"nash", example, "--method", "magic"}).code, kExitValidation);
  EXPECT_EQ(run_cli({"nash", (kSpecs / "missing.json").string()}).code, kExitValidation);
  EXPECT_EQ(run_cli({"nash", (kSpecs / "v3_bad_meet.json").string()}).code, kExitValidation);
  EXPECT_EQ(run_cli({"check-axioms", (kSpecs / "v3_bad_meet.json").string()}).code,
            kExitValidation);
  EXPECT_EQ(run_cli({"check-axioms", example}).code, kExitOk);
  EXPECT_EQ(run_cli({"nash", example, "--budget", "80"}).code, kExitBudget);
  EXPECT_EQ(run_cli({"report", example, "--budget", "10"}).code, kExitBudget);
  EXPECT_EQ(run_cli({"efficient-nash", example, "--method", "iterate"}).code, kExitValidation);
  EXPECT_EQ(run_cli({"efficient-nash", example, "--method", "iterate", "--start", "9,9"}).code,
            kExitValidation);
  EXPECT_EQ(run_cli({"refine", (kSpecs / "v3_constrained.json").string(), "--steps", "1"}).code,
            kExitValidation);
  EXPECT_EQ(run_cli({"refine", example, "--steps", "0.1"}).code, kExitValidation);
  EXPECT_EQ(run_cli({"efficient-nash", (kSpecs / "v3_constrained.json").string(), "--method",
                     "fixed-point"}).code,
            kExitValidation);

  TempDir dir;
  json doc = load(kSpecs / "v3_constrained.json");
  doc.erase("constraints");
  doc["players"][1]["strategy_space"] =
      json{{"kind", "grid"}, {"lower", "0"}, {"upper", "1"}, {"step", "1"}};
  doc["payoffs"] = json{{"model", "individual"},
                        {"tables", json::array({json::array({"0", "0", "1", "1", "0", "0"}),
                                                json::array({"0", "1", "0", "1", "0", "1"})})}};
  const std::string individual = dir.write("individual.json", doc).string();
  EXPECT_EQ(run_cli({"nash", individual, "--method", "decoupled"}).code, kExitValidation);
  EXPECT_EQ(run_cli({"nash", individual, "--method", "brute"}).code, kExitOk);
  EXPECT_EQ(run_cli({"efficient-nash", individual, "--method", "fixed-point"}).code, kExitOk);
}

TEST(Cli, SweepReportsFractions) {
  const auto r = run_cli({"sweep", "--count", "30", "--kind", "individual", "--deterministic"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json s = json::parse(r.out)["sweep"];
  EXPECT_EQ(s["games"], 30);
  EXPECT_LE(s["nonempty_efficient_nash"].get<int>(), s["nonempty_nash"].get<int>());
  EXPECT_EQ(s["empty_cases"].size(), 30 - s["nonempty_efficient_nash"].get<std::size_t>());
}

}  // namespace
}  // namespace qlgame::cli
