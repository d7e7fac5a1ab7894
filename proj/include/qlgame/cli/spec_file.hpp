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

// JSON game specification files.
//
//   {
//     "schema_version": 1,
//     "players": [
//       {"name": "1", "strategy_space": {"kind": "grid", "lower": "0",
//                                        "upper": "2", "step": "1/4"}},
//       {"name": "2", "strategy_space": {"kind": "explicit",
//                                        "elements": ["bot", "a", "b"],
//                                        "meet_table": [["bot", ...], ...]}},
//       {"name": "3", "strategy_space": {"kind": "box", "axes": [grid, ...]}}
//     ],
//     "constraints": {"1": ["0", "1/4"]},                      // optional
//     "payoffs": {"model": "global",
//                 "components": [[component, ...], ...]}       // n x n
//              | {"model": "individual", "tables": [[value, ...], ...]}
//   }
//
// A component is {"kind": "pwl", "points": [[x, v], ...]} (grid spaces
// only; linear between points) or {"kind": "table", "values": [v, ...]}
// with values in element order (an object keyed by label is also accepted).
// Individual tables list u_i over all profiles in lexicographic order with
// the first player most significant. Every number is a rational string.

#ifndef QLGAME_CLI_SPEC_FILE_HPP_
#define QLGAME_CLI_SPEC_FILE_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "qlgame/game.hpp"

namespace qlgame::cli {

inline constexpr int kSchemaVersion = 1;

/// A spec file failed to parse or validate. The message starts with the
/// JSON pointer of the offending value.
class SpecError : public ValidationError {
 public:
  SpecError(const std::string& where, const std::string& what)
      : ValidationError(where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

struct GridSpec {
  Rational lower;
  Rational upper;
  Rational step;

  bool operator==(const GridSpec&) const = default;
};

struct ExplicitSpec {
  std::vector<std::string> elements;
  std::vector<std::vector<std::string>> meet_table;

  bool operator==(const ExplicitSpec&) const = default;
};

/// Product of per-axis grids under componentwise min.
struct BoxSpec {
  std::vector<GridSpec> axes;

  bool operator==(const BoxSpec&) const = default;
};

using StrategySpaceSpec = std::variant<GridSpec, ExplicitSpec, BoxSpec>;

struct PlayerSpec {
  std::string name;
  StrategySpaceSpec strategy_space;

  bool operator==(const PlayerSpec&) const = default;
};

/// Continuous piecewise-linear function through strictly increasing
/// breakpoints, with weakly increasing values.
class PiecewiseLinear {
 public:
  /// Throws ValidationError on an empty list, non-increasing breakpoints or
  /// decreasing values.
  explicit PiecewiseLinear(std::vector<std::pair<Rational, Rational>> points);

  const Rational& lower() const { return points_.front().first; }
  const Rational& upper() const { return points_.back().first; }
  const std::vector<std::pair<Rational, Rational>>& points() const {
    return points_;
  }

  /// Exact value at x. Throws ValidationError outside [lower, upper].
  Rational operator()(const Rational& x) const;

  bool operator==(const PiecewiseLinear&) const = default;

 private:
  std::vector<std::pair<Rational, Rational>> points_;
};

/// Values in element order, or keyed by element label (resolved against the
/// space when the game is built).
struct TableComponent {
  std::vector<Rational> values;
  std::vector<std::pair<std::string, Rational>> by_label;

  bool operator==(const TableComponent&) const = default;
};

using ComponentSpec = std::variant<PiecewiseLinear, TableComponent>;

struct GlobalPayoffs {
  std::vector<std::vector<ComponentSpec>> components;

  bool operator==(const GlobalPayoffs&) const = default;
};

struct IndividualPayoffs {
  std::vector<std::vector<Rational>> tables;

  bool operator==(const IndividualPayoffs&) const = default;
};

struct GameSpecFile {
  int schema_version = kSchemaVersion;
  std::vector<PlayerSpec> players;
  /// Per player (aligned with players); nullopt means S_i = X_i.
  std::vector<std::optional<std::vector<std::string>>> constraints;
  std::variant<GlobalPayoffs, IndividualPayoffs> payoffs;

  bool operator==(const GameSpecFile&) const = default;
};

GameSpecFile spec_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const GameSpecFile& spec);
GameSpecFile read_spec_file(const std::filesystem::path& path);

/// Raw meet table of an explicit space with labels resolved to indices.
/// Throws SpecError on unknown labels or a ragged table; does not check
/// the axioms.
MeetTable raw_meet_table(const ExplicitSpec& space, const std::string& where);

/// Builds the strategy space; validates grids and meet tables.
SpacePtr build_space(const StrategySpaceSpec& spec, const std::string& where);

struct OffGridBreakpoint {
  std::size_t row = 0;     // payoff owner i
  std::size_t column = 0;  // strategy owner j
  Rational breakpoint;
};

/// Evaluates the component at every grid point. Throws ValidationError when
/// the grid leaves the component's domain. Breakpoints that are not grid
/// points are appended to off_grid when given.
TabulatedFunction discretize(const PiecewiseLinear& component,
                             const GridSpec& grid, const SpacePtr& space,
                             std::vector<Rational>* off_grid = nullptr);

struct ResolvedGame {
  Game game;
  std::vector<std::string> player_names;
  std::vector<OffGridBreakpoint> off_grid_breakpoints;
};

/// Full validation: semilattice axioms, domains, quasi-Leontief checks.
ResolvedGame resolve(const GameSpecFile& spec);

/// read_spec_file + resolve.
ResolvedGame parse_spec(const std::filesystem::path& path);

/// Explicit-space, table-valued spec that resolves to the same game.
GameSpecFile resolved_spec(const Game& game,
                           const std::vector<std::string>& player_names);

/// Copy of a grid/PWL spec with every grid axis re-stepped. Throws
/// ValidationError if a player's space is explicit, a component is a table,
/// or constraints are present.
GameSpecFile with_grid_step(const GameSpecFile& spec, const Rational& step);

/// Profile from "l1,l2,..." or a JSON array of labels.
StrategyProfile parse_profile(const Game& game, const std::string& text);

}  // namespace qlgame::cli

#endif  // QLGAME_CLI_SPEC_FILE_HPP_
