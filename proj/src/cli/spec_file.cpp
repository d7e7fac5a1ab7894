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

#include "qlgame/cli/spec_file.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace qlgame::cli {
namespace {

using nlohmann::json;

constexpr std::size_t kMaxBoxElements = 4096;

std::string at(const std::string& where, const std::string& key) {
  return where + "/" + key;
}
std::string at(const std::string& where, std::size_t index) {
  return where + "/" + std::to_string(index);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw SpecError(where, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw SpecError(at(where, key), "missing field");
  return *it;
}

const json& array_field(const json& obj, const char* key,
                        const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_array()) throw SpecError(at(where, key), "expected an array");
  return v;
}

std::string string_at(const json& v, const std::string& where) {
  if (!v.is_string()) throw SpecError(where, "expected a string");
  return v.get<std::string>();
}

Rational rational_at(const json& v, const std::string& where) {
  if (!v.is_string()) {
    throw SpecError(where, "expected a rational string such as \"3/4\"");
  }
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SpecError(where, e.what());
  }
}

GridSpec grid_from_json(const json& v, const std::string& where) {
  GridSpec g{rational_at(field(v, "lower", where), at(where, "lower")),
             rational_at(field(v, "upper", where), at(where, "upper")),
             rational_at(field(v, "step", where), at(where, "step"))};
  return g;
}

json grid_to_json(const GridSpec& g) {
  return json{{"kind", "grid"},
              {"lower", to_string(g.lower)},
              {"upper", to_string(g.upper)},
              {"step", to_string(g.step)}};
}

StrategySpaceSpec space_from_json(const json& v, const std::string& where) {
  const std::string kind = string_at(field(v, "kind", where), at(where, "kind"));
  if (kind == "grid") return grid_from_json(v, where);
  if (kind == "box") {
    BoxSpec box;
    const json& axes = array_field(v, "axes", where);
    if (axes.empty()) throw SpecError(at(where, "axes"), "box needs an axis");
    for (std::size_t k = 0; k < axes.size(); ++k) {
      box.axes.push_back(grid_from_json(axes[k], at(at(where, "axes"), k)));
    }
    return box;
  }
  if (kind == "explicit") {
    ExplicitSpec e;
    const json& elements = array_field(v, "elements", where);
    for (std::size_t k = 0; k < elements.size(); ++k) {
      e.elements.push_back(
          string_at(elements[k], at(at(where, "elements"), k)));
    }
    const json& table = array_field(v, "meet_table", where);
    for (std::size_t r = 0; r < table.size(); ++r) {
      const std::string row_where = at(at(where, "meet_table"), r);
      if (!table[r].is_array()) throw SpecError(row_where, "expected an array");
      std::vector<std::string> row;
      for (std::size_t c = 0; c < table[r].size(); ++c) {
        row.push_back(string_at(table[r][c], at(row_where, c)));
      }
      e.meet_table.push_back(std::move(row));
    }
    return e;
  }
  throw SpecError(at(where, "kind"),
                  "unknown strategy space kind '" + kind +
                      "' (expected grid, box or explicit)");
}

json space_to_json(const StrategySpaceSpec& s) {
  if (const auto* g = std::get_if<GridSpec>(&s)) return grid_to_json(*g);
  if (const auto* b = std::get_if<BoxSpec>(&s)) {
    json axes = json::array();
    for (const auto& g : b->axes) axes.push_back(grid_to_json(g));
    return json{{"kind", "box"}, {"axes", axes}};
  }
  const auto& e = std::get<ExplicitSpec>(s);
  return json{{"kind", "explicit"},
              {"elements", e.elements},
              {"meet_table", e.meet_table}};
}

ComponentSpec component_from_json(const json& v, const std::string& where) {
  const std::string kind = string_at(field(v, "kind", where), at(where, "kind"));
  if (kind == "pwl") {
    const json& points = array_field(v, "points", where);
    std::vector<std::pair<Rational, Rational>> pts;
    for (std::size_t k = 0; k < points.size(); ++k) {
      const std::string pw = at(at(where, "points"), k);
      if (!points[k].is_array() || points[k].size() != 2) {
        throw SpecError(pw, "expected a [x, value] pair");
      }
      pts.emplace_back(rational_at(points[k][0], at(pw, 0)),
                       rational_at(points[k][1], at(pw, 1)));
    }
    try {
      return PiecewiseLinear(std::move(pts));
    } catch (const ValidationError& e) {
      throw SpecError(at(where, "points"), e.what());
    }
  }
  if (kind == "table") {
    const json& values = field(v, "values", where);
    TableComponent t;
    if (values.is_array()) {
      for (std::size_t k = 0; k < values.size(); ++k) {
        t.values.push_back(rational_at(values[k], at(at(where, "values"), k)));
      }
    } else if (values.is_object()) {
      for (const auto& [label, value] : values.items()) {
        t.by_label.emplace_back(label,
                                rational_at(value, at(at(where, "values"), label)));
      }
    } else {
      throw SpecError(at(where, "values"), "expected an array or an object");
    }
    return t;
  }
  throw SpecError(at(where, "kind"), "unknown component kind '" + kind +
                                         "' (expected pwl or table)");
}

json component_to_json(const ComponentSpec& c) {
  if (const auto* p = std::get_if<PiecewiseLinear>(&c)) {
    json points = json::array();
    for (const auto& [x, v] : p->points()) {
      points.push_back(json::array({to_string(x), to_string(v)}));
    }
    return json{{"kind", "pwl"}, {"points", points}};
  }
  const auto& t = std::get<TableComponent>(c);
  if (!t.by_label.empty()) {
    json values = json::object();
    for (const auto& [label, v] : t.by_label) values[label] = to_string(v);
    return json{{"kind", "table"}, {"values", values}};
  }
  json values = json::array();
  for (const auto& v : t.values) values.push_back(to_string(v));
  return json{{"kind", "table"}, {"values", values}};
}

}  // namespace

// JSON ----------------------------------------------------------------------------

GameSpecFile spec_from_json(const json& doc) {
  const std::string root;
  GameSpecFile spec;
  if (!doc.is_object()) throw SpecError("/", "expected a JSON object");
  const json& version = field(doc, "schema_version", root);
  if (!version.is_number_integer() || version.get<int>() != kSchemaVersion) {
    throw SpecError("/schema_version", "unsupported schema version (expected " +
                                           std::to_string(kSchemaVersion) + ")");
  }
  const json& players = array_field(doc, "players", root);
  if (players.empty()) throw SpecError("/players", "at least one player needed");
  std::set<std::string> names;
  for (std::size_t i = 0; i < players.size(); ++i) {
    const std::string where = at("/players", i);
    PlayerSpec p;
    p.name = players[i].contains("name")
                 ? string_at(players[i]["name"], at(where, "name"))
                 : std::to_string(i + 1);
    if (!names.insert(p.name).second) {
      throw SpecError(at(where, "name"), "duplicate player name '" + p.name + "'");
    }
    p.strategy_space = space_from_json(field(players[i], "strategy_space", where),
                                       at(where, "strategy_space"));
    spec.players.push_back(std::move(p));
  }

  spec.constraints.assign(spec.players.size(), std::nullopt);
  if (doc.contains("constraints")) {
    const json& cs = doc["constraints"];
    if (!cs.is_object()) throw SpecError("/constraints", "expected an object");
    for (const auto& [name, list] : cs.items()) {
      const std::string where = at("/constraints", name);
      std::size_t i = 0;
      while (i < spec.players.size() && spec.players[i].name != name) ++i;
      if (i == spec.players.size()) {
        throw SpecError(where, "unknown player '" + name + "'");
      }
      if (!list.is_array()) throw SpecError(where, "expected an array");
      std::vector<std::string> labels;
      for (std::size_t k = 0; k < list.size(); ++k) {
        labels.push_back(string_at(list[k], at(where, k)));
      }
      spec.constraints[i] = std::move(labels);
    }
  }

  const json& payoffs = field(doc, "payoffs", root);
  const std::string model =
      string_at(field(payoffs, "model", "/payoffs"), "/payoffs/model");
  const std::size_t n = spec.players.size();
  if (model == "global") {
    GlobalPayoffs g;
    const json& rows = array_field(payoffs, "components", "/payoffs");
    if (rows.size() != n) {
      throw SpecError("/payoffs/components",
                      "expected " + std::to_string(n) + " rows");
    }
    for (std::size_t i = 0; i < n; ++i) {
      const std::string rw = at("/payoffs/components", i);
      if (!rows[i].is_array() || rows[i].size() != n) {
        throw SpecError(rw, "expected " + std::to_string(n) + " components");
      }
      std::vector<ComponentSpec> row;
      for (std::size_t j = 0; j < n; ++j) {
        row.push_back(component_from_json(rows[i][j], at(rw, j)));
      }
      g.components.push_back(std::move(row));
    }
    spec.payoffs = std::move(g);
  } else if (model == "individual") {
    IndividualPayoffs ind;
    const json& tables = array_field(payoffs, "tables", "/payoffs");
    if (tables.size() != n) {
      throw SpecError("/payoffs/tables", "expected " + std::to_string(n) + " tables");
    }
    for (std::size_t i = 0; i < n; ++i) {
      const std::string tw = at("/payoffs/tables", i);
      if (!tables[i].is_array()) throw SpecError(tw, "expected an array");
      std::vector<Rational> values;
      for (std::size_t k = 0; k < tables[i].size(); ++k) {
        values.push_back(rational_at(tables[i][k], at(tw, k)));
      }
      ind.tables.push_back(std::move(values));
    }
    spec.payoffs = std::move(ind);
  } else {
    throw SpecError("/payoffs/model", "unknown payoff model '" + model +
                                          "' (expected global or individual)");
  }
  return spec;
}

namespace {

std::vector<std::string> labels_of(const FiniteInfSemilattice& space) {
  return {space.labels().begin(), space.labels().end()};
}

std::vector<Rational> keyed_values(const TableComponent& table,
                                   const FiniteInfSemilattice& space,
                                   const std::string& where) {
  std::vector<std::optional<Rational>> slots(space.size());
  for (const auto& [label, value] : table.by_label) {
    const auto e = space.find(label);
    if (!e) {
      throw SpecError(at(at(where, "values"), label), "unknown element label");
    }
    slots[e->id] = value;
  }
  std::vector<Rational> values;
  for (std::uint32_t k = 0; k < slots.size(); ++k) {
    if (!slots[k]) {
      throw SpecError(at(where, "values"), "missing value for element '" +
                                               space.label(Element{k}) + "'");
    }
    values.push_back(*slots[k]);
  }
  return values;
}

bool on_grid(const GridSpec& grid, const Rational& x) {
  if (x < grid.lower || x > grid.upper) return false;
  Rational k = (x - grid.lower) / grid.step;
  k.canonicalize();
  return k.get_den() == 1;
}

}  // namespace

// PiecewiseLinear ---------------------------------------------------------------

PiecewiseLinear::PiecewiseLinear(std::vector<std::pair<Rational, Rational>> points)
    : points_(std::move(points)) {
  if (points_.empty()) throw ValidationError("piecewise-linear component has no points");
  for (std::size_t k = 1; k < points_.size(); ++k) {
    if (!(points_[k - 1].first < points_[k].first)) {
      throw ValidationError("breakpoints must be strictly increasing (" +
                            to_string(points_[k - 1].first) + " then " +
                            to_string(points_[k].first) + ")");
    }
    if (points_[k].second < points_[k - 1].second) {
      throw ValidationError("non-isotone component: value drops from " +
                            to_string(points_[k - 1].second) + " to " +
                            to_string(points_[k].second) + " at " +
                            to_string(points_[k].first));
    }
  }
}

Rational PiecewiseLinear::operator()(const Rational& x) const {
  if (x < lower() || x > upper()) {
    throw ValidationError(to_string(x) + " is outside the component domain [" +
                          to_string(lower()) + ", " + to_string(upper()) + "]");
  }
  for (std::size_t k = 0; k + 1 < points_.size(); ++k) {
    const auto& [x0, v0] = points_[k];
    const auto& [x1, v1] = points_[k + 1];
    if (x == x0) return v0;
    if (x < x1) {
      Rational v = v0 + (v1 - v0) * (x - x0) / (x1 - x0);
      v.canonicalize();
      return v;
    }
  }
  return points_.back().second;
}

json to_json(const GameSpecFile& spec) {
  json players = json::array();
  for (const auto& p : spec.players) {
    players.push_back(json{{"name", p.name},
                           {"strategy_space", space_to_json(p.strategy_space)}});
  }
  json doc{{"schema_version", spec.schema_version}, {"players", players}};
  json constraints = json::object();
  for (std::size_t i = 0; i < spec.constraints.size(); ++i) {
    if (spec.constraints[i]) constraints[spec.players[i].name] = *spec.constraints[i];
  }
  if (!constraints.empty()) doc["constraints"] = constraints;
  if (const auto* g = std::get_if<GlobalPayoffs>(&spec.payoffs)) {
    json rows = json::array();
    for (const auto& row : g->components) {
      json r = json::array();
      for (const auto& c : row) r.push_back(component_to_json(c));
      rows.push_back(r);
    }
    doc["payoffs"] = json{{"model", "global"}, {"components", rows}};
  } else {
    json tables = json::array();
    for (const auto& t : std::get<IndividualPayoffs>(spec.payoffs).tables) {
      json values = json::array();
      for (const auto& v : t) values.push_back(to_string(v));
      tables.push_back(values);
    }
    doc["payoffs"] = json{{"model", "individual"}, {"tables", tables}};
  }
  return doc;
}

GameSpecFile read_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open spec file '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SpecError(path.string(), std::string("malformed JSON: ") + e.what());
  }
  return spec_from_json(doc);
}

// Resolution ------------------------------------------------------------------------

MeetTable raw_meet_table(const ExplicitSpec& space, const std::string& where) {
  std::map<std::string, std::uint32_t> index;
  for (std::uint32_t k = 0; k < space.elements.size(); ++k) {
    if (!index.emplace(space.elements[k], k).second) {
      throw SpecError(at(at(where, "elements"), k),
                      "duplicate element label '" + space.elements[k] + "'");
    }
  }
  if (space.elements.empty()) throw SpecError(at(where, "elements"), "no elements");
  if (space.meet_table.size() != space.elements.size()) {
    throw SpecError(at(where, "meet_table"),
                    "expected " + std::to_string(space.elements.size()) + " rows");
  }
  MeetTable table;
  for (std::size_t r = 0; r < space.meet_table.size(); ++r) {
    const std::string rw = at(at(where, "meet_table"), r);
    if (space.meet_table[r].size() != space.elements.size()) {
      throw SpecError(rw, "expected " + std::to_string(space.elements.size()) +
                              " entries");
    }
    std::vector<std::uint32_t> row;
    for (std::size_t c = 0; c < space.meet_table[r].size(); ++c) {
      const auto it = index.find(space.meet_table[r][c]);
      if (it == index.end()) {
        throw SpecError(at(rw, c), "unknown element label '" +
                                       space.meet_table[r][c] + "'");
      }
      row.push_back(it->second);
    }
    table.push_back(std::move(row));
  }
  return table;
}

SpacePtr build_space(const StrategySpaceSpec& spec, const std::string& where) {
  try {
    if (const auto* g = std::get_if<GridSpec>(&spec)) {
      return std::make_shared<const FiniteInfSemilattice>(
          FiniteInfSemilattice::grid(g->lower, g->upper, g->step));
    }
    if (const auto* b = std::get_if<BoxSpec>(&spec)) {
      std::vector<SpacePtr> axes;
      std::size_t total = 1;
      for (const auto& g : b->axes) {
        axes.push_back(std::make_shared<const FiniteInfSemilattice>(
            FiniteInfSemilattice::grid(g.lower, g.upper, g.step)));
        total *= axes.back()->size();
        if (total > kMaxBoxElements) {
          throw ValidationError("box has more than " +
                                std::to_string(kMaxBoxElements) + " points");
        }
      }
      return std::make_shared<const FiniteInfSemilattice>(
          ProductSemilattice(std::move(axes)).materialize());
    }
    const auto& e = std::get<ExplicitSpec>(spec);
    return std::make_shared<const FiniteInfSemilattice>(raw_meet_table(e, where),
                                                        e.elements);
  } catch (const SpecError&) {
    throw;
  } catch (const ValidationError& err) {
    throw SpecError(where, err.what());
  }
}

TabulatedFunction discretize(const PiecewiseLinear& component,
                             const GridSpec& grid, const SpacePtr& space,
                             std::vector<Rational>* off_grid) {
  if (grid.lower < component.lower() || grid.upper > component.upper()) {
    throw ValidationError("grid [" + to_string(grid.lower) + ", " +
                          to_string(grid.upper) +
                          "] is outside the component domain [" +
                          to_string(component.lower()) + ", " +
                          to_string(component.upper()) + "]");
  }
  std::vector<Rational> values;
  values.reserve(space->size());
  for (std::uint32_t k = 0; k < space->size(); ++k) {
    values.push_back(component(Rational(grid.lower + grid.step * k)));
  }
  if (off_grid) {
    for (const auto& [x, v] : component.points()) {
      if (!on_grid(grid, x)) off_grid->push_back(x);
    }
  }
  return TabulatedFunction(space, std::move(values));
}

ResolvedGame resolve(const GameSpecFile& spec) {
  const std::size_t n = spec.players.size();
  GameSpec game;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(spec.players[i].name);
    game.spaces.push_back(build_space(spec.players[i].strategy_space,
                                      at(at("/players", i), "strategy_space")));
  }

  if (spec.constraints.size() != n) {
    throw SpecError("/constraints", "expected one entry per player");
  }
  bool any_constraint = false;
  for (const auto& c : spec.constraints) any_constraint = any_constraint || c.has_value();
  if (any_constraint) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!spec.constraints[i]) {
        game.constraints.push_back(ElementSet::all(game.spaces[i]->size()));
        continue;
      }
      const std::string where = at("/constraints", names[i]);
      std::vector<Element> members;
      for (std::size_t k = 0; k < spec.constraints[i]->size(); ++k) {
        const auto e = game.spaces[i]->find((*spec.constraints[i])[k]);
        if (!e) {
          throw SpecError(at(where, k), "unknown element label '" +
                                            (*spec.constraints[i])[k] + "'");
        }
        members.push_back(*e);
      }
      if (members.empty()) throw SpecError(where, "constraint set is empty");
      game.constraints.emplace_back(std::move(members));
    }
  }

  std::vector<OffGridBreakpoint> off_grid;
  if (const auto* g = std::get_if<GlobalPayoffs>(&spec.payoffs)) {
    GlobalQL model;
    model.components.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const std::string where =
            at(at("/payoffs/components", i), j);
        const auto& c = g->components.at(i).at(j);
        std::optional<TabulatedFunction> u;
        if (const auto* pwl = std::get_if<PiecewiseLinear>(&c)) {
          const auto* grid = std::get_if<GridSpec>(&spec.players[j].strategy_space);
          if (!grid) {
            throw SpecError(where, "piecewise-linear components need a grid "
                                   "strategy space");
          }
          std::vector<Rational> flagged;
          try {
            u = discretize(*pwl, *grid, game.spaces[j], &flagged);
          } catch (const ValidationError& e) {
            throw SpecError(where, e.what());
          }
          for (auto& x : flagged) off_grid.push_back({i, j, std::move(x)});
        } else {
          const auto& table = std::get<TableComponent>(c);
          std::vector<Rational> values = table.values;
          if (!table.by_label.empty()) {
            values = keyed_values(table, *game.spaces[j], where);
          }
          if (values.size() != game.spaces[j]->size()) {
            throw SpecError(at(where, "values"),
                            "expected " + std::to_string(game.spaces[j]->size()) +
                                " values");
          }
          u = TabulatedFunction(game.spaces[j], values);
        }
        const auto& cert = u->certificate();
        if (!cert.is_ql) {
          std::string msg = "component is not quasi-Leontief";
          if (cert.witness) {
            msg += " (" + describe_witness(*u, *cert.witness) + ")";
          }
          throw SpecError(where, msg);
        }
        model.components[i].push_back(std::move(*u));
      }
    }
    game.payoffs = std::move(model);
  } else {
    IndividualQL model;
    model.tables = std::get<IndividualPayoffs>(spec.payoffs).tables;
    game.payoffs = std::move(model);
  }

  try {
    return ResolvedGame{Game(std::move(game)), std::move(names), std::move(off_grid)};
  } catch (const SpecError&) {
    throw;
  } catch (const ValidationError& e) {
    throw SpecError("/payoffs", e.what());
  }
}

ResolvedGame parse_spec(const std::filesystem::path& path) {
  return resolve(read_spec_file(path));
}

GameSpecFile resolved_spec(const Game& game,
                           const std::vector<std::string>& player_names) {
  GameSpecFile out;
  for (std::size_t i = 0; i < game.players(); ++i) {
    const auto& space = game.space(i);
    ExplicitSpec e;
    e.elements = labels_of(space);
    for (const auto& row : space.meet_table()) {
      std::vector<std::string> labels;
      for (auto id : row) labels.push_back(space.label(Element{id}));
      e.meet_table.push_back(std::move(labels));
    }
    out.players.push_back(PlayerSpec{
        i < player_names.size() ? player_names[i] : std::to_string(i + 1),
        std::move(e)});
    if (game.constraint(i).size() == space.size()) {
      out.constraints.emplace_back(std::nullopt);
    } else {
      std::vector<std::string> labels;
      for (Element x : game.constraint(i)) labels.push_back(space.label(x));
      out.constraints.emplace_back(std::move(labels));
    }
  }
  if (game.is_global()) {
    GlobalPayoffs g;
    for (const auto& row : game.global().components) {
      std::vector<ComponentSpec> r;
      for (const auto& u : row) {
        r.push_back(TableComponent{{u.values().begin(), u.values().end()}, {}});
      }
      g.components.push_back(std::move(r));
    }
    out.payoffs = std::move(g);
  } else {
    out.payoffs = IndividualPayoffs{std::get<IndividualQL>(game.spec().payoffs).tables};
  }
  return out;
}

GameSpecFile with_grid_step(const GameSpecFile& spec, const Rational& step) {
  GameSpecFile out = spec;
  for (auto& c : out.constraints) {
    if (c) throw ValidationError("refinement needs an unconstrained spec");
  }
  for (auto& p : out.players) {
    if (auto* g = std::get_if<GridSpec>(&p.strategy_space)) {
      g->step = step;
    } else if (auto* b = std::get_if<BoxSpec>(&p.strategy_space)) {
      for (auto& axis : b->axes) axis.step = step;
    } else {
      throw ValidationError("refinement needs grid strategy spaces (player '" +
                            p.name + "' is explicit)");
    }
  }
  const auto* g = std::get_if<GlobalPayoffs>(&out.payoffs);
  if (!g) throw ValidationError("refinement needs piecewise-linear global payoffs");
  for (const auto& row : g->components) {
    for (const auto& c : row) {
      if (!std::holds_alternative<PiecewiseLinear>(c)) {
        throw ValidationError("refinement needs piecewise-linear components");
      }
    }
  }
  return out;
}

StrategyProfile parse_profile(const Game& game, const std::string& text) {
  std::vector<std::string> labels;
  if (!text.empty() && text.front() == '[') {
    try {
      labels = json::parse(text).get<std::vector<std::string>>();
    } catch (const json::exception& e) {
      throw ValidationError("malformed profile '" + text + "': " + e.what());
    }
  } else {
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) labels.push_back(item);
  }
  if (labels.size() != game.players()) {
    throw ValidationError("profile '" + text + "' has " +
                          std::to_string(labels.size()) + " coordinates for " +
                          std::to_string(game.players()) + " players");
  }
  StrategyProfile x;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto e = game.space(i).find(labels[i]);
    if (!e) {
      throw ValidationError("unknown element '" + labels[i] + "' for player " +
                            std::to_string(i + 1));
    }
    x.coords.push_back(*e);
  }
  return x;
}

}  // namespace qlgame::cli
