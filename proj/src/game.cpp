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

#include "qlgame/game.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <set>
#include <thread>

namespace qlgame {
namespace {

constexpr std::uint64_t kParallelThreshold = 1u << 14;

std::uint64_t saturating_product(const std::vector<ElementSet>& sets) {
  std::uint64_t total = 1;
  for (const auto& s : sets) {
    if (s.empty()) return 0;
    if (total > std::numeric_limits<std::uint64_t>::max() / s.size()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= s.size();
  }
  return total;
}

void check_budget(std::uint64_t required, std::uint64_t budget) {
  if (required > budget) throw BudgetExceeded(required, budget);
}

/// Calls visit(profile) for every profile of ∏sets whose first coordinate
/// lies in sets[0][first_begin, first_end), in lexicographic order.
template <class Visit>
void visit_range(const std::vector<ElementSet>& sets, std::size_t first_begin,
                 std::size_t first_end, Visit&& visit) {
  const std::size_t n = sets.size();
  for (const auto& s : sets) {
    if (s.empty()) return;
  }
  if (first_begin >= first_end) return;
  std::vector<std::size_t> idx(n, 0);
  idx[0] = first_begin;
  StrategyProfile x;
  x.coords.resize(n);
  for (std::size_t k = 0; k < n; ++k) x.coords[k] = sets[k].members()[idx[k]];
  while (true) {
    visit(x);
    std::size_t k = n;
    while (k-- > 0) {
      if (++idx[k] < (k == 0 ? first_end : sets[k].size())) {
        x.coords[k] = sets[k].members()[idx[k]];
        break;
      }
      if (k == 0) return;
      idx[k] = 0;
      x.coords[k] = sets[k].members()[0];
    }
  }
}

/// Profiles of ∏sets satisfying keep, in lexicographic order. Large scans
/// are split on the first coordinate across threads; keep must be safe to
/// call concurrently.
template <class Keep>
std::vector<StrategyProfile> filter_profiles(const std::vector<ElementSet>& sets,
                                             Keep&& keep) {
  auto work = [&](std::size_t begin, std::size_t end) {
    std::vector<StrategyProfile> out;
    visit_range(sets, begin, end, [&](const StrategyProfile& x) {
      if (keep(x)) out.push_back(x);
    });
    return out;
  };
  const std::size_t first = sets.empty() ? 0 : sets[0].size();
  const unsigned threads =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()),
                            first);
  if (threads <= 1 || saturating_product(sets) < kParallelThreshold) {
    return work(0, first);
  }
  std::vector<std::future<std::vector<StrategyProfile>>> parts;
  const std::size_t chunk = (first + threads - 1) / threads;
  for (std::size_t begin = 0; begin < first; begin += chunk) {
    parts.push_back(std::async(std::launch::async, work, begin,
                               std::min(first, begin + chunk)));
  }
  std::vector<StrategyProfile> out;
  for (auto& part : parts) {
    auto chunk_out = part.get();
    out.insert(out.end(), std::make_move_iterator(chunk_out.begin()),
               std::make_move_iterator(chunk_out.end()));
  }
  return out;
}

std::vector<ElementSet> full_sets(const Game& game) {
  std::vector<ElementSet> sets;
  for (std::size_t i = 0; i < game.players(); ++i) {
    sets.push_back(ElementSet::all(game.space(i).size()));
  }
  return sets;
}

std::vector<ElementSet> feasible_sets(const Game& game) {
  return game.spec().constraints;
}

/// tilde for any player count; nullopt stands for "no opponents" (+inf).
std::optional<Rational> opponents_cap(const Game& game, std::size_t i,
                                      const StrategyProfile& x) {
  std::optional<Rational> cap;
  for (std::size_t j = 0; j < game.players(); ++j) {
    if (j == i) continue;
    const Rational& v = game.component(i, j)(x[j]);
    if (!cap || v < *cap) cap = v;
  }
  return cap;
}

void require_global(const Game& game, std::string_view what) {
  if (!game.is_global()) {
    throw ValidationError(std::string(what) +
                          " requires a globally quasi-Leontief model");
  }
}

void require_comprehensive(const Game& game, std::string_view what) {
  if (!game.constraints_comprehensive()) {
    throw ValidationError(std::string(what) +
                          " requires comprehensive (downward closed) "
                          "constraint sets");
  }
}

void require_unconstrained(const Game& game, std::string_view what) {
  if (!game.unconstrained()) {
    throw ValidationError(std::string(what) +
                          " is defined only for unconstrained games (S_i = "
                          "X_i)");
  }
}

void require_nash(const Game& game, const StrategyProfile& x,
                  std::string_view what) {
  if (!is_nash(game, x).is_nash) {
    throw ValidationError(std::string(what) + ": " + game.label(x) +
                          " is not a Nash point");
  }
}

}  // namespace

// Game -----------------------------------------------------------------------

Game::Game(GameSpec spec)
    : spec_(std::move(spec)), profiles_([this] {
        if (spec_.spaces.empty()) {
          throw ValidationError("a game needs at least one player");
        }
        for (const auto& s : spec_.spaces) {
          if (!s) throw ValidationError("null strategy space");
        }
        return ProductSemilattice(spec_.spaces);
      }()) {
  const std::size_t n = players();
  if (spec_.constraints.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      spec_.constraints.push_back(ElementSet::all(space(i).size()));
    }
  }
  if (spec_.constraints.size() != n) {
    throw ValidationError("expected one constraint set per player");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (spec_.constraints[i].empty()) {
      throw ValidationError("constraint set of player " + std::to_string(i) +
                            " is empty");
    }
    for (Element e : spec_.constraints[i]) {
      if (!space(i).contains(e)) {
        throw ValidationError("constraint set of player " + std::to_string(i) +
                              " is not a subset of its strategy space");
      }
    }
  }

  if (const auto* g = std::get_if<GlobalQL>(&spec_.payoffs)) {
    if (g->components.size() != n) {
      throw ValidationError("component matrix must have one row per player");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (g->components[i].size() != n) {
        throw ValidationError("component matrix row " + std::to_string(i) +
                              " must have one entry per player");
      }
      for (std::size_t j = 0; j < n; ++j) {
        const auto& u = g->components[i][j];
        if (u.space_ptr() != spec_.spaces[j] && !(u.space() == space(j))) {
          throw ValidationError("component u_" + std::to_string(i) + "," +
                                std::to_string(j) +
                                " is not defined on the strategy space of "
                                "player " +
                                std::to_string(j));
        }
        if (!u.certificate().is_ql) {
          throw NotQuasiLeontief("component u_" + std::to_string(i) + "," +
                                 std::to_string(j) +
                                 " is not quasi-Leontief");
        }
      }
    }
  } else {
    const auto& tables = std::get<IndividualQL>(spec_.payoffs).tables;
    if (tables.size() != n) {
      throw ValidationError("expected one payoff table per player");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (tables[i].size() != profiles_.size()) {
        throw ValidationError("payoff table of player " + std::to_string(i) +
                              " has " + std::to_string(tables[i].size()) +
                              " entries, expected " +
                              std::to_string(profiles_.size()));
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      auto sets = full_sets(*this);
      sets[i] = ElementSet{space(i).bottom()};
      visit_range(sets, 0, sets[0].size(), [&](const StrategyProfile& x) {
        const auto sec = section(*this, i, x);
        if (!sec.certificate().is_ql) {
          throw NotQuasiLeontief("section of player " + std::to_string(i) +
                                 " at " + label(x) +
                                 " is not quasi-Leontief");
        }
      });
    }
  }
}

const GlobalQL& Game::global() const {
  if (const auto* g = std::get_if<GlobalQL>(&spec_.payoffs)) return *g;
  throw ValidationError("game has an individually quasi-Leontief model");
}

const TabulatedFunction& Game::component(std::size_t i, std::size_t j) const {
  return global().components.at(i).at(j);
}

bool Game::unconstrained() const {
  for (std::size_t i = 0; i < players(); ++i) {
    if (constraint(i).size() != space(i).size()) return false;
  }
  return true;
}

bool Game::constraints_comprehensive() const {
  for (std::size_t i = 0; i < players(); ++i) {
    if (!is_comprehensive(space(i), constraint(i))) return false;
  }
  return true;
}

std::uint64_t Game::feasible_count() const {
  return saturating_product(spec_.constraints);
}

void Game::require_profile(const StrategyProfile& x) const {
  if (x.size() != players()) {
    throw ValidationError("profile has " + std::to_string(x.size()) +
                          " coordinates for " + std::to_string(players()) +
                          " players");
  }
  for (std::size_t i = 0; i < players(); ++i) space(i).require(x[i]);
}

void Game::require_feasible(const StrategyProfile& x) const {
  require_profile(x);
  for (std::size_t i = 0; i < players(); ++i) {
    if (!constraint(i).contains(x[i])) {
      throw ValidationError("coordinate " + std::to_string(i) + " of " +
                            label(x) + " is outside the constraint set");
    }
  }
}

Rational Game::payoff(std::size_t i, const StrategyProfile& x) const {
  require_profile(x);
  if (const auto* g = std::get_if<GlobalQL>(&spec_.payoffs)) {
    Rational v = g->components.at(i)[0](x[0]);
    for (std::size_t j = 1; j < players(); ++j) {
      v = std::min(v, g->components[i][j](x[j]));
    }
    return v;
  }
  return std::get<IndividualQL>(spec_.payoffs).tables.at(i)[encode(x).id];
}

std::string Game::label(const StrategyProfile& x) const {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i != 0) out += ",";
    out += i < players() && space(i).contains(x[i])
               ? space(i).label(x[i])
               : "#" + std::to_string(x[i].id);
  }
  return out + ")";
}

// Sections and certificates ---------------------------------------------------

TabulatedFunction section(const Game& game, std::size_t i,
                          const StrategyProfile& x) {
  game.require_profile(x);
  const auto& xi = game.space(i);
  std::vector<Rational> values;
  values.reserve(xi.size());
  if (game.is_global()) {
    const auto cap = opponents_cap(game, i, x);
    const auto& own = game.component(i, i);
    for (std::uint32_t z = 0; z < xi.size(); ++z) {
      const Rational& v = own(Element{z});
      values.push_back(cap && *cap < v ? *cap : v);
    }
  } else {
    StrategyProfile y = x;
    for (std::uint32_t z = 0; z < xi.size(); ++z) {
      y.coords[i] = Element{z};
      values.push_back(game.payoff(i, y));
    }
  }
  return TabulatedFunction(game.spec().spaces[i], std::move(values));
}

Rational tilde(const Game& game, std::size_t i, const StrategyProfile& x) {
  require_global(game, "tilde");
  if (game.players() < 2) {
    throw ValidationError("tilde is undefined for a one-player game");
  }
  game.require_profile(x);
  return *opponents_cap(game, i, x);
}

NashCertificate is_nash(const Game& game, const StrategyProfile& x) {
  game.require_feasible(x);
  NashCertificate cert;
  cert.profile = x;
  for (std::size_t i = 0; i < game.players(); ++i) {
    const auto sec = section(game, i, x);
    PlayerNashStatus status;
    status.payoff = sec(x[i]);
    status.best_payoff = max_value(sec, game.constraint(i));
    if (status.best_payoff > status.payoff) {
      status.is_best_response = false;
      for (Element z : game.constraint(i)) {
        if (sec(z) == status.best_payoff) {
          status.deviation_witness = z;
          break;
        }
      }
      cert.is_nash = false;
    }
    cert.players.push_back(std::move(status));
  }
  return cert;
}

std::vector<StrategyProfile> nash_enumerate(const Game& game,
                                            std::uint64_t budget) {
  check_budget(game.feasible_count(), budget);
  return filter_profiles(feasible_sets(game), [&](const StrategyProfile& x) {
    return is_nash(game, x).is_nash;
  });
}

std::vector<StrategyProfile> decoupled_nash(const Game& game,
                                            std::uint64_t budget) {
  require_global(game, "decoupled_nash");
  check_budget(game.feasible_count(), budget);
  const std::size_t n = game.players();
  const auto sets = feasible_sets(game);

  std::vector<std::optional<Rational>> best(n);
  visit_range(sets, 0, sets[0].size(), [&](const StrategyProfile& x) {
    for (std::size_t i = 0; i < n; ++i) {
      Rational v = game.payoff(i, x);
      if (!best[i] || v > *best[i]) best[i] = std::move(v);
    }
  });
  std::vector<std::set<Element>> projections(n);
  visit_range(sets, 0, sets[0].size(), [&](const StrategyProfile& x) {
    for (std::size_t i = 0; i < n; ++i) {
      if (game.payoff(i, x) == *best[i]) projections[i].insert(x[i]);
    }
  });

  std::vector<ElementSet> factors;
  for (auto& p : projections) {
    factors.emplace_back(std::vector<Element>(p.begin(), p.end()));
  }
  check_budget(saturating_product(factors), budget);
  std::vector<StrategyProfile> out;
  visit_range(factors, 0, factors[0].size(), [&](const StrategyProfile& x) {
    if (!is_nash(game, x).is_nash) {
      throw InvariantViolation("decoupled construction produced non-Nash " +
                               game.label(x));
    }
    out.push_back(x);
  });
  return out;
}

StrategyProfile maximal_nash(const Game& game) {
  require_global(game, "maximal_nash");
  require_comprehensive(game, "maximal_nash");
  const std::size_t n = game.players();

  std::vector<ElementSet> maximal;
  for (std::size_t i = 0; i < n; ++i) {
    maximal.push_back(maximal_elements(game.space(i), game.constraint(i)));
  }

  StrategyProfile star;
  star.coords.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    // max over ∏S of min_j u_ij(x_j) separates into min_j max_{S_j} u_ij.
    Rational best = max_value(game.component(i, 0), game.constraint(0));
    for (std::size_t j = 1; j < n; ++j) {
      best = std::min(best, max_value(game.component(i, j), game.constraint(j)));
    }
    std::optional<StrategyProfile> z;
    visit_range(maximal, 0, maximal[0].size(), [&](const StrategyProfile& y) {
      if (!z && game.payoff(i, y) == best) z = y;
    });
    if (!z) {
      throw InvariantViolation(
          "no maximal profile attains the maximum payoff of player " +
          std::to_string(i));
    }
    star.coords[i] = (*z)[i];
  }
  if (!is_nash(game, star).is_nash) {
    throw InvariantViolation("maximal construction produced non-Nash " +
                             game.label(star));
  }
  return star;
}

NashCertificate characterize_nash(const Game& game, const StrategyProfile& x) {
  require_global(game, "characterize_nash");
  require_comprehensive(game, "characterize_nash");
  NashCertificate cert = is_nash(game, x);
  bool verdict = true;
  for (std::size_t i = 0; i < game.players(); ++i) {
    const auto& own = game.component(i, i);
    const auto cap = opponents_cap(game, i, x);
    const bool n1 = argmax_set(own, game.constraint(i)).contains(x[i]);
    const bool n2 = cap.has_value() && own(x[i]) >= *cap;
    cert.players[i].n1 = n1;
    cert.players[i].n2 = n2;
    verdict = verdict && (n1 || n2);
  }
  if (verdict != cert.is_nash) {
    throw InvariantViolation("N1/N2 characterization disagrees with the "
                             "best-response check at " +
                             game.label(x));
  }
  return cert;
}

StrategyProfile normalize_nash(const Game& game, const StrategyProfile& x) {
  require_global(game, "normalize_nash");
  require_comprehensive(game, "normalize_nash");
  require_nash(game, x, "normalize_nash");
  StrategyProfile y = x;
  for (std::size_t i = 0; i < game.players(); ++i) {
    y.coords[i] = circ(game.component(i, i), x[i]);
  }
  if (!is_nash(game, y).is_nash) {
    throw InvariantViolation("normalized profile " + game.label(y) +
                             " is not Nash");
  }
  for (std::size_t i = 0; i < game.players(); ++i) {
    if (game.payoff(i, y) > game.payoff(i, x)) {
      throw InvariantViolation("normalization raised the payoff of player " +
                               std::to_string(i));
    }
  }
  return y;
}

std::string_view to_string(EfficiencyCase c) {
  return c == EfficiencyCase::kA1 ? "a1" : "a2";
}

EfficiencyReport efficiency_report(const Game& game, const StrategyProfile& x,
                                   std::size_t i) {
  require_global(game, "efficiency_report");
  require_comprehensive(game, "efficiency_report");
  require_nash(game, x, "efficiency_report");
  if (i >= game.players()) throw ValidationError("unknown player");

  const auto& own = game.component(i, i);
  const auto& s = game.constraint(i);
  EfficiencyReport r;
  r.player = i;
  r.own_value = own(x[i]);
  r.opponents_value = opponents_cap(game, i, x);
  const auto& cap = r.opponents_value;
  r.efficiency_case = !cap || *cap >= r.own_value ? EfficiencyCase::kA1
                                                  : EfficiencyCase::kA2;
  r.in_efficient_set = efficient_set(own, s).contains(x[i]);

  if (r.efficiency_case == EfficiencyCase::kA1) {
    r.efficient = r.in_efficient_set;
  } else {
    std::optional<Element> w;
    for (Element z : s) {
      if (r.own_value > own(z) && own(z) >= *cap) {
        w = z;
        break;
      }
    }
    if (r.in_efficient_set) r.a2_witness = w;
    r.efficient = r.in_efficient_set && !w;
  }

  // Direct condition: u_ii(y) >= min{u_ii(x_i), tilde} implies y >= x_i.
  const Rational floor = cap ? std::min(r.own_value, *cap) : r.own_value;
  const bool direct = std::all_of(s.begin(), s.end(), [&](Element y) {
    return own(y) < floor || game.space(i).leq(x[i], y);
  });
  if (direct != r.efficient) {
    throw InvariantViolation("case analysis disagrees with the direct "
                             "efficiency condition for player " +
                             std::to_string(i) + " at " + game.label(x));
  }
  return r;
}

EfficientNashCheck is_efficient_nash(const Game& game,
                                     const StrategyProfile& x) {
  EfficientNashCheck check;
  check.nash = is_nash(game, x);
  check.efficient = check.nash.is_nash;
  for (std::size_t i = 0; i < game.players(); ++i) {
    const auto sec = section(game, i, x);
    const auto& s = game.constraint(i);
    const Rational& value = sec(x[i]);
    std::optional<Element> counter;
    for (Element y : s) {
      if (sec(y) >= value && !game.space(i).leq(x[i], y)) {
        counter = y;
        break;
      }
    }
    check.efficient_for.push_back(!counter);
    check.counterexample.push_back(counter);
    check.efficient = check.efficient && !counter;
  }
  if (check.nash.is_nash && game.is_global() &&
      game.constraints_comprehensive()) {
    for (std::size_t i = 0; i < game.players(); ++i) {
      auto r = efficiency_report(game, x, i);
      if (r.efficient != check.efficient_for[i]) {
        throw InvariantViolation("efficiency case analysis disagrees with "
                                 "the section check for player " +
                                 std::to_string(i));
      }
      check.case_reports.push_back(std::move(r));
    }
  }
  return check;
}

std::vector<std::size_t> own_strategy_irrelevance(const Game& game,
                                                  const StrategyProfile& x) {
  require_global(game, "own_strategy_irrelevance");
  game.require_profile(x);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < game.players(); ++i) {
    const auto cap = opponents_cap(game, i, x);
    if (cap && game.component(i, i)(x[i]) > *cap) out.push_back(i);
  }
  return out;
}

// E-map ------------------------------------------------------------------------

bool EMap::contains(const StrategyProfile& x) const {
  if (x.size() != coordinates.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!coordinates[i].contains(x[i])) return false;
  }
  return true;
}

std::uint64_t EMap::size() const { return saturating_product(coordinates); }

std::vector<StrategyProfile> EMap::profiles() const {
  std::vector<StrategyProfile> out;
  visit_range(coordinates, 0, coordinates.empty() ? 0 : coordinates[0].size(),
              [&](const StrategyProfile& x) { out.push_back(x); });
  return out;
}

EMap e_map(const Game& game, const StrategyProfile& x) {
  require_unconstrained(game, "e_map");
  game.require_profile(x);
  EMap out;
  out.least.coords.resize(game.players());
  out.greatest.coords.resize(game.players());
  for (std::size_t i = 0; i < game.players(); ++i) {
    const auto& xi = game.space(i);
    const auto sec = section(game, i, x);
    if (!sec.certificate().is_ql) {
      throw NotQuasiLeontief("section of player " + std::to_string(i) +
                             " at " + game.label(x) +
                             " is not quasi-Leontief");
    }
    const auto efficient = efficient_set(sec, ElementSet::all(xi.size()));
    auto best = argmax_set(sec, efficient);
    const auto lo = least_element(xi, best);
    const auto hi = greatest_element(xi, best);
    if (!is_chain(xi, best) || !lo || !hi) {
      throw InvariantViolation("E-map coordinate " + std::to_string(i) +
                               " at " + game.label(x) + " is not a chain");
    }
    out.least.coords[i] = *lo;
    out.greatest.coords[i] = *hi;
    out.coordinates.push_back(std::move(best));
  }
  return out;
}

std::vector<StrategyProfile> efficient_nash_enumerate(
    const Game& game, EfficientNashMethod method, std::uint64_t budget) {
  if (method == EfficientNashMethod::kBrute) {
    std::vector<StrategyProfile> out;
    for (auto& x : nash_enumerate(game, budget)) {
      if (is_efficient_nash(game, x).efficient) out.push_back(std::move(x));
    }
    return out;
  }
  require_unconstrained(game, "fixed-point efficient Nash search");
  check_budget(game.profile_count(), budget);
  auto out = filter_profiles(full_sets(game), [&](const StrategyProfile& x) {
    return e_map(game, x).contains(x);
  });
  for (const auto& x : out) {
    if (!is_efficient_nash(game, x).efficient) {
      throw InvariantViolation("fixed point " + game.label(x) +
                               " of the E-map is not an efficient Nash point");
    }
  }
  return out;
}

EMapIteration e_map_iterate(const Game& game, const StrategyProfile& x0,
                            std::size_t max_steps) {
  require_unconstrained(game, "e_map_iterate");
  game.require_profile(x0);
  EMapIteration it;
  it.trace.push_back(x0);
  std::set<StrategyProfile> seen{x0};
  StrategyProfile x = x0;
  for (std::size_t step = 0;; ++step) {
    const EMap e = e_map(game, x);
    if (e.contains(x)) {
      if (!is_efficient_nash(game, x).efficient) {
        throw InvariantViolation("E-map fixed point " + game.label(x) +
                                 " is not an efficient Nash point");
      }
      it.fixed_point = x;
      break;
    }
    if (step == max_steps) break;
    x = e.least;
    it.trace.push_back(x);
    if (!seen.insert(x).second) {
      it.cycled = true;
      break;
    }
  }
  return it;
}

}  // namespace qlgame
