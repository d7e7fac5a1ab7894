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

// Abstract games with quasi-Leontief payoffs.
//
// Player i chooses x_i in a constraint set S_i of a finite inf-semilattice
// X_i. Payoffs are given either globally, u_i(x) = min_j u_ij(x_j) with each
// u_ij quasi-Leontief on X_j, or as full tables whose every section
// z -> u_i(x_-i; z) is quasi-Leontief on X_i.
//
// Every solver here that builds an answer constructively also certifies it
// against the brute-force definition and throws InvariantViolation when the
// two disagree.

#ifndef QLGAME_GAME_HPP_
#define QLGAME_GAME_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qlgame/leontief.hpp"
#include "qlgame/rational.hpp"
#include "qlgame/semilattice.hpp"

namespace qlgame {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// One element per player.
struct StrategyProfile {
  std::vector<Element> coords;

  std::size_t size() const { return coords.size(); }
  Element operator[](std::size_t i) const { return coords.at(i); }

  /// (x_-i; z)
  StrategyProfile with(std::size_t i, Element z) const {
    StrategyProfile out = *this;
    out.coords.at(i) = z;
    return out;
  }

  auto operator<=>(const StrategyProfile&) const = default;
};

/// components[i][j] is u_ij, defined on X_j.
struct GlobalQL {
  std::vector<std::vector<TabulatedFunction>> components;
};

/// tables[i][code] is u_i at the profile with that code in the product of
/// the X_j (first player most significant).
struct IndividualQL {
  std::vector<std::vector<Rational>> tables;
};

using PayoffModel = std::variant<GlobalQL, IndividualQL>;

struct GameSpec {
  std::vector<SpacePtr> spaces;
  /// One set per player; an empty vector means S_i = X_i for everyone.
  std::vector<ElementSet> constraints;
  PayoffModel payoffs;
};

/// Validated, immutable game.
class Game {
 public:
  /// Checks nonempty S_i ⊆ X_i, table shapes, and the quasi-Leontief
  /// property of every component (global) or every section (individual).
  /// Throws ValidationError / NotQuasiLeontief.
  explicit Game(GameSpec spec);

  std::size_t players() const { return spec_.spaces.size(); }
  const FiniteInfSemilattice& space(std::size_t i) const {
    return *spec_.spaces.at(i);
  }
  const ElementSet& constraint(std::size_t i) const {
    return spec_.constraints.at(i);
  }
  const ProductSemilattice& profile_space() const { return profiles_; }
  const GameSpec& spec() const { return spec_; }

  bool is_global() const {
    return std::holds_alternative<GlobalQL>(spec_.payoffs);
  }
  /// Throws ValidationError for an individual model.
  const GlobalQL& global() const;
  const TabulatedFunction& component(std::size_t i, std::size_t j) const;

  /// S_i = X_i for every player.
  bool unconstrained() const;
  bool constraints_comprehensive() const;

  /// ∏|S_i|, saturating at UINT64_MAX.
  std::uint64_t feasible_count() const;
  std::uint64_t profile_count() const { return profiles_.size(); }

  Rational payoff(std::size_t i, const StrategyProfile& x) const;

  /// Throws ValidationError unless x has one valid coordinate per player.
  void require_profile(const StrategyProfile& x) const;
  /// Additionally requires x_i in S_i.
  void require_feasible(const StrategyProfile& x) const;

  StrategyProfile decode(Element code) const {
    return StrategyProfile{profiles_.decode(code)};
  }
  Element encode(const StrategyProfile& x) const {
    return profiles_.encode(x.coords);
  }
  std::string label(const StrategyProfile& x) const;

 private:
  GameSpec spec_;
  ProductSemilattice profiles_;
};

// ---------------------------------------------------------------------------
// Sections and certificates.

/// z -> u_i(x_-i; z) on X_i.
TabulatedFunction section(const Game& game, std::size_t i,
                          const StrategyProfile& x);

/// min over j != i of u_ij(x_j). Throws ValidationError for an individual
/// model or a one-player game.
Rational tilde(const Game& game, std::size_t i, const StrategyProfile& x);

struct PlayerNashStatus {
  bool is_best_response = true;
  Rational payoff;
  Rational best_payoff;
  /// First element of S_i (by index) attaining best_payoff, present when it
  /// strictly improves on payoff.
  std::optional<Element> deviation_witness;
  /// Filled by characterize_nash only.
  std::optional<bool> n1;
  std::optional<bool> n2;
};

struct NashCertificate {
  StrategyProfile profile;
  std::vector<PlayerNashStatus> players;
  bool is_nash = true;
};

/// Best-response check of every section over S_i. Throws ValidationError if
/// x is not in ∏S_i.
NashCertificate is_nash(const Game& game, const StrategyProfile& x);

/// All Nash points of ∏S_i in lexicographic order.
/// Throws BudgetExceeded when ∏|S_i| > budget.
std::vector<StrategyProfile> nash_enumerate(const Game& game,
                                            std::uint64_t budget =
                                                kDefaultBudget);

/// Product over i of the projections onto coordinate i of argmax(u_i; ∏S_j).
/// Global model only. Every returned profile is certified with is_nash.
std::vector<StrategyProfile> decoupled_nash(const Game& game,
                                            std::uint64_t budget =
                                                kDefaultBudget);

/// A Nash point that is maximal in ∏S_i: for each i take z[i] in
/// Max(∏S) ∩ argmax(u_i; ∏S) and set x_i = z[i]_i. Requires a global model
/// and nonempty comprehensive S_i.
StrategyProfile maximal_nash(const Game& game);

/// Per player, n1 = [x_i in argmax(u_ii; S_i)] and n2 = [u_ii(x_i) >=
/// tilde]; the verdict is "for all i, n1 or n2". The returned certificate is
/// the brute-force one with n1/n2 filled in; throws InvariantViolation if
/// the two verdicts differ.
NashCertificate characterize_nash(const Game& game, const StrategyProfile& x);

/// Applies circ(u_ii, .) coordinatewise to a Nash point. The result is
/// certified Nash with weakly lower payoffs for every player.
StrategyProfile normalize_nash(const Game& game, const StrategyProfile& x);

enum class EfficiencyCase { kA1, kA2 };

std::string_view to_string(EfficiencyCase c);

struct EfficiencyReport {
  std::size_t player = 0;
  /// kA1 when tilde >= u_ii(x_i), kA2 when u_ii(x_i) > tilde.
  EfficiencyCase efficiency_case = EfficiencyCase::kA1;
  Rational own_value;
  /// Absent for a one-player game (no opponents, no cap).
  std::optional<Rational> opponents_value;
  bool in_efficient_set = false;
  /// First w in S_i with u_ii(x_i) > u_ii(w) >= tilde; reported in case kA2
  /// when x_i is in the efficient set.
  std::optional<Element> a2_witness;
  bool efficient = false;
};

/// Efficiency of a Nash point for one player via the two-case analysis,
/// cross-checked against the direct definition. Global model, comprehensive
/// S_i, Nash x.
EfficiencyReport efficiency_report(const Game& game, const StrategyProfile& x,
                                   std::size_t i);

struct EfficientNashCheck {
  NashCertificate nash;
  /// Per player: x_i in the efficient set of the section on S_i.
  std::vector<bool> efficient_for;
  /// Per player: some y in S_i with section(y) >= u_i(x) and y not above x_i.
  std::vector<std::optional<Element>> counterexample;
  /// Present for global models with comprehensive constraints, Nash x.
  std::vector<EfficiencyReport> case_reports;
  bool efficient = false;
};

/// Nash and efficient for every player (direct definition). Non-Nash input
/// returns efficient = false with the failing Nash certificate.
EfficientNashCheck is_efficient_nash(const Game& game,
                                     const StrategyProfile& x);

/// {i : u_ii(x_i) > tilde(i, x)}; global model only.
std::vector<std::size_t> own_strategy_irrelevance(const Game& game,
                                                  const StrategyProfile& x);

// ---------------------------------------------------------------------------
// The E-map: E(x) = ∏_i argmax(section_i, efficient_set(section_i, X_i)).
// Defined for unconstrained games (S_i = X_i).

struct EMap {
  std::vector<ElementSet> coordinates;
  StrategyProfile least;
  StrategyProfile greatest;

  bool contains(const StrategyProfile& x) const;
  std::uint64_t size() const;
  std::vector<StrategyProfile> profiles() const;
};

EMap e_map(const Game& game, const StrategyProfile& x);

enum class EfficientNashMethod { kBrute, kFixedPoint };

/// kBrute filters nash_enumerate with is_efficient_nash; kFixedPoint keeps
/// the x with x in E(x) (unconstrained games only) and re-certifies each.
std::vector<StrategyProfile> efficient_nash_enumerate(
    const Game& game, EfficientNashMethod method,
    std::uint64_t budget = kDefaultBudget);

struct EMapIteration {
  /// x0, m(E(x0)), m(E(m(E(x0)))), ... up to the stop.
  std::vector<StrategyProfile> trace;
  std::optional<StrategyProfile> fixed_point;
  /// Set when the least-selection sequence revisited an earlier point
  /// without reaching a fixed point.
  bool cycled = false;
};

/// Iterates x -> least element of E(x) until x in E(x) or max_steps maps
/// have been applied. A reported fixed point is certified efficient Nash.
EMapIteration e_map_iterate(const Game& game, const StrategyProfile& x0,
                            std::size_t max_steps);

}  // namespace qlgame

#endif  // QLGAME_GAME_HPP_
