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

// Seeded generators for small spaces, quasi-Leontief functions and games.
// Used by the property suites and the existence sweep.

#ifndef QLGAME_GENERATORS_HPP_
#define QLGAME_GENERATORS_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qlgame/game.hpp"

namespace qlgame::gen {

using Rng = std::mt19937_64;

// Named spaces -----------------------------------------------------------------

/// {⊥, a, b} with a ∧ b = ⊥.
SpacePtr v3();
/// ⊥ < a, b, c < ⊤ with pairwise meets ⊥.
SpacePtr diamond();
/// Pentagon ⊥ < a < b < ⊤, ⊥ < c < ⊤.
SpacePtr pentagon();
/// Subsets of {0, 1, 2} under intersection.
SpacePtr boolean_cube();
/// Rooted tree given by parent links (parent[0] ignored); meet is the lowest
/// common ancestor, so the root is the bottom.
SpacePtr tree(const std::vector<std::uint32_t>& parent);
/// Product of chains of the given lengths, materialized.
SpacePtr chain_product(const std::vector<std::size_t>& lengths);

struct NamedSpace {
  std::string name;
  SpacePtr space;
};

/// A fixed family of spaces of at most 12 elements: chains 1..12, V3, the
/// diamond, the pentagon, the cube, products of chains, and trees.
std::vector<NamedSpace> small_space_family();

/// Every inf-semilattice on n elements whose order extends 0 < 1 < ... < n-1
/// with 0 as bottom (each isomorphism class appears at least once).
std::vector<SpacePtr> all_semilattices(std::size_t n);

// Random structures --------------------------------------------------------------

/// Chain, tree, product of chains or one of the named spaces, with at most
/// max_size elements (max_size >= 1).
SpacePtr random_space(Rng& rng, std::size_t max_size);
SpacePtr random_chain(Rng& rng, std::size_t max_size);

/// Random quasi-Leontief function with small nonnegative rational values.
/// Chains use running sums of nonnegative increments along the order. Other
/// spaces use u(x) = max{v_k : x >= m_k} over a random chain
/// m_0 = ⊥ < m_1 < ... with increasing v_k. Both are checked with
/// is_quasi_leontief before returning.
TabulatedFunction random_ql_function(Rng& rng, const SpacePtr& space);

/// Random nonempty downward-closed subset.
ElementSet random_down_set(Rng& rng, const FiniteInfSemilattice& space);

struct GameOptions {
  std::size_t min_players = 1;
  std::size_t max_players = 3;
  std::size_t max_space = 6;
  /// Only chains (games on chains always have a top profile).
  bool chains_only = false;
  /// Draw comprehensive S_i instead of S_i = X_i, with this probability.
  double constrain_probability = 0.0;
};

Game random_global_game(Rng& rng, const GameOptions& options);

/// Every section is a random quasi-Leontief function of the player's own
/// strategy. Always unconstrained.
Game random_individual_game(Rng& rng, const GameOptions& options);

}  // namespace qlgame::gen

#endif  // QLGAME_GENERATORS_HPP_
