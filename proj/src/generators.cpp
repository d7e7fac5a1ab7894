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

#include "qlgame/generators.hpp"

#include <algorithm>

namespace qlgame::gen {
namespace {

using Order = std::vector<std::vector<bool>>;

/// Meet table of a finite poset in which every pair has a greatest lower
/// bound; returns an empty table otherwise.
MeetTable meets_from_order(const Order& le) {
  const auto n = static_cast<std::uint32_t>(le.size());
  MeetTable table(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      std::optional<std::uint32_t> glb;
      for (std::uint32_t c = 0; c < n; ++c) {
        if (!le[c][a] || !le[c][b]) continue;
        bool greatest = true;
        for (std::uint32_t d = 0; d < n && greatest; ++d) {
          if (le[d][a] && le[d][b] && !le[d][c]) greatest = false;
        }
        if (greatest) {
          glb = c;
          break;
        }
      }
      if (!glb) return {};
      table[a][b] = *glb;
    }
  }
  return table;
}

SpacePtr from_order(const Order& le, std::vector<std::string> labels = {}) {
  return std::make_shared<const FiniteInfSemilattice>(meets_from_order(le),
                                                      std::move(labels));
}

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Rational small_increment(Rng& rng) {
  static constexpr int kDenominators[] = {1, 2, 4};
  Rational r(static_cast<long>(uniform(rng, 1, 3)),
             kDenominators[uniform(rng, 0, 2)]);
  r.canonicalize();
  return r;
}

}  // namespace

SpacePtr v3() {
  return std::make_shared<const FiniteInfSemilattice>(
      MeetTable{{0, 0, 0}, {0, 1, 0}, {0, 0, 2}},
      std::vector<std::string>{"bot", "a", "b"});
}

SpacePtr diamond() {
  Order le(5, std::vector<bool>(5, false));
  for (int a = 0; a < 5; ++a) {
    le[a][a] = true;
    le[0][a] = true;
    le[a][4] = true;
  }
  return from_order(le, {"bot", "a", "b", "c", "top"});
}

SpacePtr pentagon() {
  // bot=0, a=1, b=2, c=3, top=4 with a < b.
  Order le(5, std::vector<bool>(5, false));
  for (int a = 0; a < 5; ++a) {
    le[a][a] = true;
    le[0][a] = true;
    le[a][4] = true;
  }
  le[1][2] = true;
  return from_order(le, {"bot", "a", "b", "c", "top"});
}

SpacePtr boolean_cube() {
  Order le(8, std::vector<bool>(8, false));
  std::vector<std::string> labels;
  for (int a = 0; a < 8; ++a) {
    std::string s = "{";
    for (int bit = 0; bit < 3; ++bit) {
      if (a & (1 << bit)) s += std::to_string(bit);
    }
    labels.push_back(s + "}");
    for (int b = 0; b < 8; ++b) le[a][b] = (a & b) == a;
  }
  return from_order(le, std::move(labels));
}

SpacePtr tree(const std::vector<std::uint32_t>& parent) {
  const std::size_t n = parent.size();
  if (n == 0) throw ValidationError("tree needs at least one node");
  Order le(n, std::vector<bool>(n, false));
  for (std::uint32_t a = 0; a < n; ++a) {
    // Walk a's ancestors; every ancestor is below a.
    std::uint32_t cur = a;
    le[a][a] = true;
    std::size_t guard = 0;
    while (cur != 0) {
      if (parent[cur] >= n || ++guard > n) {
        throw ValidationError("parent links do not form a tree rooted at 0");
      }
      cur = parent[cur];
      le[cur][a] = true;
    }
  }
  return from_order(le);
}

SpacePtr chain_product(const std::vector<std::size_t>& lengths) {
  std::vector<SpacePtr> factors;
  for (auto n : lengths) {
    factors.push_back(
        std::make_shared<const FiniteInfSemilattice>(FiniteInfSemilattice::chain(n)));
  }
  return std::make_shared<const FiniteInfSemilattice>(
      ProductSemilattice(std::move(factors)).materialize());
}

std::vector<NamedSpace> small_space_family() {
  std::vector<NamedSpace> out;
  for (std::size_t n = 1; n <= 12; ++n) {
    out.push_back({"chain" + std::to_string(n),
                   std::make_shared<const FiniteInfSemilattice>(
                       FiniteInfSemilattice::chain(n))});
  }
  out.push_back({"v3", v3()});
  out.push_back({"diamond", diamond()});
  out.push_back({"pentagon", pentagon()});
  out.push_back({"cube", boolean_cube()});
  out.push_back({"chain2x2", chain_product({2, 2})});
  out.push_back({"chain2x3", chain_product({2, 3})});
  out.push_back({"chain3x3", chain_product({3, 3})});
  out.push_back({"chain3x4", chain_product({3, 4})});
  out.push_back({"chain2x6", chain_product({2, 6})});
  out.push_back({"chain2x2x3", chain_product({2, 2, 3})});
  out.push_back({"star6", tree({0, 0, 0, 0, 0, 0})});
  out.push_back({"broom8", tree({0, 0, 1, 2, 2, 3, 3, 4})});
  out.push_back({"binary7", tree({0, 0, 0, 1, 1, 2, 2})});
  out.push_back({"caterpillar12", tree({0, 0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5})});
  return out;
}

std::vector<SpacePtr> all_semilattices(std::size_t n) {
  if (n == 0) return {};
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t a = 1; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }
  std::vector<SpacePtr> out;
  const std::uint64_t count = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Order le(n, std::vector<bool>(n, false));
    for (std::uint32_t a = 0; a < n; ++a) {
      le[a][a] = true;
      le[0][a] = true;
    }
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (mask & (std::uint64_t{1} << k)) le[pairs[k].first][pairs[k].second] = true;
    }
    bool transitive = true;
    for (std::uint32_t a = 0; a < n && transitive; ++a) {
      for (std::uint32_t b = 0; b < n && transitive; ++b) {
        if (!le[a][b]) continue;
        for (std::uint32_t c = 0; c < n; ++c) {
          if (le[b][c] && !le[a][c]) {
            transitive = false;
            break;
          }
        }
      }
    }
    if (!transitive) continue;
    auto table = meets_from_order(le);
    if (table.empty()) continue;
    out.push_back(std::make_shared<const FiniteInfSemilattice>(std::move(table)));
  }
  return out;
}

SpacePtr random_chain(Rng& rng, std::size_t max_size) {
  return std::make_shared<const FiniteInfSemilattice>(
      FiniteInfSemilattice::chain(uniform(rng, 1, std::max<std::size_t>(1, max_size))));
}

SpacePtr random_space(Rng& rng, std::size_t max_size) {
  max_size = std::max<std::size_t>(1, max_size);
  switch (uniform(rng, 0, 3)) {
    case 0:
      return random_chain(rng, max_size);
    case 1: {
      const std::size_t n = uniform(rng, 1, max_size);
      std::vector<std::uint32_t> parent(n, 0);
      for (std::uint32_t a = 1; a < n; ++a) {
        parent[a] = static_cast<std::uint32_t>(uniform(rng, 0, a - 1));
      }
      return tree(parent);
    }
    case 2: {
      if (max_size < 4) return random_chain(rng, max_size);
      const std::size_t a = uniform(rng, 2, max_size / 2);
      const std::size_t b = uniform(rng, 2, std::max<std::size_t>(2, max_size / a));
      return chain_product({a, b});
    }
    default: {
      std::vector<SpacePtr> named;
      for (auto s : {v3(), diamond(), pentagon(), boolean_cube()}) {
        if (s->size() <= max_size) named.push_back(s);
      }
      if (named.empty()) return random_chain(rng, max_size);
      return named[uniform(rng, 0, named.size() - 1)];
    }
  }
}

TabulatedFunction random_ql_function(Rng& rng, const SpacePtr& space) {
  const std::size_t n = space->size();
  std::vector<Rational> values(n);
  const Rational start = Rational(static_cast<long>(uniform(rng, 0, 2)), 2);

  if (is_chain(*space, ElementSet::all(n))) {
    // Visit the chain bottom to top; the rank of x is |{y : y <= x}|.
    std::vector<std::uint32_t> order(n);
    for (std::uint32_t a = 0; a < n; ++a) order[a] = a;
    auto rank = [&](std::uint32_t a) {
      std::size_t r = 0;
      for (std::uint32_t b = 0; b < n; ++b) r += space->leq(Element{b}, Element{a});
      return r;
    };
    std::sort(order.begin(), order.end(),
              [&](auto a, auto b) { return rank(a) < rank(b); });
    Rational v = start;
    for (auto a : order) {
      if (!coin(rng, 0.4)) v += small_increment(rng);
      values[a] = v;
    }
  } else {
    std::vector<std::pair<Element, Rational>> thresholds{{space->bottom(), start}};
    while (true) {
      const Element m = thresholds.back().first;
      std::vector<Element> above;
      for (std::uint32_t a = 0; a < n; ++a) {
        if (Element{a} != m && space->leq(m, Element{a})) above.push_back(Element{a});
      }
      if (above.empty() || coin(rng, 0.3)) break;
      thresholds.emplace_back(above[uniform(rng, 0, above.size() - 1)],
                              thresholds.back().second + small_increment(rng));
    }
    for (std::uint32_t a = 0; a < n; ++a) {
      for (const auto& [m, v] : thresholds) {
        if (space->leq(m, Element{a})) values[a] = v;
      }
    }
  }
  TabulatedFunction u(space, std::move(values));
  if (!u.certificate().is_ql) {
    throw InvariantViolation("generated function is not quasi-Leontief");
  }
  return u;
}

ElementSet random_down_set(Rng& rng, const FiniteInfSemilattice& space) {
  const std::size_t n = space.size();
  std::vector<Element> generators;
  for (std::uint32_t a = 0; a < n; ++a) {
    if (coin(rng, 0.3)) generators.push_back(Element{a});
  }
  if (generators.empty()) {
    generators.push_back(Element{static_cast<std::uint32_t>(uniform(rng, 0, n - 1))});
  }
  std::vector<Element> members;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (Element g : generators) {
      if (space.leq(Element{a}, g)) {
        members.push_back(Element{a});
        break;
      }
    }
  }
  return ElementSet(std::move(members));
}

Game random_global_game(Rng& rng, const GameOptions& options) {
  const std::size_t n = uniform(rng, options.min_players, options.max_players);
  GameSpec spec;
  for (std::size_t i = 0; i < n; ++i) {
    spec.spaces.push_back(options.chains_only
                              ? random_chain(rng, options.max_space)
                              : random_space(rng, options.max_space));
  }
  GlobalQL model;
  model.components.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      model.components[i].push_back(random_ql_function(rng, spec.spaces[j]));
    }
  }
  spec.payoffs = std::move(model);
  if (options.constrain_probability > 0.0) {
    for (std::size_t i = 0; i < n; ++i) {
      spec.constraints.push_back(coin(rng, options.constrain_probability)
                                     ? random_down_set(rng, *spec.spaces[i])
                                     : ElementSet::all(spec.spaces[i]->size()));
    }
  }
  return Game(std::move(spec));
}

Game random_individual_game(Rng& rng, const GameOptions& options) {
  const std::size_t n = uniform(rng, options.min_players, options.max_players);
  GameSpec spec;
  for (std::size_t i = 0; i < n; ++i) {
    spec.spaces.push_back(options.chains_only
                              ? random_chain(rng, options.max_space)
                              : random_space(rng, options.max_space));
  }
  const ProductSemilattice profiles(spec.spaces);
  IndividualQL model;
  model.tables.assign(n, std::vector<Rational>(profiles.size()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::uint32_t code = 0; code < profiles.size(); ++code) {
      auto coords = profiles.decode(Element{code});
      if (coords[i].id != 0) continue;
      const auto u = random_ql_function(rng, spec.spaces[i]);
      for (std::uint32_t z = 0; z < spec.spaces[i]->size(); ++z) {
        coords[i] = Element{z};
        model.tables[i][profiles.encode(coords).id] = u(Element{z});
      }
    }
  }
  spec.payoffs = std::move(model);
  return Game(std::move(spec));
}

}  // namespace qlgame::gen
