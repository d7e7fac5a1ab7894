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

#include "qlgame/leontief.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <thread>

#include "oracles.hpp"
#include "grid_example.hpp"
#include "qlgame/generators.hpp"

namespace qlgame {
namespace {

Element el(const FiniteInfSemilattice& s, std::string_view label) {
  return s.find(label).value();
}

TabulatedFunction on_v3(int bot, int a, int b) {
  return TabulatedFunction(gen::v3(), {Rational(bot), Rational(a), Rational(b)});
}

struct GridCase {
  SpacePtr grid = testing::example_grid(Rational(1, 4));
  TabulatedFunction own = testing::tabulate(grid, Rational(1, 4), testing::own_value);
};

TEST(Leontief, QuasiLeontiefOnV3) {
  EXPECT_TRUE(is_quasi_leontief(on_v3(0, 0, 1)).is_ql);

  const QLCertificate bad = is_quasi_leontief(on_v3(0, 1, 2));
  EXPECT_FALSE(bad.is_ql);
  EXPECT_FALSE(bad.meet_min_law);
  EXPECT_FALSE(bad.principal_levels);
  ASSERT_TRUE(bad.witness.has_value());
  EXPECT_EQ(bad.witness->level, 1);
  EXPECT_EQ(bad.witness->level_meet, el(*gen::v3(), "bot"));
}

TEST(Leontief, LevelSetMustBeTheWholeUpSet) {
  // {u >= 1} = {1, 2} contains its meet 1, but u is not isotone.
  const auto chain = std::make_shared<const FiniteInfSemilattice>(
      FiniteInfSemilattice::grid(0, 2, 1));
  const TabulatedFunction u(chain, {Rational(0), Rational(2), Rational(1)});
  const QLCertificate cert = is_quasi_leontief(u);
  EXPECT_FALSE(cert.meet_min_law);
  EXPECT_FALSE(cert.principal_levels);
  ASSERT_TRUE(cert.witness.has_value());
  EXPECT_EQ(cert.witness->level, 2);
  EXPECT_EQ(chain->label(cert.witness->offender), "2");
  EXPECT_EQ(describe_witness(u, *cert.witness), "level 2 has meet 1 below 2 with value 1");
}

TEST(Leontief, IsotoneFunctionsOnChainsAreQuasiLeontief) {
  gen::Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto chain = gen::random_chain(rng, 12);
    std::vector<Rational> values;
    Rational v = 0;
    for (std::size_t k = 0; k < chain->size(); ++k) {
      v += Rational(static_cast<long>(rng() % 3), 2);
      values.push_back(v);
    }
    EXPECT_TRUE(is_quasi_leontief(TabulatedFunction(chain, values)).is_ql);
  }
}

TEST(Leontief, SharpOnGrid) {
  GridCase c;
  EXPECT_EQ(sharp(c.own, 1), el(*c.grid, "1/2"));
  EXPECT_EQ(sharp(c.own, 3), std::nullopt);
  EXPECT_EQ(sharp(c.own, 0), c.grid->bottom());
  EXPECT_EQ(sharp(c.own, 2), el(*c.grid, "1"));
  EXPECT_THROW(sharp(on_v3(0, 1, 2), 1), NotQuasiLeontief);
}

TEST(Leontief, Circ) {
  GridCase c;
  EXPECT_EQ(circ(c.own, el(*c.grid, "2")), el(*c.grid, "1"));
  EXPECT_EQ(circ(c.own, el(*c.grid, "3/4")), el(*c.grid, "3/4"));
  const auto u = on_v3(0, 0, 1);
  EXPECT_EQ(circ(u, el(u.space(), "a")), el(u.space(), "bot"));
  EXPECT_THROW(circ(on_v3(0, 1, 2), Element{1}), NotQuasiLeontief);
}

TEST(Leontief, EfficientSets) {
  GridCase c;
  const ElementSet all = ElementSet::all(c.grid->size());
  EXPECT_EQ(efficient_set(c.own, all),
            ElementSet({Element{0}, Element{1}, Element{2}, Element{3}, Element{4}}));
  const TabulatedFunction flat(c.grid, std::vector<Rational>(c.grid->size(), Rational(1)));
  EXPECT_EQ(efficient_set(flat, all), ElementSet({Element{0}}));
  const auto u = on_v3(0, 0, 1);
  EXPECT_EQ(efficient_set(u, ElementSet::all(3)),
            ElementSet({el(u.space(), "bot"), el(u.space(), "b")}));
  EXPECT_TRUE(efficient_set(u, ElementSet{}).empty());
}

TEST(Leontief, Argmax) {
  GridCase c;
  const ElementSet all = ElementSet::all(c.grid->size());
  EXPECT_EQ(argmax_set(c.own, all),
            ElementSet({Element{4}, Element{5}, Element{6}, Element{7}, Element{8}}));
  EXPECT_EQ(max_value(c.own, all), 2);
  const TabulatedFunction flat(c.grid, std::vector<Rational>(c.grid->size(), Rational(1)));
  EXPECT_EQ(argmax_set(flat, all), all);
  EXPECT_EQ(argmax_set(c.own, ElementSet({Element{3}})), ElementSet({Element{3}}));
  EXPECT_THROW(argmax_set(c.own, ElementSet{}), ValidationError);
}

TEST(Leontief, MinAggregateOnTheExample) {
  const Rational h(1, 4);
  const auto grid = testing::example_grid(h);
  const auto own = testing::tabulate(grid, h, testing::own_value);
  const auto cross = testing::tabulate(grid, h, testing::cross_value);
  const MinAggregate u1 = min_aggregate({own, cross});
  const MinAggregate u2 = min_aggregate({cross, own});
  const std::vector<Element> one_one = {el(*grid, "1"), el(*grid, "1")};
  const std::vector<Element> zero = {Element{0}, Element{0}};
  EXPECT_EQ(u1(one_one), Rational(1, 2));
  EXPECT_EQ(u2(one_one), Rational(1, 2));
  EXPECT_EQ(u1(zero), 0);

  // Meet-min law on the product.
  const auto& p = u1.domain();
  for (std::uint32_t a = 0; a < p.size(); ++a) {
    for (std::uint32_t b = 0; b < p.size(); ++b) {
      ASSERT_EQ(u1.at(p.meet(Element{a}, Element{b})),
                std::min(u1.at(Element{a}), u1.at(Element{b})));
    }
  }

  const std::vector<SpacePtr> wrong = {grid, gen::v3()};
  EXPECT_THROW(min_aggregate({own, cross}, wrong), ValidationError);
  EXPECT_THROW(u1(std::vector<Element>{Element{0}}), ValidationError);
  EXPECT_THROW(min_aggregate({}), ValidationError);
}

TEST(Leontief, InfQuasiconcavity) {
  GridCase c;
  EXPECT_TRUE(check_inf_quasiconcavity(c.own).holds);
  const auto bad = check_inf_quasiconcavity(on_v3(0, 1, 2));
  EXPECT_FALSE(bad.holds);
  EXPECT_FALSE(bad.strict_level_sets);
  EXPECT_FALSE(bad.weak_level_sets);
  ASSERT_TRUE(bad.violation.has_value());
  const auto [x1, x2] = *bad.violation;
  EXPECT_EQ(std::minmax(x1.id, x2.id), std::minmax(1u, 2u));
  EXPECT_TRUE(check_inf_quasiconcavity(on_v3(1, 1, 1)).holds);
}

TEST(Leontief, CertificateIsSharedAndThreadSafe) {
  GridCase c;
  const TabulatedFunction copy = c.own;
  std::vector<std::thread> threads;
  std::vector<int> results(8, -1);
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] { results[t] = copy.certificate().is_ql ? 1 : 0; });
  }
  for (auto& t : threads) t.join();
  for (int r : results) EXPECT_EQ(r, 1);
  EXPECT_EQ(&copy.certificate(), &c.own.certificate());
}

// Exhaustive suites -----------------------------------------------------------

std::vector<SpacePtr> spaces_up_to(std::size_t n) {
  std::vector<SpacePtr> out;
  for (std::size_t k = 1; k <= n; ++k) {
    for (auto& s : gen::all_semilattices(k)) out.push_back(s);
  }
  return out;
}

/// Calls f on every function from the space into {0, ..., levels-1}.
template <class F>
void for_each_function(const SpacePtr& s, int levels, F&& f) {
  std::vector<Rational> values(s->size(), Rational(0));
  std::vector<int> digits(s->size(), 0);
  while (true) {
    for (std::size_t k = 0; k < digits.size(); ++k) values[k] = digits[k];
    f(TabulatedFunction(s, values));
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == levels) digits[k++] = 0;
    if (k == digits.size()) return;
  }
}

TEST(LeontiefProperty, CertificateMatchesMeetMinOracle) {
  for (const auto& s : spaces_up_to(5)) {
    for_each_function(s, 3, [&](const TabulatedFunction& u) {
      const QLCertificate cert = is_quasi_leontief(u);
      ASSERT_EQ(cert.is_ql, oracle::meet_min(*s, oracle::values_of(u)));
      ASSERT_EQ(cert.is_ql, cert.witness == std::nullopt);
    });
  }
}

TEST(LeontiefProperty, LevelSetFormsAgreeIncludingNonQL) {
  for (const auto& s : spaces_up_to(5)) {
    for_each_function(s, 3, [&](const TabulatedFunction& u) {
      // Throws InvariantViolation when the three forms disagree.
      const auto r = check_inf_quasiconcavity(u);
      ASSERT_EQ(r.holds, r.strict_level_sets);
      ASSERT_EQ(r.holds, r.weak_level_sets);
      if (u.certificate().is_ql) {
        ASSERT_TRUE(r.holds);
      }
    });
  }
}

/// Quasi-Leontief functions on every small space: exhaustive {0,1,2}-valued
/// ones up to 5 elements, and random ones on the named family.
std::vector<TabulatedFunction> ql_corpus() {
  std::vector<TabulatedFunction> out;
  for (const auto& s : spaces_up_to(5)) {
    for_each_function(s, 3, [&](const TabulatedFunction& u) {
      if (u.certificate().is_ql) out.push_back(u);
    });
  }
  gen::Rng rng(19);
  for (const auto& named : gen::small_space_family()) {
    for (int k = 0; k < 30; ++k) out.push_back(gen::random_ql_function(rng, named.space));
  }
  return out;
}

TEST(LeontiefProperty, AdjunctionRetractionAndEfficientChains) {
  for (const auto& u : ql_corpus()) {
    const auto& s = u.space();
    const auto values = oracle::values_of(u);
    const ElementSet all = ElementSet::all(s.size());

    for (const Rational& t : values) {
      const auto m = sharp(u, t);
      ASSERT_TRUE(m.has_value());
      ASSERT_EQ(m->id, oracle::least_at_level(s, values, t).value());
      for (std::uint32_t z = 0; z < s.size(); ++z) {
        ASSERT_EQ(u(Element{z}) >= t, s.leq(*m, Element{z}));
      }
    }
    const Rational top = *std::max_element(values.begin(), values.end());
    ASSERT_EQ(sharp(u, top + 1), std::nullopt);

    std::vector<Element> fixed, image;
    for (std::uint32_t x = 0; x < s.size(); ++x) {
      const Element c = circ(u, Element{x});
      ASSERT_TRUE(s.leq(c, Element{x}));
      ASSERT_EQ(u(c), u(Element{x}));
      ASSERT_EQ(circ(u, c), c);
      if (c.id == x) fixed.push_back(c);
      image.push_back(c);
    }
    const ElementSet eff = efficient_set(u, all);
    ASSERT_EQ(eff, ElementSet(fixed));
    ASSERT_EQ(eff, ElementSet(image));
    std::vector<std::uint32_t> all_ids(s.size());
    for (std::uint32_t k = 0; k < s.size(); ++k) all_ids[k] = k;
    const auto expected = oracle::efficient(s, values, all_ids);
    ASSERT_EQ(eff.size(), expected.size());
    ASSERT_TRUE(is_chain(s, eff));

    const ElementSet best = argmax_set(u, all);
    ASSERT_TRUE(is_inf_convex(s, best).sub_semilattice);
  }
}

TEST(LeontiefProperty, EfficientSetsOnSubsetsMatchOracle) {
  gen::Rng rng(23);
  for (const auto& u : ql_corpus()) {
    const auto& s = u.space();
    std::vector<Element> members;
    std::vector<std::uint32_t> ids;
    for (std::uint32_t k = 0; k < s.size(); ++k) {
      if (rng() % 2) {
        members.push_back(Element{k});
        ids.push_back(k);
      }
    }
    const ElementSet got = efficient_set(u, ElementSet(members));
    const auto expected = oracle::efficient(s, oracle::values_of(u), ids);
    ASSERT_EQ(got.size(), expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k) {
      ASSERT_EQ(got.members()[k].id, expected[k]);
    }
  }
}

TEST(LeontiefProperty, GeneratorProducesQuasiLeontiefFunctions) {
  gen::Rng rng(29);
  for (int k = 0; k < 500; ++k) {
    const auto s = gen::random_space(rng, 12);
    const auto u = gen::random_ql_function(rng, s);
    ASSERT_TRUE(oracle::meet_min(*s, oracle::values_of(u)));
  }
}

}  // namespace
}  // namespace qlgame
