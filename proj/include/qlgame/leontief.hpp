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

// Quasi-Leontief functions on a finite inf-semilattice.
//
// A function u is quasi-Leontief when u(x ∧ y) = min{u(x), u(y)} for all
// pairs. On a finite space this is the same as asking that every nonempty
// upper level set {u >= t} be the principal up-set of its own meet. Such a
// function is isotone, and it comes with two derived maps:
//
//   sharp(u, t)  least element z with u(z) >= t, so that u(z) >= t <=> z >=
//                sharp(u, t) for every attained level t;
//   circ(u, x)   sharp(u, u(x)), the least element with the same value as x.
//
// The fixed points of circ are the efficient points of u. They form a chain.

#ifndef QLGAME_LEONTIEF_HPP_
#define QLGAME_LEONTIEF_HPP_

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qlgame/rational.hpp"
#include "qlgame/semilattice.hpp"

namespace qlgame {

struct LevelSetWitness {
  Rational level;
  Element level_meet;  // meet of {u >= level}
  Element offender;    // offender >= level_meet with u(offender) < level
};

struct QLCertificate {
  bool is_ql = true;
  /// u(x ∧ y) == min{u(x), u(y)} for all pairs.
  bool meet_min_law = true;
  /// Every nonempty {u >= t} is the up-set of its meet.
  bool principal_levels = true;
  /// Smallest failing level, present whenever is_ql is false.
  std::optional<LevelSetWitness> witness;
  std::optional<std::pair<Element, Element>> meet_min_violation;
};

/// Exact value table on one space. Immutable; copies share the memoized
/// quasi-Leontief certificate.
class TabulatedFunction {
 public:
  TabulatedFunction(SpacePtr space, std::vector<Rational> values);

  const FiniteInfSemilattice& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }
  std::size_t size() const { return values_.size(); }

  const Rational& operator()(Element x) const {
    space_->require(x);
    return values_[x.id];
  }
  std::span<const Rational> values() const { return values_; }

  const QLCertificate& certificate() const;

  bool operator==(const TabulatedFunction& other) const {
    return *space_ == *other.space_ && values_ == other.values_;
  }

 private:
  struct Memo {
    std::once_flag once;
    QLCertificate certificate;
  };

  SpacePtr space_;
  std::vector<Rational> values_;
  std::shared_ptr<Memo> memo_;
};

/// "level t has meet m [below z] with value v".
std::string describe_witness(const TabulatedFunction& u, const LevelSetWitness& w);

/// Runs both formulations (pairwise meet-min law and principal upper level
/// sets) and throws InvariantViolation if they disagree.
QLCertificate is_quasi_leontief(const TabulatedFunction& u);

/// Meet of {z : u(z) >= t}, or nullopt when that set is empty.
/// Throws NotQuasiLeontief.
std::optional<Element> sharp(const TabulatedFunction& u, const Rational& t);

/// Least element with the same value as x. Throws NotQuasiLeontief.
Element circ(const TabulatedFunction& u, Element x);

/// {x in S : for all y in S, u(y) >= u(x) implies y >= x}
ElementSet efficient_set(const TabulatedFunction& u, const ElementSet& s);

/// {x in S : u(x) = max over S}. Throws ValidationError on empty S.
ElementSet argmax_set(const TabulatedFunction& u, const ElementSet& s);

/// max over S of u. Throws ValidationError on empty S.
Rational max_value(const TabulatedFunction& u, const ElementSet& s);

struct InfQuasiconcavityReport {
  /// inf of u over [[x1, x2]] >= min{u(x1), u(x2)} for all pairs.
  bool holds = true;
  /// {u > t} inf-convex for all t.
  bool strict_level_sets = true;
  /// {u >= t} inf-convex for all t.
  bool weak_level_sets = true;
  std::optional<std::pair<Element, Element>> violation;

  explicit operator bool() const { return holds; }
};

/// Checks the bracket inequality and both level-set forms; throws
/// InvariantViolation if they disagree.
InfQuasiconcavityReport check_inf_quasiconcavity(const TabulatedFunction& u);

/// x -> min_j components[j](x_j) on the product of the component spaces.
class MinAggregate {
 public:
  /// Throws ValidationError on an empty component list.
  explicit MinAggregate(std::vector<TabulatedFunction> components);

  const ProductSemilattice& domain() const { return domain_; }
  const TabulatedFunction& component(std::size_t j) const {
    return components_.at(j);
  }
  std::size_t arity() const { return components_.size(); }

  /// Throws ValidationError on an arity mismatch or unknown coordinate.
  Rational operator()(std::span<const Element> x) const;
  Rational at(Element code) const { return (*this)(domain_.decode(code)); }

 private:
  std::vector<TabulatedFunction> components_;
  ProductSemilattice domain_;
};

MinAggregate min_aggregate(std::vector<TabulatedFunction> components);

/// min_aggregate with each component checked against the given factors.
/// Throws ValidationError when component j is not defined on factors[j].
MinAggregate min_aggregate(std::vector<TabulatedFunction> components,
                           std::span<const SpacePtr> factors);

}  // namespace qlgame

#endif  // QLGAME_LEONTIEF_HPP_
