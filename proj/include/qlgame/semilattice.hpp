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

// Finite inf-semilattices (meet-semilattices), their induced order, and the
// set predicates used by the game solvers: intervals, brackets, inf-convexity,
// comprehensiveness (downward closure) and maximal elements.
//
// A space is described by a total meet table. The order is derived from it:
// a <= b iff meet(a, b) == a. Elements are identified by index; labels are
// for display only.
//
// Chain upper-bound closure is automatically satisfied on finite spaces, so
// no predicate is provided for it.

#ifndef QLGAME_SEMILATTICE_HPP_
#define QLGAME_SEMILATTICE_HPP_

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qlgame/errors.hpp"
#include "qlgame/rational.hpp"

namespace qlgame {

/// Index of an element inside one space.
struct Element {
  std::uint32_t id = 0;

  constexpr auto operator<=>(const Element&) const = default;
};

/// meet_table[a][b] is the id of a ∧ b.
using MeetTable = std::vector<std::vector<std::uint32_t>>;

struct AxiomViolation {
  enum class Kind {
    kShape,          // table not square or entry out of range
    kIdempotence,    // a ∧ a != a
    kCommutativity,  // a ∧ b != b ∧ a
    kAssociativity,  // (a ∧ b) ∧ c != a ∧ (b ∧ c)
    kAntisymmetry,   // a <= b, b <= a, a != b
    kTransitivity,   // a <= b, b <= c, not a <= c
    kNoBottom,       // meet of everything is not below everything
  };
  Kind kind;
  std::vector<std::uint32_t> elements;

  std::string describe(std::span<const std::string> labels = {}) const;
};

std::string_view to_string(AxiomViolation::Kind kind);

struct AxiomReport {
  std::size_t size = 0;
  std::vector<AxiomViolation> violations;
  std::optional<Element> bottom;
  /// True when the scan stopped at the violation limit.
  bool truncated = false;

  bool valid() const { return violations.empty(); }
};

/// Exhaustive scan of a raw meet table. Stops collecting after
/// `max_violations` entries.
AxiomReport check_axioms(const MeetTable& table,
                         std::size_t max_violations = 64);

class FiniteInfSemilattice {
 public:
  /// Validates the table eagerly. Throws ValidationError naming the first
  /// few violating tuples.
  explicit FiniteInfSemilattice(MeetTable table,
                                std::vector<std::string> labels = {});

  /// Chain 0 < 1 < ... < n-1 under min.
  static FiniteInfSemilattice chain(std::vector<std::string> labels);
  static FiniteInfSemilattice chain(std::size_t n);

  /// Chain {lower, lower + step, ..., upper} under min, labelled by the
  /// canonical rational text of each point. (upper - lower) / step must be a
  /// nonnegative integer and step > 0.
  static FiniteInfSemilattice grid(const Rational& lower, const Rational& upper,
                                   const Rational& step);

  std::size_t size() const { return table_.size(); }

  Element meet(Element a, Element b) const {
    require(a);
    require(b);
    return Element{table_[a.id][b.id]};
  }

  bool leq(Element a, Element b) const {
    require(a);
    require(b);
    return order_[a.id * size() + b.id] != 0;
  }

  Element bottom() const { return bottom_; }

  const std::string& label(Element e) const {
    require(e);
    return labels_[e.id];
  }
  std::span<const std::string> labels() const { return labels_; }
  std::optional<Element> find(std::string_view label) const;

  const MeetTable& meet_table() const { return table_; }

  bool contains(Element e) const { return e.id < size(); }
  void require(Element e) const {
    if (!contains(e)) {
      throw ValidationError("unknown element id " + std::to_string(e.id) +
                            " in space of size " + std::to_string(size()));
    }
  }

  bool operator==(const FiniteInfSemilattice& other) const {
    return table_ == other.table_ && labels_ == other.labels_;
  }

 private:
  struct Trusted {};
  FiniteInfSemilattice(Trusted, MeetTable table,
                       std::vector<std::string> labels);
  void index();

  MeetTable table_;
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> order_;
  Element bottom_;

  friend class ProductSemilattice;
};

using SpacePtr = std::shared_ptr<const FiniteInfSemilattice>;

AxiomReport check_axioms(const FiniteInfSemilattice& space);

/// Sorted, duplicate-free subset of some space's elements. The space itself
/// is supplied to every operation that needs the order.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::vector<Element> members);
  ElementSet(std::initializer_list<Element> members)
      : ElementSet(std::vector<Element>(members)) {}

  /// {0, ..., n-1}
  static ElementSet all(std::size_t n);

  bool contains(Element e) const {
    return std::binary_search(members_.begin(), members_.end(), e);
  }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  const Element& front() const { return members_.front(); }
  const Element& back() const { return members_.back(); }
  const std::vector<Element>& members() const { return members_; }

  bool subset_of(const ElementSet& other) const;
  ElementSet intersect(const ElementSet& other) const;

  bool operator==(const ElementSet&) const = default;

 private:
  std::vector<Element> members_;
};

/// Anything with a finite carrier indexed 0..size()-1, a meet and its order.
template <class S>
concept InfSemilattice = requires(const S& s, Element a) {
  { s.size() } -> std::convertible_to<std::size_t>;
  { s.meet(a, a) } -> std::same_as<Element>;
  { s.leq(a, a) } -> std::same_as<bool>;
  { s.bottom() } -> std::same_as<Element>;
};

/// Cartesian product with componentwise meet. Elements are mixed-radix codes
/// with the first factor most significant, so code order is lexicographic
/// order of coordinate tuples.
class ProductSemilattice {
 public:
  /// Throws ValidationError on zero factors or a carrier over 2^32 elements.
  explicit ProductSemilattice(std::vector<SpacePtr> factors);

  std::size_t arity() const { return factors_.size(); }
  const FiniteInfSemilattice& factor(std::size_t i) const {
    return *factors_.at(i);
  }
  const std::vector<SpacePtr>& factors() const { return factors_; }
  std::size_t size() const { return size_; }

  Element encode(std::span<const Element> coords) const;
  std::vector<Element> decode(Element code) const;
  /// Coordinate i of a code without decoding the rest.
  Element coordinate(Element code, std::size_t i) const;

  Element meet(Element a, Element b) const;
  bool leq(Element a, Element b) const;
  Element bottom() const { return bottom_; }

  /// "(l1,l2,...)"
  std::string label(Element code) const;

  /// Tabulated copy. Only sensible for small products.
  FiniteInfSemilattice materialize() const;

  /// Codes of the product of per-factor subsets, in code order.
  ElementSet product_of(std::span<const ElementSet> subsets) const;

 private:
  void require(Element code) const;

  std::vector<SpacePtr> factors_;
  std::vector<std::size_t> stride_;
  std::size_t size_ = 1;
  Element bottom_;
};

ProductSemilattice product(std::vector<SpacePtr> factors);

static_assert(InfSemilattice<FiniteInfSemilattice>);
static_assert(InfSemilattice<ProductSemilattice>);

// ---------------------------------------------------------------------------
// Set predicates, generic over any InfSemilattice.

template <InfSemilattice S>
void require_member(const S& space, Element e) {
  if (e.id >= space.size()) {
    throw ValidationError("unknown element id " + std::to_string(e.id));
  }
}

/// {z : a <= z <= b}. Throws ValidationError when a is not below b.
template <InfSemilattice S>
ElementSet interval(const S& space, Element a, Element b) {
  require_member(space, a);
  require_member(space, b);
  if (!space.leq(a, b)) {
    throw ValidationError("interval endpoints are not ordered");
  }
  std::vector<Element> out;
  for (std::uint32_t z = 0; z < space.size(); ++z) {
    const Element e{z};
    if (space.leq(a, e) && space.leq(e, b)) out.push_back(e);
  }
  return ElementSet(std::move(out));
}

/// [x1 ∧ x2, x1] ∪ [x1 ∧ x2, x2]
template <InfSemilattice S>
ElementSet bracket(const S& space, Element x1, Element x2) {
  require_member(space, x1);
  require_member(space, x2);
  const Element m = space.meet(x1, x2);
  std::vector<Element> out;
  for (std::uint32_t z = 0; z < space.size(); ++z) {
    const Element e{z};
    if (space.leq(m, e) && (space.leq(e, x1) || space.leq(e, x2))) {
      out.push_back(e);
    }
  }
  return ElementSet(std::move(out));
}

struct InfConvexReport {
  bool inf_convex = true;
  bool sub_semilattice = true;
  bool order_convex = true;
};

/// Computes meet-closure, order-convexity and bracket-closure independently
/// and throws InvariantViolation if bracket-closure disagrees with the
/// conjunction of the other two.
template <InfSemilattice S>
InfConvexReport is_inf_convex(const S& space, const ElementSet& c) {
  InfConvexReport r;
  for (Element x : c) require_member(space, x);
  for (Element x : c) {
    for (Element y : c) {
      if (r.sub_semilattice && !c.contains(space.meet(x, y))) {
        r.sub_semilattice = false;
      }
      if (r.order_convex && space.leq(x, y) &&
          !interval(space, x, y).subset_of(c)) {
        r.order_convex = false;
      }
      if (r.inf_convex && !bracket(space, x, y).subset_of(c)) {
        r.inf_convex = false;
      }
    }
  }
  if (r.inf_convex != (r.sub_semilattice && r.order_convex)) {
    throw InvariantViolation(
        "inf-convexity: bracket closure disagrees with meet closure and "
        "order convexity");
  }
  return r;
}

/// Downward closed: y <= x and x in S imply y in S.
template <InfSemilattice S>
bool is_comprehensive(const S& space, const ElementSet& s) {
  for (Element x : s) require_member(space, x);
  for (std::uint32_t y = 0; y < space.size(); ++y) {
    const Element e{y};
    if (s.contains(e)) continue;
    for (Element x : s) {
      if (space.leq(e, x)) return false;
    }
  }
  return true;
}

/// {x in S : y in S and y >= x imply y == x}. Throws on empty S.
template <InfSemilattice S>
ElementSet maximal_elements(const S& space, const ElementSet& s) {
  if (s.empty()) throw ValidationError("maximal_elements of an empty set");
  for (Element x : s) require_member(space, x);
  std::vector<Element> out;
  for (Element x : s) {
    const bool dominated = std::any_of(s.begin(), s.end(), [&](Element y) {
      return y != x && space.leq(x, y);
    });
    if (!dominated) out.push_back(x);
  }
  return ElementSet(std::move(out));
}

/// Whether every pair of members is comparable.
template <InfSemilattice S>
bool is_chain(const S& space, const ElementSet& s) {
  for (Element x : s) {
    for (Element y : s) {
      if (!space.leq(x, y) && !space.leq(y, x)) return false;
    }
  }
  return true;
}

/// Least member under the space order, if one exists.
template <InfSemilattice S>
std::optional<Element> least_element(const S& space, const ElementSet& s) {
  for (Element x : s) {
    if (std::all_of(s.begin(), s.end(),
                    [&](Element y) { return space.leq(x, y); })) {
      return x;
    }
  }
  return std::nullopt;
}

template <InfSemilattice S>
std::optional<Element> greatest_element(const S& space, const ElementSet& s) {
  for (Element x : s) {
    if (std::all_of(s.begin(), s.end(),
                    [&](Element y) { return space.leq(y, x); })) {
      return x;
    }
  }
  return std::nullopt;
}

}  // namespace qlgame

#endif  // QLGAME_SEMILATTICE_HPP_
