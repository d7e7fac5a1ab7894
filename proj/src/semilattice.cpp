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

#include "qlgame/semilattice.hpp"

#include <limits>
#include <sstream>

namespace qlgame {

std::string_view to_string(AxiomViolation::Kind kind) {
  switch (kind) {
    case AxiomViolation::Kind::kShape:
      return "shape";
    case AxiomViolation::Kind::kIdempotence:
      return "idempotence";
    case AxiomViolation::Kind::kCommutativity:
      return "commutativity";
    case AxiomViolation::Kind::kAssociativity:
      return "associativity";
    case AxiomViolation::Kind::kAntisymmetry:
      return "antisymmetry";
    case AxiomViolation::Kind::kTransitivity:
      return "transitivity";
    case AxiomViolation::Kind::kNoBottom:
      return "no-bottom";
  }
  return "unknown";
}

std::string AxiomViolation::describe(std::span<const std::string> labels) const {
  std::ostringstream out;
  out << to_string(kind) << " at (";
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (k != 0) out << ",";
    const auto id = elements[k];
    if (id < labels.size()) {
      out << labels[id];
    } else {
      out << id;
    }
  }
  out << ")";
  return out.str();
}

AxiomReport check_axioms(const MeetTable& table, std::size_t max_violations) {
  using Kind = AxiomViolation::Kind;
  AxiomReport report;
  const std::size_t n = table.size();
  report.size = n;

  auto add = [&](Kind kind, std::vector<std::uint32_t> elements) {
    if (report.violations.size() >= max_violations) {
      report.truncated = true;
      return false;
    }
    report.violations.push_back({kind, std::move(elements)});
    return true;
  };

  if (n == 0) {
    add(Kind::kShape, {});
    return report;
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    if (table[a].size() != n) {
      add(Kind::kShape, {a});
      continue;
    }
    for (std::uint32_t b = 0; b < n; ++b) {
      if (table[a][b] >= n) add(Kind::kShape, {a, b});
    }
  }
  if (!report.valid()) return report;

  auto m = [&](std::uint32_t a, std::uint32_t b) { return table[a][b]; };
  auto le = [&](std::uint32_t a, std::uint32_t b) { return m(a, b) == a; };

  for (std::uint32_t a = 0; a < n; ++a) {
    if (m(a, a) != a && !add(Kind::kIdempotence, {a})) return report;
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) {
      if (m(a, b) != m(b, a) && !add(Kind::kCommutativity, {a, b})) {
        return report;
      }
    }
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      const auto ab = m(a, b);
      for (std::uint32_t c = 0; c < n; ++c) {
        if (m(ab, c) != m(a, m(b, c)) &&
            !add(Kind::kAssociativity, {a, b, c})) {
          return report;
        }
      }
    }
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) {
      if (le(a, b) && le(b, a) && !add(Kind::kAntisymmetry, {a, b})) {
        return report;
      }
    }
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      if (!le(a, b)) continue;
      for (std::uint32_t c = 0; c < n; ++c) {
        if (le(b, c) && !le(a, c) && !add(Kind::kTransitivity, {a, b, c})) {
          return report;
        }
      }
    }
  }

  std::uint32_t bottom = 0;
  for (std::uint32_t a = 1; a < n; ++a) bottom = m(bottom, a);
  bool below_all = true;
  for (std::uint32_t a = 0; a < n; ++a) below_all = below_all && le(bottom, a);
  if (below_all) {
    report.bottom = Element{bottom};
  } else {
    add(Kind::kNoBottom, {bottom});
  }
  return report;
}

AxiomReport check_axioms(const FiniteInfSemilattice& space) {
  return check_axioms(space.meet_table());
}

FiniteInfSemilattice::FiniteInfSemilattice(MeetTable table,
                                           std::vector<std::string> labels)
    : table_(std::move(table)), labels_(std::move(labels)) {
  const AxiomReport report = check_axioms(table_, 3);
  if (!report.valid()) {
    std::string msg = "invalid meet table: ";
    for (std::size_t k = 0; k < report.violations.size(); ++k) {
      msg += (k ? "; " : "") + report.violations[k].describe(labels_);
    }
    throw ValidationError(msg);
  }
  if (!labels_.empty() && labels_.size() != table_.size()) {
    throw ValidationError("label count does not match meet table size");
  }
  index();
}

FiniteInfSemilattice::FiniteInfSemilattice(Trusted, MeetTable table,
                                           std::vector<std::string> labels)
    : table_(std::move(table)), labels_(std::move(labels)) {
  index();
}

void FiniteInfSemilattice::index() {
  const std::size_t n = table_.size();
  if (labels_.empty()) {
    labels_.reserve(n);
    for (std::size_t a = 0; a < n; ++a) labels_.push_back(std::to_string(a));
  }
  order_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      order_[a * n + b] = table_[a][b] == a ? 1 : 0;
    }
  }
  std::uint32_t bottom = 0;
  for (std::uint32_t a = 1; a < n; ++a) bottom = table_[bottom][a];
  bottom_ = Element{bottom};
}

FiniteInfSemilattice FiniteInfSemilattice::chain(std::vector<std::string> labels) {
  const auto n = static_cast<std::uint32_t>(labels.size());
  if (n == 0) throw ValidationError("chain needs at least one element");
  MeetTable table(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) table[a][b] = std::min(a, b);
  }
  return FiniteInfSemilattice(Trusted{}, std::move(table), std::move(labels));
}

FiniteInfSemilattice FiniteInfSemilattice::chain(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) labels.push_back(std::to_string(a));
  return chain(std::move(labels));
}

FiniteInfSemilattice FiniteInfSemilattice::grid(const Rational& lower,
                                                const Rational& upper,
                                                const Rational& step) {
  if (step <= 0) throw ValidationError("grid step must be positive");
  if (lower > upper) throw ValidationError("grid lower bound exceeds upper");
  Rational count = (upper - lower) / step;
  count.canonicalize();
  if (count.get_den() != 1) {
    throw ValidationError("grid step " + to_string(step) +
                          " does not divide [" + to_string(lower) + ", " +
                          to_string(upper) + "]");
  }
  if (count.get_num() > 1'000'000) {
    throw ValidationError("grid has too many points");
  }
  const auto n = count.get_num().get_ui() + 1;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (unsigned long k = 0; k < n; ++k) {
    labels.push_back(to_string(Rational(lower + step * k)));
  }
  return chain(std::move(labels));
}

std::optional<Element> FiniteInfSemilattice::find(std::string_view label) const {
  for (std::uint32_t a = 0; a < labels_.size(); ++a) {
    if (labels_[a] == label) return Element{a};
  }
  return std::nullopt;
}

// ElementSet ---------------------------------------------------------------

ElementSet::ElementSet(std::vector<Element> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

ElementSet ElementSet::all(std::size_t n) {
  std::vector<Element> members;
  members.reserve(n);
  for (std::uint32_t a = 0; a < n; ++a) members.push_back(Element{a});
  return ElementSet(std::move(members));
}

bool ElementSet::subset_of(const ElementSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
  std::vector<Element> out;
  std::set_intersection(members_.begin(), members_.end(),
                        other.members_.begin(), other.members_.end(),
                        std::back_inserter(out));
  return ElementSet(std::move(out));
}

// ProductSemilattice --------------------------------------------------------

ProductSemilattice::ProductSemilattice(std::vector<SpacePtr> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw ValidationError("product of zero factors");
  stride_.assign(factors_.size(), 1);
  for (std::size_t i = factors_.size(); i-- > 0;) {
    if (!factors_[i]) throw ValidationError("null factor");
    stride_[i] = size_;
    const std::size_t n = factors_[i]->size();
    if (size_ > std::numeric_limits<std::uint32_t>::max() / n) {
      throw ValidationError("product carrier too large");
    }
    size_ *= n;
  }
  std::vector<Element> bottoms;
  for (const auto& f : factors_) bottoms.push_back(f->bottom());
  bottom_ = encode(bottoms);
}

void ProductSemilattice::require(Element code) const {
  if (code.id >= size_) {
    throw ValidationError("unknown product element " + std::to_string(code.id));
  }
}

Element ProductSemilattice::encode(std::span<const Element> coords) const {
  if (coords.size() != factors_.size()) {
    throw ValidationError("tuple arity " + std::to_string(coords.size()) +
                          " does not match product arity " +
                          std::to_string(factors_.size()));
  }
  std::size_t code = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    factors_[i]->require(coords[i]);
    code += coords[i].id * stride_[i];
  }
  return Element{static_cast<std::uint32_t>(code)};
}

Element ProductSemilattice::coordinate(Element code, std::size_t i) const {
  require(code);
  return Element{static_cast<std::uint32_t>((code.id / stride_.at(i)) %
                                            factors_[i]->size())};
}

std::vector<Element> ProductSemilattice::decode(Element code) const {
  require(code);
  std::vector<Element> coords(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    coords[i] = Element{static_cast<std::uint32_t>((code.id / stride_[i]) %
                                                   factors_[i]->size())};
  }
  return coords;
}

Element ProductSemilattice::meet(Element a, Element b) const {
  require(a);
  require(b);
  std::size_t code = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const std::size_t n = factors_[i]->size();
    const Element ai{static_cast<std::uint32_t>((a.id / stride_[i]) % n)};
    const Element bi{static_cast<std::uint32_t>((b.id / stride_[i]) % n)};
    code += factors_[i]->meet(ai, bi).id * stride_[i];
  }
  return Element{static_cast<std::uint32_t>(code)};
}

bool ProductSemilattice::leq(Element a, Element b) const {
  require(a);
  require(b);
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const std::size_t n = factors_[i]->size();
    const Element ai{static_cast<std::uint32_t>((a.id / stride_[i]) % n)};
    const Element bi{static_cast<std::uint32_t>((b.id / stride_[i]) % n)};
    if (!factors_[i]->leq(ai, bi)) return false;
  }
  return true;
}

std::string ProductSemilattice::label(Element code) const {
  const auto coords = decode(code);
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i != 0) out += ",";
    out += factors_[i]->label(coords[i]);
  }
  return out + ")";
}

FiniteInfSemilattice ProductSemilattice::materialize() const {
  MeetTable table(size_, std::vector<std::uint32_t>(size_));
  std::vector<std::string> labels;
  labels.reserve(size_);
  for (std::uint32_t a = 0; a < size_; ++a) {
    labels.push_back(label(Element{a}));
    for (std::uint32_t b = 0; b < size_; ++b) {
      table[a][b] = meet(Element{a}, Element{b}).id;
    }
  }
  return FiniteInfSemilattice(FiniteInfSemilattice::Trusted{}, std::move(table),
                              std::move(labels));
}

ElementSet ProductSemilattice::product_of(
    std::span<const ElementSet> subsets) const {
  if (subsets.size() != factors_.size()) {
    throw ValidationError("subset count does not match product arity");
  }
  std::vector<Element> codes{Element{0}};
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    std::vector<Element> next;
    next.reserve(codes.size() * subsets[i].size());
    for (Element prefix : codes) {
      for (Element x : subsets[i]) {
        factors_[i]->require(x);
        next.push_back(Element{static_cast<std::uint32_t>(
            prefix.id + x.id * stride_[i])});
      }
    }
    codes = std::move(next);
  }
  return ElementSet(std::move(codes));
}

ProductSemilattice product(std::vector<SpacePtr> factors) {
  return ProductSemilattice(std::move(factors));
}

}  // namespace qlgame
