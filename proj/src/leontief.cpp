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

#include <algorithm>

namespace qlgame {
namespace {

std::vector<Rational> attained_levels(const TabulatedFunction& u) {
  std::vector<Rational> levels(u.values().begin(), u.values().end());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return levels;
}

template <class Pred>
ElementSet select(std::size_t n, Pred pred) {
  std::vector<Element> out;
  for (std::uint32_t a = 0; a < n; ++a) {
    if (pred(Element{a})) out.push_back(Element{a});
  }
  return ElementSet(std::move(out));
}

void require_ql(const TabulatedFunction& u) {
  const auto& cert = u.certificate();
  if (!cert.is_ql) {
    std::string msg = "function is not quasi-Leontief";
    if (cert.witness) msg += ": " + describe_witness(u, *cert.witness);
    throw NotQuasiLeontief(msg);
  }
}

}  // namespace

TabulatedFunction::TabulatedFunction(SpacePtr space, std::vector<Rational> values)
    : space_(std::move(space)),
      values_(std::move(values)),
      memo_(std::make_shared<Memo>()) {
  if (!space_) throw ValidationError("function without a space");
  if (values_.size() != space_->size()) {
    throw ValidationError("value table has " + std::to_string(values_.size()) +
                          " entries for a space of " +
                          std::to_string(space_->size()));
  }
  for (auto& v : values_) v.canonicalize();
}

const QLCertificate& TabulatedFunction::certificate() const {
  std::call_once(memo_->once,
                 [this] { memo_->certificate = is_quasi_leontief(*this); });
  return memo_->certificate;
}

std::string describe_witness(const TabulatedFunction& u, const LevelSetWitness& w) {
  const auto& s = u.space();
  std::string msg = "level " + to_string(w.level) + " has meet " + s.label(w.level_meet);
  if (w.offender != w.level_meet) msg += " below " + s.label(w.offender);
  return msg + " with value " + to_string(u(w.offender));
}

QLCertificate is_quasi_leontief(const TabulatedFunction& u) {
  const auto& space = u.space();
  const std::size_t n = space.size();
  QLCertificate cert;

  for (std::uint32_t a = 0; a < n && cert.meet_min_law; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      const Element x{a}, y{b};
      if (u(space.meet(x, y)) != std::min(u(x), u(y))) {
        cert.meet_min_law = false;
        cert.meet_min_violation = std::make_pair(x, y);
        break;
      }
    }
  }

  for (const Rational& t : attained_levels(u)) {
    std::optional<Element> m;
    for (std::uint32_t a = 0; a < n; ++a) {
      if (u(Element{a}) >= t) {
        m = m ? space.meet(*m, Element{a}) : Element{a};
      }
    }
    std::optional<Element> offender;
    for (std::uint32_t a = 0; a < n && !offender; ++a) {
      if (space.leq(*m, Element{a}) && u(Element{a}) < t) offender = Element{a};
    }
    if (offender) {
      cert.principal_levels = false;
      cert.witness = LevelSetWitness{t, *m, *offender};
      break;
    }
  }

  if (cert.meet_min_law != cert.principal_levels) {
    throw InvariantViolation(
        "quasi-Leontief check: meet-min law and principal level sets "
        "disagree");
  }
  cert.is_ql = cert.meet_min_law;
  return cert;
}

std::optional<Element> sharp(const TabulatedFunction& u, const Rational& t) {
  require_ql(u);
  const auto& space = u.space();
  std::optional<Element> m;
  for (std::uint32_t a = 0; a < space.size(); ++a) {
    if (u(Element{a}) >= t) m = m ? space.meet(*m, Element{a}) : Element{a};
  }
  return m;
}

Element circ(const TabulatedFunction& u, Element x) {
  return *sharp(u, u(x));
}

ElementSet efficient_set(const TabulatedFunction& u, const ElementSet& s) {
  const auto& space = u.space();
  std::vector<Element> out;
  for (Element x : s) {
    const bool efficient = std::all_of(s.begin(), s.end(), [&](Element y) {
      return u(y) < u(x) || space.leq(x, y);
    });
    if (efficient) out.push_back(x);
  }
  return ElementSet(std::move(out));
}

Rational max_value(const TabulatedFunction& u, const ElementSet& s) {
  if (s.empty()) throw ValidationError("maximum over an empty set");
  Rational best = u(s.front());
  for (Element x : s) best = std::max(best, u(x));
  return best;
}

ElementSet argmax_set(const TabulatedFunction& u, const ElementSet& s) {
  const Rational best = max_value(u, s);
  std::vector<Element> out;
  for (Element x : s) {
    if (u(x) == best) out.push_back(x);
  }
  return ElementSet(std::move(out));
}

InfQuasiconcavityReport check_inf_quasiconcavity(const TabulatedFunction& u) {
  const auto& space = u.space();
  const std::size_t n = space.size();
  InfQuasiconcavityReport report;

  for (std::uint32_t a = 0; a < n && report.holds; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      const Element x1{a}, x2{b};
      const Rational floor = std::min(u(x1), u(x2));
      const ElementSet br = bracket(space, x1, x2);
      const bool ok = std::all_of(br.begin(), br.end(),
                                  [&](Element z) { return u(z) >= floor; });
      if (!ok) {
        report.holds = false;
        report.violation = std::make_pair(x1, x2);
        break;
      }
    }
  }

  // Distinct level sets of a finite function occur at attained values; the
  // strict family additionally contains the whole space.
  const auto levels = attained_levels(u);
  for (const Rational& t : levels) {
    const auto weak = select(n, [&](Element z) { return u(z) >= t; });
    const auto strict = select(n, [&](Element z) { return u(z) > t; });
    if (!is_inf_convex(space, weak).inf_convex) report.weak_level_sets = false;
    if (!is_inf_convex(space, strict).inf_convex) {
      report.strict_level_sets = false;
    }
  }

  if (report.holds != report.weak_level_sets ||
      report.holds != report.strict_level_sets) {
    throw InvariantViolation(
        "inf-quasiconcavity: bracket form and level-set forms disagree");
  }
  return report;
}

MinAggregate::MinAggregate(std::vector<TabulatedFunction> components)
    : components_(std::move(components)),
      domain_([this] {
        if (components_.empty()) {
          throw ValidationError("min_aggregate needs at least one component");
        }
        std::vector<SpacePtr> factors;
        for (const auto& c : components_) factors.push_back(c.space_ptr());
        return ProductSemilattice(std::move(factors));
      }()) {}

Rational MinAggregate::operator()(std::span<const Element> x) const {
  if (x.size() != components_.size()) {
    throw ValidationError("profile arity does not match component count");
  }
  Rational result = components_[0](x[0]);
  for (std::size_t j = 1; j < x.size(); ++j) {
    result = std::min(result, components_[j](x[j]));
  }
  return result;
}

MinAggregate min_aggregate(std::vector<TabulatedFunction> components) {
  return MinAggregate(std::move(components));
}

MinAggregate min_aggregate(std::vector<TabulatedFunction> components,
                           std::span<const SpacePtr> factors) {
  if (components.size() != factors.size()) {
    throw ValidationError("component count does not match factor count");
  }
  for (std::size_t j = 0; j < factors.size(); ++j) {
    if (components[j].space_ptr() != factors[j] &&
        !(components[j].space() == *factors[j])) {
      throw ValidationError("component " + std::to_string(j) +
                            " is not defined on factor " + std::to_string(j));
    }
  }
  return MinAggregate(std::move(components));
}

}  // namespace qlgame
