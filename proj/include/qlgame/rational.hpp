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

#ifndef QLGAME_RATIONAL_HPP_
#define QLGAME_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qlgame {

/// Exact rational value. All payoff values and grid coordinates use it.
using Rational = mpq_class;

/// Parses "p/q" or an integer string ("-3", "7/4"). Decimals, exponents and
/// surrounding whitespace are rejected; a zero denominator is rejected.
/// The result is canonicalized. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q" in lowest terms, or "p" when q == 1.
std::string to_string(const Rational& value);

/// Smallest integer k with k >= value.
mpz_class ceil(const Rational& value);

}  // namespace qlgame

#endif  // QLGAME_RATIONAL_HPP_
