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

#include "qlgame/rational.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

namespace qlgame {
namespace {

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("-6/8"), Rational(-3, 4));
  EXPECT_EQ(parse_rational("0/5"), Rational(0));
}

TEST(Rational, CanonicalText) {
  EXPECT_EQ(to_string(parse_rational("6/8")), "3/4");
  EXPECT_EQ(to_string(parse_rational("4/2")), "2");
  EXPECT_EQ(to_string(Rational(-1, 3)), "-1/3");
  EXPECT_EQ(to_string(Rational(0)), "0");
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1.5", "1e3", " 1", "1 ", "1/0", "/2", "2/", "+1",
                          "1/-2", "a", "1//2", "--1"}) {
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
  }
}

TEST(Rational, Ceiling) {
  EXPECT_EQ(ceil(Rational(1, 2)), 1);
  EXPECT_EQ(ceil(Rational(2)), 2);
  EXPECT_EQ(ceil(Rational(-1, 2)), 0);
  EXPECT_EQ(ceil(Rational(-3, 2)), -1);
}

}  // namespace
}  // namespace qlgame
