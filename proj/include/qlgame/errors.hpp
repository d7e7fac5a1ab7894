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

#ifndef QLGAME_ERRORS_HPP_
#define QLGAME_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qlgame {

/// Bad input: unknown ids, malformed tables, violated preconditions.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A function that must be quasi-Leontief is not.
class NotQuasiLeontief : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Enumeration would exceed the configured profile budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget)
      : std::runtime_error("profile budget exceeded: need " +
                           std::to_string(required) + ", budget " +
                           std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

/// A cross-check between two independent computations disagreed.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qlgame

#endif  // QLGAME_ERRORS_HPP_
