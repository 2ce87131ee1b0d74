/* Copyright 2026 The sigwind Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#ifndef SIGWIND_ERRORS_HPP
#define SIGWIND_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sigwind {

// A dense signature would need more coefficients than the configured budget.
class SizeError : public std::length_error {
 public:
  SizeError(std::size_t level, std::size_t required, std::size_t budget)
      : std::length_error("signature level " + std::to_string(level) + " needs " +
                          std::to_string(required) + " coefficients, budget is " +
                          std::to_string(budget)),
        level_(level),
        required_(required),
        budget_(budget) {}

  std::size_t level() const noexcept { return level_; }
  std::size_t required() const noexcept { return required_; }
  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t level_;
  std::size_t required_;
  std::size_t budget_;
};

// The path leaves the region where the interpolation series is known to
// converge (or where its bound inputs make sense).
class CertificateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace sigwind

#endif  // SIGWIND_ERRORS_HPP
