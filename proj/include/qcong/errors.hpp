/*
 * Copyright 2026 The qcong Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace qcong {

/// Malformed canonical text for a polynomial or expression.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameters violate a stated hypothesis (e.g. gcd(n, d) != 1).
class InvalidParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A residue has no inverse modulo Phi_n^m; `gcd_text` holds gcd(p, Phi_n).
class NotInvertible : public std::domain_error {
 public:
  NotInvertible(const std::string& what, std::string gcd_text)
      : std::domain_error(what), gcd_text_(std::move(gcd_text)) {}
  const std::string& gcd_text() const noexcept { return gcd_text_; }

 private:
  std::string gcd_text_;
};

/// A denominator shares a factor with Phi_n, so the congruence is undefined.
/// Distinct from "the congruence fails".
class NonCoprimeDenominator : public std::domain_error {
 public:
  NonCoprimeDenominator(const std::string& what, std::string gcd_text)
      : std::domain_error(what), gcd_text_(std::move(gcd_text)) {}
  const std::string& gcd_text() const noexcept { return gcd_text_; }

 private:
  std::string gcd_text_;
};

/// An internal exactness invariant failed (a division expected to be exact
/// left a remainder). Always a bug, never a property of the input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qcong
