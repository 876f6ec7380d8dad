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

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qcong/bipoly.hpp"
#include "qcong/laurent_poly.hpp"
#include "qcong/rat_expr.hpp"

namespace qcong {

/// SplitMix64 (Steele, Lea, Flood 2014). Fixed-width integer arithmetic only,
/// so a seed produces the same stream on every platform and compiler.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Integer in [-bound, bound] as next() % (2*bound + 1) - bound.
  std::int64_t symmetric(std::int64_t bound) {
    const auto width = static_cast<std::uint64_t>(2 * bound + 1);
    return static_cast<std::int64_t>(next() % width) - bound;
  }

 private:
  std::uint64_t state_;
};

struct RandomFamilyConfig {
  std::uint64_t seed = 0;
  std::int64_t degmax = 0;
  std::int64_t coeff_bound = 3;

  friend bool operator==(const RandomFamilyConfig&, const RandomFamilyConfig&) = default;
};

enum class FamilyKind { kOnes, kDelta, kMonomialQ, kRandomPoly, kMonomialX, kSunPX };

enum class VariableTag { kUnivariate, kBivariate, kRational };

/**
 * A named generator of f_0, ..., f_{n-1}.
 *
 * Names (also the CLI spelling):
 *   ones                      f_k = 1
 *   delta:M                   f_k = [k == M]
 *   monomial_q:C              f_k = q^(C*k)
 *   random_poly:SEED:DEG[:B]  f_k = sum_{i<=DEG} c_{k,i} q^i, c in [-B, B] (B = 3 by default),
 *                             drawn from SplitMix64(SEED) in order k = 0.., i = 0..DEG
 *   monomial_x                f_k = x^k
 *   sun_p_x                   f_k = q^k (x;q)_k / (q;q)_k
 */
struct FamilySpec {
  FamilyKind kind = FamilyKind::kOnes;
  std::int64_t param = 0;
  RandomFamilyConfig random{};

  static FamilySpec ones() { return {FamilyKind::kOnes, 0, {}}; }
  static FamilySpec delta(std::int64_t m) { return {FamilyKind::kDelta, m, {}}; }
  static FamilySpec monomial_q(std::int64_t c) { return {FamilyKind::kMonomialQ, c, {}}; }
  static FamilySpec random_poly(std::uint64_t seed, std::int64_t degmax, std::int64_t coeff_bound = 3) {
    return {FamilyKind::kRandomPoly, 0, {seed, degmax, coeff_bound}};
  }
  static FamilySpec monomial_x() { return {FamilyKind::kMonomialX, 0, {}}; }
  static FamilySpec sun_p_x() { return {FamilyKind::kSunPX, 0, {}}; }

  VariableTag tag() const noexcept;
  std::string name() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Inverse of FamilySpec::name(). Throws std::invalid_argument on unknown names.
FamilySpec parse_family(std::string_view text);

using FamilySequence = std::variant<std::vector<LaurentPoly>, std::vector<BiPoly>, std::vector<RatBi>>;

/// Exactly n entries; the alternative held matches fam.tag(). Requires n >= 1.
FamilySequence generate(const FamilySpec& fam, std::int64_t n);

std::vector<LaurentPoly> generate_univariate(const FamilySpec& fam, std::int64_t n);

}  // namespace qcong
