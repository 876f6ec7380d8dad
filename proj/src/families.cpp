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

#include "qcong/families.hpp"

#include <charconv>
#include <stdexcept>

#include "qcong/qcalc.hpp"

namespace qcong {
namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

template <class Int>
Int parse_int(std::string_view text, std::string_view family) {
  Int value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("bad integer '" + std::string(text) + "' in family " + std::string(family));
  }
  return value;
}

}  // namespace

VariableTag FamilySpec::tag() const noexcept {
  switch (kind) {
    case FamilyKind::kMonomialX:
      return VariableTag::kBivariate;
    case FamilyKind::kSunPX:
      return VariableTag::kRational;
    default:
      return VariableTag::kUnivariate;
  }
}

std::string FamilySpec::name() const {
  switch (kind) {
    case FamilyKind::kOnes:
      return "ones";
    case FamilyKind::kDelta:
      return "delta:" + std::to_string(param);
    case FamilyKind::kMonomialQ:
      return "monomial_q:" + std::to_string(param);
    case FamilyKind::kRandomPoly: {
      std::string out = "random_poly:" + std::to_string(random.seed) + ":" + std::to_string(random.degmax);
      if (random.coeff_bound != 3) out += ":" + std::to_string(random.coeff_bound);
      return out;
    }
    case FamilyKind::kMonomialX:
      return "monomial_x";
    case FamilyKind::kSunPX:
      return "sun_p_x";
  }
  return "?";
}

FamilySpec parse_family(std::string_view text) {
  const auto parts = split(text, ':');
  const std::string_view head = parts.front();
  auto expect_parts = [&](std::size_t lo, std::size_t hi) {
    if (parts.size() < lo || parts.size() > hi) {
      throw std::invalid_argument("wrong number of parameters for family " + std::string(text));
    }
  };
  if (head == "ones") {
    expect_parts(1, 1);
    return FamilySpec::ones();
  }
  if (head == "delta") {
    expect_parts(2, 2);
    return FamilySpec::delta(parse_int<std::int64_t>(parts[1], text));
  }
  if (head == "monomial_q") {
    expect_parts(2, 2);
    return FamilySpec::monomial_q(parse_int<std::int64_t>(parts[1], text));
  }
  if (head == "random_poly") {
    expect_parts(3, 4);
    const auto seed = parse_int<std::uint64_t>(parts[1], text);
    const auto degmax = parse_int<std::int64_t>(parts[2], text);
    const auto bound = parts.size() == 4 ? parse_int<std::int64_t>(parts[3], text) : 3;
    if (degmax < 0 || bound < 1) throw std::invalid_argument("random_poly needs DEG >= 0 and B >= 1");
    return FamilySpec::random_poly(seed, degmax, bound);
  }
  if (head == "monomial_x") {
    expect_parts(1, 1);
    return FamilySpec::monomial_x();
  }
  if (head == "sun_p_x") {
    expect_parts(1, 1);
    return FamilySpec::sun_p_x();
  }
  throw std::invalid_argument("unknown family name '" + std::string(text) + "'");
}

std::vector<LaurentPoly> generate_univariate(const FamilySpec& fam, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("generate: n must be >= 1");
  std::vector<LaurentPoly> out;
  out.reserve(static_cast<std::size_t>(n));
  switch (fam.kind) {
    case FamilyKind::kOnes:
      out.assign(static_cast<std::size_t>(n), LaurentPoly(1L));
      break;
    case FamilyKind::kDelta:
      for (std::int64_t k = 0; k < n; ++k) out.emplace_back(k == fam.param ? 1L : 0L);
      break;
    case FamilyKind::kMonomialQ:
      for (std::int64_t k = 0; k < n; ++k) out.push_back(LaurentPoly::q_power(fam.param * k));
      break;
    case FamilyKind::kRandomPoly: {
      SplitMix64 rng(fam.random.seed);
      for (std::int64_t k = 0; k < n; ++k) {
        std::vector<LaurentPoly::Term> terms;
        for (std::int64_t i = 0; i <= fam.random.degmax; ++i) {
          terms.push_back({i, Coeff(rng.symmetric(fam.random.coeff_bound))});
        }
        out.push_back(LaurentPoly::from_terms(std::move(terms)));
      }
      break;
    }
    default:
      throw std::invalid_argument("family " + fam.name() + " is not univariate");
  }
  return out;
}

FamilySequence generate(const FamilySpec& fam, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("generate: n must be >= 1");
  switch (fam.tag()) {
    case VariableTag::kUnivariate:
      return generate_univariate(fam, n);
    case VariableTag::kBivariate: {
      std::vector<BiPoly> out;
      for (std::int64_t k = 0; k < n; ++k) out.push_back(BiPoly::x_power(k));
      return out;
    }
    case VariableTag::kRational: {
      std::vector<RatBi> out;
      for (std::int64_t k = 0; k < n; ++k) out.emplace_back(shift(qpoch_x(0, k), k), qpoch(1, 1, k));
      return out;
    }
  }
  throw std::logic_error("unreachable family tag");
}

}  // namespace qcong
