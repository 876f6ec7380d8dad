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

#include "qcong/qcalc.hpp"

#include <stdexcept>
#include <utility>

#include "memo_table.hpp"

namespace qcong {

LaurentPoly q_int(std::int64_t n) {
  std::vector<LaurentPoly::Term> terms;
  if (n >= 0) {
    for (std::int64_t i = 0; i < n; ++i) terms.push_back({i, Coeff(1)});
  } else {
    for (std::int64_t i = n; i < 0; ++i) terms.push_back({i, Coeff(-1)});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly qpoch(std::int64_t r, std::int64_t d, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("qpoch: length must be >= 0");
  LaurentPoly acc(1L);
  for (std::int64_t j = 0; j < k; ++j) acc = mul_one_minus(acc, r + j * d);
  return acc;
}

BiPoly qpoch_x(std::int64_t shift, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("qpoch_x: length must be >= 0");
  BiPoly acc(1L);
  for (std::int64_t j = 0; j < k; ++j) {
    acc = acc - BiPoly::x_power(1, LaurentPoly::q_power(shift + j)) * acc;
  }
  return acc;
}

LaurentPoly gauss_binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::invalid_argument("gauss_binomial: n must be >= 0");
  return qbinom_int(n, k);
}

LaurentPoly qbinom_int(std::int64_t alpha, std::int64_t k) {
  if (k < 0) return {};
  if (k == 0) return LaurentPoly(1L);

  static detail::MemoTable<std::pair<std::int64_t, std::int64_t>, LaurentPoly> memo;
  const auto key = std::make_pair(alpha, k);
  if (const auto* hit = memo.find(key)) return *hit;
  return memo.insert(key, exact_divide(qpoch(alpha - k + 1, 1, k), qpoch(1, 1, k)));
}

LaurentPoly qbinom_base(std::int64_t alpha, std::int64_t k, std::int64_t d) {
  return substitute_power(qbinom_int(alpha, k), d);
}

}  // namespace qcong
