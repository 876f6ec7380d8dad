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

#include "qcong/cyclotomic.hpp"

#include <stdexcept>
#include <utility>

#include "memo_table.hpp"

namespace qcong {
namespace {

detail::MemoTable<std::int64_t, LaurentPoly>& cyclotomic_table() {
  static detail::MemoTable<std::int64_t, LaurentPoly> table;
  return table;
}

detail::MemoTable<std::pair<std::int64_t, std::int64_t>, CyclotomicModulus>& modulus_table() {
  static detail::MemoTable<std::pair<std::int64_t, std::int64_t>, CyclotomicModulus> table;
  return table;
}

}  // namespace

std::int64_t totient(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("totient: n must be >= 1");
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("divisors: n must be >= 1");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

LaurentPoly cyclotomic(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("cyclotomic: n must be >= 1");
  if (const auto* hit = cyclotomic_table().find(n)) return *hit;

  LaurentPoly product(1L);
  for (std::int64_t d : divisors(n)) {
    if (d < n) product *= cyclotomic(d);
  }
  const LaurentPoly numerator = LaurentPoly::q_power(n) - LaurentPoly(1L);
  return cyclotomic_table().insert(n, exact_divide(numerator, product));
}

const CyclotomicModulus& cyclotomic_modulus(std::int64_t n, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_modulus: m must be >= 1");
  const auto key = std::make_pair(n, m);
  if (const auto* hit = modulus_table().find(key)) return *hit;

  CyclotomicModulus mod;
  mod.n = n;
  mod.m = m;
  mod.phi_n = cyclotomic(n);
  mod.modulus = pow(mod.phi_n, static_cast<unsigned>(m));
  // modulus = c0 + q*rest, so q * (-rest/c0) == 1.
  const Coeff c0 = mod.modulus.coeff(0);
  const LaurentPoly rest = shift(mod.modulus - LaurentPoly(c0), -1);
  mod.q_inverse = Coeff(-1 / c0) * rest;
  return modulus_table().insert(key, std::move(mod));
}

}  // namespace qcong
