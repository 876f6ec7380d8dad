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

#include <cstdint>

#include "doctest.h"
#include "generators.hpp"
#include "qcong/qcalc.hpp"

using namespace qcong;

namespace {

LaurentPoly q(Exponent e = 1) { return LaurentPoly::q_power(e); }
LaurentPoly one() { return LaurentPoly(1L); }

std::int64_t choose2(std::int64_t k) { return k * (k - 1) / 2; }

mpz_class binomial(std::int64_t n, std::int64_t k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

const auto& pascal() {
  static const auto table = testing::pascal_table(40);
  return table;
}

const LaurentPoly& pascal_at(std::int64_t n, std::int64_t k) {
  return pascal().at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(k));
}

}  // namespace

TEST_CASE("q-integers") {
  CHECK(q_int(0).is_zero());
  CHECK(q_int(1) == one());
  CHECK(q_int(3) == LaurentPoly::from_ints({1, 1, 1}));
  CHECK(q_int(-2) == -q(-1) - q(-2));
  for (std::int64_t n = -12; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(q_int(n) * (one() - q()) == one() - q(n));
  }
}

TEST_CASE("Pochhammer products") {
  CHECK(qpoch(1, 1, 0) == one());
  CHECK(qpoch(1, 1, 2) == (one() - q()) * (one() - q(2)));
  CHECK(qpoch(3, 2, 2) == (one() - q(3)) * (one() - q(5)));
  CHECK(qpoch(0, 1, 3).is_zero());
  CHECK_THROWS_AS(qpoch(1, 1, -1), std::invalid_argument);
  for (std::int64_t r = -4; r <= 4; ++r) {
    for (std::int64_t d = -3; d <= 3; ++d) {
      for (std::int64_t k = 0; k <= 6; ++k) {
        LaurentPoly expect = one();
        for (std::int64_t j = 0; j < k; ++j) expect = testing::naive_multiply(expect, one() - q(r + j * d));
        CHECK(qpoch(r, d, k) == expect);
      }
    }
  }
}

TEST_CASE("Pochhammer products in x") {
  CHECK(qpoch_x(0, 0) == BiPoly(1L));
  const BiPoly two = qpoch_x(1, 2);
  CHECK(two == BiPoly(1L) - (q() + q(2)) * BiPoly::x_power(1) + q(3) * BiPoly::x_power(2));
  CHECK(qpoch_x(-1, 1) == BiPoly(1L) - q(-1) * BiPoly::x_power(1));
}

TEST_CASE("Gaussian binomial examples") {
  CHECK(gauss_binomial(2, 1) == one() + q());
  CHECK(gauss_binomial(4, 2) == LaurentPoly::from_ints({1, 1, 2, 1, 1}));
  CHECK(gauss_binomial(3, -1).is_zero());
  CHECK(gauss_binomial(3, 5).is_zero());
  CHECK_THROWS_AS(gauss_binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("Gaussian binomials agree with the q-Pascal recurrence") {
  for (std::int64_t n = 0; n <= 25; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(gauss_binomial(n, k) == pascal_at(n, k));
    }
  }
}

TEST_CASE("symmetry and the classical limit") {
  for (std::int64_t n = 0; n <= 25; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      const LaurentPoly g = gauss_binomial(n, k);
      CHECK(g == gauss_binomial(n, n - k));
      CHECK(g.evaluate(1) == Coeff(binomial(n, k)));
    }
  }
}

TEST_CASE("integer-top binomials") {
  CHECK(qbinom_int(-1, 3) == -q(-6));
  CHECK(qbinom_int(-3, 2) == q(-7) * pascal_at(4, 2));
  CHECK(qbinom_int(5, 2) == gauss_binomial(5, 2));
  CHECK(qbinom_int(2, 5).is_zero());
  CHECK(qbinom_int(-5, -1).is_zero());
  CHECK(qbinom_int(-5, 0) == one());

  // [-m, k] = (-1)^k q^{-mk - C(k,2)} [m+k-1, k].
  for (std::int64_t m = 1; m <= 8; ++m) {
    for (std::int64_t k = 0; k <= 10; ++k) {
      const LaurentPoly expect =
          LaurentPoly::monomial(k % 2 == 0 ? 1 : -1, -m * k - choose2(k)) * pascal_at(m + k - 1, k);
      CAPTURE(m);
      CAPTURE(k);
      CHECK(qbinom_int(-m, k) == expect);
    }
  }
}

TEST_CASE("base-d binomials") {
  CHECK(qbinom_base(2, 1, 3) == one() + q(3));
  CHECK(qbinom_base(2, 1, -1) == one() + q(-1));
  for (std::int64_t d = -3; d <= 3; ++d) {
    if (d == 0) continue;
    for (std::int64_t n = 0; n <= 8; ++n) {
      for (std::int64_t k = 0; k <= n; ++k) CHECK(qbinom_base(n, k, d) == substitute_power(pascal_at(n, k), d));
    }
  }
}

TEST_CASE("q-Chu-Vandermonde for integer tops") {
  for (std::int64_t a = -8; a <= 8; ++a) {
    for (std::int64_t b = -8; b <= 8; ++b) {
      for (std::int64_t k = 0; k <= 8; ++k) {
        LaurentPoly sum;
        for (std::int64_t j = 0; j <= k; ++j) {
          sum = sum + shift(qbinom_int(b, j) * qbinom_int(a, k - j), (b - j) * (k - j));
        }
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(k);
        CHECK(sum == qbinom_int(a + b, k));
      }
    }
  }
}

TEST_CASE("negation bridge") {
  for (std::int64_t a = 0; a <= 10; ++a) {
    for (std::int64_t k = 0; k <= 10; ++k) {
      const LaurentPoly mid = pascal_at(a + k, a);
      const LaurentPoly left =
          LaurentPoly::monomial(a % 2 == 0 ? 1 : -1, a * k + choose2(a + 1)) * qbinom_int(-1 - k, a);
      const LaurentPoly right =
          LaurentPoly::monomial(k % 2 == 0 ? 1 : -1, a * k + choose2(k + 1)) * qbinom_int(-1 - a, k);
      CAPTURE(a);
      CAPTURE(k);
      CHECK(left == mid);
      CHECK(right == mid);
    }
  }
}
