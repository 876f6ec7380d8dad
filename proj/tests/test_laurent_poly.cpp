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

#include <stdexcept>

#include "doctest.h"
#include "generators.hpp"
#include "qcong/errors.hpp"
#include "qcong/laurent_poly.hpp"

using namespace qcong;
using qcong::testing::Gen;

namespace {

LaurentPoly q(Exponent e = 1) { return LaurentPoly::q_power(e); }

}  // namespace

TEST_CASE("add, sub, mul and neg") {
  CHECK((LaurentPoly(1L) - q()) + q() == LaurentPoly(1L));
  CHECK((LaurentPoly(1L) + q()) * (LaurentPoly(1L) - q()) == LaurentPoly(1L) - q(2));
  CHECK(-(q() - q(2)) == q(2) - q());

  const LaurentPoly lhs = q(-1) * (q() - q(2));
  CHECK(lhs == LaurentPoly(1L) - q());
  CHECK(lhs == testing::naive_multiply(q(-1), q() - q(2)));
}

TEST_CASE("canonical form drops zeros and merges exponents") {
  auto p = LaurentPoly::from_terms({{3, Coeff(1)}, {-1, Coeff(2)}, {3, Coeff(-1)}, {0, Coeff(0)}});
  CHECK(p == 2 * q(-1));
  CHECK(p.size() == 1);
  CHECK(LaurentPoly::from_terms({{1, Coeff(1)}, {1, Coeff(-1)}}).is_zero());
  CHECK(LaurentPoly::from_ints({0, 0, 0}).is_zero());
}

TEST_CASE("shift") {
  CHECK(shift(LaurentPoly(1L) + q(), 2) == q(2) + q(3));
  CHECK(shift(q(), -1) == LaurentPoly(1L));
  CHECK(shift(LaurentPoly(), 5).is_zero());
  CHECK_THROWS_AS(shift(q(std::numeric_limits<Exponent>::max()), 1), std::overflow_error);
}

TEST_CASE("substitute_power") {
  CHECK(substitute_power(LaurentPoly(1L) - q(), -1) == LaurentPoly(1L) - q(-1));
  CHECK(substitute_power(LaurentPoly::from_ints({1, 1, 1}), 2) == LaurentPoly::from_ints({1, 0, 1, 0, 1}));
  CHECK_THROWS_AS(substitute_power(q(), 0), std::invalid_argument);

  Gen gen(11);
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly p = gen.laurent(-6, 6, true);
    CHECK(substitute_power(substitute_power(p, -1), -1) == p);
  }
}

TEST_CASE("substitute_power is a ring homomorphism") {
  Gen gen(12);
  for (int i = 0; i < 300; ++i) {
    const LaurentPoly a = gen.laurent(-5, 5, true);
    const LaurentPoly b = gen.laurent(-5, 5, true);
    const Exponent t = gen.range(1, 4) * (gen.range(0, 1) == 0 ? 1 : -1);
    CHECK(substitute_power(a * b, t) == substitute_power(a, t) * substitute_power(b, t));
    CHECK(substitute_power(a + b, t) == substitute_power(a, t) + substitute_power(b, t));
  }
}

TEST_CASE("ring axioms on random inputs") {
  Gen gen(13);
  for (int i = 0; i < 300; ++i) {
    const bool rational = i % 2 == 0;
    const LaurentPoly a = gen.laurent(-4, 8, rational);
    const LaurentPoly b = gen.laurent(-6, 3, rational);
    const LaurentPoly c = gen.laurent(0, 10, rational);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LaurentPoly());
    CHECK(a * b == testing::naive_multiply(a, b));
  }
}

TEST_CASE("sparse products match the schoolbook oracle") {
  const LaurentPoly a = LaurentPoly(1L) + q(5000) - q(-7000);
  const LaurentPoly b = LaurentPoly(3L) - 2 * q(9001);
  CHECK(a * b == testing::naive_multiply(a, b));
}

TEST_CASE("divrem examples") {
  auto [q1, r1] = divrem(q(2) - LaurentPoly(1L), q() - LaurentPoly(1L));
  CHECK(q1 == q() + LaurentPoly(1L));
  CHECK(r1.is_zero());

  const LaurentPoly divisor = q(2) + LaurentPoly(1L);
  auto [q2, r2] = divrem(q(3), divisor);
  CHECK(q2 == q());
  CHECK(r2 == -q());
  CHECK(q2 * divisor + r2 == q(3));

  const LaurentPoly p = LaurentPoly::from_ints({4, 0, -1, 7});
  auto [q3, r3] = divrem(p, LaurentPoly(1L));
  CHECK(q3 == p);
  CHECK(r3.is_zero());
}

TEST_CASE("divrem error paths") {
  CHECK_THROWS_AS(divrem(q(), LaurentPoly()), std::domain_error);
  CHECK_THROWS_AS(divrem(q(-1), q()), std::domain_error);
  CHECK_THROWS_AS(exact_divide(q(2) + LaurentPoly(1L), q() + LaurentPoly(1L)), InvariantViolation);
}

TEST_CASE("divrem round trip on random pairs") {
  Gen gen(14);
  for (int i = 0; i < 1200; ++i) {
    const bool rational = i % 3 == 0;
    const LaurentPoly a = gen.ordinary(14, rational);
    const LaurentPoly b = gen.nonzero_ordinary(6, rational);
    auto [quot, rem] = divrem(a, b);
    CHECK(quot * b + rem == a);
    if (!rem.is_zero()) CHECK(rem.degree() < b.degree());
  }
}

TEST_CASE("Laurent wrappers") {
  CHECK(exact_divide(q(-3) - q(-1), q(-2) * (LaurentPoly(1L) - q())) == q(-1) + LaurentPoly(1L));
  CHECK(divides(q(-4) * (LaurentPoly(1L) + q()), q(2) - LaurentPoly(1L)));
  CHECK_FALSE(divides(LaurentPoly(1L) + q(), q(2) + LaurentPoly(1L)));
  auto [p0, v] = strip_valuation(q(-2) + q(3));
  CHECK(v == -2);
  CHECK(p0 == LaurentPoly(1L) + q(5));
}

TEST_CASE("ext_gcd examples") {
  const LaurentPoly a = q() - LaurentPoly(1L);
  const LaurentPoly b = q() + LaurentPoly(1L);
  const ExtGcd eg = ext_gcd(a, b);
  CHECK(eg.g == LaurentPoly(1L));
  CHECK(eg.u * a + eg.v * b == LaurentPoly(1L));

  const ExtGcd div = ext_gcd(q(2) - LaurentPoly(1L), q() - LaurentPoly(1L));
  CHECK(div.g == q() - LaurentPoly(1L));

  CHECK_THROWS_AS(ext_gcd(LaurentPoly(), LaurentPoly()), std::domain_error);
}

TEST_CASE("ext_gcd Bezout on random and Laurent inputs") {
  Gen gen(15);
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly a = gen.laurent(-3, 7);
    const LaurentPoly b = gen.laurent(-2, 5);
    if (a.is_zero() && b.is_zero()) continue;
    const ExtGcd eg = ext_gcd(a, b);
    CHECK(eg.u * a + eg.v * b == eg.g);
    CHECK(eg.g.leading_coeff() == 1);
    CHECK(divides(eg.g, a));
    CHECK(divides(eg.g, b));
  }
}

TEST_CASE("degree, valuation, evaluation") {
  const LaurentPoly p = parse_laurent("-1*q^-2 + 3/2*q^0 + 1*q^3");
  CHECK(p.degree() == 3);
  CHECK(p.valuation() == -2);
  CHECK(p.leading_coeff() == 1);
  CHECK(p.coeff(0) == Coeff(3, 2));
  CHECK(p.coeff(1) == 0);
  CHECK(p.evaluate(1) == Coeff(3, 2));
  CHECK(p.evaluate(2) == Coeff(-1, 4) + Coeff(3, 2) + 8);
  CHECK_THROWS_AS(LaurentPoly().degree(), std::domain_error);
  CHECK_THROWS_AS(LaurentPoly().valuation(), std::domain_error);
  CHECK_THROWS_AS(p.evaluate(0), std::domain_error);
}

TEST_CASE("canonical text form") {
  CHECK(to_string(LaurentPoly()) == "0");
  const LaurentPoly p = -1 * q(-2) + LaurentPoly(Coeff(3, 2)) + q(3);
  CHECK(to_string(p) == "-1*q^-2 + 3/2*q^0 + 1*q^3");
  CHECK(parse_laurent("1 - q + 2/3*q^-2") == LaurentPoly(1L) - q() + Coeff(2, 3) * q(-2));
  CHECK(parse_laurent("q^3") == q(3));
  CHECK(parse_laurent("-q") == -q());
  CHECK(parse_laurent("1*q^0 + -2*q^3") == LaurentPoly(1L) - 2 * q(3));
  CHECK(parse_laurent("0").is_zero());
  CHECK_THROWS_AS(parse_laurent(""), ParseError);
  CHECK_THROWS_AS(parse_laurent("1 + "), ParseError);
  CHECK_THROWS_AS(parse_laurent("2*x"), ParseError);
  CHECK_THROWS_AS(parse_laurent("1/0"), ParseError);
  CHECK_THROWS_AS(parse_laurent("q^"), ParseError);
}

TEST_CASE("serialize then parse reproduces the value") {
  Gen gen(16);
  for (int i = 0; i < 300; ++i) {
    const LaurentPoly p = gen.laurent(-10, 10, true);
    CHECK(parse_laurent(to_string(p)) == p);
  }
}

TEST_CASE("pow and lcm") {
  CHECK(pow(LaurentPoly(1L) + q(), 3) == LaurentPoly::from_ints({1, 3, 3, 1}));
  CHECK(pow(q(), 0) == LaurentPoly(1L));
  const LaurentPoly l = lcm(q(2) - LaurentPoly(1L), q(3) - LaurentPoly(1L));
  CHECK(divides(q(2) - LaurentPoly(1L), l));
  CHECK(divides(q(3) - LaurentPoly(1L), l));
  CHECK(l.degree() == 4);
}
