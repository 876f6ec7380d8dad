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

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qcong {

/// Exact rational coefficient. gmpxx keeps the fraction canonical as long as
/// every value produced by arithmetic is passed through canonicalize().
using Coeff = mpq_class;

/// Exponents of q. Bounded machine integers; every exponent computation is
/// overflow checked and throws std::overflow_error rather than wrapping.
using Exponent = std::int64_t;

/**
 * Laurent polynomial in q over the rationals.
 *
 * Stored as a sparse, strictly increasing list of (exponent, coefficient)
 * terms with no zero coefficients, so two values are equal exactly when their
 * term lists are equal. Values are immutable once built; all arithmetic
 * returns new values.
 */
class LaurentPoly {
 public:
  struct Term {
    Exponent exp;
    Coeff coeff;

    friend bool operator==(const Term& a, const Term& b) {
      return a.exp == b.exp && a.coeff == b.coeff;
    }
  };

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Coeff& constant);  // NOLINT(google-explicit-constructor)

  /// c * q^e.
  static LaurentPoly monomial(const Coeff& c, Exponent e);
  /// q^e.
  static LaurentPoly q_power(Exponent e) { return monomial(Coeff(1), e); }
  /// Sorts, merges equal exponents and drops zeros.
  static LaurentPoly from_terms(std::vector<Term> terms);
  /// dense[i] is the coefficient of q^(lowest + i).
  static LaurentPoly from_dense(std::span<const Coeff> dense, Exponent lowest = 0);
  static LaurentPoly from_ints(std::initializer_list<long> dense, Exponent lowest = 0);

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::span<const Term> terms() const noexcept { return terms_; }

  /// Highest exponent. Throws std::domain_error on the zero polynomial.
  Exponent degree() const;
  /// Lowest exponent. Throws std::domain_error on the zero polynomial.
  Exponent valuation() const;
  const Coeff& leading_coeff() const;
  Coeff coeff(Exponent e) const;

  bool is_integral() const noexcept;
  /// No negative exponents (an element of Q[q]).
  bool is_ordinary() const noexcept { return terms_.empty() || terms_.front().exp >= 0; }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().exp == 0);
  }

  /// Exact value at a nonzero rational point.
  Coeff evaluate(const Coeff& x) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const Coeff& c, const LaurentPoly& p);
  friend LaurentPoly operator*(long c, const LaurentPoly& p) { return Coeff(c) * p; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  explicit LaurentPoly(std::vector<Term> canonical) : terms_(std::move(canonical)) {}
  friend LaurentPoly shift(const LaurentPoly&, Exponent);
  friend LaurentPoly substitute_power(const LaurentPoly&, Exponent);
  friend LaurentPoly mul_one_minus(const LaurentPoly&, Exponent, const Coeff&);

  std::vector<Term> terms_;
};

/// Multiplication by q^e.
LaurentPoly shift(const LaurentPoly& p, Exponent e);

/// p(q^t). Throws std::invalid_argument for t == 0.
LaurentPoly substitute_power(const LaurentPoly& p, Exponent t);

/// (1 - c*q^e) * p without a general multiply; the hot path for Pochhammer products.
LaurentPoly mul_one_minus(const LaurentPoly& p, Exponent e, const Coeff& c = Coeff(1));

LaurentPoly pow(const LaurentPoly& p, unsigned k);

struct DivRem {
  LaurentPoly quotient;
  LaurentPoly remainder;
};

/// Euclidean division in Q[q]: a = quotient*b + remainder, deg remainder < deg b.
/// Both operands must be ordinary polynomials (std::domain_error otherwise);
/// division by zero throws std::domain_error.
DivRem divrem(const LaurentPoly& a, const LaurentPoly& b);

/// Splits p = q^v * p0 with p0 ordinary and p0(0) != 0. Zero maps to (0, 0).
std::pair<LaurentPoly, Exponent> strip_valuation(const LaurentPoly& p);

/// Laurent-aware division: writes q^-va * a = quotient * (q^-vb * b) + remainder
/// on the valuation-stripped parts. Units q^k are ignored on both sides.
DivRem divrem_laurent(const LaurentPoly& a, const LaurentPoly& b);

/// a / b when the division is exact in Q[q, 1/q]; throws InvariantViolation otherwise.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

/// True iff b divides a in Q[q, 1/q] (powers of q are units).
bool divides(const LaurentPoly& b, const LaurentPoly& a);

struct ExtGcd {
  LaurentPoly g;  // monic, ordinary
  LaurentPoly u;
  LaurentPoly v;  // u*a + v*b == g
};

/// Extended gcd. Laurent inputs are handled through their valuation-stripped
/// parts, with the unit folded back into u and v so u*a + v*b == g holds for the
/// original arguments. Throws std::domain_error when both are zero.
ExtGcd ext_gcd(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Least common multiple, up to a unit.
LaurentPoly lcm(const LaurentPoly& a, const LaurentPoly& b);

/// Canonical text: terms by ascending exponent joined by " + ", each term
/// written "<rational>*q^<exponent>", e.g. "-1*q^-2 + 3/2*q^0 + 1*q^3".
/// The zero polynomial is "0".
std::string to_string(const LaurentPoly& p);

/// Accepts the canonical form and a looser hand-written form
/// ("1 - q + 2/3*q^-2", "q^3", "-q"). Throws ParseError.
LaurentPoly parse_laurent(std::string_view text);

}  // namespace qcong
