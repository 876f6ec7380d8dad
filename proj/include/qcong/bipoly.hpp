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

#include <map>
#include <string>
#include <string_view>

#include "qcong/laurent_poly.hpp"

namespace qcong {

/// Polynomial in an auxiliary variable x whose coefficients are Laurent
/// polynomials in q. x commutes with q and is never substituted, so all
/// arithmetic is coefficient-wise in x. Zero coefficients are never stored.
class BiPoly {
 public:
  using Coeffs = std::map<Exponent, LaurentPoly>;

  BiPoly() = default;
  BiPoly(const LaurentPoly& constant);  // NOLINT(google-explicit-constructor)
  BiPoly(long constant) : BiPoly(LaurentPoly(constant)) {}  // NOLINT(google-explicit-constructor)

  /// c * x^j.
  static BiPoly x_power(Exponent j, const LaurentPoly& c = LaurentPoly(1L));

  bool is_zero() const noexcept { return coeffs_.empty(); }
  const Coeffs& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^j (zero when absent).
  LaurentPoly coeff(Exponent j) const;
  /// Highest power of x; throws std::domain_error on zero.
  Exponent x_degree() const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& rhs);
  BiPoly& operator-=(const BiPoly& rhs);
  BiPoly& operator*=(const BiPoly& rhs);

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const LaurentPoly& c, const BiPoly& p);
  friend BiPoly operator*(const BiPoly& p, const LaurentPoly& c) { return c * p; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void set(Exponent j, LaurentPoly c);
  Coeffs coeffs_;
};

/// Multiplication by q^e on every x-coefficient.
BiPoly shift(const BiPoly& p, Exponent e);

/// p(x, q^t): substitutes q only.
BiPoly substitute_power(const BiPoly& p, Exponent t);

/// p(x*q^e, q): the x^j coefficient picks up q^(e*j).
BiPoly scale_x(const BiPoly& p, Exponent e);

/// "(<laurent>)*x^j + ..." by ascending j; zero is "0".
std::string to_string(const BiPoly& p);

/// Parses the to_string form; a bare Laurent polynomial is read as an x^0 term.
BiPoly parse_bipoly(std::string_view text);

}  // namespace qcong
