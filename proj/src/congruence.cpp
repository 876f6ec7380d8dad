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

#include "qcong/congruence.hpp"

#include <stdexcept>
#include <string>

#include "qcong/errors.hpp"

namespace qcong {
namespace {

void require_same_modulus(const Residue& a, const Residue& b) {
  if (a.n() != b.n() || a.m() != b.m()) {
    throw std::invalid_argument("residue arithmetic across different moduli");
  }
}

LaurentPoly mulmod(const LaurentPoly& a, const LaurentPoly& b, const LaurentPoly& modulus) {
  return divrem(a * b, modulus).remainder;
}

void require_coprime_denominator(const LaurentPoly& den, std::int64_t n) {
  if (!coprime_certify(den, n)) {
    const LaurentPoly g = gcd(strip_valuation(den).first, cyclotomic(n));
    throw NonCoprimeDenominator(
        "denominator " + to_string(den) + " is not coprime to Phi_" + std::to_string(n), to_string(g));
  }
}

}  // namespace

Residue operator+(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return reduce(a.rep() + b.rep(), a.n(), a.m());
}

Residue operator-(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return reduce(a.rep() - b.rep(), a.n(), a.m());
}

Residue operator*(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return reduce(a.rep() * b.rep(), a.n(), a.m());
}

Residue reduce(const LaurentPoly& p, std::int64_t n, std::int64_t m) {
  if (n < 1 || m < 1) throw std::invalid_argument("reduce: need n >= 1 and m >= 1");
  const CyclotomicModulus& mod = cyclotomic_modulus(n, m);
  if (p.is_zero()) return Residue(n, m, LaurentPoly());
  if (p.is_ordinary()) return Residue(n, m, divrem(p, mod.modulus).remainder);

  auto [p0, v] = strip_valuation(p);
  LaurentPoly rep = divrem(p0, mod.modulus).remainder;
  // Multiply by q^v = (q^-1)^(-v) with square-and-multiply on the inverse of q.
  auto k = static_cast<std::uint64_t>(-v);
  LaurentPoly base = mod.q_inverse;
  while (k != 0 && !rep.is_zero()) {
    if (k & 1U) rep = mulmod(rep, base, mod.modulus);
    k >>= 1U;
    if (k != 0) base = mulmod(base, base, mod.modulus);
  }
  return Residue(n, m, std::move(rep));
}

bool coprime_certify(const LaurentPoly& p, std::int64_t n) {
  if (p.is_zero()) throw std::invalid_argument("coprime_certify: zero polynomial");
  const LaurentPoly r = reduce(p, n, 1).rep();
  if (r.is_zero()) return false;
  return gcd(r, cyclotomic(n)) == LaurentPoly(1L);
}

Residue invert(const LaurentPoly& p, std::int64_t n, std::int64_t m) {
  if (p.is_zero() || !coprime_certify(p, n)) {
    const LaurentPoly g = p.is_zero() ? cyclotomic(n) : gcd(strip_valuation(p).first, cyclotomic(n));
    throw NotInvertible("no inverse of " + to_string(p) + " modulo Phi_" + std::to_string(n) + "^" +
                            std::to_string(m),
                        to_string(g));
  }
  const CyclotomicModulus& mod = cyclotomic_modulus(n, m);
  const ExtGcd eg = ext_gcd(reduce(p, n, m).rep(), mod.modulus);
  if (eg.g != LaurentPoly(1L)) {
    throw InvariantViolation("invert: coprime input produced gcd " + to_string(eg.g));
  }
  return reduce(eg.u, n, m);
}

LaurentPoly congruence_residual(const RatLaurent& lhs, const RatLaurent& rhs, std::int64_t n,
                                std::int64_t m) {
  require_coprime_denominator(lhs.den(), n);
  require_coprime_denominator(rhs.den(), n);
  const Residue diff = reduce(lhs.num(), n, m) * reduce(rhs.den(), n, m) -
                       reduce(rhs.num(), n, m) * reduce(lhs.den(), n, m);
  return diff.rep();
}

BiPoly congruence_residual(const RatBi& lhs, const RatBi& rhs, std::int64_t n, std::int64_t m) {
  require_coprime_denominator(lhs.den(), n);
  require_coprime_denominator(rhs.den(), n);
  const Residue lden = reduce(lhs.den(), n, m);
  const Residue rden = reduce(rhs.den(), n, m);
  BiPoly out;
  auto fold = [&](Exponent j) {
    const Residue diff = reduce(lhs.num().coeff(j), n, m) * rden - reduce(rhs.num().coeff(j), n, m) * lden;
    if (!diff.is_zero()) out += BiPoly::x_power(j, diff.rep());
  };
  for (const auto& [j, c] : lhs.num().coeffs()) fold(j);
  for (const auto& [j, c] : rhs.num().coeffs()) {
    if (lhs.num().coeffs().count(j) == 0) fold(j);
  }
  return out;
}

bool congruent(const RatLaurent& lhs, const RatLaurent& rhs, std::int64_t n, std::int64_t m) {
  return congruence_residual(lhs, rhs, n, m).is_zero();
}

bool congruent(const RatBi& lhs, const RatBi& rhs, std::int64_t n, std::int64_t m) {
  return congruence_residual(lhs, rhs, n, m).is_zero();
}

}  // namespace qcong
