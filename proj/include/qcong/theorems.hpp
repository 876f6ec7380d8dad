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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcong/families.hpp"
#include "qcong/laurent_poly.hpp"

namespace qcong {

/**
 * Parameters of the symmetric congruences with kernel
 * (q^r;q^d)_k (q^{d-r};q^d)_k / (q^d;q^d)_k^2.
 *
 * a is the unique residue in [0, n) with a*d + r == 0 (mod n), found by
 * scanning. exponent = d*C(a+1,2) + (a*d + r)(n-1-2a)/2, checked to be an
 * integer at construction. sign is (-1)^a for odd n and
 * (-1)^(a + (a*d + r)/n) for even n.
 */
struct SymParams {
  std::int64_t n = 0;
  std::int64_t d = 0;
  std::int64_t r = 0;
  std::int64_t a = 0;
  std::int64_t exponent = 0;
  int sign = 1;

  bool even_branch() const noexcept { return n % 2 == 0; }
  /// The sign the other parity branch's formula would give.
  int wrong_branch_sign() const noexcept;

  /// Throws InvalidParameters unless n >= 2, d >= 1 and gcd(n, d) == 1.
  static SymParams make(std::int64_t n, std::int64_t d, std::int64_t r);
};

/// alpha = a + s*n with 0 <= a < n; exponent = C(a+1,2) + s*n*a - s*C(n,2);
/// sign = (-1)^a for odd n, (-1)^(a+s) for even n.
struct AlphaParams {
  std::int64_t n = 0;
  std::int64_t a = 0;
  std::int64_t s = 0;
  std::int64_t alpha = 0;
  std::int64_t exponent = 0;
  int sign = 1;

  bool even_branch() const noexcept { return n % 2 == 0; }
  int wrong_branch_sign() const noexcept;

  static AlphaParams make(std::int64_t n, std::int64_t a, std::int64_t s);
};

struct CheckParam {
  std::string name;
  std::int64_t value;

  friend bool operator==(const CheckParam&, const CheckParam&) = default;
};

struct CheckReport {
  std::string theorem;
  std::string family;
  std::vector<CheckParam> params;
  bool holds = false;
  std::optional<std::int64_t> a;
  std::string exponent_name;  // "E" or "F" when an exponent applies
  std::optional<std::int64_t> exponent;
  std::optional<int> sign;
  std::string branch;  // "odd", "even" or empty
  std::optional<std::string> residual;  // reduced difference, only on failure
  double wall_ms = 0.0;
};

/// Knobs for negative-control experiments. Defaults run the statement as is.
struct CheckOptions {
  std::optional<int> sign_override;
  /// Added to the left-hand side (as a polynomial, i.e. times its denominator).
  LaurentPoly lhs_addend;
  /// Added to f_k on the untransformed side only; the transformed side keeps the
  /// original family. Entry k perturbs f_k; missing entries are zero.
  std::vector<LaurentPoly> lhs_family_delta;
};

// thm1.1: q^E sum T_k q^{dk} f_k(q^d) == sign sum T_k q^{dk} f^_k(q^d) (mod Phi_n^2).
// Rational families are rejected with InvalidParameters.
CheckReport check_thm_1_1(const SymParams& p, const FamilySpec& fam, const CheckOptions& opts = {});
CheckReport check_thm_1_1(const SymParams& p, const FamilySequence& f, const std::string& label,
                          const CheckOptions& opts = {});

// thm1.2: sum T_k f_k(q^d) == sign q^E sum T_k f~_k(q^d) (mod Phi_n^2).
CheckReport check_thm_1_2(const SymParams& p, const FamilySpec& fam, const CheckOptions& opts = {});
CheckReport check_thm_1_2(const SymParams& p, const FamilySequence& f, const std::string& label,
                          const CheckOptions& opts = {});

// sign q^F sum B_k f_k == sum B_k f^_k (mod Phi_n^2), B_k = q^{k^2+k} [alpha,k] [-1-alpha,k].
CheckReport check_thm_2_1(const AlphaParams& p, const FamilySpec& fam, const CheckOptions& opts = {});
CheckReport check_thm_2_1(const AlphaParams& p, const FamilySequence& f, const std::string& label,
                          const CheckOptions& opts = {});

/// With alpha = a the congruence above is an exact identity of Laurent polynomials.
bool check_s0_identity(std::int64_t n, std::int64_t a, const FamilySpec& fam);

/// Phi_n | [s*n, j]_q for 1 <= j <= n-1, s != 0.
bool check_lemma_sn_binom(std::int64_t n, std::int64_t s, std::int64_t j);

/// [s*n - 1, j - 1]_q == (-1)^{j-1} q^{-C(j,2)} (mod Phi_n) for 1 <= j <= n-1.
bool check_lemma_sn_minus1(std::int64_t n, std::int64_t s, std::int64_t j);

/// (-1)^{n-1} q^{C(n,2)} == 1 (mod Phi_n) for even n >= 2.
bool check_even_sign_fact(std::int64_t n);

/// [a+b, k] == sum_j q^{(b-j)(k-j)} [b, j] [a, k-j], exactly, for any integers a, b.
bool check_q_chu_vandermonde(std::int64_t a, std::int64_t b, std::int64_t k);

/// (-1)^a q^{ak + C(a+1,2)} [-1-k, a] == [a+k, a] == (-1)^k q^{ak + C(k+1,2)} [-1-a, k], a, k >= 0.
bool check_negation_identity(std::int64_t a, std::int64_t k);

/// thm1.1 for f_k = x^k, after confirming hat(x^k) == (xq;q)_k exactly.
CheckReport check_guo_zeng(const SymParams& p, const CheckOptions& opts = {});

/// P_n(-r/d, x; q^d) == sign q^E P_n(-r/d, x q^{-d}; q^{-d}) (mod Phi_n^2) for odd n >= 3,
/// with P_n(alpha, x; q) = sum_k q^{k^2+k} [alpha,k][-1-alpha,k] (x;q)_k / (q;q)_k.
/// Both sides are built directly from Pochhammer products at base q^d and q^{-d}.
CheckReport check_sun_p_analogue(const SymParams& p, const CheckOptions& opts = {});

/// The integer congruence mod p^2 with ordinary binomials, alpha = num/den
/// p-integral, p an odd prime; f needs at least p entries. Exact rationals
/// plus a p-adic valuation test.
bool check_classical_sun(std::int64_t p, std::int64_t alpha_num, std::int64_t alpha_den,
                         std::span<const std::int64_t> f);

}  // namespace qcong
