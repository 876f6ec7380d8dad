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
#include <vector>

#include "qcong/laurent_poly.hpp"

namespace qcong {

/// Euler's totient. Throws std::invalid_argument for n < 1.
std::int64_t totient(std::int64_t n);

/// Positive divisors of n in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

/// The n-th cyclotomic polynomial, built by exact division
/// Phi_n = (q^n - 1) / prod_{d | n, d < n} Phi_d. Results are memoized in a
/// process-wide table that is safe to use from several threads.
/// Throws std::invalid_argument for n < 1.
LaurentPoly cyclotomic(std::int64_t n);

/// Phi_n(q)^m together with the data every reduction modulo it needs.
struct CyclotomicModulus {
  std::int64_t n;
  std::int64_t m;
  LaurentPoly phi_n;
  LaurentPoly modulus;    // phi_n^m, monic with integer coefficients
  LaurentPoly q_inverse;  // u with q*u == 1 (mod modulus), deg u < deg modulus
};

/// Memoized; the returned reference stays valid for the life of the process.
const CyclotomicModulus& cyclotomic_modulus(std::int64_t n, std::int64_t m);

}  // namespace qcong
