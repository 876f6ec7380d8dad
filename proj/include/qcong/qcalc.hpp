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

#include "qcong/bipoly.hpp"
#include "qcong/laurent_poly.hpp"

namespace qcong {

/// [n]_q = (1 - q^n) / (1 - q). For negative n this is -q^n [-n]_q.
LaurentPoly q_int(std::int64_t n);

/// (q^r; q^d)_k = prod_{j<k} (1 - q^(r + j*d)). k = 0 gives 1.
LaurentPoly qpoch(std::int64_t r, std::int64_t d, std::int64_t k);

/// (x q^shift; q)_k = prod_{j<k} (1 - x q^(shift + j)) as a polynomial in x.
BiPoly qpoch_x(std::int64_t shift, std::int64_t k);

/// Gaussian binomial [n, k]_q for n >= 0; zero outside 0 <= k <= n.
LaurentPoly gauss_binomial(std::int64_t n, std::int64_t k);

/// [alpha, k]_q = (q^(alpha-k+1); q)_k / (q; q)_k for any integer alpha,
/// zero for k < 0. The quotient is always an exact Laurent polynomial; a
/// remainder would be an InvariantViolation. Memoized.
LaurentPoly qbinom_int(std::int64_t alpha, std::int64_t k);

/// The q^d-binomial: qbinom_int(alpha, k) with q replaced by q^d.
LaurentPoly qbinom_base(std::int64_t alpha, std::int64_t k, std::int64_t d);

}  // namespace qcong
