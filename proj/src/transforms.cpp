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

#include "qcong/transforms.hpp"

#include "qcong/qcalc.hpp"

namespace qcong {

LaurentPoly transform_kernel(TransformKind kind, std::int64_t k, std::int64_t j) {
  if (j < 0 || j > k) return {};
  const Coeff sign = (j % 2 == 0) ? 1 : -1;
  const std::int64_t e = kind == TransformKind::kHat ? j * (j + 1) / 2 : j * (j - 1) / 2 - k * j;
  return shift(sign * gauss_binomial(k, j), e);
}

TransformMatrix::TransformMatrix(TransformKind kind, std::size_t size) : kind_(kind), size_(size) {
  rows_.resize(size);
  for (std::size_t k = 0; k < size; ++k) {
    for (std::size_t j = 0; j <= k; ++j) {
      rows_[k].push_back(
          transform_kernel(kind, static_cast<std::int64_t>(k), static_cast<std::int64_t>(j)));
    }
  }
}

TransformMatrix transform_matrix(TransformKind kind, std::size_t size) {
  if (size == 0) throw std::invalid_argument("transform_matrix: size must be >= 1");
  return TransformMatrix(kind, size);
}

bool hat_tilde_bridge_check(std::span<const LaurentPoly> f) {
  const auto lhs = hat(f);
  std::vector<LaurentPoly> g;
  for (const auto& fj : f) g.push_back(substitute_power(fj, -1));
  const auto rhs = tilde(std::span<const LaurentPoly>(g));
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (substitute_power(lhs[k], -1) != rhs[k]) return false;
  }
  return true;
}

}  // namespace qcong
