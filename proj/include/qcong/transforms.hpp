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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qcong/bipoly.hpp"
#include "qcong/laurent_poly.hpp"
#include "qcong/rat_expr.hpp"

namespace qcong {

enum class TransformKind { kHat, kTilde };

/// Kernel of the signed q-binomial transforms, zero above the diagonal:
///   hat:   (-1)^j q^{C(j+1,2)}    [k, j]_q
///   tilde: (-1)^j q^{C(j,2) - kj} [k, j]_q
LaurentPoly transform_kernel(TransformKind kind, std::int64_t k, std::int64_t j);

/// Lower-triangular L x L matrix of transform kernels. Its diagonal entries
/// are units (+-q^e), so forward substitution inverts it exactly.
class TransformMatrix {
 public:
  TransformMatrix(TransformKind kind, std::size_t size);

  TransformKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return size_; }
  const LaurentPoly& at(std::size_t k, std::size_t j) const { return rows_.at(k).at(j); }

  /// (M f)_k = sum_{j <= k} M[k][j] f_j.
  template <class T>
  std::vector<T> apply(std::span<const T> f) const;

  /// The g with M g == rhs, by forward substitution.
  template <class T>
  std::vector<T> solve(std::span<const T> rhs) const;

 private:
  TransformKind kind_;
  std::size_t size_;
  std::vector<std::vector<LaurentPoly>> rows_;  // rows_[k] has k + 1 entries
};

TransformMatrix transform_matrix(TransformKind kind, std::size_t size);

template <class T>
std::vector<T> TransformMatrix::apply(std::span<const T> f) const {
  if (f.size() > size_) throw std::invalid_argument("TransformMatrix::apply: sequence too long");
  std::vector<T> out;
  out.reserve(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    T acc;
    for (std::size_t j = 0; j <= k; ++j) acc += rows_[k][j] * f[j];
    out.push_back(std::move(acc));
  }
  return out;
}

template <class T>
std::vector<T> TransformMatrix::solve(std::span<const T> rhs) const {
  if (rhs.size() > size_) throw std::invalid_argument("TransformMatrix::solve: sequence too long");
  std::vector<T> g;
  g.reserve(rhs.size());
  for (std::size_t k = 0; k < rhs.size(); ++k) {
    T residual = rhs[k];
    for (std::size_t j = 0; j < k; ++j) residual -= rows_[k][j] * g[j];
    const auto& diag = rows_[k][k].terms().front();
    g.push_back(LaurentPoly::monomial(1 / diag.coeff, -diag.exp) * residual);
  }
  return g;
}

/// Empty input maps to empty output.
template <class T>
std::vector<T> transform(TransformKind kind, std::span<const T> f) {
  if (f.empty()) return {};
  return transform_matrix(kind, f.size()).apply(f);
}

/// f^_k = sum_{j=0}^k (-1)^j q^{C(j+1,2)} [k, j]_q f_j. Length preserving.
template <class T>
std::vector<T> hat(std::span<const T> f) {
  return transform(TransformKind::kHat, f);
}

/// f~_k = sum_{j=0}^k (-1)^j q^{C(j,2) - kj} [k, j]_q f_j.
template <class T>
std::vector<T> tilde(std::span<const T> f) {
  return transform(TransformKind::kTilde, f);
}


template <class T>
std::vector<T> hat(const std::vector<T>& f) {
  return hat(std::span<const T>(f));
}

template <class T>
std::vector<T> tilde(const std::vector<T>& f) {
  return tilde(std::span<const T>(f));
}

/// A rational sequence written over one shared denominator.
template <class T>
struct CommonDenominatorSeq {
  std::vector<T> nums;
  LaurentPoly den;
};

template <class T>
CommonDenominatorSeq<T> to_common_denominator(std::span<const RatExpr<T>> seq) {
  LaurentPoly den(1L);
  for (const auto& r : seq) {
    if (!divides(r.den(), den)) den = lcm(den, r.den());
  }
  CommonDenominatorSeq<T> out{{}, den};
  for (const auto& r : seq) out.nums.push_back(exact_divide(den, r.den()) * r.num());
  return out;
}

/// Transforms of rational sequences act on the numerators over a common
/// denominator; the transform is linear over Laurent polynomials.
template <class T>
std::vector<RatExpr<T>> transform(TransformKind kind, std::span<const RatExpr<T>> f) {
  auto common = to_common_denominator(f);
  std::vector<T> nums = transform(kind, std::span<const T>(common.nums));
  std::vector<RatExpr<T>> out;
  for (auto& n : nums) out.emplace_back(std::move(n), common.den);
  return out;
}

/// hat(f)_k(1/q) == tilde(g)_k with g_j(q) = f_j(1/q), for every k; exact.
bool hat_tilde_bridge_check(std::span<const LaurentPoly> f);

}  // namespace qcong
