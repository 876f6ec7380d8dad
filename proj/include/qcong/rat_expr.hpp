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

#include <stdexcept>
#include <string>

#include "qcong/bipoly.hpp"
#include "qcong/laurent_poly.hpp"

namespace qcong {

/// num / den with den a nonzero Laurent polynomial in q. Not kept reduced:
/// congruence decisions cross-multiply, so no gcd is ever taken here.
template <class Num>
class RatExpr {
 public:
  RatExpr() : num_(), den_(1L) {}
  RatExpr(Num num) : num_(std::move(num)), den_(1L) {}  // NOLINT(google-explicit-constructor)
  RatExpr(Num num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatExpr: zero denominator");
  }

  const Num& num() const noexcept { return num_; }
  const LaurentPoly& den() const noexcept { return den_; }

  friend RatExpr operator+(const RatExpr& a, const RatExpr& b) {
    if (a.den_ == b.den_) return RatExpr(a.num_ + b.num_, a.den_);
    return RatExpr(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatExpr operator-(const RatExpr& a, const RatExpr& b) {
    if (a.den_ == b.den_) return RatExpr(a.num_ - b.num_, a.den_);
    return RatExpr(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatExpr operator*(const LaurentPoly& c, const RatExpr& r) { return RatExpr(c * r.num_, r.den_); }

 private:
  Num num_;
  LaurentPoly den_;
};

using RatLaurent = RatExpr<LaurentPoly>;
using RatBi = RatExpr<BiPoly>;

/// Exact equality of the represented rational functions (cross-multiplied).
template <class Num>
bool equivalent(const RatExpr<Num>& a, const RatExpr<Num>& b) {
  return a.num() * b.den() == b.num() * a.den();
}

template <class Num>
std::string to_string(const RatExpr<Num>& r) {
  if (r.den() == LaurentPoly(1L)) return to_string(r.num());
  return "(" + to_string(r.num()) + ") / (" + to_string(r.den()) + ")";
}

}  // namespace qcong
