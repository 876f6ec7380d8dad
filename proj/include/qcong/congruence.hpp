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
#include "qcong/cyclotomic.hpp"
#include "qcong/laurent_poly.hpp"
#include "qcong/rat_expr.hpp"

namespace qcong {

/**
 * A class in Q[q] / (Phi_n(q)^m).
 *
 * The representative is the remainder of exact division by Phi_n^m; negative
 * powers of q are first rewritten with the inverse of q, which is a unit
 * because Phi_n(0) = +-1. The representative is therefore unique and two
 * residues are equal exactly when their representatives are.
 */
class Residue {
 public:
  std::int64_t n() const noexcept { return n_; }
  std::int64_t m() const noexcept { return m_; }
  const LaurentPoly& rep() const noexcept { return rep_; }
  bool is_zero() const noexcept { return rep_.is_zero(); }

  friend Residue operator+(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a, const Residue& b);
  friend Residue operator*(const Residue& a, const Residue& b);
  friend bool operator==(const Residue& a, const Residue& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.rep_ == b.rep_;
  }

 private:
  Residue(std::int64_t n, std::int64_t m, LaurentPoly rep) : n_(n), m_(m), rep_(std::move(rep)) {}
  friend Residue reduce(const LaurentPoly& p, std::int64_t n, std::int64_t m);

  std::int64_t n_;
  std::int64_t m_;
  LaurentPoly rep_;
};

/// Canonical residue of p modulo Phi_n^m. Requires n >= 1, m >= 1.
Residue reduce(const LaurentPoly& p, std::int64_t n, std::int64_t m);

/// u with u * p == 1 (mod Phi_n^m), via the extended gcd against Phi_n^m.
/// Throws NotInvertible (carrying gcd(p, Phi_n)) when p shares a factor with Phi_n.
Residue invert(const LaurentPoly& p, std::int64_t n, std::int64_t m);

/// True iff gcd(p, Phi_n) = 1. Throws std::invalid_argument for p == 0.
bool coprime_certify(const LaurentPoly& p, std::int64_t n);

/// Decides lhs == rhs (mod Phi_n^m) by cross-multiplication:
/// Phi_n^m | lhs.num * rhs.den - rhs.num * lhs.den. Bivariate inputs are
/// decided coefficient-wise in x. Throws NonCoprimeDenominator when either
/// denominator is not coprime to Phi_n.
bool congruent(const RatLaurent& lhs, const RatLaurent& rhs, std::int64_t n, std::int64_t m);
bool congruent(const RatBi& lhs, const RatBi& rhs, std::int64_t n, std::int64_t m);

/// The reduced cross-multiplied difference; zero iff congruent().
LaurentPoly congruence_residual(const RatLaurent& lhs, const RatLaurent& rhs, std::int64_t n,
                                std::int64_t m);
BiPoly congruence_residual(const RatBi& lhs, const RatBi& rhs, std::int64_t n, std::int64_t m);

}  // namespace qcong
