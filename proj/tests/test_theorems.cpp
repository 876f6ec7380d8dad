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

#include <numeric>

#include "doctest.h"
#include "generators.hpp"
#include "qcong/cyclotomic.hpp"
#include "qcong/errors.hpp"
#include "qcong/families.hpp"
#include "qcong/theorems.hpp"

using namespace qcong;
using qcong::testing::Gen;

namespace {

LaurentPoly q(Exponent e = 1) { return LaurentPoly::q_power(e); }
LaurentPoly one() { return LaurentPoly(1L); }
std::int64_t choose2(std::int64_t k) { return k * (k - 1) / 2; }

// ---------------------------------------------------------------------------
// Expansion oracle: every side is summed term by term as a rational function,
// with transforms and binomials rebuilt from first principles, and the final
// decision is plain Euclidean division of the cross-multiplied difference by
// Phi_n^2. Nothing here goes through residues, cached kernels or matrices.

LaurentPoly poch(std::int64_t r, std::int64_t d, std::int64_t k) {
  LaurentPoly acc = one();
  for (std::int64_t j = 0; j < k; ++j) acc = testing::naive_multiply(acc, one() - q(r + j * d));
  return acc;
}

LaurentPoly laurent_quotient(const LaurentPoly& a, const LaurentPoly& b) {
  auto [a0, va] = strip_valuation(a);
  auto [b0, vb] = strip_valuation(b);
  auto [quot, rem] = divrem(a0, b0);
  REQUIRE(rem.is_zero());
  return shift(quot, va - vb);
}

/// [alpha, k] for any integer alpha.
LaurentPoly binom(std::int64_t alpha, std::int64_t k) {
  if (k < 0) return {};
  if (alpha - k + 1 <= 0 && alpha >= 0) return {};
  return laurent_quotient(poch(alpha - k + 1, 1, k), poch(1, 1, k));
}

std::vector<LaurentPoly> oracle_transform(const std::vector<LaurentPoly>& f, bool tilde) {
  std::vector<LaurentPoly> out;
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(f.size()); ++k) {
    LaurentPoly acc;
    for (std::int64_t j = 0; j <= k; ++j) {
      const std::int64_t e = tilde ? choose2(j) - k * j : choose2(j + 1);
      acc = acc + LaurentPoly::monomial(j % 2 == 0 ? 1 : -1, e) * binom(k, j) * f[static_cast<std::size_t>(j)];
    }
    out.push_back(acc);
  }
  return out;
}

bool divisible_by_phi_squared(const RatLaurent& lhs, const RatLaurent& rhs, std::int64_t n) {
  const LaurentPoly diff = lhs.num() * rhs.den() - rhs.num() * lhs.den();
  if (diff.is_zero()) return true;
  const LaurentPoly phi = cyclotomic(n);
  return divrem(strip_valuation(diff).first, phi * phi).remainder.is_zero();
}

struct SymCase {
  std::int64_t n, d, r;
};

std::int64_t find_a(const SymCase& c) {
  for (std::int64_t a = 0; a < c.n; ++a) {
    if (((a * c.d + c.r) % c.n + c.n) % c.n == 0) return a;
  }
  FAIL("no a");
  return -1;
}

bool oracle_thm_1(const SymCase& c, const std::vector<LaurentPoly>& f, bool tilde_version) {
  const std::int64_t a = find_a(c);
  const std::int64_t ad_r = a * c.d + c.r;
  const std::int64_t e = c.d * (a + 1) * a / 2 + ad_r * (c.n - 1 - 2 * a) / 2;
  const int sign = c.n % 2 == 1 ? (a % 2 == 0 ? 1 : -1) : ((a + ad_r / c.n) % 2 == 0 ? 1 : -1);
  const auto g = oracle_transform(f, tilde_version);

  RatLaurent lhs{LaurentPoly()}, rhs{LaurentPoly()};
  for (std::int64_t k = 0; k < c.n; ++k) {
    const LaurentPoly tnum = poch(c.r, c.d, k) * poch(c.d - c.r, c.d, k);
    const LaurentPoly tden = poch(c.d, c.d, k) * poch(c.d, c.d, k);
    const auto idx = static_cast<std::size_t>(k);
    const LaurentPoly weight = tilde_version ? one() : q(c.d * k);
    lhs = lhs + RatLaurent(weight * tnum * substitute_power(f[idx], c.d), tden);
    rhs = rhs + RatLaurent(weight * tnum * substitute_power(g[idx], c.d), tden);
  }
  const LaurentPoly unit = LaurentPoly::monomial(sign, e);
  if (tilde_version) {
    return divisible_by_phi_squared(lhs, unit * rhs, c.n);
  }
  return divisible_by_phi_squared(q(e) * lhs, LaurentPoly(static_cast<long>(sign)) * rhs, c.n);
}

bool oracle_thm_2_1(std::int64_t n, std::int64_t a, std::int64_t s, const std::vector<LaurentPoly>& f) {
  const std::int64_t alpha = a + s * n;
  const std::int64_t e = (a + 1) * a / 2 + s * n * a - s * choose2(n);
  const int sign = n % 2 == 1 ? (a % 2 == 0 ? 1 : -1) : ((a + s) % 2 == 0 ? 1 : -1);
  const auto g = oracle_transform(f, false);
  LaurentPoly lhs, rhs;
  for (std::int64_t k = 0; k < n; ++k) {
    const LaurentPoly b = q(k * k + k) * binom(alpha, k) * binom(-1 - alpha, k);
    lhs = lhs + b * f[static_cast<std::size_t>(k)];
    rhs = rhs + b * g[static_cast<std::size_t>(k)];
  }
  return divisible_by_phi_squared(RatLaurent(LaurentPoly::monomial(sign, e) * lhs), RatLaurent(rhs), n);
}

std::vector<SymCase> random_sym_cases(Gen& gen, int count, std::int64_t nmax, std::int64_t dmax) {
  std::vector<SymCase> out;
  while (static_cast<int>(out.size()) < count) {
    SymCase c{gen.range(2, nmax), gen.range(1, dmax), gen.range(-5, 5)};
    if (std::gcd(c.n, c.d) == 1) out.push_back(c);
  }
  return out;
}

}  // namespace

TEST_CASE("symmetric parameters") {
  const SymParams p = SymParams::make(3, 1, 1);
  CHECK(p.a == 2);
  CHECK(p.exponent == 0);
  CHECK(p.sign == 1);
  CHECK_FALSE(p.even_branch());

  const SymParams e = SymParams::make(2, 1, 0);
  CHECK(e.a == 0);
  CHECK(e.even_branch());
  CHECK(e.sign == 1);

  CHECK_THROWS_AS(SymParams::make(4, 2, 1), InvalidParameters);
  CHECK_THROWS_AS(SymParams::make(1, 1, 0), InvalidParameters);
  CHECK_THROWS_AS(SymParams::make(5, 0, 1), InvalidParameters);

  // Constructed (not assumed) integral exponents across the whole sweep grid.
  for (std::int64_t n = 2; n <= 12; ++n) {
    for (std::int64_t d = 1; d <= 6; ++d) {
      if (std::gcd(n, d) != 1) continue;
      for (std::int64_t r = -5; r <= 5; ++r) {
        const SymParams s = SymParams::make(n, d, r);
        CHECK(((s.a * d + r) % n + n) % n == 0);
        CHECK(s.a >= 0);
        CHECK(s.a < n);
      }
    }
  }
}

TEST_CASE("alpha parameters") {
  const AlphaParams p = AlphaParams::make(4, 1, 1);
  CHECK(p.alpha == 5);
  CHECK(p.exponent == -1);
  CHECK(p.sign == 1);
  const AlphaParams o = AlphaParams::make(5, 2, -3);
  CHECK(o.alpha == -13);
  CHECK(o.exponent == 3 - 30 + 30);
  CHECK(o.sign == 1);
  CHECK_THROWS_AS(AlphaParams::make(4, 4, 0), InvalidParameters);
  CHECK_THROWS_AS(AlphaParams::make(1, 0, 0), InvalidParameters);
}

TEST_CASE("thm1.1 examples") {
  const CheckReport r = check_thm_1_1(SymParams::make(3, 1, 1), FamilySpec::ones());
  CHECK(r.holds);
  CHECK(r.a == 2);
  CHECK(r.exponent == 0);
  CHECK(r.exponent_name == "E");
  CHECK(r.branch == "odd");
  CHECK_FALSE(r.residual.has_value());

  const CheckReport e = check_thm_1_1(SymParams::make(2, 1, 0), FamilySpec::ones());
  CHECK(e.holds);
  CHECK(e.branch == "even");

  CHECK(check_thm_1_1(SymParams::make(6, 5, 2), FamilySpec::delta(1)).holds);
  CHECK_THROWS_AS(check_thm_1_1(SymParams::make(5, 1, 1), FamilySpec::sun_p_x()), InvalidParameters);
}

TEST_CASE("thm1.1 matches the expansion oracle") {
  CHECK(oracle_thm_1({3, 1, 1}, generate_univariate(FamilySpec::ones(), 3), false));
  CHECK(oracle_thm_1({2, 1, 0}, generate_univariate(FamilySpec::ones(), 2), false));
  Gen gen(51);
  for (const auto& c : random_sym_cases(gen, 25, 8, 4)) {
    const auto fam = FamilySpec::random_poly(static_cast<std::uint64_t>(gen.range(0, 1000)), 2);
    const auto f = generate_univariate(fam, c.n);
    CAPTURE(c.n);
    CAPTURE(c.d);
    CAPTURE(c.r);
    const bool expect = oracle_thm_1(c, f, false);
    CHECK(expect);
    CHECK(check_thm_1_1(SymParams::make(c.n, c.d, c.r), fam).holds == expect);
  }
}

TEST_CASE("thm1.2 examples") {
  CHECK(check_thm_1_2(SymParams::make(3, 1, 1), FamilySpec::ones()).holds);
  CHECK(check_thm_1_2(SymParams::make(5, 2, 3), FamilySpec::delta(0)).holds);
  CHECK(check_thm_1_2(SymParams::make(7, 3, -2), FamilySpec::sun_p_x()).holds);
  Gen gen(52);
  for (const auto& c : random_sym_cases(gen, 25, 8, 4)) {
    const auto fam = FamilySpec::random_poly(static_cast<std::uint64_t>(gen.range(0, 1000)), 2);
    const auto f = generate_univariate(fam, c.n);
    CAPTURE(c.n);
    CAPTURE(c.d);
    CAPTURE(c.r);
    const bool expect = oracle_thm_1(c, f, true);
    CHECK(expect);
    CHECK(check_thm_1_2(SymParams::make(c.n, c.d, c.r), fam).holds == expect);
  }
}

TEST_CASE("thm1.1 and thm1.2 agree on random families") {
  Gen gen(53);
  for (const auto& c : random_sym_cases(gen, 100, 10, 5)) {
    const auto fam = FamilySpec::random_poly(static_cast<std::uint64_t>(gen.range(0, 1 << 20)), 3);
    const SymParams p = SymParams::make(c.n, c.d, c.r);
    const bool one_one = check_thm_1_1(p, fam).holds;
    CHECK(one_one);
    CHECK(check_thm_1_2(p, fam).holds == one_one);
  }
}

TEST_CASE("thm2.1 examples") {
  const CheckReport r = check_thm_2_1(AlphaParams::make(3, 1, 0), FamilySpec::ones());
  CHECK(r.holds);
  CHECK(r.exponent_name == "F");
  const CheckReport e = check_thm_2_1(AlphaParams::make(4, 1, 1), FamilySpec::random_poly(7, 3));
  CHECK(e.holds);
  CHECK(e.sign == 1);
  CHECK(e.branch == "even");
  CHECK(check_thm_2_1(AlphaParams::make(5, 2, 1), FamilySpec::ones()).holds);

  Gen gen(54);
  for (int i = 0; i < 30; ++i) {
    const std::int64_t n = gen.range(2, 8), a = gen.range(0, n - 1), s = gen.range(-3, 3);
    const auto fam = FamilySpec::random_poly(static_cast<std::uint64_t>(i), 2);
    const bool expect = oracle_thm_2_1(n, a, s, generate_univariate(fam, n));
    CHECK(expect);
    CHECK(check_thm_2_1(AlphaParams::make(n, a, s), fam).holds == expect);
  }
}

TEST_CASE("s = 0 exact identity") {
  CHECK(check_s0_identity(5, 0, FamilySpec::random_poly(1, 3)));
  CHECK(check_s0_identity(5, 3, FamilySpec::ones()));
  CHECK(check_s0_identity(7, 5, FamilySpec::random_poly(3, 4)));
  CHECK_THROWS_AS(check_s0_identity(5, 5, FamilySpec::ones()), InvalidParameters);

  // With d = 1 and r = -a, the identity and the s = 0 congruence agree.
  for (std::int64_t n = 2; n <= 8; ++n) {
    for (std::int64_t a = 0; a < n; ++a) {
      const auto fam = FamilySpec::random_poly(static_cast<std::uint64_t>(n * 10 + a), 2);
      CHECK(SymParams::make(n, 1, -a).a == a);
      CHECK(check_s0_identity(n, a, fam) == check_thm_2_1(AlphaParams::make(n, a, 0), fam).holds);
    }
  }
}

TEST_CASE("lemma checks") {
  CHECK(check_lemma_sn_binom(5, 1, 2));
  CHECK(check_lemma_sn_binom(4, -2, 3));
  CHECK_THROWS_AS(check_lemma_sn_binom(6, 1, 6), InvalidParameters);
  CHECK_THROWS_AS(check_lemma_sn_binom(6, 0, 2), InvalidParameters);

  CHECK(check_lemma_sn_minus1(5, 1, 1));
  CHECK(check_lemma_sn_minus1(5, 2, 3));
  CHECK(check_lemma_sn_minus1(3, -1, 2));
  CHECK_THROWS_AS(check_lemma_sn_minus1(3, 1, 0), InvalidParameters);

  CHECK(check_even_sign_fact(2));
  CHECK(check_even_sign_fact(4));
  CHECK(check_even_sign_fact(12));
  CHECK_THROWS_AS(check_even_sign_fact(5), InvalidParameters);

  CHECK(check_q_chu_vandermonde(-3, 5, 4));
  CHECK(check_negation_identity(3, 4));
}

TEST_CASE("guo_zeng bivariate case") {
  const CheckReport r = check_guo_zeng(SymParams::make(3, 1, 1));
  CHECK(r.holds);
  CHECK(r.family == "monomial_x");
  CHECK(check_guo_zeng(SymParams::make(8, 3, -2)).holds);
  CHECK(check_guo_zeng(SymParams::make(6, 1, 3)).holds);
}

TEST_CASE("sun_p analogue") {
  CHECK(check_sun_p_analogue(SymParams::make(3, 1, 1)).holds);
  CHECK(check_sun_p_analogue(SymParams::make(5, 2, 1)).holds);
  CHECK(check_sun_p_analogue(SymParams::make(7, 4, -3)).holds);
  CHECK_THROWS_AS(check_sun_p_analogue(SymParams::make(4, 1, 1)), InvalidParameters);
}

TEST_CASE("classical congruence") {
  const std::vector<std::int64_t> ones(5, 1);
  CHECK(check_classical_sun(5, 1, 2, ones));
  const std::vector<std::int64_t> f{1, 0, 0};
  CHECK(check_classical_sun(3, 2, 1, f));

  SplitMix64 rng(99);
  for (int seed = 0; seed < 20; ++seed) {
    std::vector<std::int64_t> g;
    for (int i = 0; i < 7; ++i) g.push_back(rng.symmetric(10));
    CHECK(check_classical_sun(7, -1, 3, g));
  }
  CHECK_THROWS_AS(check_classical_sun(5, 1, 5, ones), InvalidParameters);
  CHECK_THROWS_AS(check_classical_sun(4, 1, 3, ones), InvalidParameters);
  CHECK_THROWS_AS(check_classical_sun(7, 1, 2, ones), InvalidParameters);
}

TEST_CASE("negative control: perturbing f_1 on one side") {
  Gen gen(55);
  int broken = 0;
  // r = 0 and r = d zero out every kernel term with k >= 1, so f_1 is absent
  // from both sides; such instances cannot detect anything and are not drawn.
  std::vector<SymCase> cases;
  while (cases.size() < 50) {
    const SymCase c = random_sym_cases(gen, 1, 10, 5).front();
    if (c.r != 0 && c.r != c.d) cases.push_back(c);
  }
  for (const auto& c : cases) {
    const auto fam = FamilySpec::random_poly(static_cast<std::uint64_t>(gen.range(0, 1 << 20)), 3);
    const SymParams p = SymParams::make(c.n, c.d, c.r);
    CheckOptions opts;
    opts.lhs_family_delta = {LaurentPoly(), one()};
    broken += !check_thm_1_1(p, fam, opts).holds;

    // Perturbing the family itself yields another valid family: still true.
    auto f = generate_univariate(fam, c.n);
    f[1] = f[1] + one();
    CHECK(check_thm_1_1(p, FamilySequence(f), "shifted").holds);
  }
  CHECK(broken * 10 >= 9 * static_cast<int>(cases.size()));
}

TEST_CASE("negative control: wrong parity sign") {
  Gen gen(56);
  int usable = 0, failed = 0;
  while (usable < 30) {
    const SymCase c = random_sym_cases(gen, 1, 12, 6).front();
    const SymParams p = SymParams::make(c.n, c.d, c.r);
    if (p.wrong_branch_sign() == p.sign) continue;
    const auto fam = FamilySpec::random_poly(static_cast<std::uint64_t>(gen.range(0, 1 << 20)), 3);
    CheckOptions flipped;
    flipped.sign_override = p.wrong_branch_sign();
    const bool with_wrong = check_thm_1_1(p, fam, flipped).holds;
    CHECK(check_thm_1_1(p, fam).holds);
    // Both sides == 0 makes the sign irrelevant; such cases say nothing.
    CheckOptions zero_probe;
    zero_probe.sign_override = 0;
    if (check_thm_1_1(p, fam, zero_probe).holds) continue;
    ++usable;
    failed += !with_wrong;
  }
  CHECK(failed * 10 >= 9 * usable);
}

TEST_CASE("adding c * Phi_n to the left side is detected") {
  Gen gen(57);
  for (const auto& c : random_sym_cases(gen, 20, 10, 5)) {
    Coeff k = gen.rational();
    if (k == 0) k = 2;
    CheckOptions opts;
    opts.lhs_addend = k * cyclotomic(c.n);
    CHECK_FALSE(check_thm_1_1(SymParams::make(c.n, c.d, c.r), FamilySpec::ones(), opts).holds);
    CHECK_FALSE(check_thm_1_2(SymParams::make(c.n, c.d, c.r), FamilySpec::ones(), opts).holds);
  }
}
