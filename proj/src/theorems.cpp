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

#include "qcong/theorems.hpp"

#include <chrono>
#include <numeric>
#include <tuple>
#include <type_traits>
#include <variant>

#include "memo_table.hpp"
#include "qcong/congruence.hpp"
#include "qcong/errors.hpp"
#include "qcong/qcalc.hpp"
#include "qcong/transforms.hpp"

namespace qcong {
namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

std::int64_t binom2(std::int64_t x) { return x * (x - 1) / 2; }

int parity_sign(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

template <class T>
struct Sides {
  RatExpr<T> lhs;
  RatExpr<T> rhs;
};

CommonDenominatorSeq<LaurentPoly> as_common(const std::vector<LaurentPoly>& f) { return {f, LaurentPoly(1L)}; }
CommonDenominatorSeq<BiPoly> as_common(const std::vector<BiPoly>& f) { return {f, LaurentPoly(1L)}; }
CommonDenominatorSeq<BiPoly> as_common(const std::vector<RatBi>& f) {
  return to_common_denominator(std::span<const RatBi>(f));
}

std::size_t sequence_size(const FamilySequence& f) {
  return std::visit([](const auto& v) { return v.size(); }, f);
}

// T_k = numer[k] / den with den = (q^d;q^d)_{n-1}^2, i.e.
// numer[k] = (q^r;q^d)_k (q^{d-r};q^d)_k ((q^{d(k+1)};q^d)_{n-1-k})^2.
struct SymKernel {
  std::vector<LaurentPoly> numer;
  LaurentPoly den;
};

const SymKernel& sym_kernel(std::int64_t n, std::int64_t d, std::int64_t r) {
  static detail::MemoTable<std::tuple<std::int64_t, std::int64_t, std::int64_t>, SymKernel> memo;
  const auto key = std::make_tuple(n, d, r);
  if (const auto* hit = memo.find(key)) return *hit;

  const auto len = static_cast<std::size_t>(n);
  std::vector<LaurentPoly> suffix(len);
  suffix[len - 1] = LaurentPoly(1L);
  for (std::size_t k = len - 1; k-- > 0;) {
    suffix[k] = mul_one_minus(suffix[k + 1], d * static_cast<std::int64_t>(k + 1));
  }
  SymKernel kernel;
  LaurentPoly prefix(1L);
  for (std::size_t k = 0; k < len; ++k) {
    kernel.numer.push_back(prefix * (suffix[k] * suffix[k]));
    const auto kk = static_cast<std::int64_t>(k);
    prefix = mul_one_minus(mul_one_minus(prefix, r + kk * d), d - r + kk * d);
  }
  kernel.den = suffix[0] * suffix[0];
  return memo.insert(key, std::move(kernel));
}

template <class T>
RatExpr<T> add_polynomial(const RatExpr<T>& x, const LaurentPoly& addend) {
  if (addend.is_zero()) return x;
  return RatExpr<T>(x.num() + T(addend * x.den()), x.den());
}

std::string residual_text(const LaurentPoly& r) { return to_string(r); }
std::string residual_text(const BiPoly& r) { return to_string(r); }

template <class T>
void decide(CheckReport& report, const Sides<T>& sides, std::int64_t n, const CheckOptions& opts) {
  const auto residual = congruence_residual(add_polynomial(sides.lhs, opts.lhs_addend), sides.rhs, n, 2);
  report.holds = residual.is_zero();
  if (!report.holds) report.residual = residual_text(residual);
}

void fill_sym(CheckReport& report, const char* theorem, const SymParams& p, const std::string& family, int sign) {
  report.theorem = theorem;
  report.family = family;
  report.params = {{"n", p.n}, {"d", p.d}, {"r", p.r}};
  report.a = p.a;
  report.exponent_name = "E";
  report.exponent = p.exponent;
  report.sign = sign;
  report.branch = p.even_branch() ? "even" : "odd";
}

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

template <class T>
T lhs_entry(const CommonDenominatorSeq<T>& f, const std::vector<LaurentPoly>& delta, std::size_t k) {
  if (k >= delta.size() || delta[k].is_zero()) return f.nums[k];
  return f.nums[k] + T(delta[k] * f.den);
}

template <class T>
Sides<T> thm_1_1_sides(const SymParams& p, const CommonDenominatorSeq<T>& f, int sign,
                       const std::vector<LaurentPoly>& delta) {
  const SymKernel& kernel = sym_kernel(p.n, p.d, p.r);
  const auto fhat = hat(f.nums);
  T lhs, rhs;
  for (std::size_t k = 0; k < f.nums.size(); ++k) {
    const LaurentPoly w = shift(kernel.numer[k], p.d * static_cast<std::int64_t>(k));
    lhs += w * substitute_power(lhs_entry(f, delta, k), p.d);
    rhs += w * substitute_power(fhat[k], p.d);
  }
  const LaurentPoly den = kernel.den * substitute_power(f.den, p.d);
  return {RatExpr<T>(shift(lhs, p.exponent), den), RatExpr<T>(LaurentPoly(static_cast<long>(sign)) * rhs, den)};
}

template <class T>
Sides<T> thm_1_2_sides(const SymParams& p, const CommonDenominatorSeq<T>& f, int sign,
                       const std::vector<LaurentPoly>& delta) {
  const SymKernel& kernel = sym_kernel(p.n, p.d, p.r);
  const auto ftilde = tilde(f.nums);
  T lhs, rhs;
  for (std::size_t k = 0; k < f.nums.size(); ++k) {
    lhs += kernel.numer[k] * substitute_power(lhs_entry(f, delta, k), p.d);
    rhs += kernel.numer[k] * substitute_power(ftilde[k], p.d);
  }
  const LaurentPoly den = kernel.den * substitute_power(f.den, p.d);
  return {RatExpr<T>(lhs, den), RatExpr<T>(LaurentPoly::monomial(sign, p.exponent) * rhs, den)};
}

LaurentPoly alpha_weight(std::int64_t alpha, std::int64_t k) {
  return shift(qbinom_int(alpha, k) * qbinom_int(-1 - alpha, k), k * k + k);
}

template <class T>
Sides<T> thm_2_1_sides(std::int64_t alpha, std::int64_t exponent, int sign, const CommonDenominatorSeq<T>& f,
                       const std::vector<LaurentPoly>& delta) {
  const auto fhat = hat(f.nums);
  T lhs, rhs;
  for (std::size_t k = 0; k < f.nums.size(); ++k) {
    const LaurentPoly w = alpha_weight(alpha, static_cast<std::int64_t>(k));
    lhs += w * lhs_entry(f, delta, k);
    rhs += w * fhat[k];
  }
  return {RatExpr<T>(LaurentPoly::monomial(sign, exponent) * lhs, f.den), RatExpr<T>(rhs, f.den)};
}

void require_length(const FamilySequence& f, std::int64_t n) {
  if (sequence_size(f) != static_cast<std::size_t>(n)) {
    throw InvalidParameters("family sequence must have exactly n = " + std::to_string(n) + " entries");
  }
}

bool is_odd_prime(std::int64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::int64_t i = 3; i * i <= p; i += 2) {
    if (p % i == 0) return false;
  }
  return true;
}

// C(alpha, k) = alpha (alpha-1) ... (alpha-k+1) / k!
Coeff generalized_binomial(const Coeff& alpha, std::int64_t k) {
  Coeff out = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    out *= alpha - i;
    out /= i + 1;
  }
  return out;
}

}  // namespace

int SymParams::wrong_branch_sign() const noexcept {
  return even_branch() ? parity_sign(a) : parity_sign(a + (a * d + r) / n);
}

SymParams SymParams::make(std::int64_t n, std::int64_t d, std::int64_t r) {
  if (n < 2) throw InvalidParameters("need n >= 2");
  if (d < 1) throw InvalidParameters("need d >= 1");
  if (std::gcd(n, d) != 1) throw InvalidParameters("need gcd(n, d) = 1");
  SymParams p;
  p.n = n;
  p.d = d;
  p.r = r;
  p.a = -1;
  for (std::int64_t a = 0; a < n; ++a) {
    if ((a * d + r) % n == 0) {
      p.a = a;
      break;
    }
  }
  if (p.a < 0) throw InvariantViolation("no a in [0, n) with a*d + r == 0 (mod n)");
  const std::int64_t t = p.a * d + r;
  const std::int64_t twice = t * (n - 1 - 2 * p.a);
  if (twice % 2 != 0) throw InvariantViolation("exponent (ad+r)(n-1-2a)/2 is not an integer");
  p.exponent = d * (p.a * (p.a + 1) / 2) + twice / 2;
  p.sign = (n % 2 == 1) ? parity_sign(p.a) : parity_sign(p.a + t / n);
  return p;
}

int AlphaParams::wrong_branch_sign() const noexcept {
  return even_branch() ? parity_sign(a) : parity_sign(a + s);
}

AlphaParams AlphaParams::make(std::int64_t n, std::int64_t a, std::int64_t s) {
  if (n < 2) throw InvalidParameters("need n >= 2");
  if (a < 0 || a >= n) throw InvalidParameters("need 0 <= a <= n-1");
  AlphaParams p;
  p.n = n;
  p.a = a;
  p.s = s;
  p.alpha = a + s * n;
  p.exponent = a * (a + 1) / 2 + s * n * a - s * binom2(n);
  p.sign = (n % 2 == 1) ? parity_sign(a) : parity_sign(a + s);
  return p;
}

CheckReport check_thm_1_1(const SymParams& p, const FamilySequence& f, const std::string& label,
                          const CheckOptions& opts) {
  Stopwatch clock;
  require_length(f, p.n);
  if (std::holds_alternative<std::vector<RatBi>>(f)) {
    throw InvalidParameters("rational families are not covered by thm1.1; use thm1.2");
  }
  const int sign = opts.sign_override.value_or(p.sign);
  CheckReport report;
  fill_sym(report, "thm1.1", p, label, sign);
  const auto& delta = opts.lhs_family_delta;
  std::visit(Overloaded{
                 [&](const std::vector<LaurentPoly>& v) {
                   decide(report, thm_1_1_sides(p, as_common(v), sign, delta), p.n, opts);
                 },
                 [&](const std::vector<BiPoly>& v) {
                   decide(report, thm_1_1_sides(p, as_common(v), sign, delta), p.n, opts);
                 },
                 [&](const std::vector<RatBi>&) {},
             },
             f);
  report.wall_ms = clock.elapsed_ms();
  return report;
}

CheckReport check_thm_1_1(const SymParams& p, const FamilySpec& fam, const CheckOptions& opts) {
  if (fam.tag() == VariableTag::kRational) {
    throw InvalidParameters("rational families are not covered by thm1.1; use thm1.2");
  }
  return check_thm_1_1(p, generate(fam, p.n), fam.name(), opts);
}

CheckReport check_thm_1_2(const SymParams& p, const FamilySequence& f, const std::string& label,
                          const CheckOptions& opts) {
  Stopwatch clock;
  require_length(f, p.n);
  const int sign = opts.sign_override.value_or(p.sign);
  CheckReport report;
  fill_sym(report, "thm1.2", p, label, sign);
  std::visit(
      [&](const auto& v) {
        decide(report, thm_1_2_sides(p, as_common(v), sign, opts.lhs_family_delta), p.n, opts);
      },
      f);
  report.wall_ms = clock.elapsed_ms();
  return report;
}

CheckReport check_thm_1_2(const SymParams& p, const FamilySpec& fam, const CheckOptions& opts) {
  return check_thm_1_2(p, generate(fam, p.n), fam.name(), opts);
}

CheckReport check_thm_2_1(const AlphaParams& p, const FamilySequence& f, const std::string& label,
                          const CheckOptions& opts) {
  Stopwatch clock;
  require_length(f, p.n);
  const int sign = opts.sign_override.value_or(p.sign);
  CheckReport report;
  report.theorem = "thm2.1";
  report.family = label;
  report.params = {{"n", p.n}, {"a", p.a}, {"s", p.s}};
  report.a = p.a;
  report.exponent_name = "F";
  report.exponent = p.exponent;
  report.sign = sign;
  report.branch = p.even_branch() ? "even" : "odd";
  std::visit(
      [&](const auto& v) {
        const auto sides = thm_2_1_sides(p.alpha, p.exponent, sign, as_common(v), opts.lhs_family_delta);
        decide(report, sides, p.n, opts);
      },
      f);
  report.wall_ms = clock.elapsed_ms();
  return report;
}

CheckReport check_thm_2_1(const AlphaParams& p, const FamilySpec& fam, const CheckOptions& opts) {
  return check_thm_2_1(p, generate(fam, p.n), fam.name(), opts);
}

bool check_s0_identity(std::int64_t n, std::int64_t a, const FamilySpec& fam) {
  const AlphaParams p = AlphaParams::make(n, a, 0);
  return std::visit(
      [&](const auto& v) {
        const auto sides = thm_2_1_sides(p.alpha, a * (a + 1) / 2, parity_sign(a), as_common(v), {});
        return sides.lhs.num() == sides.rhs.num();
      },
      generate(fam, n));
}

bool check_lemma_sn_binom(std::int64_t n, std::int64_t s, std::int64_t j) {
  if (n < 2 || j < 1 || j > n - 1 || s == 0) {
    throw InvalidParameters("lemma-sn needs n >= 2, 1 <= j <= n-1 and s != 0");
  }
  return reduce(qbinom_int(s * n, j), n, 1).is_zero();
}

bool check_lemma_sn_minus1(std::int64_t n, std::int64_t s, std::int64_t j) {
  if (n < 2 || j < 1 || j > n - 1) throw InvalidParameters("lemma-sn1 needs n >= 2 and 1 <= j <= n-1");
  const LaurentPoly target = LaurentPoly::monomial(parity_sign(j - 1), -binom2(j));
  return reduce(qbinom_int(s * n - 1, j - 1) - target, n, 1).is_zero();
}

bool check_even_sign_fact(std::int64_t n) {
  if (n < 2 || n % 2 != 0) throw InvalidParameters("even-sign needs an even n >= 2");
  const LaurentPoly lhs = LaurentPoly::monomial(parity_sign(n - 1), binom2(n));
  return reduce(lhs - LaurentPoly(1L), n, 1).is_zero();
}

bool check_q_chu_vandermonde(std::int64_t a, std::int64_t b, std::int64_t k) {
  LaurentPoly rhs;
  for (std::int64_t j = 0; j <= k; ++j) {
    rhs += shift(qbinom_int(b, j) * qbinom_int(a, k - j), (b - j) * (k - j));
  }
  return qbinom_int(a + b, k) == rhs;
}

bool check_negation_identity(std::int64_t a, std::int64_t k) {
  if (a < 0 || k < 0) throw InvalidParameters("negation identity needs a, k >= 0");
  const LaurentPoly middle = qbinom_int(a + k, a);
  const LaurentPoly left = LaurentPoly::monomial(parity_sign(a), a * k + a * (a + 1) / 2) * qbinom_int(-1 - k, a);
  const LaurentPoly right = LaurentPoly::monomial(parity_sign(k), a * k + k * (k + 1) / 2) * qbinom_int(-1 - a, k);
  return left == middle && middle == qbinom_int(a + k, k) && right == middle;
}

CheckReport check_guo_zeng(const SymParams& p, const CheckOptions& opts) {
  Stopwatch clock;
  const auto f = std::get<std::vector<BiPoly>>(generate(FamilySpec::monomial_x(), p.n));
  const auto fhat = hat(f);
  bool kernel_ok = true;
  for (std::int64_t k = 0; k < p.n; ++k) {
    kernel_ok = kernel_ok && fhat[static_cast<std::size_t>(k)] == qpoch_x(1, k);
  }
  CheckReport report = check_thm_1_1(p, FamilySequence(f), "monomial_x", opts);
  report.theorem = "guo_zeng";
  if (!kernel_ok) {
    report.holds = false;
    report.residual = "hat(x^k) differs from (xq;q)_k";
  }
  report.wall_ms = clock.elapsed_ms();
  return report;
}

namespace {

// sum_k q^{t(k^2+k)} [alpha,k]_{q^t} [-1-alpha,k]_{q^t} (x;q^t)_k / (q^t;q^t)_k over the
// common denominator (q^t;q^t)_{n-1}^3; t_alpha = t * alpha must be an integer.
RatBi sun_p_sum(std::int64_t n, std::int64_t t, std::int64_t t_alpha) {
  const auto len = static_cast<std::size_t>(n);
  std::vector<LaurentPoly> suffix(len);
  suffix[len - 1] = LaurentPoly(1L);
  for (std::size_t k = len - 1; k-- > 0;) {
    suffix[k] = mul_one_minus(suffix[k + 1], t * static_cast<std::int64_t>(k + 1));
  }
  BiPoly num;
  for (std::size_t kk = 0; kk < len; ++kk) {
    const auto k = static_cast<std::int64_t>(kk);
    const LaurentPoly upper = qpoch(t_alpha - t * k + t, t, k) * qpoch(-t_alpha - t * k, t, k);
    const LaurentPoly coeff = shift(upper, t * (k * k + k)) * pow(suffix[kk], 3);
    num += coeff * substitute_power(qpoch_x(0, k), t);
  }
  return RatBi(num, pow(suffix[0], 3));
}

}  // namespace

CheckReport check_sun_p_analogue(const SymParams& p, const CheckOptions& opts) {
  if (p.n < 3 || p.n % 2 == 0) throw InvalidParameters("the P_n analogue is stated for odd n >= 3");
  Stopwatch clock;
  const int sign = opts.sign_override.value_or(p.sign);
  CheckReport report;
  fill_sym(report, "sun_p", p, "sun_p_x", sign);
  const RatBi lhs = sun_p_sum(p.n, p.d, -p.r);
  const RatBi reversed = sun_p_sum(p.n, -p.d, p.r);
  const RatBi rhs(LaurentPoly::monomial(sign, p.exponent) * scale_x(reversed.num(), -p.d), reversed.den());
  decide(report, Sides<BiPoly>{lhs, rhs}, p.n, opts);
  report.wall_ms = clock.elapsed_ms();
  return report;
}

bool check_classical_sun(std::int64_t p, std::int64_t alpha_num, std::int64_t alpha_den,
                         std::span<const std::int64_t> f) {
  if (!is_odd_prime(p)) throw InvalidParameters("classical check needs an odd prime p");
  if (alpha_den == 0) throw InvalidParameters("alpha has zero denominator");
  Coeff alpha(alpha_num, alpha_den);
  alpha.canonicalize();
  const mpz_class P(static_cast<long>(p));
  if (mpz_divisible_p(alpha.get_den_mpz_t(), P.get_mpz_t()) != 0) {
    throw InvalidParameters("alpha is not p-integral");
  }
  if (f.size() < static_cast<std::size_t>(p)) throw InvalidParameters("need at least p sequence entries");

  // <alpha>_p = num * den^{-1} mod p.
  mpz_class inv, residue;
  mpz_invert(inv.get_mpz_t(), alpha.get_den_mpz_t(), P.get_mpz_t());
  residue = alpha.get_num() * inv;
  mpz_fdiv_r(residue.get_mpz_t(), residue.get_mpz_t(), P.get_mpz_t());
  const int sign = mpz_odd_p(residue.get_mpz_t()) ? -1 : 1;

  Coeff diff = 0;
  for (std::int64_t k = 0; k < p; ++k) {
    Coeff fhat = 0;
    for (std::int64_t j = 0; j <= k; ++j) {
      mpz_class c;
      mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(j));
      fhat += ((j % 2 == 0) ? 1 : -1) * Coeff(c) * Coeff(static_cast<long>(f[static_cast<std::size_t>(j)]));
    }
    const Coeff weight = generalized_binomial(alpha, k) * generalized_binomial(-1 - alpha, k);
    if (mpz_divisible_p(weight.get_den_mpz_t(), P.get_mpz_t()) != 0) return false;
    diff += weight * (Coeff(static_cast<long>(f[static_cast<std::size_t>(k)])) - sign * fhat);
  }
  if (sgn(diff) == 0) return true;
  if (mpz_divisible_p(diff.get_den_mpz_t(), P.get_mpz_t()) != 0) return false;
  const mpz_class p2 = P * P;
  return mpz_divisible_p(diff.get_num_mpz_t(), p2.get_mpz_t()) != 0;
}

}  // namespace qcong
