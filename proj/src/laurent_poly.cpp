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

#include "qcong/laurent_poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "qcong/errors.hpp"

namespace qcong {
namespace {

using Term = LaurentPoly::Term;

Exponent checked_add(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("q-exponent overflow in addition");
  return out;
}

Exponent checked_mul(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("q-exponent overflow in multiplication");
  return out;
}

bool is_integer(const Coeff& c) { return mpz_cmp_ui(c.get_den_mpz_t(), 1) == 0; }

// Dense accumulation is used whenever the product's exponent span is not much
// larger than the number of term pairs.
bool prefer_dense(std::size_t span, std::size_t pairs) { return span <= 4 * pairs + 256; }

template <class Acc>
std::vector<Term> compact_dense(std::vector<Acc>& acc, Exponent lo) {
  std::vector<Term> out;
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (sgn(acc[i]) != 0) out.push_back({lo + static_cast<Exponent>(i), Coeff(acc[i])});
  }
  return out;
}

Coeff rational_pow(const Coeff& x, Exponent e) {
  if (e == 0) return Coeff(1);
  mpz_class num, den;
  const auto k = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), k);
  Coeff out = e > 0 ? Coeff(num, den) : Coeff(den, num);
  out.canonicalize();
  return out;
}

}  // namespace

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.push_back({0, Coeff(constant)});
}

LaurentPoly::LaurentPoly(const Coeff& constant) {
  if (sgn(constant) != 0) terms_.push_back({0, constant});
}

LaurentPoly LaurentPoly::monomial(const Coeff& c, Exponent e) {
  if (sgn(c) == 0) return {};
  return LaurentPoly(std::vector<Term>{{e, c}});
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.exp < b.exp; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
  for (auto& t : out) t.coeff.canonicalize();
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::from_dense(std::span<const Coeff> dense, Exponent lowest) {
  std::vector<Term> out;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (sgn(dense[i]) != 0) {
      Coeff c = dense[i];
      c.canonicalize();
      out.push_back({checked_add(lowest, static_cast<Exponent>(i)), std::move(c)});
    }
  }
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::from_ints(std::initializer_list<long> dense, Exponent lowest) {
  std::vector<Coeff> cs;
  for (long v : dense) cs.emplace_back(v);
  return from_dense(cs, lowest);
}

Exponent LaurentPoly::degree() const {
  if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
  return terms_.back().exp;
}

Exponent LaurentPoly::valuation() const {
  if (terms_.empty()) throw std::domain_error("valuation of the zero polynomial");
  return terms_.front().exp;
}

const Coeff& LaurentPoly::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return terms_.back().coeff;
}

Coeff LaurentPoly::coeff(Exponent e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, Exponent x) { return t.exp < x; });
  if (it != terms_.end() && it->exp == e) return it->coeff;
  return Coeff(0);
}

bool LaurentPoly::is_integral() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return is_integer(t.coeff); });
}

Coeff LaurentPoly::evaluate(const Coeff& x) const {
  if (sgn(x) == 0 && !is_ordinary()) throw std::domain_error("evaluating a Laurent polynomial at 0");
  Coeff sum = 0;
  for (const auto& t : terms_) sum += t.coeff * rational_pow(x, t.exp);
  return sum;
}

LaurentPoly LaurentPoly::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = -t.coeff;
  return LaurentPoly(std::move(out));
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  std::vector<Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() && j != b.terms_.end()) {
    if (i->exp < j->exp) {
      out.push_back(*i++);
    } else if (j->exp < i->exp) {
      out.push_back(*j++);
    } else {
      Coeff c = i->coeff + j->coeff;
      if (sgn(c) != 0) out.push_back({i->exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), i, a.terms_.end());
  out.insert(out.end(), j, b.terms_.end());
  return LaurentPoly(std::move(out));
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const Coeff& c, const LaurentPoly& p) {
  if (sgn(c) == 0) return {};
  std::vector<Term> out = p.terms_;
  for (auto& t : out) t.coeff *= c;
  return LaurentPoly(std::move(out));
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return shift(a.terms_.front().coeff * b, a.terms_.front().exp);
  if (b.size() == 1) return shift(b.terms_.front().coeff * a, b.terms_.front().exp);

  const Exponent lo = checked_add(a.terms_.front().exp, b.terms_.front().exp);
  const Exponent hi = checked_add(a.terms_.back().exp, b.terms_.back().exp);
  const auto span = static_cast<std::size_t>(hi - lo) + 1;
  const bool dense = prefer_dense(span, a.size() * b.size());

  if (a.is_integral() && b.is_integral()) {
    if (dense) {
      const Exponent a_lo = a.terms_.front().exp;
      const Exponent b_lo = b.terms_.front().exp;
      std::vector<mpz_class> acc(span);
      for (const auto& ta : a.terms_) {
        mpz_class* row = acc.data() + (ta.exp - a_lo);
        mpz_srcptr x = ta.coeff.get_num_mpz_t();
        for (const auto& tb : b.terms_) {
          mpz_addmul(row[tb.exp - b_lo].get_mpz_t(), x, tb.coeff.get_num_mpz_t());
        }
      }
      return LaurentPoly(compact_dense(acc, lo));
    }
    std::map<Exponent, mpz_class> acc;
    for (const auto& ta : a.terms_) {
      for (const auto& tb : b.terms_) {
        mpz_addmul(acc[ta.exp + tb.exp].get_mpz_t(), ta.coeff.get_num_mpz_t(), tb.coeff.get_num_mpz_t());
      }
    }
    std::vector<Term> out;
    for (auto& [e, c] : acc) {
      if (sgn(c) != 0) out.push_back({e, Coeff(c)});
    }
    return LaurentPoly(std::move(out));
  }

  if (dense) {
    std::vector<Coeff> acc(span);
    for (const auto& ta : a.terms_) {
      for (const auto& tb : b.terms_) {
        acc[static_cast<std::size_t>(ta.exp + tb.exp - lo)] += ta.coeff * tb.coeff;
      }
    }
    return LaurentPoly(compact_dense(acc, lo));
  }
  std::map<Exponent, Coeff> acc;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) acc[ta.exp + tb.exp] += ta.coeff * tb.coeff;
  }
  std::vector<Term> out;
  for (auto& [e, c] : acc) {
    if (sgn(c) != 0) out.push_back({e, std::move(c)});
  }
  return LaurentPoly(std::move(out));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) { return *this = *this + rhs; }
LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this = *this - rhs; }
LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly shift(const LaurentPoly& p, Exponent e) {
  std::vector<Term> out = p.terms_;
  for (auto& t : out) t.exp = checked_add(t.exp, e);
  return LaurentPoly(std::move(out));
}

LaurentPoly substitute_power(const LaurentPoly& p, Exponent t) {
  if (t == 0) throw std::invalid_argument("substitute_power: exponent scale must be nonzero");
  std::vector<Term> out = p.terms_;
  for (auto& term : out) term.exp = checked_mul(term.exp, t);
  if (t < 0) std::reverse(out.begin(), out.end());
  return LaurentPoly(std::move(out));
}

LaurentPoly mul_one_minus(const LaurentPoly& p, Exponent e, const Coeff& c) {
  if (sgn(c) == 0) return p;
  std::vector<Term> moved = p.terms_;
  for (auto& t : moved) {
    t.exp = checked_add(t.exp, e);
    t.coeff = -(t.coeff * c);
  }
  return p + LaurentPoly(std::move(moved));
}

LaurentPoly pow(const LaurentPoly& p, unsigned k) {
  LaurentPoly result(1L);
  LaurentPoly base = p;
  while (k != 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k != 0) base *= base;
  }
  return result;
}

DivRem divrem(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (!a.is_ordinary() || !b.is_ordinary()) {
    throw std::domain_error("divrem is defined on ordinary polynomials; use divrem_laurent");
  }
  if (a.is_zero() || a.degree() < b.degree()) return {LaurentPoly(), a};

  const Exponent db = b.degree();
  const Exponent da = a.degree();
  const auto& bt = b.terms();
  std::vector<Term> quotient;

  const bool integral = is_integer(b.leading_coeff()) && b.leading_coeff() == 1 && a.is_integral() &&
                        b.is_integral();
  if (integral) {
    std::vector<mpz_class> r(static_cast<std::size_t>(da) + 1);
    for (const auto& t : a.terms()) r[static_cast<std::size_t>(t.exp)] = t.coeff.get_num();
    for (Exponent i = da; i >= db; --i) {
      mpz_class c = r[static_cast<std::size_t>(i)];
      if (sgn(c) == 0) continue;
      quotient.push_back({i - db, Coeff(c)});
      for (const auto& t : bt) {
        auto& slot = r[static_cast<std::size_t>(t.exp + i - db)];
        mpz_submul(slot.get_mpz_t(), c.get_mpz_t(), t.coeff.get_num_mpz_t());
      }
    }
    std::reverse(quotient.begin(), quotient.end());
    r.resize(static_cast<std::size_t>(db));
    std::vector<Term> rem;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (sgn(r[i]) != 0) rem.push_back({static_cast<Exponent>(i), Coeff(r[i])});
    }
    return {LaurentPoly::from_terms(std::move(quotient)), LaurentPoly::from_terms(std::move(rem))};
  }

  std::vector<Coeff> r(static_cast<std::size_t>(da) + 1);
  for (const auto& t : a.terms()) r[static_cast<std::size_t>(t.exp)] = t.coeff;
  const Coeff lead = b.leading_coeff();
  for (Exponent i = da; i >= db; --i) {
    if (sgn(r[static_cast<std::size_t>(i)]) == 0) continue;
    Coeff c = r[static_cast<std::size_t>(i)] / lead;
    for (const auto& t : bt) r[static_cast<std::size_t>(t.exp + i - db)] -= c * t.coeff;
    quotient.push_back({i - db, std::move(c)});
  }
  r.resize(static_cast<std::size_t>(db));
  return {LaurentPoly::from_terms(std::move(quotient)), LaurentPoly::from_dense(r, 0)};
}

std::pair<LaurentPoly, Exponent> strip_valuation(const LaurentPoly& p) {
  if (p.is_zero()) return {LaurentPoly(), 0};
  const Exponent v = p.valuation();
  return {shift(p, -v), v};
}

DivRem divrem_laurent(const LaurentPoly& a, const LaurentPoly& b) {
  return divrem(strip_valuation(a).first, strip_valuation(b).first);
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return {};
  auto [a0, va] = strip_valuation(a);
  auto [b0, vb] = strip_valuation(b);
  auto [quot, rem] = divrem(a0, b0);
  if (!rem.is_zero()) {
    throw InvariantViolation("exact_divide: " + to_string(a) + " is not divisible by " + to_string(b));
  }
  return shift(quot, va - vb);
}

bool divides(const LaurentPoly& b, const LaurentPoly& a) {
  if (a.is_zero()) return true;
  if (b.is_zero()) return false;
  return divrem_laurent(a, b).remainder.is_zero();
}

ExtGcd ext_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("ext_gcd of two zero polynomials");
  auto [a0, va] = strip_valuation(a);
  auto [b0, vb] = strip_valuation(b);

  LaurentPoly r0 = a0, r1 = b0;
  LaurentPoly s0(1L), s1;
  LaurentPoly t0, t1(1L);
  while (!r1.is_zero()) {
    auto [quot, rem] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    LaurentPoly s2 = s0 - quot * s1;
    LaurentPoly t2 = t0 - quot * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const Coeff inv = 1 / r0.leading_coeff();
  return {inv * r0, shift(inv * s0, -va), shift(inv * t0, -vb)};
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) { return ext_gcd(a, b).g; }

LaurentPoly lcm(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return exact_divide(a * b, gcd(a, b));
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& t : p.terms()) {
    if (!out.empty()) out += " + ";
    out += t.coeff.get_str();
    out += "*q^";
    out += std::to_string(t.exp);
  }
  return out;
}

namespace {

class LaurentParser {
 public:
  explicit LaurentParser(std::string_view text) : text_(text) {}

  LaurentPoly parse() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    std::vector<Term> terms;
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (!first) {
        if (peek() == '+') {
          ++pos_;
        } else if (peek() == '-') {
          sign = -1;
          ++pos_;
        } else {
          fail("expected '+' or '-'");
        }
        skip_ws();
      }
      while (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -sign;
        ++pos_;
        skip_ws();
      }
      Term t = parse_term();
      if (sign < 0) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      first = false;
      skip_ws();
      if (at_end()) break;
    }
    return LaurentPoly::from_terms(std::move(terms));
  }

 private:
  Term parse_term() {
    Coeff c(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = parse_rational();
      have_coeff = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (peek() != 'q') fail("expected 'q' after '*'");
      }
    }
    Exponent e = 0;
    if (peek() == 'q') {
      ++pos_;
      e = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        e = parse_signed();
      }
    } else if (!have_coeff) {
      fail("expected a coefficient or 'q'");
    }
    return {e, std::move(c)};
  }

  Coeff parse_rational() {
    mpz_class num(parse_digits());
    mpz_class den(1);
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      den = mpz_class(parse_digits());
      if (den == 0) fail("zero denominator");
    }
    Coeff c(num, den);
    c.canonicalize();
    return c;
  }

  Exponent parse_signed() {
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = peek() == '-';
      ++pos_;
    }
    const std::string digits = parse_digits();
    Exponent v = 0;
    for (char ch : digits) {
      v = checked_add(checked_mul(v, 10), ch - '0');
    }
    return neg ? -v : v;
  }

  std::string parse_digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  bool at_end() const { return pos_ >= text_.size(); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse polynomial at offset " + std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text) {
  if (text == "0") return {};
  return LaurentParser(text).parse();
}

}  // namespace qcong
