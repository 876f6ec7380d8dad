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

#include "qcong/bipoly.hpp"

#include <cctype>

#include "qcong/errors.hpp"

namespace qcong {

BiPoly::BiPoly(const LaurentPoly& constant) {
  if (!constant.is_zero()) coeffs_.emplace(0, constant);
}

BiPoly BiPoly::x_power(Exponent j, const LaurentPoly& c) {
  if (j < 0) throw std::invalid_argument("BiPoly: negative power of x");
  BiPoly out;
  out.set(j, c);
  return out;
}

void BiPoly::set(Exponent j, LaurentPoly c) {
  if (c.is_zero()) {
    coeffs_.erase(j);
  } else {
    coeffs_.insert_or_assign(j, std::move(c));
  }
}

LaurentPoly BiPoly::coeff(Exponent j) const {
  auto it = coeffs_.find(j);
  return it == coeffs_.end() ? LaurentPoly() : it->second;
}

Exponent BiPoly::x_degree() const {
  if (coeffs_.empty()) throw std::domain_error("x-degree of the zero polynomial");
  return coeffs_.rbegin()->first;
}

BiPoly BiPoly::operator-() const {
  BiPoly out;
  for (const auto& [j, c] : coeffs_) out.coeffs_.emplace(j, -c);
  return out;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly out = a;
  for (const auto& [j, c] : b.coeffs_) out.set(j, out.coeff(j) + c);
  return out;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [i, ca] : a.coeffs_) {
    for (const auto& [j, cb] : b.coeffs_) out.set(i + j, out.coeff(i + j) + ca * cb);
  }
  return out;
}

BiPoly operator*(const LaurentPoly& c, const BiPoly& p) {
  BiPoly out;
  if (c.is_zero()) return out;
  for (const auto& [j, cj] : p.coeffs_) out.set(j, c * cj);
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) { return *this = *this + rhs; }
BiPoly& BiPoly::operator-=(const BiPoly& rhs) { return *this = *this - rhs; }
BiPoly& BiPoly::operator*=(const BiPoly& rhs) { return *this = *this * rhs; }

BiPoly shift(const BiPoly& p, Exponent e) { return LaurentPoly::q_power(e) * p; }

BiPoly substitute_power(const BiPoly& p, Exponent t) {
  BiPoly out;
  for (const auto& [j, c] : p.coeffs()) out += BiPoly::x_power(j, substitute_power(c, t));
  return out;
}

BiPoly scale_x(const BiPoly& p, Exponent e) {
  BiPoly out;
  for (const auto& [j, c] : p.coeffs()) out += BiPoly::x_power(j, shift(c, e * j));
  return out;
}

std::string to_string(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [j, c] : p.coeffs()) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c) + ")*x^" + std::to_string(j);
  }
  return out;
}

BiPoly parse_bipoly(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.find('x') == std::string_view::npos) return BiPoly(parse_laurent(text));

  BiPoly out;
  std::size_t pos = 0;
  while (true) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size() || text[pos] != '(') {
      throw ParseError("bivariate term must look like (<laurent>)*x^<j>");
    }
    const std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) throw ParseError("unbalanced parenthesis");
    LaurentPoly c = parse_laurent(text.substr(pos + 1, close - pos - 1));
    pos = close + 1;
    const std::string_view rest = text.substr(pos);
    if (rest.substr(0, 3) != "*x^") {
      throw ParseError("expected '*x^' after coefficient");
    }
    pos += 3;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ParseError("expected power of x");
    out += BiPoly::x_power(std::stoll(std::string(text.substr(start, pos - start))), c);
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    if (text[pos] != '+') throw ParseError("expected '+' between bivariate terms");
    ++pos;
  }
  return out;
}

}  // namespace qcong
