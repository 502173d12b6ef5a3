// Copyright 2026 The qcv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ks/quadrat.hpp"

#include <cmath>
#include <stdexcept>

namespace qcv::ks {

int QuadRat::sign() const {
  if (b_.is_zero()) return a_.sign();
  if (a_.is_zero()) return b_.sign();
  if (a_.sign() == b_.sign()) return a_.sign();
  // opposite signs: |a| vs |b|*sqrt(2), decided via a^2 vs 2 b^2
  int c = Rational::compare(a_ * a_, Rational(2) * b_ * b_);
  if (c == 0) throw std::logic_error("QuadRat: a^2 == 2 b^2 with nonzero parts");
  return c > 0 ? a_.sign() : b_.sign();
}

QuadRat operator+(const QuadRat& x, const QuadRat& y) {
  return QuadRat(x.a_ + y.a_, x.b_ + y.b_);
}

QuadRat operator-(const QuadRat& x, const QuadRat& y) {
  return QuadRat(x.a_ - y.a_, x.b_ - y.b_);
}

QuadRat operator*(const QuadRat& x, const QuadRat& y) {
  // (a + b s)(c + d s) = ac + 2bd + (ad + bc) s,  s = sqrt(2)
  return QuadRat(x.a_ * y.a_ + Rational(2) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
}

QuadRat operator/(const QuadRat& x, const QuadRat& y) {
  if (y.is_zero()) throw std::domain_error("QuadRat: division by zero");
  // multiply by the conjugate: 1/(c + d s) = (c - d s)/(c^2 - 2 d^2)
  Rational norm = y.a_ * y.a_ - Rational(2) * y.b_ * y.b_;
  QuadRat conj(y.a_, -y.b_);
  QuadRat prod = x * conj;
  return QuadRat(prod.a_ / norm, prod.b_ / norm);
}

double QuadRat::to_double() const {
  return a_.to_double() + b_.to_double() * std::sqrt(2.0);
}

std::string QuadRat::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  auto surd = [&](const Rational& c) -> std::string {
    Rational mag = c.abs();
    std::string s = c.sign() < 0 ? "-" : "";
    if (!(mag == Rational(1))) s += mag.to_string();
    return s + "r2";
  };
  if (a_.is_zero()) return surd(b_);
  std::string s = a_.to_string();
  s += b_.sign() < 0 ? "-" : "+";
  Rational mag = b_.abs();
  if (!(mag == Rational(1))) s += mag.to_string();
  return s + "r2";
}

namespace {

Rational parse_rational_checked(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty number");
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  bool seen_digit = false, seen_slash = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c >= '0' && c <= '9') {
      seen_digit = true;
    } else if (c == '/' && seen_digit && !seen_slash) {
      seen_slash = true;
      seen_digit = false;
    } else {
      throw std::invalid_argument("bad number '" + std::string(s) + "'");
    }
  }
  if (!seen_digit) throw std::invalid_argument("bad number '" + std::string(s) + "'");
  Rational r = Rational::parse(s);
  if (seen_slash) {
    auto slash = s.find('/');
    if (BigInt::from_decimal(s.substr(slash + 1)).sign() <= 0)
      throw std::invalid_argument("nonpositive denominator in '" + std::string(s) + "'");
  }
  return r;
}

Rational parse_coefficient(std::string_view s) {
  if (s.empty() || s == "+") return Rational(1);
  if (s == "-") return Rational(-1);
  return parse_rational_checked(s);
}

}  // namespace

QuadRat QuadRat::parse(std::string_view token) {
  if (token.empty()) throw std::invalid_argument("empty coordinate");
  auto rpos = token.find('r');
  if (rpos == std::string_view::npos) {
    return QuadRat(parse_rational_checked(token), Rational(0));
  }
  if (token.substr(rpos) != "r2") {
    throw std::invalid_argument("unknown surd '" + std::string(token.substr(rpos)) + "'");
  }
  std::string_view head = token.substr(0, rpos);
  // a sign not in first position separates "rational +/- coefficient r2"
  std::size_t split = std::string_view::npos;
  for (std::size_t i = 1; i < head.size(); ++i) {
    if (head[i] == '+' || head[i] == '-') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) {
    return QuadRat(Rational(0), parse_coefficient(head));
  }
  return QuadRat(parse_rational_checked(head.substr(0, split)),
                 parse_coefficient(head.substr(split)));
}

}  // namespace qcv::ks
