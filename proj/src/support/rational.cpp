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

#include "support/rational.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qcv::num {

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  BigInt g = BigInt::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

Rational Rational::from_double_exact(double x) {
  if (!std::isfinite(x)) throw std::domain_error("Rational: non-finite double");
  if (x == 0.0) return Rational();
  int exp = 0;
  double frac = std::frexp(x, &exp);          // x = frac * 2^exp, 0.5 <= |frac| < 1
  auto mant = static_cast<std::int64_t>(std::ldexp(frac, 53));  // exact integer
  int e2 = exp - 53;
  BigInt n(mant);
  if (e2 >= 0) return Rational(n * BigInt::pow2(static_cast<unsigned>(e2)), BigInt(1));
  return Rational(std::move(n), BigInt::pow2(static_cast<unsigned>(-e2)));
}

Rational Rational::parse(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(BigInt::from_decimal(s), BigInt(1));
  return Rational(BigInt::from_decimal(s.substr(0, slash)),
                  BigInt::from_decimal(s.substr(slash + 1)));
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

int Rational::compare(const Rational& a, const Rational& b) {
  return BigInt::compare(a.num_ * b.den_, b.num_ * a.den_);
}

std::string Rational::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

double Rational::to_double() const {
  if (num_.is_zero()) return 0.0;
  // quotient of scaled magnitudes: immune to overflow of either side alone
  std::int64_t en = 0, ed = 0;
  double mn = num_.scaled_magnitude(en);
  double md = den_.scaled_magnitude(ed);
  std::int64_t shift = en - ed;
  if (shift > 1100) return num_.sign() > 0 ? HUGE_VAL : -HUGE_VAL;
  if (shift < -1100) return 0.0;
  double q = std::ldexp(mn / md, static_cast<int>(shift));
  return num_.sign() < 0 ? -q : q;
}

bool reconstruct_rational(double x, std::uint64_t max_den, double tol, Rational& out) {
  if (!std::isfinite(x)) return false;
  double target = x;
  // continued fraction expansion with convergents p/q
  std::int64_t p0 = 1, q0 = 0;
  double r = target;
  std::int64_t a = static_cast<std::int64_t>(std::floor(r));
  std::int64_t p1 = a, q1 = 1;
  for (int iter = 0; iter < 64; ++iter) {
    double approx = static_cast<double>(p1) / static_cast<double>(q1);
    if (std::abs(approx - target) <= tol) {
      out = Rational(p1, q1);
      return true;
    }
    double frac = r - std::floor(r);
    if (frac < 1e-15) break;
    r = 1.0 / frac;
    a = static_cast<std::int64_t>(std::floor(r));
    std::int64_t p2 = a * p1 + p0;
    std::int64_t q2 = a * q1 + q0;
    if (q2 <= 0 || static_cast<std::uint64_t>(q2) > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
  }
  double approx = static_cast<double>(p1) / static_cast<double>(q1);
  if (q1 > 0 && static_cast<std::uint64_t>(q1) <= max_den && std::abs(approx - target) <= tol) {
    out = Rational(p1, q1);
    return true;
  }
  return false;
}

}  // namespace qcv::num
