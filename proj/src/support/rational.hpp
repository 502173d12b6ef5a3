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

#pragma once

#include <string>
#include <string_view>

#include "support/bigint.hpp"

namespace qcv::num {

/// Exact rational number; denominator positive and in lowest terms.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(BigInt n, BigInt d);                   // throws on zero denominator
  Rational(std::int64_t n, std::int64_t d) : Rational(BigInt(n), BigInt(d)) {}

  /// Exact value of a finite double (every finite double is dyadic).
  static Rational from_double_exact(double x);
  /// Parses "p", "-p", "p/q".
  static Rational parse(std::string_view s);

  int sign() const { return num_.sign(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_.is_one(); }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);  // throws on /0
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  static int compare(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return compare(a, b) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return compare(a, b) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return compare(a, b) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return compare(a, b) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return compare(a, b) >= 0; }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  std::string to_string() const;  // "p" or "p/q"
  double to_double() const;

 private:
  void normalize();
  BigInt num_;
  BigInt den_;
};

/// Best rational approximation p/q of x with q <= max_den (continued
/// fractions). Returns true and writes the result only when |x - p/q| <= tol.
bool reconstruct_rational(double x, std::uint64_t max_den, double tol, Rational& out);

}  // namespace qcv::num
