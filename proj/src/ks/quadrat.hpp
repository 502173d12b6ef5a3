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

#include "support/rational.hpp"

namespace qcv::ks {

using num::BigInt;
using num::Rational;

/// Element of the quadratic field Q(sqrt 2), stored as a + b*sqrt(2) with
/// exact rational a, b. Equality, sign and zero tests are exact; sign is
/// decided by rational comparison of a^2 against 2 b^2.
class QuadRat {
 public:
  QuadRat() = default;
  QuadRat(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}
  QuadRat(std::int64_t a) : a_(a) {}  // NOLINT: implicit by design

  static QuadRat sqrt2() { return QuadRat(Rational(0), Rational(1)); }

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }
  int sign() const;

  QuadRat operator-() const { return QuadRat(-a_, -b_); }
  friend QuadRat operator+(const QuadRat& x, const QuadRat& y);
  friend QuadRat operator-(const QuadRat& x, const QuadRat& y);
  friend QuadRat operator*(const QuadRat& x, const QuadRat& y);
  friend QuadRat operator/(const QuadRat& x, const QuadRat& y);  // throws on /0
  QuadRat& operator+=(const QuadRat& o) { return *this = *this + o; }

  friend bool operator==(const QuadRat& x, const QuadRat& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadRat& x, const QuadRat& y) { return !(x == y); }
  /// Total order by real value (exact).
  static int compare(const QuadRat& x, const QuadRat& y) { return (x - y).sign(); }

  double to_double() const;

  /// Canonical text form: "0", "-1/2", "r2", "-3r2", "1/2r2", "1+r2", "2-3r2".
  std::string to_string() const;
  /// Parses the grammar accepted by ray files; throws std::invalid_argument
  /// with a human-readable reason.
  static QuadRat parse(std::string_view token);

 private:
  Rational a_;
  Rational b_;
};

}  // namespace qcv::ks
