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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qcv::num {

/// Arbitrary-precision signed integer (sign + magnitude, base 2^32 limbs).
///
/// Sized for exact field arithmetic over Q(sqrt 2) and exact rational model
/// weights, where operands stay in the hundreds of bits. Not a general
/// bignum: division is binary long division, which is plenty at that scale.
class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t v);  // NOLINT: implicit by design, mirrors int literals

  static BigInt from_decimal(std::string_view s);  // throws std::invalid_argument
  static BigInt pow2(unsigned k);

  bool is_zero() const { return limbs_.empty(); }
  int sign() const { return limbs_.empty() ? 0 : (negative_ ? -1 : 1); }
  bool is_one() const { return !negative_ && limbs_.size() == 1 && limbs_[0] == 1; }

  BigInt operator-() const;
  BigInt abs() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);

  /// Quotient truncated toward zero; remainder has the sign of the dividend.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
  BigInt operator/(const BigInt& b) const;
  BigInt operator%(const BigInt& b) const;

  static BigInt gcd(BigInt a, BigInt b);  // nonnegative
  static BigInt lcm(const BigInt& a, const BigInt& b);

  static int compare(const BigInt& a, const BigInt& b);
  friend bool operator==(const BigInt& a, const BigInt& b) { return compare(a, b) == 0; }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return compare(a, b) != 0; }
  friend bool operator<(const BigInt& a, const BigInt& b) { return compare(a, b) < 0; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return compare(a, b) <= 0; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return compare(a, b) > 0; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return compare(a, b) >= 0; }

  std::string to_string() const;  // decimal
  double to_double() const;       // nearest double, +-inf on overflow
  /// Magnitude split as mantissa * 2^exponent with mantissa in [0.5, 1);
  /// stays finite for values far beyond double range.
  double scaled_magnitude(std::int64_t& exponent) const;
  std::size_t bit_length() const;

 private:
  static int compare_magnitude(const BigInt& a, const BigInt& b);
  static std::vector<std::uint32_t> add_magnitude(const std::vector<std::uint32_t>& a,
                                                  const std::vector<std::uint32_t>& b);
  // requires |a| >= |b|
  static std::vector<std::uint32_t> sub_magnitude(const std::vector<std::uint32_t>& a,
                                                  const std::vector<std::uint32_t>& b);
  void trim();
  bool bit(std::size_t i) const;
  void set_bit(std::size_t i);
  void shift_left_one_add_bit(bool b);  // *this = *this * 2 + b, magnitude only

  bool negative_ = false;
  std::vector<std::uint32_t> limbs_;  // little-endian, no trailing zero limbs
};

}  // namespace qcv::num
