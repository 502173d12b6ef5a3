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

#include "support/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcv::num {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(std::int64_t v) {
  negative_ = v < 0;
  // avoid UB on INT64_MIN
  std::uint64_t m = negative_ ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
  while (m != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(m & 0xffffffffu));
    m >>= 32;
  }
  if (limbs_.empty()) negative_ = false;
}

BigInt BigInt::from_decimal(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("BigInt: empty string");
  bool neg = false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
  BigInt r;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
    // r = r*10 + digit
    std::uint64_t carry = static_cast<std::uint64_t>(c - '0');
    for (auto& limb : r.limbs_) {
      std::uint64_t t = static_cast<std::uint64_t>(limb) * 10 + carry;
      limb = static_cast<std::uint32_t>(t & 0xffffffffu);
      carry = t >> 32;
    }
    while (carry != 0) {
      r.limbs_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
      carry >>= 32;
    }
  }
  r.negative_ = neg && !r.limbs_.empty();
  return r;
}

BigInt BigInt::pow2(unsigned k) {
  BigInt r;
  r.limbs_.assign(k / 32 + 1, 0);
  r.limbs_[k / 32] = 1u << (k % 32);
  return r;
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) negative_ = false;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  if (!r.limbs_.empty()) r.negative_ = !r.negative_;
  return r;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  r.negative_ = false;
  return r;
}

int BigInt::compare_magnitude(const BigInt& a, const BigInt& b) {
  if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  }
  return 0;
}

int BigInt::compare(const BigInt& a, const BigInt& b) {
  if (a.sign() != b.sign()) return a.sign() < b.sign() ? -1 : 1;
  int m = compare_magnitude(a, b);
  return a.negative_ ? -m : m;
}

std::vector<std::uint32_t> BigInt::add_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> r;
  r.reserve(std::max(a.size(), b.size()) + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    std::uint64_t t = carry;
    if (i < a.size()) t += a[i];
    if (i < b.size()) t += b[i];
    r.push_back(static_cast<std::uint32_t>(t & 0xffffffffu));
    carry = t >> 32;
  }
  if (carry) r.push_back(static_cast<std::uint32_t>(carry));
  return r;
}

std::vector<std::uint32_t> BigInt::sub_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> r;
  r.reserve(a.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t t = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (t < 0) {
      t += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r.push_back(static_cast<std::uint32_t>(t));
  }
  return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  BigInt r;
  if (a.negative_ == b.negative_) {
    r.limbs_ = BigInt::add_magnitude(a.limbs_, b.limbs_);
    r.negative_ = a.negative_;
  } else {
    int m = BigInt::compare_magnitude(a, b);
    if (m == 0) return BigInt();
    const BigInt& big = m > 0 ? a : b;
    const BigInt& small = m > 0 ? b : a;
    r.limbs_ = BigInt::sub_magnitude(big.limbs_, small.limbs_);
    r.negative_ = big.negative_;
  }
  r.trim();
  return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  if (a.is_zero() || b.is_zero()) return BigInt();
  BigInt r;
  r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
      std::uint64_t t = static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                        r.limbs_[i + j] + carry;
      r.limbs_[i + j] = static_cast<std::uint32_t>(t & 0xffffffffu);
      carry = t >> 32;
    }
    std::size_t k = i + b.limbs_.size();
    while (carry != 0) {
      std::uint64_t t = r.limbs_[k] + carry;
      r.limbs_[k] = static_cast<std::uint32_t>(t & 0xffffffffu);
      carry = t >> 32;
      ++k;
    }
  }
  r.negative_ = a.negative_ != b.negative_;
  r.trim();
  return r;
}

std::size_t BigInt::bit_length() const {
  if (limbs_.empty()) return 0;
  std::uint32_t top = limbs_.back();
  std::size_t bits = (limbs_.size() - 1) * 32;
  while (top != 0) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

bool BigInt::bit(std::size_t i) const {
  std::size_t limb = i / 32;
  if (limb >= limbs_.size()) return false;
  return (limbs_[limb] >> (i % 32)) & 1u;
}

void BigInt::set_bit(std::size_t i) {
  std::size_t limb = i / 32;
  if (limb >= limbs_.size()) limbs_.resize(limb + 1, 0);
  limbs_[limb] |= 1u << (i % 32);
}

void BigInt::shift_left_one_add_bit(bool b) {
  std::uint32_t carry = b ? 1u : 0u;
  for (auto& limb : limbs_) {
    std::uint32_t out = limb >> 31;
    limb = (limb << 1) | carry;
    carry = out;
  }
  if (carry) limbs_.push_back(carry);
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
  BigInt bm = b.abs();
  q = BigInt();
  r = BigInt();
  // binary long division on |a|
  for (std::size_t i = a.bit_length(); i-- > 0;) {
    r.shift_left_one_add_bit(a.bit(i));
    r.trim();
    if (compare_magnitude(r, bm) >= 0) {
      r.limbs_ = sub_magnitude(r.limbs_, bm.limbs_);
      r.trim();
      q.set_bit(i);
    }
  }
  q.trim();
  q.negative_ = (a.negative_ != b.negative_) && !q.is_zero();
  r.negative_ = a.negative_ && !r.is_zero();
}

BigInt BigInt::operator/(const BigInt& b) const {
  BigInt q, r;
  divmod(*this, b, q, r);
  return q;
}

BigInt BigInt::operator%(const BigInt& b) const {
  BigInt q, r;
  divmod(*this, b, q, r);
  return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a.negative_ = false;
  b.negative_ = false;
  while (!b.is_zero()) {
    BigInt q, r;
    divmod(a, b, q, r);
    a = b;
    b = r;
  }
  return a;
}

BigInt BigInt::lcm(const BigInt& a, const BigInt& b) {
  if (a.is_zero() || b.is_zero()) return BigInt();
  BigInt g = gcd(a, b);
  return (a.abs() / g) * b.abs();
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  // peel 9 decimal digits at a time
  std::vector<std::uint32_t> mag = limbs_;
  std::string out;
  while (!mag.empty()) {
    std::uint64_t rem = 0;
    for (std::size_t i = mag.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | mag[i];
      mag[i] = static_cast<std::uint32_t>(cur / 1000000000ull);
      rem = cur % 1000000000ull;
    }
    while (!mag.empty() && mag.back() == 0) mag.pop_back();
    for (int d = 0; d < 9; ++d) {
      out.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
      if (mag.empty() && rem == 0) break;
    }
  }
  while (out.size() > 1 && out.back() == '0') out.pop_back();
  if (negative_) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

double BigInt::to_double() const {
  if (is_zero()) return 0.0;
  std::int64_t exp = 0;
  double mag = scaled_magnitude(exp);
  double d = std::ldexp(mag, exp > 1100 ? 1100 : static_cast<int>(exp));
  return negative_ ? -d : d;
}

double BigInt::scaled_magnitude(std::int64_t& exponent) const {
  if (is_zero()) {
    exponent = 0;
    return 0.0;
  }
  std::size_t bits = bit_length();
  std::uint64_t top = 0;
  int taken = 0;
  for (std::size_t i = bits; i-- > 0 && taken < 64; ++taken) {
    top = (top << 1) | (bit(i) ? 1u : 0u);
  }
  // top holds the leading `taken` bits: value = top * 2^(bits - taken)
  exponent = static_cast<std::int64_t>(bits);
  return std::ldexp(static_cast<double>(top), -taken);
}

}  // namespace qcv::num
