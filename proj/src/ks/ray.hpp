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

#include <array>
#include <string>
#include <vector>

#include "ks/quadrat.hpp"

namespace qcv::ks {

/// Projective ray in Q(sqrt 2)^3, held in canonical form: the representative
/// obtained by rescaling so the first nonzero coordinate is 1, then clearing
/// denominators and dividing out the integer content. Two rays are equal iff
/// their canonical coordinates are identical.
class Ray3 {
 public:
  /// Canonicalizes raw coordinates; throws std::invalid_argument on the zero
  /// vector. Idempotent on already-canonical input.
  static Ray3 canonicalize(const QuadRat& x, const QuadRat& y, const QuadRat& z);
  static Ray3 canonicalize(const std::array<QuadRat, 3>& c) {
    return canonicalize(c[0], c[1], c[2]);
  }

  const std::array<QuadRat, 3>& coords() const { return c_; }
  const QuadRat& operator[](std::size_t i) const { return c_[i]; }

  friend bool operator==(const Ray3& r, const Ray3& s) { return r.c_ == s.c_; }
  friend bool operator!=(const Ray3& r, const Ray3& s) { return !(r == s); }
  /// Lexicographic order on canonical coordinates (exact real-value order
  /// per component).
  static int compare(const Ray3& r, const Ray3& s);
  friend bool operator<(const Ray3& r, const Ray3& s) { return compare(r, s) < 0; }

  /// Exact dot product of canonical representatives.
  static QuadRat inner(const Ray3& r, const Ray3& s);
  static bool orthogonal(const Ray3& r, const Ray3& s) { return inner(r, s).is_zero(); }

  /// Unit-norm numeric image (for bridging to the floating-point side).
  std::array<double, 3> unit_vector() const;

  std::string to_line() const;  // "x y z" in ray-file syntax

 private:
  Ray3() = default;
  std::array<QuadRat, 3> c_;
};

/// Parses ray-file text: one ray per line, three whitespace-separated
/// coordinates, '#' starts a comment, blank lines ignored. Coordinates
/// follow the QuadRat grammar (`1`, `-1/2`, `r2`, `-3r2`, `1+r2`, ...).
/// Throws std::invalid_argument with "line N: reason" on malformed input.
std::vector<Ray3> parse_ray_text(std::string_view text);

std::string format_ray_text(const std::vector<Ray3>& rays);

}  // namespace qcv::ks
