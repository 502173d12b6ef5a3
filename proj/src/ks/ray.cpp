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

#include "ks/ray.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qcv::ks {

Ray3 Ray3::canonicalize(const QuadRat& x, const QuadRat& y, const QuadRat& z) {
  std::array<QuadRat, 3> c{x, y, z};
  int first = -1;
  for (int i = 0; i < 3; ++i) {
    if (!c[i].is_zero()) {
      first = i;
      break;
    }
  }
  if (first < 0) throw std::invalid_argument("Ray3: zero vector");

  // scale so the first nonzero coordinate is 1
  QuadRat pivot = c[first];
  for (auto& q : c) q = q / pivot;

  // clear denominators
  BigInt l(1);
  for (const auto& q : c) {
    l = BigInt::lcm(l, q.rational_part().den());
    l = BigInt::lcm(l, q.surd_part().den());
  }
  Rational scale(l, BigInt(1));
  for (auto& q : c) q = q * QuadRat(scale, Rational(0));

  // divide out the integer content
  BigInt g(0);
  for (const auto& q : c) {
    g = BigInt::gcd(g, q.rational_part().num());
    g = BigInt::gcd(g, q.surd_part().num());
  }
  if (!g.is_one() && !g.is_zero()) {
    Rational inv(BigInt(1), g);
    for (auto& q : c) q = q * QuadRat(inv, Rational(0));
  }

  Ray3 r;
  r.c_ = std::move(c);
  return r;
}

int Ray3::compare(const Ray3& r, const Ray3& s) {
  for (int i = 0; i < 3; ++i) {
    int c = QuadRat::compare(r.c_[i], s.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

QuadRat Ray3::inner(const Ray3& r, const Ray3& s) {
  QuadRat acc;
  for (int i = 0; i < 3; ++i) acc += r.c_[i] * s.c_[i];
  return acc;
}

std::array<double, 3> Ray3::unit_vector() const {
  std::array<double, 3> v{c_[0].to_double(), c_[1].to_double(), c_[2].to_double()};
  double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  return {v[0] / n, v[1] / n, v[2] / n};
}

std::string Ray3::to_line() const {
  return c_[0].to_string() + " " + c_[1].to_string() + " " + c_[2].to_string();
}

std::vector<Ray3> parse_ray_text(std::string_view text) {
  std::vector<Ray3> rays;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string> tokens;
    std::istringstream iss{std::string(line)};
    std::string tok;
    while (iss >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() != 3) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 3 coordinates, got " +
                                  std::to_string(tokens.size()));
    }
    try {
      rays.push_back(Ray3::canonicalize(QuadRat::parse(tokens[0]), QuadRat::parse(tokens[1]),
                                        QuadRat::parse(tokens[2])));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return rays;
}

std::string format_ray_text(const std::vector<Ray3>& rays) {
  std::string out;
  for (const auto& r : rays) {
    out += r.to_line();
    out += '\n';
  }
  return out;
}

}  // namespace qcv::ks
