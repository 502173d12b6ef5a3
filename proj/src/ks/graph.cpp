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

#include "ks/graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qcv::ks {

OrthoGraph build_graph(const std::vector<Ray3>& input) {
  // detect duplicates against input positions before sorting
  std::vector<int> order(input.size());
  for (std::size_t i = 0; i < input.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int c = Ray3::compare(input[a], input[b]);
    if (c != 0) return c < 0;
    return a < b;
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (input[order[i - 1]] == input[order[i]]) {
      throw std::invalid_argument("duplicate rays at input positions " +
                                  std::to_string(order[i - 1]) + " and " +
                                  std::to_string(order[i]) + ": " + input[order[i]].to_line());
    }
  }

  OrthoGraph g;
  g.rays.reserve(input.size());
  for (int idx : order) g.rays.push_back(input[idx]);

  const int n = g.ray_count();
  g.neighbors.assign(n, {});
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (Ray3::orthogonal(g.rays[i], g.rays[j])) {
        g.edges.emplace_back(i, j);
        g.neighbors[i].push_back(j);
        g.neighbors[j].push_back(i);
        adj[i][j] = adj[j][i] = true;
      }
    }
  }
  g.triads_of_ray.assign(n, {});
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!adj[i][j]) continue;
      for (int k = j + 1; k < n; ++k) {
        if (adj[i][k] && adj[j][k]) {
          int id = static_cast<int>(g.triads.size());
          g.triads.push_back({i, j, k});
          g.triads_of_ray[i].push_back(id);
          g.triads_of_ray[j].push_back(id);
          g.triads_of_ray[k].push_back(id);
        }
      }
    }
  }
  return g;
}

std::vector<Ray3> peres33() {
  const QuadRat zero(0), one(1), minus_one(-1);
  const QuadRat s2 = QuadRat::sqrt2();
  const QuadRat values[5] = {zero, one, minus_one, s2, -s2};

  // magnitude class of a component: 0 -> 0, 1 -> 1, sqrt2 -> 2
  auto mag = [](int vi) { return vi == 0 ? 0 : (vi <= 2 ? 1 : 2); };

  std::vector<Ray3> out;
  for (int a = 0; a < 5; ++a) {
    for (int b = 0; b < 5; ++b) {
      for (int c = 0; c < 5; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        int m[3] = {mag(a), mag(b), mag(c)};
        std::sort(m, m + 3);
        bool axis = m[0] == 0 && m[1] == 0 && m[2] == 1;
        bool diag = m[0] == 0 && m[1] == 1 && m[2] == 1;
        bool surd_pair = m[0] == 0 && m[1] == 1 && m[2] == 2;
        bool surd_triple = m[0] == 1 && m[1] == 1 && m[2] == 2;
        if (!(axis || diag || surd_pair || surd_triple)) continue;
        out.push_back(Ray3::canonicalize(values[a], values[b], values[c]));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.size() != 33) throw std::logic_error("peres33: generation produced wrong count");
  return out;
}

}  // namespace qcv::ks
