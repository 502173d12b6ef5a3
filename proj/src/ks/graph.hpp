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
#include <cstdint>
#include <vector>

#include "ks/ray.hpp"

namespace qcv::ks {

/// Orthogonality structure of a ray set. Vertices are the canonical rays in
/// ascending lexicographic order (so the graph is independent of input
/// order); edges are exactly the orthogonal pairs, triads exactly the
/// mutually orthogonal triples.
struct OrthoGraph {
  std::vector<Ray3> rays;                       // sorted, pairwise distinct
  std::vector<std::pair<int, int>> edges;       // i < j, lexicographic
  std::vector<std::array<int, 3>> triads;       // i < j < k, lexicographic
  std::vector<std::vector<int>> neighbors;      // per-vertex adjacency
  std::vector<std::vector<int>> triads_of_ray;  // per-vertex triad ids

  int ray_count() const { return static_cast<int>(rays.size()); }
};

/// Builds the orthogonality graph. Duplicate rays (after canonicalization)
/// are rejected: the exception message names the first duplicate pair by
/// input position.
OrthoGraph build_graph(const std::vector<Ray3>& input);

/// The 33-direction Peres set: every projective ray in Q(sqrt 2)^3 whose
/// coordinate magnitudes are a permutation of (1,0,0), (1,1,0),
/// (sqrt2,1,0) or (sqrt2,1,1) with entries drawn from {0,+-1,+-sqrt2}.
/// Canonicalized, deduplicated, sorted; exactly 33 rays.
std::vector<Ray3> peres33();

}  // namespace qcv::ks
