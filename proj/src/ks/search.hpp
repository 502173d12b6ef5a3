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
#include <optional>
#include <string>
#include <vector>

#include "ks/graph.hpp"

namespace qcv::ks {

/// Valuation rule on an orthogonality graph.
///
/// Rule101: every triad carries values (1,0,1) in some order — exactly one 0 —
/// and no orthogonal pair carries two 0s (any orthogonal pair completes to a
/// triad in R^3, so two 0s are forbidden even when the completing ray is not
/// in the set).
/// Projector: the dual — exactly one 1 per triad, no orthogonal pair with
/// two 1s. Only basis size 3 is supported.
struct ValueRule {
  enum class Kind { Rule101, Projector };
  Kind kind = Kind::Rule101;
  int basis_size = 3;

  static ValueRule rule101() { return {Kind::Rule101, 3}; }
  static ValueRule projector(int n = 3) { return {Kind::Projector, n}; }

  /// The value constrained to "exactly one per triad / at most one per edge".
  int marked_value() const { return kind == Kind::Rule101 ? 0 : 1; }
  std::string name() const { return kind == Kind::Rule101 ? "101" : "projector"; }
  static ValueRule from_name(const std::string& name);  // throws on unknown
};

enum class SearchMode { Sequential, Parallel };

/// Complete {0,1} valuation, indexed like the graph's ray list.
using Assignment = std::vector<int>;

/// Colorability verdict bound to its exact input by digest.
struct Certificate {
  bool colorable = false;
  ValueRule rule;
  SearchMode mode = SearchMode::Sequential;
  std::optional<Assignment> witness;               // present iff colorable
  std::optional<std::uint64_t> nodes_explored;     // absent when unstable (parallel colorable)
  std::string input_digest;                        // sha256 hex over canonical rays + rule
  std::string trace_digest;                        // sha256 hex of the sequential search trace
  std::string digest_algo = "sha256";
  std::string tool_version;
  std::vector<std::string> flags;                  // e.g. "vacuous: no triads"

  std::string to_json() const;
  static Certificate from_json(const std::string& text);  // throws on malformed input
};

/// Digest binding a (graph, rule) pair: sha256 over the canonical ray lines
/// followed by the rule name.
std::string input_digest(const OrthoGraph& g, const ValueRule& rule);

/// Checks a complete assignment against every triad and edge constraint.
bool assignment_valid(const OrthoGraph& g, const ValueRule& rule, const Assignment& a);

/// Complete backtracking search with constraint propagation.
///
/// Branching is deterministic: lowest-index unassigned ray, value 0 before 1.
/// Sequential mode returns the first witness in that order and an exact node
/// count; parallel mode splits the prefix tree across threads and returns the
/// same verdict (and in fact the same witness — the lowest-prefix one), with
/// node counts reported only when they are schedule-independent.
Certificate search(const OrthoGraph& g, const ValueRule& rule,
                   SearchMode mode = SearchMode::Sequential);

struct VerifyResult {
  bool ok = false;
  std::string reason;  // empty when ok
};

/// Colorable: re-checks the witness exactly. Uncolorable: re-runs the
/// sequential search (graphs up to 40 rays) and compares verdict and, when
/// present, the trace digest. Rejects on input-digest mismatch.
VerifyResult verify_certificate(const OrthoGraph& g, const Certificate& c);

/// Exhaustive oracle over all 2^n assignments; requires n <= 24.
Certificate brute_force_oracle(const OrthoGraph& g, const ValueRule& rule);

/// Number of valid assignments, by the same enumeration; requires n <= 24.
std::uint64_t brute_force_count(const OrthoGraph& g, const ValueRule& rule);

}  // namespace qcv::ks
