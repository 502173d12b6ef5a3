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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "quantum/spin.hpp"
#include "support/rational.hpp"

namespace qcv::hv {

using num::Rational;

/// Observable descriptor resolvable to a concrete operator: a spin kind, a
/// measurement direction, and whether the outcome is the sigma component
/// (2 n.S, spin-1/2), the plain component n.S, or its square.
struct ObservableSpec {
  enum class Kind { Sigma, Component, Squared };
  Kind kind = Kind::Sigma;
  quantum::SpinKind spin = quantum::SpinKind::Half;
  std::array<double, 3> direction{0, 0, 1};

  quantum::Operator resolve() const;
  quantum::RealDirection unit_direction() const;
  /// Sorted integer outcome alphabet (the operator's exact spectrum).
  std::vector<int> alphabet() const;

  std::string kind_name() const;
  static Kind kind_from_name(const std::string& name);
};

struct Setting {
  std::string id;
  int side = 1;  // 1 or 2
  ObservableSpec observable;
};

/// Subset of a model's hidden-variable space, as sorted indices into
/// `lambdas`, tagged with the definition that produced it.
struct LambdaSet {
  std::vector<int> members;  // sorted ascending
  std::string provenance;

  bool contains(int i) const;
  bool empty() const { return members.empty(); }
  std::size_t size() const { return members.size(); }
};

LambdaSet set_union(const LambdaSet& a, const LambdaSet& b, std::string provenance = "");
LambdaSet set_intersection(const LambdaSet& a, const LambdaSet& b, std::string provenance = "");
bool set_equal(const LambdaSet& a, const LambdaSet& b);

/// Finite deterministic hidden-variable model: weighted hidden states with
/// total single- and joint-measurement response tables over a fixed menu of
/// settings. Weights are exact rationals (doubles convert exactly).
class HVModel {
 public:
  std::vector<std::string> lambdas;
  std::vector<Rational> weights;
  std::vector<Setting> settings;

  void set_single(int lambda, int setting, int outcome);
  void set_joint(int lambda, int setting_a, int setting_b, int out_a, int out_b);

  int lambda_count() const { return static_cast<int>(lambdas.size()); }
  int setting_count() const { return static_cast<int>(settings.size()); }
  int setting_index(const std::string& id) const;  // throws on unknown id
  const std::vector<int>& side_settings(int side) const;
  /// Cross-side pairs (side-1 index, side-2 index), menu order.
  const std::vector<std::pair<int, int>>& cross_pairs() const;

  std::optional<int> single(int lambda, int setting) const;
  std::optional<std::pair<int, int>> joint(int lambda, int setting_a, int setting_b) const;
  int single_or_throw(int lambda, int setting) const;
  std::pair<int, int> joint_or_throw(int lambda, int setting_a, int setting_b) const;

  const std::vector<int>& alphabet(int setting) const;

  /// Positive-weight lambda indices.
  LambdaSet support() const;
  Rational measure_exact(const LambdaSet& s) const;
  double measure(const LambdaSet& s) const { return measure_exact(s).to_double(); }

  /// Call after populating all fields; builds indexes. Throws on structural
  /// nonsense (bad sides, duplicate ids, size mismatches); semantic defects
  /// (missing responses, bad outcomes, weight normalization) are reported by
  /// validate() instead.
  void finalize();

  nlohmann::json to_json() const;
  static HVModel from_json(const nlohmann::json& j);  // finalized

 private:
  friend std::vector<std::string> validate(const HVModel& m);
  std::map<std::pair<int, int>, int> single_;                      // (lambda, setting)
  std::map<std::tuple<int, int, int>, std::pair<int, int>> joint_;  // (lambda, a, b)
  std::vector<int> side1_, side2_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<std::vector<int>> alphabets_;
};

/// Totality, weight normalization (|sum - 1| <= 1e-12, exact comparison),
/// alphabet membership. Returns a list of human-readable defects; empty
/// means the model is valid. Never throws.
std::vector<std::string> validate(const HVModel& m);

}  // namespace qcv::hv
