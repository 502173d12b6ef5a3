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

#include <optional>

#include "cf/proposition.hpp"
#include "hv/model.hpp"

namespace qcv::cf {

/// Which measurements a world performs: at most one setting per side.
struct Configuration {
  std::optional<int> left;   // side-1 setting index
  std::optional<int> right;  // side-2 setting index
};

/// A possible world: a hidden state, a measurement configuration, and the
/// recorded outcomes. Worlds are only built through make_world /
/// enumerate_worlds, so the records always equal the model's responses —
/// inconsistent worlds are unrepresentable.
struct World {
  int lambda = -1;
  Configuration config;
  std::optional<int> left_outcome;
  std::optional<int> right_outcome;

  bool performs(int side, int setting) const {
    const auto& slot = side == 1 ? config.left : config.right;
    return slot && *slot == setting;
  }
  std::optional<int> record(int side, int setting) const {
    if (!performs(side, setting)) return std::nullopt;
    return side == 1 ? left_outcome : right_outcome;
  }
};

/// Fills outcomes from the model's responses for the configuration.
World make_world(const hv::HVModel& m, int lambda, Configuration config);

/// All (positive-weight lambda) x (no measurement, each side-1 setting alone,
/// each side-2 setting alone, every cross pair) worlds, in that deterministic
/// order. Throws when the count would exceed `max_worlds`.
std::vector<World> enumerate_worlds(const hv::HVModel& m, std::size_t max_worlds = 100000);

bool satisfies(const Proposition& p, const World& w, const hv::HVModel& m);

/// Accessibility around an actual world: a single innermost sphere.
/// FixLambda keeps the hidden state; FixOutcome keeps a recorded outcome
/// fixed (worlds measuring that setting must agree with the record; worlds
/// not measuring it must share the actual hidden state).
struct SpherePolicy {
  enum class Kind { FixLambda, FixOutcome };
  Kind kind = Kind::FixLambda;
  int side = 0;      // FixOutcome
  int setting = -1;  // FixOutcome
  int value = 0;     // FixOutcome: must be recorded in the actual world

  static SpherePolicy fix_lambda() { return {}; }
  static SpherePolicy fix_outcome(int side, int setting, int value) {
    return {Kind::FixOutcome, side, setting, value};
  }
};

/// Indices into `worlds` of the accessible set.
std::vector<std::size_t> accessible(const World& actual, const SpherePolicy& policy,
                                    const std::vector<World>& worlds);

nlohmann::json world_to_json(const hv::HVModel& m, const World& w);

}  // namespace qcv::cf
