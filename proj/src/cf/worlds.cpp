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

#include "cf/worlds.hpp"

#include <stdexcept>

namespace qcv::cf {

World make_world(const hv::HVModel& m, int lambda, Configuration config) {
  World w;
  w.lambda = lambda;
  w.config = config;
  if (config.left && config.right) {
    auto [oa, ob] = m.joint_or_throw(lambda, *config.left, *config.right);
    w.left_outcome = oa;
    w.right_outcome = ob;
  } else if (config.left) {
    w.left_outcome = m.single_or_throw(lambda, *config.left);
  } else if (config.right) {
    w.right_outcome = m.single_or_throw(lambda, *config.right);
  }
  return w;
}

std::vector<World> enumerate_worlds(const hv::HVModel& m, std::size_t max_worlds) {
  const auto support = m.support();
  const auto& side1 = m.side_settings(1);
  const auto& side2 = m.side_settings(2);
  std::size_t per_lambda = 1 + side1.size() + side2.size() + side1.size() * side2.size();
  if (support.size() * per_lambda > max_worlds) {
    throw std::invalid_argument("enumerate_worlds: world cap exceeded (" +
                                std::to_string(support.size() * per_lambda) + " worlds)");
  }
  std::vector<World> worlds;
  worlds.reserve(support.size() * per_lambda);
  for (int l : support.members) {
    worlds.push_back(make_world(m, l, {}));
    for (int a : side1) worlds.push_back(make_world(m, l, {a, std::nullopt}));
    for (int b : side2) worlds.push_back(make_world(m, l, {std::nullopt, b}));
    for (int a : side1) {
      for (int b : side2) worlds.push_back(make_world(m, l, {a, b}));
    }
  }
  return worlds;
}

bool satisfies(const Proposition& p, const World& w, const hv::HVModel& m) {
  switch (p.kind) {
    case Proposition::Kind::Performs:
      return w.performs(p.side, m.setting_index(p.setting));
    case Proposition::Kind::OutcomeEq: {
      auto rec = w.record(p.side, m.setting_index(p.setting));
      return rec && *rec == p.value;
    }
    case Proposition::Kind::Not:
      return !satisfies(p.children[0], w, m);
    case Proposition::Kind::And:
      for (const auto& c : p.children) {
        if (!satisfies(c, w, m)) return false;
      }
      return true;
    case Proposition::Kind::Or:
      for (const auto& c : p.children) {
        if (satisfies(c, w, m)) return true;
      }
      return false;
  }
  return false;
}

std::vector<std::size_t> accessible(const World& actual, const SpherePolicy& policy,
                                    const std::vector<World>& worlds) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < worlds.size(); ++i) {
    const World& w = worlds[i];
    bool in = false;
    if (policy.kind == SpherePolicy::Kind::FixLambda) {
      in = w.lambda == actual.lambda;
    } else {
      if (w.performs(policy.side, policy.setting)) {
        auto rec = w.record(policy.side, policy.setting);
        in = rec && *rec == policy.value;
      } else {
        in = w.lambda == actual.lambda;
      }
    }
    if (in) out.push_back(i);
  }
  return out;
}

nlohmann::json world_to_json(const hv::HVModel& m, const World& w) {
  nlohmann::json performed = nlohmann::json::object();
  nlohmann::json outcomes = nlohmann::json::object();
  if (w.config.left) {
    performed["1"] = m.settings[*w.config.left].id;
    outcomes[m.settings[*w.config.left].id] = *w.left_outcome;
  }
  if (w.config.right) {
    performed["2"] = m.settings[*w.config.right].id;
    outcomes[m.settings[*w.config.right].id] = *w.right_outcome;
  }
  return {{"lambda", m.lambdas[w.lambda]}, {"performed", performed}, {"outcomes", outcomes}};
}

}  // namespace qcv::cf
