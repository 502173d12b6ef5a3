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

#include "hv/synth.hpp"

#include <cmath>
#include <stdexcept>

namespace qcv::hv {

namespace {

int to_int_outcome(double value) {
  double rounded = std::round(value);
  if (std::abs(value - rounded) > 1e-6) {
    throw std::invalid_argument("synthesize: observable has non-integer outcome " +
                                std::to_string(value));
  }
  return static_cast<int>(rounded);
}

Rational exact_probability(double p) {
  Rational snapped;
  if (num::reconstruct_rational(p, 1024, 1e-12, snapped)) return snapped;
  return Rational::from_double_exact(p);
}

constexpr double kSupportCut = 1e-12;

}  // namespace

quantum::StateVector named_state(const std::string& name) {
  if (name == "singlet") return quantum::singlet_state();
  if (name == "ks") return quantum::ks_state();
  throw std::invalid_argument("unknown state '" + name + "' (expected singlet or ks)");
}

HVModel synthesize_model(const quantum::StateVector& state, std::vector<Setting> menu_a,
                         std::vector<Setting> menu_b, const SynthOptions& opts) {
  if (menu_a.empty() || menu_b.empty()) {
    throw std::invalid_argument("synthesize: both menus must be non-empty");
  }
  for (auto& s : menu_a) s.side = 1;
  for (auto& s : menu_b) s.side = 2;
  if (static_cast<int>(menu_a.size() * menu_b.size()) > opts.max_cross_contexts) {
    throw std::invalid_argument("synthesize: menu cap exceeded (" +
                                std::to_string(menu_a.size() * menu_b.size()) + " contexts > " +
                                std::to_string(opts.max_cross_contexts) + ")");
  }
  const int dim_a = quantum::dimension(menu_a.front().observable.spin);
  const int dim_b = quantum::dimension(menu_b.front().observable.spin);
  for (const auto& s : menu_a) {
    if (quantum::dimension(s.observable.spin) != dim_a) {
      throw std::invalid_argument("synthesize: mixed spins within menu A");
    }
    if (static_cast<int>(s.observable.alphabet().size()) > opts.max_alphabet) {
      throw std::invalid_argument("synthesize: alphabet cap exceeded");
    }
  }
  for (const auto& s : menu_b) {
    if (quantum::dimension(s.observable.spin) != dim_b) {
      throw std::invalid_argument("synthesize: mixed spins within menu B");
    }
    if (static_cast<int>(s.observable.alphabet().size()) > opts.max_alphabet) {
      throw std::invalid_argument("synthesize: alphabet cap exceeded");
    }
  }
  if (state.size() != dim_a * dim_b) {
    throw std::invalid_argument("synthesize: state dimension does not match menus");
  }

  HVModel m;
  m.settings = menu_a;
  m.settings.insert(m.settings.end(), menu_b.begin(), menu_b.end());
  m.finalize();

  // one context per cross pair and per single setting, in menu order
  struct JointContext {
    int a, b;
    std::vector<std::pair<std::pair<int, int>, Rational>> support;
  };
  struct SingleContext {
    int s;
    std::vector<std::pair<int, Rational>> support;
  };
  std::vector<JointContext> joints;
  std::vector<SingleContext> singles;

  for (const auto& [a, b] : m.cross_pairs()) {
    JointContext ctx{a, b, {}};
    auto dist = quantum::born_joint(state, m.settings[a].observable.resolve(),
                                    m.settings[b].observable.resolve());
    for (const auto& o : dist) {
      if (o.probability <= kSupportCut) continue;
      ctx.support.push_back(
          {{to_int_outcome(o.a), to_int_outcome(o.b)}, exact_probability(o.probability)});
    }
    if (ctx.support.empty()) throw std::logic_error("synthesize: empty joint support");
    joints.push_back(std::move(ctx));
  }
  for (int s = 0; s < m.setting_count(); ++s) {
    SingleContext ctx{s, {}};
    int party = m.settings[s].side;
    auto dist = quantum::born_single(state, m.settings[s].observable.resolve(), party, dim_a,
                                     dim_b);
    for (const auto& o : dist) {
      if (o.probability <= kSupportCut) continue;
      ctx.support.push_back({to_int_outcome(o.value), exact_probability(o.probability)});
    }
    if (ctx.support.empty()) throw std::logic_error("synthesize: empty single support");
    singles.push_back(std::move(ctx));
  }

  std::size_t count = 1;
  for (const auto& c : joints) {
    count *= c.support.size();
    if (count > opts.max_lambdas) throw std::invalid_argument("synthesize: lambda cap exceeded");
  }
  for (const auto& c : singles) {
    count *= c.support.size();
    if (count > opts.max_lambdas) throw std::invalid_argument("synthesize: lambda cap exceeded");
  }

  int width = 1;
  for (std::size_t t = count; t >= 10; t /= 10) ++width;

  std::vector<std::size_t> index(joints.size() + singles.size(), 0);
  for (std::size_t l = 0; l < count; ++l) {
    std::string label = "L" + std::to_string(l);
    label.insert(1, width - (label.size() - 1), '0');
    m.lambdas.push_back(label);
    Rational weight(1);
    int li = static_cast<int>(l);
    std::size_t slot = 0;
    for (const auto& c : joints) {
      const auto& entry = c.support[index[slot++]];
      weight *= entry.second;
      m.set_joint(li, c.a, c.b, entry.first.first, entry.first.second);
    }
    for (const auto& c : singles) {
      const auto& entry = c.support[index[slot++]];
      weight *= entry.second;
      m.set_single(li, c.s, entry.first);
    }
    m.weights.push_back(weight);
    // mixed-radix increment
    for (std::size_t d = index.size(); d-- > 0;) {
      std::size_t radix = d < joints.size() ? joints[d].support.size()
                                            : singles[d - joints.size()].support.size();
      if (++index[d] < radix) break;
      index[d] = 0;
    }
  }
  return m;
}

FlipReport find_context_flips(const HVModel& m, int target_setting, int target_outcome) {
  const int side = m.settings[target_setting].side;
  FlipReport report;
  report.sigma.provenance = "context flips of " + m.settings[target_setting].id + "=" +
                            std::to_string(target_outcome);
  for (int l : m.support().members) {
    if (m.single_or_throw(l, target_setting) != target_outcome) continue;
    bool flipped = false;
    for (int partner : m.side_settings(side == 1 ? 2 : 1)) {
      auto [a, b] = side == 1 ? std::make_pair(target_setting, partner)
                              : std::make_pair(partner, target_setting);
      auto [ja, jb] = m.joint_or_throw(l, a, b);
      int joint_target = side == 1 ? ja : jb;
      int joint_partner = side == 1 ? jb : ja;
      if (joint_target != target_outcome) {
        report.witnesses.push_back(
            {l, target_setting, partner, target_outcome, joint_target, joint_partner});
        flipped = true;
      }
    }
    if (flipped) report.sigma.members.push_back(l);
  }
  report.measure_exact = m.measure_exact(report.sigma);
  report.measure = report.measure_exact.to_double();
  return report;
}

}  // namespace qcv::hv
