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

#include "hv/checks.hpp"

namespace qcv::hv {

struct SynthOptions {
  int max_cross_contexts = 6;       // |menu A| * |menu B|
  int max_alphabet = 3;
  std::size_t max_lambdas = 200000;
};

/// Builds a deterministic model faithful to the given state on the given
/// menus: the hidden variables are all complete context tables (a joint
/// outcome pair for every cross-side pair plus an outcome for every single
/// setting, zero-probability outcomes pruned), weighted by the product of the
/// per-context Born probabilities. Every per-context statistic then matches
/// the quantum prediction by construction; single- and joint-context entries
/// are independent, which is what makes the context flips explicit.
///
/// Born probabilities that are small rationals (denominator <= 1024 within
/// 1e-12) are stored exactly; all others convert from double exactly.
/// Menu sides are forced to 1 (menu_a) and 2 (menu_b). Throws when a cap is
/// exceeded or the menus do not match the state's dimensions.
HVModel synthesize_model(const quantum::StateVector& state, std::vector<Setting> menu_a,
                         std::vector<Setting> menu_b, const SynthOptions& opts = {});

/// Positive-weight lambdas whose single outcome at `target_setting` equals
/// `target_outcome` but whose joint outcome at the same setting differs, for
/// at least one far-side partner. Witnesses carry the per-partner breakdown.
FlipReport find_context_flips(const HVModel& m, int target_setting, int target_outcome);

/// "singlet" (two spin-1/2, dim 4) or "ks" (two spin-1, dim 9).
quantum::StateVector named_state(const std::string& name);

}  // namespace qcv::hv
