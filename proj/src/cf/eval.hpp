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

#include "cf/worlds.hpp"
#include "hv/synth.hpp"

namespace qcv::cf {

enum class Verdict { Vacuous, True, False };

std::string verdict_name(Verdict v);

/// Result of evaluating "if phi were the case, psi would be the case" at an
/// actual world. Vacuous when no accessible world satisfies phi; True when
/// every accessible phi-world satisfies psi; False otherwise. Witnesses are
/// the phi-and-psi worlds (True) or the phi-and-not-psi counterexamples
/// (False). Breaches are accessible worlds whose hidden state answers a
/// single measurement recorded in the actual world differently from the
/// actual record.
struct CFResult {
  Verdict verdict = Verdict::Vacuous;
  std::vector<World> witnesses;
  std::vector<World> breaches;
};

/// Two-tier Lewis evaluation: the accessible set is the single innermost
/// sphere, so the comparative similarity condition reduces to universal
/// satisfaction inside it. Validates that a FixOutcome policy references an
/// outcome actually recorded in `actual`.
CFResult eval_cf(const hv::HVModel& m, const Proposition& phi, const Proposition& psi,
                 const World& actual, const SpherePolicy& policy,
                 const std::vector<World>& worlds);

/// The two-observer scenario: in the actual world only side 1 measures k and
/// records 0; the counterfactual asks whether a side-2 measurement of l
/// (orthogonal to k) would certainly give 1. Every considered world keeps
/// side 1's measurement of k performed — the measurement that has already
/// happened belongs to the fixed past — while side 2's choice stays open.
/// Evaluated per conditioned hidden state under FixLambda, and under
/// FixOutcome (side 1, k, 0).
struct DilemmaReport {
  int k = -1;
  int l = -1;
  hv::LambdaSet conditioned;          // positive-weight lambdas with single(k) = 0
  // FixLambda: verdict per conditioned lambda; False exactly where the joint
  // context flips the recorded outcome with partner outcome 0
  std::vector<std::pair<int, Verdict>> fix_lambda_verdicts;
  hv::LambdaSet fix_lambda_false;
  hv::LambdaSet sigma;                // single(k)=0 and joint(k,l) = (1,0)
  bool sigma_matches = false;         // fix_lambda_false == sigma
  num::Rational sigma_measure_exact;
  double sigma_measure = 0.0;
  // FixOutcome
  Verdict fix_outcome_verdict = Verdict::Vacuous;
  std::vector<World> breaches;
  hv::LambdaSet breach_lambdas;
  num::Rational breach_measure_exact;
  double breach_measure = 0.0;
};

/// Requires k on side 1, l on side 2, orthogonal measurement directions, and
/// at least one positive-weight lambda answering 0 to k alone.
DilemmaReport epr_scenario(const hv::HVModel& m, int k, int l);

nlohmann::json dilemma_to_json(const hv::HVModel& m, const DilemmaReport& r);

/// Evaluates a scenario document against a model. Two forms:
///   {"epr": {"k": ID, "l": ID}}                         -> dilemma report
///   {"actual": {...}, "phi": "...", "psi": "...",
///    "policy": "fix-lambda" | {"kind": "fix-outcome", "side": N, "setting": ID}}
/// The generic form checks that the declared actual world is
/// response-consistent and evaluates over the full world enumeration.
nlohmann::json evaluate_scenario(const hv::HVModel& m, const nlohmann::json& scenario);

}  // namespace qcv::cf
