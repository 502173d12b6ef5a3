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

#include "hv/model.hpp"

namespace qcv::hv {

/// Hidden-variable set selected by a single-measurement outcome:
/// { lambda : single(lambda, setting) = outcome }. The setting must lie on
/// the stated side.
LambdaSet lambda_single(const HVModel& m, int side, int setting, int outcome);

/// { lambda : joint(lambda, a, b) = (out_a, out_b) }. Settings must lie on
/// opposite sides; either order is accepted and normalized to (side 1, side 2).
LambdaSet lambda_joint(const HVModel& m, int setting_a, int setting_b, int out_a, int out_b);

/// One hidden state whose single-measurement outcome differs from the
/// outcome the same observable takes under a joint measurement.
struct FlipWitness {
  int lambda;
  int target_setting;           // the observable measured both ways
  int partner_setting;          // the far-side setting added in the joint context
  int single_outcome;
  int joint_target_outcome;     // differs from single_outcome
  int joint_partner_outcome;
};

struct FlipReport {
  LambdaSet sigma;  // positive-weight lambdas with at least one flip
  Rational measure_exact;
  double measure = 0.0;
  std::vector<FlipWitness> witnesses;
};

struct AssumptionLResult {
  bool holds = false;          // no flips among positive-weight lambdas
  FlipReport flips;            // union over every cross pair and both sides
  LambdaSet side1_flips;       // flips of a side-1 single outcome
  LambdaSet side2_flips;
};

/// Scans every positive-weight lambda, every cross-side pair, both sides.
AssumptionLResult check_assumption_L(const HVModel& m);

struct ProductIdentityResult {
  bool ok = false;
  // first failing cell: pair, outcomes, and the mismatch sets
  std::string counterexample;  // empty when ok
};

/// Verifies, over positive-weight lambdas, that the joint-outcome set of every
/// cross pair and outcome combination equals the intersection of the two
/// single-outcome sets.
ProductIdentityResult check_product_identity(const HVModel& m);

struct FactorizationResult {
  bool ok = false;
  LambdaSet failures;  // positive-weight lambdas where factorization fails
  Rational measure_exact;
  double measure = 0.0;
};

/// Per positive-weight lambda and pair: indicator(joint = (i,j)) must equal
/// indicator(single_a = i) * indicator(single_b = j) for all outcomes.
FactorizationResult check_bell_factorization(const HVModel& m);

/// Probability (0 or 1) of getting `outcome` on `side` at the given pair when
/// both measurements are performed, summed over the far-side outcomes.
int marginal_joint(const HVModel& m, int lambda, int setting_a, int setting_b, int side,
                   int outcome);

struct IndependenceViolation {
  int lambda;
  int setting_a;
  int setting_b;
  int side;     // side whose statistics moved
  int outcome;
};

struct ParameterIndependenceResult {
  bool ok = false;
  std::vector<IndependenceViolation> violations;
  LambdaSet violating;  // lambdas with at least one violation
  Rational measure_exact;
  double measure = 0.0;
};

ParameterIndependenceResult check_parameter_independence(const HVModel& m);

struct OutcomeIndependenceResult {
  bool ok = false;
  std::vector<IndependenceViolation> violations;  // outcome field is the a-outcome
};

OutcomeIndependenceResult check_outcome_independence(const HVModel& m);

struct DecompositionResult {
  bool ok = false;
  std::string counterexample;  // empty when ok
};

/// Per lambda and pair: factorization holds iff parameter independence and
/// outcome independence both hold, each side computed independently.
DecompositionResult check_decomposition(const HVModel& m);

struct PartitionResult {
  bool ok = false;
  std::string defect;  // empty when ok
};

/// The single-outcome sets of every setting partition the hidden-variable
/// space, as do the joint-outcome sets of every cross pair.
PartitionResult check_partition_laws(const HVModel& m);

/// E(a,b) = sum_lambda rho(lambda) * out_a * out_b. Requires {-1,+1}
/// alphabets on both settings.
Rational correlation_exact(const HVModel& m, int setting_a, int setting_b);
double correlation(const HVModel& m, int setting_a, int setting_b);

/// E(a,b) + E(a,b') + E(a',b) - E(a',b').
Rational chsh_exact(const HVModel& m, int a, int a_prime, int b, int b_prime);
double chsh(const HVModel& m, int a, int a_prime, int b, int b_prime);

/// Runs the full audit battery {validate, partition, L, product, bell, PI,
/// OI, decomposition, chsh} and renders the spec'd JSON report. `violation`
/// is set when any physics check reports a violation, `error` when the model
/// itself is defective.
struct AuditOutcome {
  nlohmann::json report;
  bool error = false;
  bool violation = false;
};

AuditOutcome run_audit(const HVModel& m);

nlohmann::json flip_report_to_json(const HVModel& m, const FlipReport& r);

}  // namespace qcv::hv
