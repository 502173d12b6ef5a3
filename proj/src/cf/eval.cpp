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

#include "cf/eval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcv::cf {

using nlohmann::json;

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Vacuous:
      return "Vacuous";
    case Verdict::True:
      return "True";
    case Verdict::False:
      return "False";
  }
  return "";
}

CFResult eval_cf(const hv::HVModel& m, const Proposition& phi, const Proposition& psi,
                 const World& actual, const SpherePolicy& policy,
                 const std::vector<World>& worlds) {
  if (policy.kind == SpherePolicy::Kind::FixOutcome) {
    auto rec = actual.record(policy.side, policy.setting);
    if (!rec || *rec != policy.value) {
      throw std::invalid_argument(
          "eval_cf: FixOutcome policy references an outcome not recorded in the actual world");
    }
  }
  CFResult result;
  auto sphere = accessible(actual, policy, worlds);

  bool any_phi = false;
  bool all_psi = true;
  for (std::size_t i : sphere) {
    const World& w = worlds[i];
    if (satisfies(phi, w, m)) {
      any_phi = true;
      if (!satisfies(psi, w, m)) all_psi = false;
    }
  }
  if (!any_phi) {
    result.verdict = Verdict::Vacuous;
  } else if (all_psi) {
    result.verdict = Verdict::True;
    for (std::size_t i : sphere) {
      if (satisfies(phi, worlds[i], m)) result.witnesses.push_back(worlds[i]);
    }
  } else {
    result.verdict = Verdict::False;
    for (std::size_t i : sphere) {
      if (satisfies(phi, worlds[i], m) && !satisfies(psi, worlds[i], m)) {
        result.witnesses.push_back(worlds[i]);
      }
    }
  }

  // worlds whose hidden state would answer an actually-recorded measurement
  // differently when measured alone
  for (std::size_t i : sphere) {
    const World& w = worlds[i];
    bool breach = false;
    for (int side = 1; side <= 2 && !breach; ++side) {
      const auto& slot = side == 1 ? actual.config.left : actual.config.right;
      if (!slot) continue;
      int recorded = side == 1 ? *actual.left_outcome : *actual.right_outcome;
      if (m.single_or_throw(w.lambda, *slot) != recorded) breach = true;
    }
    if (breach) result.breaches.push_back(w);
  }
  return result;
}

DilemmaReport epr_scenario(const hv::HVModel& m, int k, int l) {
  if (m.settings[k].side != 1 || m.settings[l].side != 2) {
    throw std::invalid_argument("epr_scenario: k must be a side-1 setting and l a side-2 setting");
  }
  {
    auto dk = m.settings[k].observable.unit_direction();
    auto dl = m.settings[l].observable.unit_direction();
    if (std::abs(dk.dot(dl)) > 1e-9) {
      throw std::invalid_argument("epr_scenario: k and l directions are not orthogonal");
    }
  }
  DilemmaReport report;
  report.k = k;
  report.l = l;

  // side 1's measurement of k is already performed: restrict the universe to
  // worlds that keep it, with side 2's choice open
  std::vector<World> universe;
  for (int lam : m.support().members) {
    universe.push_back(make_world(m, lam, {k, std::nullopt}));
    for (int b : m.side_settings(2)) universe.push_back(make_world(m, lam, {k, b}));
  }

  report.conditioned = set_intersection(hv::lambda_single(m, 1, k, 0), m.support(),
                                        "single(k)=0, positive weight");
  if (report.conditioned.empty()) {
    throw std::invalid_argument(
        "epr_scenario: no positive-weight lambda answers 0 to k measured alone");
  }

  const Proposition phi = Proposition::performs(2, m.settings[l].id);
  const Proposition psi = Proposition::outcome_eq(2, m.settings[l].id, 1);

  report.fix_lambda_false.provenance = "FixLambda false verdicts";
  for (int lam : report.conditioned.members) {
    World actual = make_world(m, lam, {k, std::nullopt});
    CFResult r = eval_cf(m, phi, psi, actual, SpherePolicy::fix_lambda(), universe);
    report.fix_lambda_verdicts.emplace_back(lam, r.verdict);
    if (r.verdict == Verdict::False) report.fix_lambda_false.members.push_back(lam);
  }

  // the flip set of the same scenario, computed on the hv-models side:
  // single(k) = 0 while the joint (k,l) context answers (1,0)
  {
    hv::FlipReport flips = hv::find_context_flips(m, k, 0);
    report.sigma.provenance = "single(k)=0 and joint(k,l)=(1,0)";
    for (const auto& w : flips.witnesses) {
      if (w.partner_setting == l && w.joint_partner_outcome == 0) {
        report.sigma.members.push_back(w.lambda);
      }
    }
    std::sort(report.sigma.members.begin(), report.sigma.members.end());
    report.sigma.members.erase(
        std::unique(report.sigma.members.begin(), report.sigma.members.end()),
        report.sigma.members.end());
  }
  report.sigma_matches = hv::set_equal(report.fix_lambda_false, report.sigma);
  report.sigma_measure_exact = m.measure_exact(report.sigma);
  report.sigma_measure = report.sigma_measure_exact.to_double();

  {
    World actual = make_world(m, report.conditioned.members.front(), {k, std::nullopt});
    CFResult r = eval_cf(m, phi, psi, actual, SpherePolicy::fix_outcome(1, k, 0), universe);
    report.fix_outcome_verdict = r.verdict;
    report.breaches = r.breaches;
    report.breach_lambdas.provenance = "FixOutcome breach lambdas";
    for (const auto& w : r.breaches) report.breach_lambdas.members.push_back(w.lambda);
    std::sort(report.breach_lambdas.members.begin(), report.breach_lambdas.members.end());
    report.breach_lambdas.members.erase(
        std::unique(report.breach_lambdas.members.begin(), report.breach_lambdas.members.end()),
        report.breach_lambdas.members.end());
  }
  report.breach_measure_exact = m.measure_exact(report.breach_lambdas);
  report.breach_measure = report.breach_measure_exact.to_double();
  return report;
}

json dilemma_to_json(const hv::HVModel& m, const DilemmaReport& r) {
  json j;
  j["k"] = m.settings[r.k].id;
  j["l"] = m.settings[r.l].id;
  j["actual_outcome"] = 0;
  json conditioned = json::array();
  for (int lam : r.conditioned.members) conditioned.push_back(m.lambdas[lam]);
  j["conditioned_lambdas"] = conditioned;

  json per_lambda = json::object();
  for (const auto& [lam, verdict] : r.fix_lambda_verdicts) {
    per_lambda[m.lambdas[lam]] = verdict_name(verdict);
  }
  json false_set = json::array();
  for (int lam : r.fix_lambda_false.members) false_set.push_back(m.lambdas[lam]);
  json sigma = json::array();
  for (int lam : r.sigma.members) sigma.push_back(m.lambdas[lam]);
  j["fix_lambda"] = {{"verdicts", per_lambda},
                     {"false_set", false_set},
                     {"sigma", sigma},
                     {"sigma_matches_false_set", r.sigma_matches},
                     {"sigma_measure", r.sigma_measure},
                     {"sigma_measure_exact", r.sigma_measure_exact.to_string()}};

  json breaches = json::array();
  for (const auto& w : r.breaches) breaches.push_back(world_to_json(m, w));
  json breach_lambdas = json::array();
  for (int lam : r.breach_lambdas.members) breach_lambdas.push_back(m.lambdas[lam]);
  j["fix_outcome"] = {{"verdict", verdict_name(r.fix_outcome_verdict)},
                      {"breaches", breaches},
                      {"breach_lambdas", breach_lambdas},
                      {"breach_measure", r.breach_measure},
                      {"breach_measure_exact", r.breach_measure_exact.to_string()}};
  return j;
}

namespace {

World actual_world_from_json(const hv::HVModel& m, const json& spec) {
  std::string label = spec.at("lambda").get<std::string>();
  int lambda = -1;
  for (int i = 0; i < m.lambda_count(); ++i) {
    if (m.lambdas[i] == label) {
      lambda = i;
      break;
    }
  }
  if (lambda < 0) throw std::invalid_argument("scenario: unknown lambda '" + label + "'");
  Configuration config;
  const auto& performed = spec.at("performed");
  if (performed.contains("1")) {
    config.left = m.setting_index(performed["1"].get<std::string>());
    if (m.settings[*config.left].side != 1) {
      throw std::invalid_argument("scenario: performed[1] is not a side-1 setting");
    }
  }
  if (performed.contains("2")) {
    config.right = m.setting_index(performed["2"].get<std::string>());
    if (m.settings[*config.right].side != 2) {
      throw std::invalid_argument("scenario: performed[2] is not a side-2 setting");
    }
  }
  World w = make_world(m, lambda, config);
  if (spec.contains("outcomes")) {
    for (const auto& [id, value] : spec.at("outcomes").items()) {
      int setting = m.setting_index(id);
      int side = m.settings[setting].side;
      auto rec = w.record(side, setting);
      if (!rec || *rec != value.get<int>()) {
        throw std::invalid_argument("scenario: declared outcome for '" + id +
                                    "' is inconsistent with the model's responses");
      }
    }
  }
  return w;
}

SpherePolicy policy_from_json(const hv::HVModel& m, const json& j, const World& actual) {
  if (j.is_string()) {
    std::string name = j.get<std::string>();
    if (name == "fix-lambda") return SpherePolicy::fix_lambda();
    throw std::invalid_argument("scenario: unknown policy '" + name + "'");
  }
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "fix-lambda") return SpherePolicy::fix_lambda();
  if (kind != "fix-outcome") throw std::invalid_argument("scenario: unknown policy kind");
  int side = j.at("side").get<int>();
  int setting = m.setting_index(j.at("setting").get<std::string>());
  auto rec = actual.record(side, setting);
  if (!rec) {
    throw std::invalid_argument("scenario: fix-outcome references a setting not recorded in the "
                                "actual world");
  }
  return SpherePolicy::fix_outcome(side, setting, *rec);
}

}  // namespace

json evaluate_scenario(const hv::HVModel& m, const json& scenario) {
  if (scenario.contains("epr")) {
    const auto& epr = scenario.at("epr");
    int k = m.setting_index(epr.at("k").get<std::string>());
    int l = m.setting_index(epr.at("l").get<std::string>());
    DilemmaReport report = epr_scenario(m, k, l);
    json j = dilemma_to_json(m, report);
    j["scenario"] = "epr";
    return j;
  }
  World actual = actual_world_from_json(m, scenario.at("actual"));
  Proposition phi = Proposition::parse(scenario.at("phi").get<std::string>());
  Proposition psi = Proposition::parse(scenario.at("psi").get<std::string>());
  SpherePolicy policy = policy_from_json(m, scenario.at("policy"), actual);
  auto worlds = enumerate_worlds(m);
  CFResult result = eval_cf(m, phi, psi, actual, policy, worlds);
  json witnesses = json::array();
  for (const auto& w : result.witnesses) witnesses.push_back(world_to_json(m, w));
  json breaches = json::array();
  for (const auto& w : result.breaches) breaches.push_back(world_to_json(m, w));
  return {{"scenario", "generic"},
          {"verdict", verdict_name(result.verdict)},
          {"phi", phi.to_string()},
          {"psi", psi.to_string()},
          {"witnesses", witnesses},
          {"breaches", breaches}};
}

}  // namespace qcv::cf
