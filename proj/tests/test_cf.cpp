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

#include <doctest.h>

#include <stdexcept>

#include <random>

#include "cf/eval.hpp"

using namespace qcv::cf;
using namespace qcv::hv;
using qcv::num::Rational;
using qcv::quantum::SpinKind;

namespace {

Setting squared_setting(const std::string& id, int side, double x, double y, double z) {
  Setting s;
  s.id = id;
  s.side = side;
  s.observable.kind = ObservableSpec::Kind::Squared;
  s.observable.spin = SpinKind::One;
  s.observable.direction = {x, y, z};
  return s;
}

HVModel ks_pair_model() {
  return synthesize_model(qcv::quantum::ks_state(),
                          {squared_setting("k", 1, 0, 0, 1)},
                          {squared_setting("l", 2, 1, 0, 0)});
}

// one hidden state, perfectly stable responses matching the quantum
// correlations on the (k,l) support: single k -> 0 forces joint (0,1)
HVModel stable_toy_model() {
  HVModel m;
  m.lambdas = {"t0"};
  m.weights = {Rational(1)};
  m.settings = {squared_setting("k", 1, 0, 0, 1), squared_setting("l", 2, 1, 0, 0)};
  m.finalize();
  m.set_single(0, 0, 0);
  m.set_single(0, 1, 1);
  m.set_joint(0, 0, 1, 0, 1);
  return m;
}

std::mt19937_64 g_rng(161803);

}  // namespace

TEST_CASE("propositions parse, print, and evaluate") {
  Proposition p = Proposition::parse("(and (performs 2 l) (not (outcome 2 l 0)))");
  CHECK(p.to_string() == "(and (performs 2 l) (not (outcome 2 l 0)))");
  CHECK_THROWS_AS(Proposition::parse("(xor (performs 1 k))"), std::invalid_argument);
  CHECK_THROWS_AS(Proposition::parse("(performs 1)"), std::invalid_argument);
  CHECK_THROWS_AS(Proposition::parse("(performs one k)"), std::invalid_argument);
  CHECK_THROWS_AS(Proposition::parse("(performs 1 k) junk"), std::invalid_argument);

  HVModel m = stable_toy_model();
  World both = make_world(m, 0, {0, 1});
  World none = make_world(m, 0, {});
  CHECK(satisfies(Proposition::parse("(performs 1 k)"), both, m));
  CHECK(satisfies(Proposition::parse("(outcome 2 l 1)"), both, m));
  CHECK_FALSE(satisfies(Proposition::parse("(outcome 2 l 1)"), none, m));  // no record, no atom
  CHECK(satisfies(Proposition::parse("(not (outcome 2 l 1))"), none, m));
}

TEST_CASE("world enumeration: count and response consistency") {
  HVModel m = ks_pair_model();
  auto worlds = enumerate_worlds(m);
  // |support| x (1 + |A| + |B| + |A||B|)
  CHECK(worlds.size() == static_cast<std::size_t>(m.support().size()) * 4);
  for (const auto& w : worlds) {
    if (w.config.left && w.config.right) {
      auto [oa, ob] = m.joint_or_throw(w.lambda, *w.config.left, *w.config.right);
      CHECK(*w.left_outcome == oa);
      CHECK(*w.right_outcome == ob);
    } else if (w.config.left) {
      CHECK(*w.left_outcome == m.single_or_throw(w.lambda, *w.config.left));
    }
  }
}

TEST_CASE("accessibility: FixLambda keeps all configurations of the state") {
  HVModel m = stable_toy_model();
  auto worlds = enumerate_worlds(m);
  CHECK(worlds.size() == 4);
  World actual = make_world(m, 0, {0, std::nullopt});
  auto sphere = accessible(actual, SpherePolicy::fix_lambda(), worlds);
  CHECK(sphere.size() == 4);

  // the actual world is accessible under both policies
  auto fo = accessible(actual, SpherePolicy::fix_outcome(1, 0, 0), worlds);
  bool actual_in = false;
  for (auto i : fo) {
    if (worlds[i].config.left == actual.config.left &&
        worlds[i].config.right == actual.config.right && worlds[i].lambda == actual.lambda) {
      actual_in = true;
    }
  }
  CHECK(actual_in);
}

TEST_CASE("FixOutcome admits other hidden states that match the record") {
  HVModel m = ks_pair_model();
  auto worlds = enumerate_worlds(m);
  int k = m.setting_index("k");
  int lam0 = set_intersection(lambda_single(m, 1, k, 0), m.support()).members.front();
  World actual = make_world(m, lam0, {k, std::nullopt});
  auto sphere = accessible(actual, SpherePolicy::fix_outcome(1, k, 0), worlds);
  bool other_lambda = false;
  for (auto i : sphere) {
    if (worlds[i].lambda != lam0 && worlds[i].config.left && worlds[i].config.right) {
      other_lambda = true;
      CHECK(*worlds[i].left_outcome == 0);
    }
  }
  CHECK(other_lambda);
}

TEST_CASE("eval_cf: vacuous, reflexive, and policy validation") {
  HVModel m = stable_toy_model();
  auto worlds = enumerate_worlds(m);
  World actual = make_world(m, 0, {0, std::nullopt});

  // no world records outcome 7: the antecedent is unsatisfiable
  Proposition impossible = Proposition::parse("(outcome 2 l 7)");
  Proposition anything = Proposition::parse("(performs 2 l)");
  auto vac = eval_cf(m, impossible, anything, actual, SpherePolicy::fix_lambda(), worlds);
  CHECK(vac.verdict == Verdict::Vacuous);
  CHECK(vac.witnesses.empty());

  // psi = phi is True whenever non-vacuous
  auto refl = eval_cf(m, anything, anything, actual, SpherePolicy::fix_lambda(), worlds);
  CHECK(refl.verdict == Verdict::True);
  CHECK_FALSE(refl.witnesses.empty());

  CHECK_THROWS_AS(
      eval_cf(m, anything, anything, actual, SpherePolicy::fix_outcome(1, 0, 1), worlds),
      std::invalid_argument);
}

TEST_CASE("shrinking the sphere never turns True into False") {
  for (int round = 0; round < 100; ++round) {
    HVModel m = ks_pair_model();
    auto worlds = enumerate_worlds(m);
    int k = m.setting_index("k"), l = m.setting_index("l");
    int outcome = std::uniform_int_distribution<int>(0, 1)(g_rng);
    auto candidates = set_intersection(lambda_single(m, 1, k, outcome), m.support());
    if (candidates.empty()) continue;
    World actual = make_world(m, candidates.members.front(), {k, std::nullopt});
    Proposition phi = Proposition::performs(2, "l");
    Proposition psi = Proposition::outcome_eq(2, "l", std::uniform_int_distribution<int>(0, 1)(g_rng));
    auto full = eval_cf(m, phi, psi, actual, SpherePolicy::fix_lambda(), worlds);
    if (full.verdict != Verdict::True) continue;

    // drop random worlds but keep one accessible phi-world
    std::vector<World> restricted;
    bool kept_phi = false;
    for (const auto& w : worlds) {
      bool is_phi_world = w.lambda == actual.lambda && w.performs(2, l);
      if (is_phi_world && !kept_phi) {
        restricted.push_back(w);
        kept_phi = true;
        continue;
      }
      if (std::uniform_int_distribution<int>(0, 1)(g_rng) == 0) restricted.push_back(w);
    }
    auto shrunk = eval_cf(m, phi, psi, actual, SpherePolicy::fix_lambda(), restricted);
    CHECK(shrunk.verdict == Verdict::True);
  }
}

TEST_CASE("the two-observer dilemma on the synthesized two-spin-1 model") {
  HVModel m = ks_pair_model();
  int k = m.setting_index("k"), l = m.setting_index("l");
  DilemmaReport report = epr_scenario(m, k, l);

  // FixLambda: the false set is exactly the flip set with partner outcome 0
  CHECK_FALSE(report.fix_lambda_false.empty());
  CHECK(report.sigma_matches);
  CHECK(set_equal(report.fix_lambda_false, report.sigma));
  CHECK(report.sigma_measure_exact == Rational(1, 9));
  // which is also the intersection computed straight from the set algebra
  LambdaSet eq41 = set_intersection(
      set_intersection(lambda_single(m, 1, k, 0), lambda_joint(m, k, l, 1, 0)), m.support());
  CHECK(set_equal(report.sigma, eq41));

  // FixOutcome: certainty, at the price of breach worlds
  CHECK(report.fix_outcome_verdict == Verdict::True);
  CHECK_FALSE(report.breaches.empty());
  LambdaSet expected_breach = set_intersection(
      set_intersection(lambda_single(m, 1, k, 1), lambda_joint(m, k, l, 0, 1)), m.support(),
      "joint first 0 while single k is 1");
  CHECK(set_equal(report.breach_lambdas, expected_breach));
  for (int lam : report.breach_lambdas.members) {
    CHECK(m.single_or_throw(lam, k) == 1);
  }

  CHECK_THROWS_AS(epr_scenario(m, l, k), std::invalid_argument);
}

TEST_CASE("a stable toy model shows no dilemma") {
  HVModel m = stable_toy_model();
  CHECK(check_assumption_L(m).holds);
  DilemmaReport report = epr_scenario(m, 0, 1);
  CHECK(report.fix_lambda_false.empty());
  CHECK(report.sigma.empty());
  CHECK(report.sigma_matches);
  for (const auto& [lam, verdict] : report.fix_lambda_verdicts) CHECK(verdict == Verdict::True);
  CHECK(report.fix_outcome_verdict == Verdict::True);
  CHECK(report.breaches.empty());
}

TEST_CASE("orthogonality of the scenario directions is enforced") {
  HVModel m = synthesize_model(qcv::quantum::ks_state(),
                               {squared_setting("k", 1, 0, 0, 1)},
                               {squared_setting("l", 2, 0, 0, 1)});  // same axis
  CHECK_THROWS_WITH_AS(epr_scenario(m, m.setting_index("k"), m.setting_index("l")),
                       doctest::Contains("not orthogonal"), std::invalid_argument);
}

TEST_CASE("scenario documents: epr and generic forms") {
  HVModel m = ks_pair_model();
  nlohmann::json epr = {{"epr", {{"k", "k"}, {"l", "l"}}}};
  auto j = evaluate_scenario(m, epr);
  CHECK(j["scenario"] == "epr");
  CHECK(j["fix_lambda"]["sigma_matches_false_set"].get<bool>());
  CHECK(j["fix_outcome"]["verdict"] == "True");
  CHECK_FALSE(j["fix_outcome"]["breaches"].empty());

  int k = m.setting_index("k");
  std::string lam = m.lambdas[set_intersection(lambda_single(m, 1, k, 0), m.support())
                                  .members.front()];
  nlohmann::json generic = {
      {"actual", {{"lambda", lam}, {"performed", {{"1", "k"}}}, {"outcomes", {{"k", 0}}}}},
      {"phi", "(performs 2 l)"},
      {"psi", "(outcome 2 l 1)"},
      {"policy", "fix-lambda"}};
  auto g = evaluate_scenario(m, generic);
  CHECK(g["scenario"] == "generic");
  CHECK((g["verdict"] == "True" || g["verdict"] == "False"));

  // an actual world inconsistent with the responses is rejected
  nlohmann::json bad = generic;
  bad["actual"]["outcomes"]["k"] = 1;
  CHECK_THROWS_WITH_AS(evaluate_scenario(m, bad), doctest::Contains("inconsistent"),
                       std::invalid_argument);
}

TEST_CASE("generic fix-outcome scenarios over the full world set") {
  HVModel m = ks_pair_model();
  int k = m.setting_index("k"), l = m.setting_index("l");
  // pick a hidden state answering 0 to k alone and 1 to l alone
  int lam = -1;
  for (int c : m.support().members) {
    if (m.single_or_throw(c, k) == 0 && m.single_or_throw(c, l) == 1) {
      lam = c;
      break;
    }
  }
  REQUIRE(lam >= 0);
  nlohmann::json scenario = {
      {"actual", {{"lambda", m.lambdas[lam]}, {"performed", {{"1", "k"}}}}},
      {"phi", "(performs 2 l)"},
      {"psi", "(outcome 2 l 1)"},
      {"policy", {{"kind", "fix-outcome"}, {"side", 1}, {"setting", "k"}}}};
  auto j = evaluate_scenario(m, scenario);
  // every accessible world measuring l answers 1: the same-state l-alone world
  // by choice of lam, the joint worlds because (0,0) has no weight
  CHECK(j["verdict"] == "True");
  CHECK_FALSE(j["breaches"].empty());

  // a fix-outcome policy must reference a performed setting
  nlohmann::json bad = scenario;
  bad["policy"]["setting"] = "l";
  CHECK_THROWS_WITH_AS(evaluate_scenario(m, bad), doctest::Contains("not recorded"),
                       std::invalid_argument);
}
