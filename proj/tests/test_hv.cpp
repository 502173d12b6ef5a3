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

#include <cmath>
#include <random>

#include "hv/synth.hpp"

using namespace qcv::hv;
using qcv::num::Rational;
using qcv::quantum::SpinKind;

namespace {

Setting sigma_setting(const std::string& id, int side, double x, double y, double z) {
  Setting s;
  s.id = id;
  s.side = side;
  s.observable.kind = ObservableSpec::Kind::Sigma;
  s.observable.spin = SpinKind::Half;
  s.observable.direction = {x, y, z};
  return s;
}

Setting squared_setting(const std::string& id, int side, double x, double y, double z) {
  Setting s;
  s.id = id;
  s.side = side;
  s.observable.kind = ObservableSpec::Kind::Squared;
  s.observable.spin = SpinKind::One;
  s.observable.direction = {x, y, z};
  return s;
}

// n hidden states, uniform weights, two sigma settings per side
HVModel blank_model(int n_lambdas, int per_side = 2) {
  HVModel m;
  for (int i = 0; i < n_lambdas; ++i) m.lambdas.push_back("h" + std::to_string(i));
  for (int i = 0; i < n_lambdas; ++i) m.weights.push_back(Rational(1, n_lambdas));
  for (int i = 0; i < per_side; ++i) {
    m.settings.push_back(sigma_setting("a" + std::to_string(i), 1, 0, 0, 1));
    m.settings.push_back(sigma_setting("b" + std::to_string(i), 2, 1, 0, 0));
  }
  m.finalize();
  return m;
}

std::mt19937_64 g_rng(31415);

int coin() { return std::uniform_int_distribution<int>(0, 1)(g_rng) == 0 ? -1 : 1; }

// joint responses copy the single responses: satisfies the single-to-joint
// stability assumption by construction
HVModel random_stable_model() {
  int n = std::uniform_int_distribution<int>(1, 6)(g_rng);
  HVModel m = blank_model(n);
  for (int l = 0; l < n; ++l) {
    for (int s = 0; s < m.setting_count(); ++s) m.set_single(l, s, coin());
    for (const auto& [a, b] : m.cross_pairs()) {
      m.set_joint(l, a, b, m.single_or_throw(l, a), m.single_or_throw(l, b));
    }
  }
  return m;
}

HVModel random_unconstrained_model() {
  int n = std::uniform_int_distribution<int>(1, 6)(g_rng);
  HVModel m = blank_model(n);
  for (int l = 0; l < n; ++l) {
    for (int s = 0; s < m.setting_count(); ++s) m.set_single(l, s, coin());
    for (const auto& [a, b] : m.cross_pairs()) m.set_joint(l, a, b, coin(), coin());
  }
  return m;
}

// model joint distribution of one cross pair, by weight summation
double model_joint_probability(const HVModel& m, int a, int b, int i, int j) {
  Rational p;
  for (int l = 0; l < m.lambda_count(); ++l) {
    if (m.joint_or_throw(l, a, b) == std::make_pair(i, j)) p += m.weights[l];
  }
  return p.to_double();
}

double model_single_probability(const HVModel& m, int s, int i) {
  Rational p;
  for (int l = 0; l < m.lambda_count(); ++l) {
    if (m.single_or_throw(l, s) == i) p += m.weights[l];
  }
  return p.to_double();
}

HVModel singlet_same_axis() {
  return synthesize_model(qcv::quantum::singlet_state(),
                          {sigma_setting("a", 1, 0, 0, 1)},
                          {sigma_setting("b", 2, 0, 0, 1)});
}

HVModel ks_pair_model() {
  return synthesize_model(qcv::quantum::ks_state(),
                          {squared_setting("k", 1, 0, 0, 1)},
                          {squared_setting("l", 2, 1, 0, 0)});
}

}  // namespace

TEST_CASE("validate flags normalization, totality, and alphabet defects") {
  HVModel m = random_stable_model();
  CHECK(validate(m).empty());

  HVModel bad_weights = m;
  bad_weights.weights[0] = bad_weights.weights[0] + Rational(1, 10);
  auto defects = validate(bad_weights);
  REQUIRE(!defects.empty());
  CHECK(defects[0].find("normalization") != std::string::npos);

  HVModel missing = blank_model(1);
  missing.set_single(0, 0, 1);  // everything else absent
  bool saw_totality = false;
  for (const auto& d : validate(missing)) {
    if (d.find("totality") != std::string::npos) saw_totality = true;
  }
  CHECK(saw_totality);

  HVModel bad_alphabet = random_stable_model();
  bad_alphabet.set_single(0, 0, 7);
  bool saw_alphabet = false;
  for (const auto& d : validate(bad_alphabet)) {
    if (d.find("alphabet") != std::string::npos) saw_alphabet = true;
  }
  CHECK(saw_alphabet);
}

TEST_CASE("lambda sets: complements, partitions, orientation") {
  HVModel m = random_unconstrained_model();
  int a = m.side_settings(1)[0], b = m.side_settings(2)[0];

  LambdaSet plus = lambda_single(m, 1, a, 1), minus = lambda_single(m, 1, a, -1);
  CHECK(plus.size() + minus.size() == static_cast<std::size_t>(m.lambda_count()));
  CHECK(set_intersection(plus, minus).empty());

  std::size_t total = 0;
  for (int i : {-1, 1}) {
    for (int j : {-1, 1}) {
      LambdaSet cell = lambda_joint(m, a, b, i, j);
      total += cell.size();
      // the set is orientation-independent
      CHECK(set_equal(cell, lambda_joint(m, b, a, j, i)));
    }
  }
  CHECK(total == static_cast<std::size_t>(m.lambda_count()));

  CHECK_THROWS_AS(lambda_single(m, 2, a, 1), std::invalid_argument);
  CHECK_THROWS_AS(lambda_joint(m, a, a, 1, 1), std::invalid_argument);
}

TEST_CASE("measure: normalization, uniform subsets, additivity") {
  HVModel m = blank_model(4, 1);
  for (int l = 0; l < 4; ++l) {
    for (int s = 0; s < m.setting_count(); ++s) m.set_single(l, s, 1);
    for (const auto& [a, b] : m.cross_pairs()) m.set_joint(l, a, b, 1, 1);
  }
  CHECK(m.measure_exact(m.support()) == Rational(1));
  LambdaSet half{{0, 2}, ""};
  CHECK(m.measure_exact(half) == Rational(1, 2));
  LambdaSet other{{1}, ""};
  CHECK(m.measure_exact(set_union(half, other)) ==
        m.measure_exact(half) + m.measure_exact(other));
}

TEST_CASE("stable models: the full implication chain holds exactly") {
  for (int round = 0; round < 200; ++round) {
    HVModel m = random_stable_model();
    CHECK(check_assumption_L(m).holds);
    CHECK(check_partition_laws(m).ok);
    CHECK(check_product_identity(m).ok);
    CHECK(check_bell_factorization(m).ok);
    CHECK(check_parameter_independence(m).ok);
    CHECK(check_outcome_independence(m).ok);
    CHECK(check_decomposition(m).ok);

    // CHSH stays within the local bound, exactly
    auto side1 = m.side_settings(1);
    auto side2 = m.side_settings(2);
    Rational s = chsh_exact(m, side1[0], side1[1], side2[0], side2[1]);
    CHECK(s.abs() <= Rational(2));

    // each single-outcome set is exactly the union of its joint cells
    int a = side1[0], b = side2[0];
    for (int i : m.alphabet(a)) {
      LambdaSet cells = set_union(lambda_joint(m, a, b, i, -1), lambda_joint(m, a, b, i, 1));
      CHECK(set_equal(lambda_single(m, 1, a, i), cells));
    }
    for (int j : m.alphabet(b)) {
      LambdaSet cells = set_union(lambda_joint(m, a, b, -1, j), lambda_joint(m, a, b, 1, j));
      CHECK(set_equal(lambda_single(m, 2, b, j), cells));
    }
  }
}

TEST_CASE("one hidden state: single-outcome sets are empty or everything") {
  HVModel m = blank_model(1, 1);
  int a = m.side_settings(1)[0], b = m.side_settings(2)[0];
  m.set_single(0, a, 1);
  m.set_single(0, b, -1);
  m.set_joint(0, a, b, 1, -1);
  CHECK(lambda_single(m, 1, a, 1).size() == 1);
  CHECK(lambda_single(m, 1, a, -1).empty());
  int nonempty_cells = 0;
  for (int i : {-1, 1}) {
    for (int j : {-1, 1}) {
      if (!lambda_joint(m, a, b, i, j).empty()) ++nonempty_cells;
    }
  }
  CHECK(nonempty_cells == 1);
}

TEST_CASE("per-hidden-state strategies reach exactly |CHSH| = 2") {
  // the convexity oracle: every deterministic local strategy has |S| = 2
  Rational max_strategy(0);
  for (int mask = 0; mask < 16; ++mask) {
    int a = (mask & 1) ? 1 : -1;
    int ap = (mask & 2) ? 1 : -1;
    int b = (mask & 4) ? 1 : -1;
    int bp = (mask & 8) ? 1 : -1;
    Rational s(a * b + a * bp + ap * b - ap * bp);
    CHECK(s.abs() == Rational(2));
    if (s.abs() > max_strategy) max_strategy = s.abs();
  }
  CHECK(max_strategy == Rational(2));
}

TEST_CASE("a single-state flip model violates where it must") {
  HVModel m = blank_model(1, 1);
  int a = m.side_settings(1)[0], b = m.side_settings(2)[0];
  m.set_single(0, a, 1);
  m.set_single(0, b, 1);
  m.set_joint(0, a, b, -1, 1);  // the a-outcome flips under the joint context
  CHECK(validate(m).empty());

  auto l_result = check_assumption_L(m);
  CHECK_FALSE(l_result.holds);
  CHECK(l_result.flips.measure_exact == Rational(1));
  CHECK(l_result.side1_flips.size() == 1);
  CHECK(l_result.side2_flips.empty());

  CHECK_FALSE(check_bell_factorization(m).ok);
  CHECK(check_bell_factorization(m).measure_exact == Rational(1));
  auto pi = check_parameter_independence(m);
  CHECK_FALSE(pi.ok);
  for (const auto& v : pi.violations) CHECK(v.side == 1);
  CHECK(check_outcome_independence(m).ok);
  CHECK(check_decomposition(m).ok);  // factorization and PI fail together
  CHECK_FALSE(check_product_identity(m).ok);
}

TEST_CASE("unconstrained models: determinism forces OI and the decomposition") {
  for (int round = 0; round < 500; ++round) {
    HVModel m = random_unconstrained_model();
    CHECK(check_outcome_independence(m).ok);
    CHECK(check_decomposition(m).ok);
    CHECK(check_partition_laws(m).ok);
  }
}

TEST_CASE("set measures equal the indicator-weighted sums") {
  for (int round = 0; round < 50; ++round) {
    HVModel m = random_unconstrained_model();
    int a = m.side_settings(1)[0], b = m.side_settings(2)[0];
    for (int i : {-1, 1}) {
      for (int j : {-1, 1}) {
        Rational joint_sum, product_sum;
        for (int l = 0; l < m.lambda_count(); ++l) {
          if (m.joint_or_throw(l, a, b) == std::make_pair(i, j)) joint_sum += m.weights[l];
          int ind_a = m.single_or_throw(l, a) == i ? 1 : 0;
          int ind_b = m.single_or_throw(l, b) == j ? 1 : 0;
          product_sum += m.weights[l] * Rational(ind_a * ind_b);
        }
        CHECK(m.measure_exact(lambda_joint(m, a, b, i, j)) == joint_sum);
        CHECK(m.measure_exact(set_intersection(lambda_single(m, 1, a, i),
                                               lambda_single(m, 2, b, j))) == product_sum);
      }
    }
  }
}

TEST_CASE("duplicate setting ids are rejected") {
  HVModel m;
  m.lambdas = {"x"};
  m.weights = {Rational(1)};
  m.settings = {sigma_setting("a", 1, 0, 0, 1), sigma_setting("a", 2, 1, 0, 0)};
  CHECK_THROWS_WITH_AS(m.finalize(), doctest::Contains("duplicate setting"),
                       std::invalid_argument);
}

TEST_CASE("marginal_joint sums the far side to one") {
  HVModel m = random_unconstrained_model();
  int a = m.side_settings(1)[0], b = m.side_settings(2)[0];
  for (int l = 0; l < m.lambda_count(); ++l) {
    int sum1 = 0, sum2 = 0;
    for (int i : m.alphabet(a)) sum1 += marginal_joint(m, l, a, b, 1, i);
    for (int j : m.alphabet(b)) sum2 += marginal_joint(m, l, a, b, 2, j);
    CHECK(sum1 == 1);
    CHECK(sum2 == 1);
    auto [ja, jb] = m.joint_or_throw(l, a, b);
    CHECK(marginal_joint(m, l, a, b, 1, ja) == 1);
    CHECK(marginal_joint(m, l, a, b, 2, jb) == 1);
  }
}

TEST_CASE("synthesized singlet, same axis: the product construction in numbers") {
  HVModel m = singlet_same_axis();
  CHECK(validate(m).empty());
  CHECK(m.lambda_count() == 8);
  for (const auto& w : m.weights) CHECK(w == Rational(1, 8));

  int a = m.setting_index("a"), b = m.setting_index("b");
  // faithful on the joint context
  CHECK(model_joint_probability(m, a, b, 1, -1) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(model_joint_probability(m, a, b, -1, 1) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(model_joint_probability(m, a, b, 1, 1) == 0.0);
  CHECK(model_single_probability(m, a, 1) == doctest::Approx(0.5).epsilon(1e-13));

  // single and joint entries are independent coins: each side disagrees with
  // probability 1/2, at least one side with probability 3/4
  auto l_result = check_assumption_L(m);
  CHECK_FALSE(l_result.holds);
  CHECK(m.measure_exact(l_result.side1_flips) == Rational(1, 2));
  CHECK(m.measure_exact(l_result.side2_flips) == Rational(1, 2));
  CHECK(l_result.flips.measure_exact == Rational(3, 4));

  auto pi = check_parameter_independence(m);
  CHECK_FALSE(pi.ok);
  CHECK(pi.measure_exact == Rational(3, 4));
  CHECK(check_outcome_independence(m).ok);
  CHECK(check_decomposition(m).ok);
  CHECK_FALSE(check_bell_factorization(m).ok);

  auto audit = run_audit(m);
  CHECK_FALSE(audit.error);
  CHECK(audit.violation);
}

TEST_CASE("synthesized two-spin-1 pair model: support pruning and flips") {
  HVModel m = ks_pair_model();
  CHECK(validate(m).empty());
  // joint support excludes (0,0); 3 joint cells x 2 x 2 singles
  CHECK(m.lambda_count() == 12);
  int k = m.setting_index("k"), l = m.setting_index("l");
  CHECK(model_joint_probability(m, k, l, 0, 0) == 0.0);
  CHECK(model_joint_probability(m, k, l, 0, 1) == doctest::Approx(1.0 / 3).epsilon(1e-13));
  CHECK(model_single_probability(m, k, 0) == doctest::Approx(1.0 / 3).epsilon(1e-13));

  auto flips = find_context_flips(m, k, 0);
  CHECK_FALSE(flips.sigma.empty());
  CHECK(flips.measure_exact == Rational(2, 9));
  for (const auto& w : flips.witnesses) {
    CHECK(m.single_or_throw(w.lambda, k) == 0);
    auto [ja, jb] = m.joint_or_throw(w.lambda, k, l);
    CHECK(ja == w.joint_target_outcome);
    CHECK(jb == w.joint_partner_outcome);
    CHECK(ja != 0);
  }

  // the specific flip-with-partner-zero set of the two-observer scenario
  LambdaSet eq41 = set_intersection(lambda_single(m, 1, k, 0), lambda_joint(m, k, l, 1, 0));
  CHECK_FALSE(eq41.empty());
  CHECK(m.measure_exact(eq41) == Rational(1, 9));
}

TEST_CASE("three-outcome synthesis: plain spin-1 components stay faithful") {
  Setting ka, lb;
  ka.id = "k";
  ka.side = 1;
  ka.observable = {ObservableSpec::Kind::Component, SpinKind::One, {0, 0, 1}};
  lb.id = "l";
  lb.side = 2;
  lb.observable = {ObservableSpec::Kind::Component, SpinKind::One, {0, 0, 1}};
  HVModel m = synthesize_model(qcv::quantum::ks_state(), {ka}, {lb});
  CHECK(validate(m).empty());
  // joint support: the three perfectly anticorrelated pairs, 1/3 each
  CHECK(m.lambda_count() == 3 * 3 * 3);
  int k = m.setting_index("k"), l = m.setting_index("l");
  for (int i : {-1, 0, 1}) {
    for (int j : {-1, 0, 1}) {
      double expected = i + j == 0 ? 1.0 / 3 : 0.0;
      CHECK(model_joint_probability(m, k, l, i, j) == doctest::Approx(expected).epsilon(1e-13));
    }
  }
  // single-vs-joint flips of positive measure, as with the squared menus
  auto flips = find_context_flips(m, k, 0);
  CHECK(flips.measure_exact == Rational(2, 9));
}

TEST_CASE("correlation demands binary alphabets") {
  HVModel m = ks_pair_model();
  CHECK_THROWS_AS(correlation(m, m.setting_index("k"), m.setting_index("l")),
                  std::invalid_argument);
}

TEST_CASE("synthesized singlet menus reproduce the quantum CHSH value") {
  auto dir = [](double degrees) {
    double rad = degrees * M_PI / 180.0;
    return std::array<double, 3>{std::sin(rad), 0.0, std::cos(rad)};
  };
  auto setting = [&](const std::string& id, int side, double degrees) {
    Setting s = sigma_setting(id, side, 0, 0, 1);
    s.observable.direction = dir(degrees);
    return s;
  };
  HVModel m = synthesize_model(qcv::quantum::singlet_state(),
                               {setting("a", 1, 90), setting("ap", 1, 0)},
                               {setting("b", 2, 45), setting("bp", 2, 135)});
  CHECK(validate(m).empty());
  double s = chsh(m, m.setting_index("a"), m.setting_index("ap"), m.setting_index("b"),
                  m.setting_index("bp"));
  CHECK(std::abs(std::abs(s) - 2.0 * std::sqrt(2.0)) <= 1e-12);
  // same-angle anticorrelation
  HVModel same = singlet_same_axis();
  CHECK(correlation(same, same.setting_index("a"), same.setting_index("b")) ==
        doctest::Approx(-1.0).epsilon(1e-13));
}

TEST_CASE("model JSON rount trip preserves everything the audit sees") {
  HVModel m = ks_pair_model();
  HVModel back = HVModel::from_json(m.to_json());
  CHECK(validate(back).empty());
  CHECK(back.lambda_count() == m.lambda_count());
  CHECK(run_audit(back).report == run_audit(m).report);
  CHECK(back.to_json() == m.to_json());
}

TEST_CASE("synthesis caps are enforced") {
  std::vector<Setting> big_a, big_b;
  for (int i = 0; i < 4; ++i) {
    big_a.push_back(sigma_setting("a" + std::to_string(i), 1, 0, 0, 1));
    big_b.push_back(sigma_setting("b" + std::to_string(i), 2, 1, 0, 0));
  }
  CHECK_THROWS_WITH_AS(
      synthesize_model(qcv::quantum::singlet_state(), big_a, big_b),
      doctest::Contains("menu cap"), std::invalid_argument);
}
