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

#include "hv/checks.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcv::hv {

using nlohmann::json;

LambdaSet lambda_single(const HVModel& m, int side, int setting, int outcome) {
  if (m.settings[setting].side != side) {
    throw std::invalid_argument("lambda_single: setting '" + m.settings[setting].id +
                                "' is not on side " + std::to_string(side));
  }
  LambdaSet s;
  s.provenance = "single(" + m.settings[setting].id + "=" + std::to_string(outcome) + ")";
  for (int l = 0; l < m.lambda_count(); ++l) {
    if (m.single_or_throw(l, setting) == outcome) s.members.push_back(l);
  }
  return s;
}

namespace {

// Normalizes a cross pair to (side-1 setting, side-2 setting).
std::pair<int, int> oriented_pair(const HVModel& m, int a, int b, bool* swapped = nullptr) {
  int side_a = m.settings[a].side, side_b = m.settings[b].side;
  if (side_a == side_b) {
    throw std::invalid_argument("settings '" + m.settings[a].id + "' and '" + m.settings[b].id +
                                "' are on the same side");
  }
  if (swapped) *swapped = side_a == 2;
  return side_a == 1 ? std::make_pair(a, b) : std::make_pair(b, a);
}

void fill_measures(const HVModel& m, FlipReport& r) {
  r.measure_exact = m.measure_exact(r.sigma);
  r.measure = r.measure_exact.to_double();
}

bool factorization_at(const HVModel& m, int l, int a, int b) {
  auto [ja, jb] = m.joint_or_throw(l, a, b);
  int sa = m.single_or_throw(l, a);
  int sb = m.single_or_throw(l, b);
  for (int i : m.alphabet(a)) {
    for (int j : m.alphabet(b)) {
      int joint_ind = (ja == i && jb == j) ? 1 : 0;
      int product = ((sa == i) ? 1 : 0) * ((sb == j) ? 1 : 0);
      if (joint_ind != product) return false;
    }
  }
  return true;
}

bool parameter_independence_at(const HVModel& m, int l, int a, int b) {
  for (int i : m.alphabet(a)) {
    if (marginal_joint(m, l, a, b, 1, i) != ((m.single_or_throw(l, a) == i) ? 1 : 0)) {
      return false;
    }
  }
  for (int j : m.alphabet(b)) {
    if (marginal_joint(m, l, a, b, 2, j) != ((m.single_or_throw(l, b) == j) ? 1 : 0)) {
      return false;
    }
  }
  return true;
}

bool outcome_independence_at(const HVModel& m, int l, int a, int b) {
  auto [ja, jb] = m.joint_or_throw(l, a, b);
  for (int i : m.alphabet(a)) {
    for (int j : m.alphabet(b)) {
      int joint_ind = (ja == i && jb == j) ? 1 : 0;
      int product = marginal_joint(m, l, a, b, 1, i) * marginal_joint(m, l, a, b, 2, j);
      if (joint_ind != product) return false;
    }
  }
  return true;
}

}  // namespace

LambdaSet lambda_joint(const HVModel& m, int setting_a, int setting_b, int out_a, int out_b) {
  bool swapped = false;
  auto [a, b] = oriented_pair(m, setting_a, setting_b, &swapped);
  if (swapped) std::swap(out_a, out_b);
  LambdaSet s;
  s.provenance = "joint(" + m.settings[a].id + "=" + std::to_string(out_a) + "," +
                 m.settings[b].id + "=" + std::to_string(out_b) + ")";
  for (int l = 0; l < m.lambda_count(); ++l) {
    if (m.joint_or_throw(l, a, b) == std::make_pair(out_a, out_b)) s.members.push_back(l);
  }
  return s;
}

AssumptionLResult check_assumption_L(const HVModel& m) {
  AssumptionLResult result;
  result.flips.sigma.provenance = "assumption-L flips";
  result.side1_flips.provenance = "assumption-L flips, side 1";
  result.side2_flips.provenance = "assumption-L flips, side 2";
  for (int l : m.support().members) {
    bool flipped = false, flipped1 = false, flipped2 = false;
    for (const auto& [a, b] : m.cross_pairs()) {
      auto [ja, jb] = m.joint_or_throw(l, a, b);
      int sa = m.single_or_throw(l, a);
      int sb = m.single_or_throw(l, b);
      if (ja != sa) {
        result.flips.witnesses.push_back({l, a, b, sa, ja, jb});
        flipped = flipped1 = true;
      }
      if (jb != sb) {
        result.flips.witnesses.push_back({l, b, a, sb, jb, ja});
        flipped = flipped2 = true;
      }
    }
    if (flipped) result.flips.sigma.members.push_back(l);
    if (flipped1) result.side1_flips.members.push_back(l);
    if (flipped2) result.side2_flips.members.push_back(l);
  }
  fill_measures(m, result.flips);
  result.holds = result.flips.sigma.empty();
  return result;
}

ProductIdentityResult check_product_identity(const HVModel& m) {
  ProductIdentityResult result;
  LambdaSet support = m.support();
  for (const auto& [a, b] : m.cross_pairs()) {
    for (int i : m.alphabet(a)) {
      for (int j : m.alphabet(b)) {
        LambdaSet joint_set =
            set_intersection(lambda_joint(m, a, b, i, j), support);
        LambdaSet intersect = set_intersection(
            set_intersection(lambda_single(m, 1, a, i), lambda_single(m, 2, b, j)), support);
        if (!set_equal(joint_set, intersect)) {
          result.ok = false;
          result.counterexample = "pair (" + m.settings[a].id + "," + m.settings[b].id +
                                  "), outcomes (" + std::to_string(i) + "," + std::to_string(j) +
                                  "): joint set has " + std::to_string(joint_set.size()) +
                                  " members, intersection has " +
                                  std::to_string(intersect.size());
          return result;
        }
      }
    }
  }
  result.ok = true;
  return result;
}

FactorizationResult check_bell_factorization(const HVModel& m) {
  FactorizationResult result;
  result.failures.provenance = "bell factorization failures";
  for (int l : m.support().members) {
    for (const auto& [a, b] : m.cross_pairs()) {
      if (!factorization_at(m, l, a, b)) {
        result.failures.members.push_back(l);
        break;
      }
    }
  }
  result.measure_exact = m.measure_exact(result.failures);
  result.measure = result.measure_exact.to_double();
  result.ok = result.failures.empty();
  return result;
}

int marginal_joint(const HVModel& m, int lambda, int setting_a, int setting_b, int side,
                   int outcome) {
  auto [a, b] = oriented_pair(m, setting_a, setting_b);
  auto [ja, jb] = m.joint_or_throw(lambda, a, b);
  if (side != 1 && side != 2) throw std::invalid_argument("marginal_joint: side must be 1 or 2");
  int sum = 0;
  if (side == 1) {
    for (int j : m.alphabet(b)) sum += (ja == outcome && jb == j) ? 1 : 0;
  } else {
    for (int i : m.alphabet(a)) sum += (ja == i && jb == outcome) ? 1 : 0;
  }
  return sum;
}

ParameterIndependenceResult check_parameter_independence(const HVModel& m) {
  ParameterIndependenceResult result;
  result.violating.provenance = "parameter-independence violations";
  for (int l : m.support().members) {
    bool violated = false;
    for (const auto& [a, b] : m.cross_pairs()) {
      for (int i : m.alphabet(a)) {
        if (marginal_joint(m, l, a, b, 1, i) != ((m.single_or_throw(l, a) == i) ? 1 : 0)) {
          result.violations.push_back({l, a, b, 1, i});
          violated = true;
        }
      }
      for (int j : m.alphabet(b)) {
        if (marginal_joint(m, l, a, b, 2, j) != ((m.single_or_throw(l, b) == j) ? 1 : 0)) {
          result.violations.push_back({l, a, b, 2, j});
          violated = true;
        }
      }
    }
    if (violated) result.violating.members.push_back(l);
  }
  result.measure_exact = m.measure_exact(result.violating);
  result.measure = result.measure_exact.to_double();
  result.ok = result.violations.empty();
  return result;
}

OutcomeIndependenceResult check_outcome_independence(const HVModel& m) {
  OutcomeIndependenceResult result;
  for (int l : m.support().members) {
    for (const auto& [a, b] : m.cross_pairs()) {
      if (!outcome_independence_at(m, l, a, b)) {
        result.violations.push_back({l, a, b, 0, 0});
      }
    }
  }
  result.ok = result.violations.empty();
  return result;
}

DecompositionResult check_decomposition(const HVModel& m) {
  DecompositionResult result;
  for (int l : m.support().members) {
    for (const auto& [a, b] : m.cross_pairs()) {
      bool fact = factorization_at(m, l, a, b);
      bool pi = parameter_independence_at(m, l, a, b);
      bool oi = outcome_independence_at(m, l, a, b);
      if (fact != (pi && oi)) {
        result.ok = false;
        result.counterexample = "lambda '" + m.lambdas[l] + "', pair (" + m.settings[a].id +
                                "," + m.settings[b].id + "): factorization=" +
                                (fact ? "true" : "false") + ", PI=" + (pi ? "true" : "false") +
                                ", OI=" + (oi ? "true" : "false");
        return result;
      }
    }
  }
  result.ok = true;
  return result;
}

PartitionResult check_partition_laws(const HVModel& m) {
  PartitionResult result;
  for (int s = 0; s < m.setting_count(); ++s) {
    for (int l = 0; l < m.lambda_count(); ++l) {
      int containing = 0;
      for (int o : m.alphabet(s)) {
        if (m.single_or_throw(l, s) == o) ++containing;
      }
      if (containing != 1) {
        result.ok = false;
        result.defect = "single-outcome sets of '" + m.settings[s].id + "' do not partition";
        return result;
      }
    }
  }
  for (const auto& [a, b] : m.cross_pairs()) {
    for (int l = 0; l < m.lambda_count(); ++l) {
      int containing = 0;
      for (int i : m.alphabet(a)) {
        for (int j : m.alphabet(b)) {
          if (m.joint_or_throw(l, a, b) == std::make_pair(i, j)) ++containing;
        }
      }
      if (containing != 1) {
        result.ok = false;
        result.defect = "joint-outcome sets of (" + m.settings[a].id + "," + m.settings[b].id +
                        ") do not partition";
        return result;
      }
    }
  }
  result.ok = true;
  return result;
}

namespace {

void require_binary(const HVModel& m, int setting) {
  if (m.alphabet(setting) != std::vector<int>{-1, 1}) {
    throw std::invalid_argument("correlation: setting '" + m.settings[setting].id +
                                "' does not have a {-1,+1} alphabet");
  }
}

}  // namespace

Rational correlation_exact(const HVModel& m, int setting_a, int setting_b) {
  auto [a, b] = oriented_pair(m, setting_a, setting_b);
  require_binary(m, a);
  require_binary(m, b);
  Rational e;
  for (int l = 0; l < m.lambda_count(); ++l) {
    auto [ja, jb] = m.joint_or_throw(l, a, b);
    e += m.weights[l] * Rational(ja * jb);
  }
  return e;
}

double correlation(const HVModel& m, int setting_a, int setting_b) {
  return correlation_exact(m, setting_a, setting_b).to_double();
}

Rational chsh_exact(const HVModel& m, int a, int a_prime, int b, int b_prime) {
  return correlation_exact(m, a, b) + correlation_exact(m, a, b_prime) +
         correlation_exact(m, a_prime, b) - correlation_exact(m, a_prime, b_prime);
}

double chsh(const HVModel& m, int a, int a_prime, int b, int b_prime) {
  return chsh_exact(m, a, a_prime, b, b_prime).to_double();
}

json flip_report_to_json(const HVModel& m, const FlipReport& r) {
  json j;
  json sigma = json::array();
  for (int l : r.sigma.members) sigma.push_back(m.lambdas[l]);
  j["sigma"] = sigma;
  j["measure"] = r.measure;
  j["measure_exact"] = r.measure_exact.to_string();
  json witnesses = json::array();
  for (const auto& w : r.witnesses) {
    witnesses.push_back({{"lambda", m.lambdas[w.lambda]},
                         {"target", m.settings[w.target_setting].id},
                         {"partner", m.settings[w.partner_setting].id},
                         {"single_outcome", w.single_outcome},
                         {"joint_target_outcome", w.joint_target_outcome},
                         {"joint_partner_outcome", w.joint_partner_outcome}});
  }
  j["witnesses"] = witnesses;

  // per (target, partner) breakdown of the flip set
  std::map<std::pair<int, int>, LambdaSet> cells;
  for (const auto& w : r.witnesses) {
    auto& cell = cells[{w.target_setting, w.partner_setting}];
    if (cell.members.empty() || cell.members.back() != w.lambda) {
      cell.members.push_back(w.lambda);
    }
  }
  json by_pair = json::object();
  for (auto& [key, cell] : cells) {
    std::sort(cell.members.begin(), cell.members.end());
    cell.members.erase(std::unique(cell.members.begin(), cell.members.end()),
                       cell.members.end());
    json lambdas = json::array();
    for (int l : cell.members) lambdas.push_back(m.lambdas[l]);
    by_pair[m.settings[key.first].id + "|" + m.settings[key.second].id] = {
        {"lambdas", lambdas},
        {"measure", m.measure(cell)},
        {"measure_exact", m.measure_exact(cell).to_string()}};
  }
  j["by_pair"] = by_pair;
  return j;
}

AuditOutcome run_audit(const HVModel& m) {
  AuditOutcome out;
  auto defects = validate(m);
  out.report["validate"] = {{"ok", defects.empty()}, {"defects", defects}};
  if (!defects.empty()) {
    out.error = true;
    return out;
  }

  auto partition = check_partition_laws(m);
  out.report["partition"] = {{"ok", partition.ok}, {"defect", partition.defect}};

  auto l_result = check_assumption_L(m);
  json l_json = {{"holds", l_result.holds},
                 {"flips", flip_report_to_json(m, l_result.flips)},
                 {"side1_measure", m.measure(l_result.side1_flips)},
                 {"side2_measure", m.measure(l_result.side2_flips)}};
  out.report["assumption_L"] = l_json;

  auto product = check_product_identity(m);
  out.report["product_identity"] = {{"ok", product.ok}, {"counterexample", product.counterexample}};

  auto bell = check_bell_factorization(m);
  json bell_lambdas = json::array();
  for (int l : bell.failures.members) bell_lambdas.push_back(m.lambdas[l]);
  out.report["bell_factorization"] = {{"ok", bell.ok},
                                      {"failures", bell_lambdas},
                                      {"measure", bell.measure},
                                      {"measure_exact", bell.measure_exact.to_string()}};

  auto pi = check_parameter_independence(m);
  json pi_violations = json::array();
  for (const auto& v : pi.violations) {
    pi_violations.push_back({{"lambda", m.lambdas[v.lambda]},
                             {"pair", {m.settings[v.setting_a].id, m.settings[v.setting_b].id}},
                             {"side", v.side},
                             {"outcome", v.outcome}});
  }
  out.report["parameter_independence"] = {{"ok", pi.ok},
                                          {"violations", pi_violations},
                                          {"measure", pi.measure},
                                          {"measure_exact", pi.measure_exact.to_string()}};

  auto oi = check_outcome_independence(m);
  out.report["outcome_independence"] = {{"ok", oi.ok},
                                        {"violation_count", oi.violations.size()}};

  auto decomp = check_decomposition(m);
  out.report["decomposition"] = {{"ok", decomp.ok}, {"counterexample", decomp.counterexample}};

  // CHSH: applicable when both sides offer binary {-1,+1} settings
  auto binary_settings = [&](int side) {
    std::vector<int> out_settings;
    for (int s : m.side_settings(side)) {
      if (m.alphabet(s) == std::vector<int>{-1, 1}) out_settings.push_back(s);
    }
    return out_settings;
  };
  auto side1 = binary_settings(1);
  auto side2 = binary_settings(2);
  json chsh_json;
  if (side1.size() >= 2 && side2.size() >= 2) {
    double best = 0;
    json best_combo;
    for (int a : side1) {
      for (int ap : side1) {
        if (a == ap) continue;
        for (int b : side2) {
          for (int bp : side2) {
            if (b == bp) continue;
            double v = chsh(m, a, ap, b, bp);
            if (std::abs(v) > std::abs(best)) {
              best = v;
              best_combo = {m.settings[a].id, m.settings[ap].id, m.settings[b].id,
                            m.settings[bp].id};
            }
          }
        }
      }
    }
    chsh_json = {{"applicable", true}, {"max_abs", std::abs(best)}, {"settings", best_combo}};
  } else if (side1.size() == 1 && side2.size() == 1) {
    chsh_json = {{"applicable", false},
                 {"correlation", correlation(m, side1[0], side2[0])},
                 {"note", "one binary setting per side: correlation only"}};
  } else {
    chsh_json = {{"applicable", false}, {"note", "no binary menu on both sides"}};
  }
  out.report["chsh"] = chsh_json;

  out.violation = !partition.ok || !l_result.holds || !product.ok || !bell.ok || !pi.ok ||
                  !oi.ok || !decomp.ok;
  return out;
}

}  // namespace qcv::hv
