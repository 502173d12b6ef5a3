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

#include "hv/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace qcv::hv {

using nlohmann::json;

quantum::RealDirection ObservableSpec::unit_direction() const {
  return quantum::RealDirection::normalized(direction[0], direction[1], direction[2]);
}

quantum::Operator ObservableSpec::resolve() const {
  quantum::Operator comp = quantum::component_along(spin, unit_direction());
  switch (kind) {
    case Kind::Sigma:
      if (spin != quantum::SpinKind::Half) {
        throw std::invalid_argument("observable: sigma kind requires spin 1/2");
      }
      return 2.0 * comp;
    case Kind::Component:
      if (spin != quantum::SpinKind::One) {
        throw std::invalid_argument(
            "observable: plain component has half-integer outcomes for spin 1/2; use sigma");
      }
      return comp;
    case Kind::Squared:
      if (spin != quantum::SpinKind::One) {
        throw std::invalid_argument(
            "observable: squared component is constant 1/4 for spin 1/2; only spin 1 supported");
      }
      return comp * comp;
  }
  throw std::logic_error("observable: bad kind");
}

std::vector<int> ObservableSpec::alphabet() const {
  switch (kind) {
    case Kind::Sigma:
      return {-1, 1};
    case Kind::Component:
      return {-1, 0, 1};
    case Kind::Squared:
      if (spin != quantum::SpinKind::One) {
        throw std::invalid_argument(
            "observable: squared component is constant 1/4 for spin 1/2; only spin 1 supported");
      }
      return {0, 1};
  }
  throw std::logic_error("observable: bad kind");
}

std::string ObservableSpec::kind_name() const {
  switch (kind) {
    case Kind::Sigma:
      return "sigma";
    case Kind::Component:
      return "component";
    case Kind::Squared:
      return "squared";
  }
  throw std::logic_error("observable: bad kind");
}

ObservableSpec::Kind ObservableSpec::kind_from_name(const std::string& name) {
  if (name == "sigma") return Kind::Sigma;
  if (name == "component") return Kind::Component;
  if (name == "squared") return Kind::Squared;
  throw std::invalid_argument("observable: unknown kind '" + name + "'");
}

bool LambdaSet::contains(int i) const {
  return std::binary_search(members.begin(), members.end(), i);
}

LambdaSet set_union(const LambdaSet& a, const LambdaSet& b, std::string provenance) {
  LambdaSet out;
  out.provenance = std::move(provenance);
  std::set_union(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                 std::back_inserter(out.members));
  return out;
}

LambdaSet set_intersection(const LambdaSet& a, const LambdaSet& b, std::string provenance) {
  LambdaSet out;
  out.provenance = std::move(provenance);
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(out.members));
  return out;
}

bool set_equal(const LambdaSet& a, const LambdaSet& b) { return a.members == b.members; }

void HVModel::set_single(int lambda, int setting, int outcome) {
  single_[{lambda, setting}] = outcome;
}

void HVModel::set_joint(int lambda, int setting_a, int setting_b, int out_a, int out_b) {
  joint_[{lambda, setting_a, setting_b}] = {out_a, out_b};
}

int HVModel::setting_index(const std::string& id) const {
  for (int i = 0; i < setting_count(); ++i) {
    if (settings[i].id == id) return i;
  }
  throw std::invalid_argument("unknown setting '" + id + "'");
}

const std::vector<int>& HVModel::side_settings(int side) const {
  if (side != 1 && side != 2) throw std::invalid_argument("side must be 1 or 2");
  return side == 1 ? side1_ : side2_;
}

const std::vector<std::pair<int, int>>& HVModel::cross_pairs() const { return pairs_; }

std::optional<int> HVModel::single(int lambda, int setting) const {
  auto it = single_.find({lambda, setting});
  if (it == single_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::pair<int, int>> HVModel::joint(int lambda, int setting_a,
                                                  int setting_b) const {
  auto it = joint_.find({lambda, setting_a, setting_b});
  if (it == joint_.end()) return std::nullopt;
  return it->second;
}

int HVModel::single_or_throw(int lambda, int setting) const {
  auto v = single(lambda, setting);
  if (!v) {
    throw std::runtime_error("missing single response for lambda '" + lambdas[lambda] +
                             "', setting '" + settings[setting].id + "'");
  }
  return *v;
}

std::pair<int, int> HVModel::joint_or_throw(int lambda, int setting_a, int setting_b) const {
  auto v = joint(lambda, setting_a, setting_b);
  if (!v) {
    throw std::runtime_error("missing joint response for lambda '" + lambdas[lambda] +
                             "', pair ('" + settings[setting_a].id + "','" +
                             settings[setting_b].id + "')");
  }
  return *v;
}

const std::vector<int>& HVModel::alphabet(int setting) const { return alphabets_[setting]; }

LambdaSet HVModel::support() const {
  LambdaSet s;
  s.provenance = "support";
  for (int i = 0; i < lambda_count(); ++i) {
    if (weights[i].sign() > 0) s.members.push_back(i);
  }
  return s;
}

Rational HVModel::measure_exact(const LambdaSet& s) const {
  Rational total;
  for (int i : s.members) total += weights[i];
  return total;
}

void HVModel::finalize() {
  if (weights.size() != lambdas.size()) {
    throw std::invalid_argument("model: weights/lambdas size mismatch");
  }
  std::set<std::string> ids;
  side1_.clear();
  side2_.clear();
  alphabets_.clear();
  for (int i = 0; i < setting_count(); ++i) {
    const auto& s = settings[i];
    if (!ids.insert(s.id).second) {
      throw std::invalid_argument("model: duplicate setting id '" + s.id + "'");
    }
    if (s.side == 1) {
      side1_.push_back(i);
    } else if (s.side == 2) {
      side2_.push_back(i);
    } else {
      throw std::invalid_argument("model: setting '" + s.id + "' has bad side");
    }
    alphabets_.push_back(s.observable.alphabet());
  }
  pairs_.clear();
  for (int a : side1_) {
    for (int b : side2_) pairs_.emplace_back(a, b);
  }
}

std::vector<std::string> validate(const HVModel& m) {
  std::vector<std::string> defects;
  if (m.lambdas.empty()) defects.push_back("model has no hidden variables");
  // normalization, exact: |sum - 1| <= 1e-12
  Rational sum;
  bool negative = false;
  for (const auto& w : m.weights) {
    if (w.sign() < 0) negative = true;
    sum += w;
  }
  if (negative) defects.push_back("normalization: negative weight");
  Rational dev = (sum - Rational(1)).abs();
  if (dev > Rational::from_double_exact(1e-12)) {
    defects.push_back("normalization: weights sum to " + std::to_string(sum.to_double()));
  }
  for (int l = 0; l < m.lambda_count(); ++l) {
    for (int s = 0; s < m.setting_count(); ++s) {
      auto v = m.single(l, s);
      if (!v) {
        defects.push_back("totality: missing single response (" + m.lambdas[l] + ", " +
                          m.settings[s].id + ")");
      } else if (!std::binary_search(m.alphabet(s).begin(), m.alphabet(s).end(), *v)) {
        defects.push_back("alphabet: single outcome " + std::to_string(*v) +
                          " not allowed for setting " + m.settings[s].id);
      }
    }
    for (const auto& [a, b] : m.cross_pairs()) {
      auto v = m.joint(l, a, b);
      if (!v) {
        defects.push_back("totality: missing joint response (" + m.lambdas[l] + ", " +
                          m.settings[a].id + ", " + m.settings[b].id + ")");
        continue;
      }
      if (!std::binary_search(m.alphabet(a).begin(), m.alphabet(a).end(), v->first) ||
          !std::binary_search(m.alphabet(b).begin(), m.alphabet(b).end(), v->second)) {
        defects.push_back("alphabet: joint outcome (" + std::to_string(v->first) + "," +
                          std::to_string(v->second) + ") not allowed for pair (" +
                          m.settings[a].id + "," + m.settings[b].id + ")");
      }
    }
  }
  return defects;
}

json HVModel::to_json() const {
  json j;
  j["lambdas"] = lambdas;
  json w = json::array();
  for (const auto& r : weights) w.push_back(r.to_string());
  j["weights"] = w;
  json ss = json::array();
  for (const auto& s : settings) {
    ss.push_back({{"id", s.id},
                  {"side", s.side},
                  {"observable",
                   {{"kind", s.observable.kind_name()},
                    {"spin", s.observable.spin == quantum::SpinKind::Half ? "half" : "one"},
                    {"direction", s.observable.direction}}}});
  }
  j["settings"] = ss;
  json singles = json::object();
  for (const auto& [key, outcome] : single_) {
    singles[lambdas[key.first] + "|" + settings[key.second].id] = outcome;
  }
  j["single"] = singles;
  json joints = json::object();
  for (const auto& [key, outcome] : joint_) {
    joints[lambdas[std::get<0>(key)] + "|" + settings[std::get<1>(key)].id + "|" +
           settings[std::get<2>(key)].id] = {outcome.first, outcome.second};
  }
  j["joint"] = joints;
  return j;
}

HVModel HVModel::from_json(const json& j) {
  HVModel m;
  m.lambdas = j.at("lambdas").get<std::vector<std::string>>();
  for (const auto& w : j.at("weights")) {
    if (w.is_string()) {
      m.weights.push_back(Rational::parse(w.get<std::string>()));
    } else {
      m.weights.push_back(Rational::from_double_exact(w.get<double>()));
    }
  }
  for (const auto& s : j.at("settings")) {
    Setting st;
    st.id = s.at("id").get<std::string>();
    st.side = s.at("side").get<int>();
    const auto& obs = s.at("observable");
    st.observable.kind = ObservableSpec::kind_from_name(obs.at("kind").get<std::string>());
    std::string spin = obs.at("spin").get<std::string>();
    if (spin == "half") {
      st.observable.spin = quantum::SpinKind::Half;
    } else if (spin == "one") {
      st.observable.spin = quantum::SpinKind::One;
    } else {
      throw std::invalid_argument("model: unknown spin '" + spin + "'");
    }
    auto dir = obs.at("direction").get<std::vector<double>>();
    if (dir.size() != 3) throw std::invalid_argument("model: direction must have 3 components");
    st.observable.direction = {dir[0], dir[1], dir[2]};
    m.settings.push_back(std::move(st));
  }
  m.finalize();

  std::map<std::string, int> lambda_index;
  for (int i = 0; i < m.lambda_count(); ++i) lambda_index[m.lambdas[i]] = i;
  auto lookup_lambda = [&](const std::string& name) {
    auto it = lambda_index.find(name);
    if (it == lambda_index.end()) {
      throw std::invalid_argument("model: response references unknown lambda '" + name + "'");
    }
    return it->second;
  };
  auto split = [](const std::string& key) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
      auto bar = key.find('|', start);
      if (bar == std::string::npos) {
        parts.push_back(key.substr(start));
        break;
      }
      parts.push_back(key.substr(start, bar - start));
      start = bar + 1;
    }
    return parts;
  };
  for (const auto& [key, value] : j.at("single").items()) {
    auto parts = split(key);
    if (parts.size() != 2) throw std::invalid_argument("model: bad single key '" + key + "'");
    m.set_single(lookup_lambda(parts[0]), m.setting_index(parts[1]), value.get<int>());
  }
  for (const auto& [key, value] : j.at("joint").items()) {
    auto parts = split(key);
    if (parts.size() != 3) throw std::invalid_argument("model: bad joint key '" + key + "'");
    auto pair = value.get<std::vector<int>>();
    if (pair.size() != 2) throw std::invalid_argument("model: bad joint value for '" + key + "'");
    m.set_joint(lookup_lambda(parts[0]), m.setting_index(parts[1]), m.setting_index(parts[2]),
                pair[0], pair[1]);
  }
  return m;
}

}  // namespace qcv::hv
