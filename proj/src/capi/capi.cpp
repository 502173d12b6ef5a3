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

#include "qcv.h"

#include <cstring>
#include <new>
#include <optional>
#include <string>

#include <json.hpp>

#include "cf/eval.hpp"
#include "hv/synth.hpp"
#include "ks/search.hpp"
#include "quantum/suite.hpp"
#include "version.hpp"

using nlohmann::json;

struct qcv_graph {
  qcv::ks::OrthoGraph graph;
};

struct qcv_certificate {
  qcv::ks::Certificate cert;
};

struct qcv_model {
  qcv::hv::HVModel model;
};

namespace {

thread_local std::string g_last_error = "no error";

void set_error(const std::string& message) { g_last_error = message; }

char* dup_string(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs the body, converting exceptions into the NULL/status error idiom.
template <typename F>
auto guarded(F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
  } catch (const std::exception& e) {
    set_error(e.what());
  } catch (...) {
    set_error("unknown error");
  }
  return nullptr;
}

qcv::hv::Setting setting_from_json(const json& j, int side) {
  qcv::hv::Setting s;
  s.id = j.at("id").get<std::string>();
  s.side = side;
  const auto& obs = j.at("observable");
  s.observable.kind =
      qcv::hv::ObservableSpec::kind_from_name(obs.at("kind").get<std::string>());
  std::string spin = obs.at("spin").get<std::string>();
  if (spin == "half") {
    s.observable.spin = qcv::quantum::SpinKind::Half;
  } else if (spin == "one") {
    s.observable.spin = qcv::quantum::SpinKind::One;
  } else {
    throw std::invalid_argument("unknown spin '" + spin + "'");
  }
  auto dir = obs.at("direction").get<std::vector<double>>();
  if (dir.size() != 3) throw std::invalid_argument("direction must have 3 components");
  s.observable.direction = {dir[0], dir[1], dir[2]};
  return s;
}

}  // namespace

extern "C" {

const char* qcv_version(void) { return qcv::kToolVersion; }

const char* qcv_last_error(void) { return g_last_error.c_str(); }

void qcv_string_free(char* s) { delete[] s; }

char* qcv_quantum_suite(uint64_t seed, double tolerance_override) {
  return guarded([&]() -> char* {
    std::optional<double> tol;
    if (tolerance_override > 0) tol = tolerance_override;
    auto result = qcv::quantum::run_identity_suite(seed, tol);
    json checks = json::array();
    for (const auto& c : result.checks) {
      checks.push_back({{"name", c.name},
                        {"residual", c.residual},
                        {"tolerance", c.tolerance},
                        {"pass", c.pass()}});
    }
    json j = {{"seed", result.seed}, {"all_pass", result.all_pass()}, {"checks", checks}};
    return dup_string(j.dump(2) + "\n");
  });
}

qcv_graph* qcv_graph_peres33(void) {
  return guarded([&]() -> qcv_graph* {
    auto g = new qcv_graph;
    g->graph = qcv::ks::build_graph(qcv::ks::peres33());
    return g;
  });
}

qcv_graph* qcv_graph_from_ray_text(const char* text) {
  return guarded([&]() -> qcv_graph* {
    if (!text) throw std::invalid_argument("ray text is NULL");
    auto rays = qcv::ks::parse_ray_text(text);
    auto g = new qcv_graph;
    g->graph = qcv::ks::build_graph(rays);
    return g;
  });
}

void qcv_graph_free(qcv_graph* g) { delete g; }

int qcv_graph_ray_count(const qcv_graph* g) { return g ? g->graph.ray_count() : -1; }

int qcv_graph_edge_count(const qcv_graph* g) {
  return g ? static_cast<int>(g->graph.edges.size()) : -1;
}

int qcv_graph_triad_count(const qcv_graph* g) {
  return g ? static_cast<int>(g->graph.triads.size()) : -1;
}

char* qcv_graph_rays(const qcv_graph* g) {
  return guarded([&]() -> char* {
    if (!g) throw std::invalid_argument("graph is NULL");
    return dup_string(qcv::ks::format_ray_text(g->graph.rays));
  });
}

qcv_certificate* qcv_search(const qcv_graph* g, qcv_rule rule, qcv_search_mode mode) {
  return guarded([&]() -> qcv_certificate* {
    if (!g) throw std::invalid_argument("graph is NULL");
    auto r = rule == QCV_RULE_101 ? qcv::ks::ValueRule::rule101()
                                  : qcv::ks::ValueRule::projector();
    auto m = mode == QCV_SEQUENTIAL ? qcv::ks::SearchMode::Sequential
                                    : qcv::ks::SearchMode::Parallel;
    auto c = new qcv_certificate;
    c->cert = qcv::ks::search(g->graph, r, m);
    return c;
  });
}

void qcv_certificate_free(qcv_certificate* c) { delete c; }

qcv_verdict qcv_certificate_verdict(const qcv_certificate* c) {
  return c && c->cert.colorable ? QCV_COLORABLE : QCV_UNCOLORABLE;
}

char* qcv_certificate_to_json(const qcv_certificate* c) {
  return guarded([&]() -> char* {
    if (!c) throw std::invalid_argument("certificate is NULL");
    return dup_string(c->cert.to_json());
  });
}

qcv_certificate* qcv_certificate_from_json(const char* text) {
  return guarded([&]() -> qcv_certificate* {
    if (!text) throw std::invalid_argument("certificate text is NULL");
    auto c = new qcv_certificate;
    c->cert = qcv::ks::Certificate::from_json(text);
    return c;
  });
}

qcv_status qcv_verify_certificate(const qcv_graph* g, const qcv_certificate* c) {
  if (!g || !c) {
    set_error("graph or certificate is NULL");
    return QCV_ERROR_INVALID_ARGUMENT;
  }
  try {
    auto result = qcv::ks::verify_certificate(g->graph, c->cert);
    if (result.ok) return QCV_OK;
    set_error(result.reason);
    return QCV_ERROR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    set_error(e.what());
    return QCV_ERROR_INTERNAL;
  }
}

qcv_model* qcv_model_synthesize(const char* state, const char* menus_json) {
  return guarded([&]() -> qcv_model* {
    if (!state || !menus_json) throw std::invalid_argument("state or menus is NULL");
    json menus = json::parse(menus_json);
    std::vector<qcv::hv::Setting> menu_a, menu_b;
    for (const auto& s : menus.at("a")) menu_a.push_back(setting_from_json(s, 1));
    for (const auto& s : menus.at("b")) menu_b.push_back(setting_from_json(s, 2));
    auto m = new qcv_model;
    m->model = qcv::hv::synthesize_model(qcv::hv::named_state(state), menu_a, menu_b);
    return m;
  });
}

qcv_model* qcv_model_from_json(const char* text) {
  return guarded([&]() -> qcv_model* {
    if (!text) throw std::invalid_argument("model text is NULL");
    auto m = new qcv_model;
    m->model = qcv::hv::HVModel::from_json(json::parse(text));
    return m;
  });
}

char* qcv_model_to_json(const qcv_model* m) {
  return guarded([&]() -> char* {
    if (!m) throw std::invalid_argument("model is NULL");
    return dup_string(m->model.to_json().dump(2) + "\n");
  });
}

void qcv_model_free(qcv_model* m) { delete m; }

char* qcv_model_audit(const qcv_model* m) {
  return guarded([&]() -> char* {
    if (!m) throw std::invalid_argument("model is NULL");
    auto outcome = qcv::hv::run_audit(m->model);
    json j = {{"report", outcome.report},
              {"error", outcome.error},
              {"violation", outcome.violation}};
    return dup_string(j.dump(2) + "\n");
  });
}

char* qcv_model_flips(const qcv_model* m, const char* setting_id, int outcome) {
  return guarded([&]() -> char* {
    if (!m || !setting_id) throw std::invalid_argument("model or setting is NULL");
    int setting = m->model.setting_index(setting_id);
    auto report = qcv::hv::find_context_flips(m->model, setting, outcome);
    json j = qcv::hv::flip_report_to_json(m->model, report);
    j["target"] = setting_id;
    j["target_outcome"] = outcome;
    return dup_string(j.dump(2) + "\n");
  });
}

char* qcv_cf_eval(const qcv_model* m, const char* scenario_json) {
  return guarded([&]() -> char* {
    if (!m || !scenario_json) throw std::invalid_argument("model or scenario is NULL");
    json scenario = json::parse(scenario_json);
    json result = qcv::cf::evaluate_scenario(m->model, scenario);
    return dup_string(result.dump(2) + "\n");
  });
}

}  // extern "C"
