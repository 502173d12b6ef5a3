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

// Exercises the shared library strictly through the C interface.

#include <doctest.h>

#include <string>

#include <json.hpp>

#include "qcv.h"

using nlohmann::json;

namespace {

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  qcv_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and error reporting") {
  CHECK(std::string(qcv_version()).find("qcv") == 0);
  CHECK(qcv_graph_from_ray_text(nullptr) == nullptr);
  CHECK(std::string(qcv_last_error()).find("NULL") != std::string::npos);
  CHECK(qcv_graph_from_ray_text("1 r3 0\n") == nullptr);
  CHECK(std::string(qcv_last_error()).find("unknown surd") != std::string::npos);
}

TEST_CASE("quantum suite through the C surface") {
  std::string report = take(qcv_quantum_suite(42, 0));
  json j = json::parse(report);
  CHECK(j["all_pass"].get<bool>());
  CHECK(j["checks"].size() > 10);
  std::string tightened = take(qcv_quantum_suite(42, 1e-15));
  CHECK_FALSE(json::parse(tightened)["all_pass"].get<bool>());
}

TEST_CASE("graphs, search, certificates") {
  qcv_graph* peres = qcv_graph_peres33();
  REQUIRE(peres != nullptr);
  CHECK(qcv_graph_ray_count(peres) == 33);
  CHECK(qcv_graph_triad_count(peres) > 0);
  std::string rays = take(qcv_graph_rays(peres));
  CHECK(rays.find("0 0 1") != std::string::npos);

  qcv_certificate* cert = qcv_search(peres, QCV_RULE_101, QCV_SEQUENTIAL);
  REQUIRE(cert != nullptr);
  CHECK(qcv_certificate_verdict(cert) == QCV_UNCOLORABLE);
  CHECK(qcv_verify_certificate(peres, cert) == QCV_OK);

  std::string cert_json = take(qcv_certificate_to_json(cert));
  qcv_certificate* reloaded = qcv_certificate_from_json(cert_json.c_str());
  REQUIRE(reloaded != nullptr);
  CHECK(qcv_verify_certificate(peres, reloaded) == QCV_OK);
  qcv_certificate_free(reloaded);
  qcv_certificate_free(cert);

  // a small colorable graph via ray text
  qcv_graph* triad = qcv_graph_from_ray_text("1 0 0\n0 1 0\n0 0 1\n");
  REQUIRE(triad != nullptr);
  qcv_certificate* c2 = qcv_search(triad, QCV_RULE_101, QCV_PARALLEL);
  REQUIRE(c2 != nullptr);
  CHECK(qcv_certificate_verdict(c2) == QCV_COLORABLE);
  // certificate bound to the wrong graph is rejected
  CHECK(qcv_verify_certificate(peres, c2) == QCV_ERROR_INVALID_ARGUMENT);
  CHECK(std::string(qcv_last_error()).find("digest") != std::string::npos);
  qcv_certificate_free(c2);
  qcv_graph_free(triad);
  qcv_graph_free(peres);
}

TEST_CASE("models, audits, flips, counterfactuals") {
  json menus = {
      {"a", {{{"id", "k"},
              {"observable",
               {{"kind", "squared"}, {"spin", "one"}, {"direction", {0, 0, 1}}}}}}},
      {"b", {{{"id", "l"},
              {"observable",
               {{"kind", "squared"}, {"spin", "one"}, {"direction", {1, 0, 0}}}}}}}};
  qcv_model* model = qcv_model_synthesize("ks", menus.dump().c_str());
  REQUIRE(model != nullptr);

  std::string model_json = take(qcv_model_to_json(model));
  qcv_model* reloaded = qcv_model_from_json(model_json.c_str());
  REQUIRE(reloaded != nullptr);

  std::string audit = take(qcv_model_audit(model));
  json a = json::parse(audit);
  CHECK_FALSE(a["error"].get<bool>());
  CHECK(a["violation"].get<bool>());
  CHECK_FALSE(a["report"]["assumption_L"]["holds"].get<bool>());
  CHECK(a["report"]["outcome_independence"]["ok"].get<bool>());

  std::string flips = take(qcv_model_flips(model, "k", 0));
  json f = json::parse(flips);
  CHECK(f["measure"].get<double>() > 0);

  json scenario = {{"epr", {{"k", "k"}, {"l", "l"}}}};
  std::string cf = take(qcv_cf_eval(model, scenario.dump().c_str()));
  json c = json::parse(cf);
  CHECK(c["fix_lambda"]["sigma_matches_false_set"].get<bool>());
  CHECK(c["fix_outcome"]["verdict"] == "True");

  CHECK(qcv_model_flips(model, "nope", 0) == nullptr);
  CHECK(std::string(qcv_last_error()).find("unknown setting") != std::string::npos);

  CHECK(qcv_model_synthesize("bogus", menus.dump().c_str()) == nullptr);
  CHECK(qcv_model_from_json("{") == nullptr);

  qcv_model_free(reloaded);
  qcv_model_free(model);
}

TEST_CASE("auditing a defective model reports error, not violation") {
  json bad = {
      {"lambdas", {"x", "y"}},
      {"weights", {"1/2", "1/4"}},  // not normalized
      {"settings",
       {{{"id", "a"},
         {"side", 1},
         {"observable", {{"kind", "sigma"}, {"spin", "half"}, {"direction", {0, 0, 1}}}}},
        {{"id", "b"},
         {"side", 2},
         {"observable", {{"kind", "sigma"}, {"spin", "half"}, {"direction", {1, 0, 0}}}}}}},
      {"single", {{"x|a", 1}, {"x|b", 1}, {"y|a", -1}, {"y|b", -1}}},
      {"joint", {{"x|a|b", {1, 1}}, {"y|a|b", {-1, -1}}}}};
  qcv_model* model = qcv_model_from_json(bad.dump().c_str());
  REQUIRE(model != nullptr);
  std::string audit = take(qcv_model_audit(model));
  json a = json::parse(audit);
  CHECK(a["error"].get<bool>());
  bool saw_normalization = false;
  for (const auto& d : a["report"]["validate"]["defects"]) {
    if (d.get<std::string>().find("normalization") != std::string::npos) saw_normalization = true;
  }
  CHECK(saw_normalization);
  qcv_model_free(model);
}
