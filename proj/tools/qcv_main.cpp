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

// Command-line front end. Talks to the qcv shared library exclusively
// through its C interface (qcv.h).

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcv.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolation = 3;  // principled physics violation / uncolorable

struct StringDeleter {
  void operator()(char* s) const { qcv_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct GraphDeleter {
  void operator()(qcv_graph* g) const { qcv_graph_free(g); }
};
struct CertDeleter {
  void operator()(qcv_certificate* c) const { qcv_certificate_free(c); }
};
struct ModelDeleter {
  void operator()(qcv_model* m) const { qcv_model_free(m); }
};

int fail(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitError;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

// deterministic shortest round-trip form, same as the JSON encoding
std::string num(double v) { return json(v).dump(); }

struct GlobalFlags {
  std::uint64_t seed = 42;
  double tolerance = 0;  // 0 = per-check defaults
  std::string out_path;
  std::string format = "text";

  bool json_format() const { return format == "json"; }
  int validate() const {
    if (tolerance != 0 && (tolerance <= 0 || tolerance > 1e-6)) {
      return fail("--tolerance must lie in (0, 1e-6]");
    }
    return kExitOk;
  }
  void emit(const std::string& text_form, const std::string& json_form) const {
    std::cout << (json_format() ? json_form : text_form);
    if (!out_path.empty()) write_file(out_path, json_form);
  }
};

int run_verify_quantum(const GlobalFlags& flags) {
  CString report(qcv_quantum_suite(flags.seed, flags.tolerance));
  if (!report) return fail(qcv_last_error());
  json j = json::parse(report.get());
  std::ostringstream text;
  text << "quantum identity suite (seed " << j["seed"].get<std::uint64_t>() << ")\n";
  for (const auto& c : j["checks"]) {
    text << (c["pass"].get<bool>() ? "  pass  " : "  FAIL  ") << c["name"].get<std::string>()
         << "  residual " << num(c["residual"].get<double>()) << "  tolerance "
         << num(c["tolerance"].get<double>()) << "\n";
  }
  bool all = j["all_pass"].get<bool>();
  text << (all ? "all identities hold\n" : "identity breach detected\n");
  flags.emit(text.str(), report.get());
  return all ? kExitOk : kExitError;
}

int run_ks_search(const GlobalFlags& flags, const std::string& ray_file, bool use_peres33,
                  const std::string& rule_name, const std::string& mode_name,
                  const std::string& certificate_out, const std::string& verify_path) {
  std::unique_ptr<qcv_graph, GraphDeleter> graph;
  if (use_peres33 && !ray_file.empty()) {
    return fail("give either a ray file or --peres33, not both");
  }
  if (use_peres33) {
    graph.reset(qcv_graph_peres33());
  } else if (!ray_file.empty()) {
    std::string text;
    try {
      text = read_file(ray_file);
    } catch (const std::exception& e) {
      return fail(e.what());
    }
    graph.reset(qcv_graph_from_ray_text(text.c_str()));
  } else {
    return fail("ks-search needs a ray file or --peres33");
  }
  if (!graph) return fail(qcv_last_error());

  qcv_rule rule;
  if (rule_name == "101") {
    rule = QCV_RULE_101;
  } else if (rule_name == "projector") {
    rule = QCV_RULE_PROJECTOR;
  } else {
    return fail("--rule must be 101 or projector");
  }

  if (!verify_path.empty()) {
    std::string cert_text;
    try {
      cert_text = read_file(verify_path);
    } catch (const std::exception& e) {
      return fail(e.what());
    }
    std::unique_ptr<qcv_certificate, CertDeleter> cert(
        qcv_certificate_from_json(cert_text.c_str()));
    if (!cert) return fail(qcv_last_error());
    qcv_status status = qcv_verify_certificate(graph.get(), cert.get());
    bool colorable = qcv_certificate_verdict(cert.get()) == QCV_COLORABLE;
    json jout = {{"verified", status == QCV_OK},
                 {"verdict", colorable ? "colorable" : "uncolorable"},
                 {"reason", status == QCV_OK ? "" : qcv_last_error()}};
    std::ostringstream text;
    if (status == QCV_OK) {
      text << "certificate verified: " << (colorable ? "colorable" : "uncolorable") << "\n";
    } else {
      text << "certificate REJECTED: " << qcv_last_error() << "\n";
    }
    flags.emit(text.str(), jout.dump(2) + "\n");
    if (status != QCV_OK) return kExitError;
    return colorable ? kExitOk : kExitViolation;
  }

  qcv_search_mode mode;
  if (mode_name == "sequential") {
    mode = QCV_SEQUENTIAL;
  } else if (mode_name == "parallel") {
    mode = QCV_PARALLEL;
  } else {
    return fail("--mode must be sequential or parallel");
  }

  std::unique_ptr<qcv_certificate, CertDeleter> cert(qcv_search(graph.get(), rule, mode));
  if (!cert) return fail(qcv_last_error());
  CString cert_json(qcv_certificate_to_json(cert.get()));
  if (!cert_json) return fail(qcv_last_error());
  if (!certificate_out.empty()) {
    try {
      write_file(certificate_out, cert_json.get());
    } catch (const std::exception& e) {
      return fail(e.what());
    }
  }

  json j = json::parse(cert_json.get());
  bool colorable = qcv_certificate_verdict(cert.get()) == QCV_COLORABLE;
  std::ostringstream text;
  text << "rays " << qcv_graph_ray_count(graph.get()) << ", edges "
       << qcv_graph_edge_count(graph.get()) << ", triads " << qcv_graph_triad_count(graph.get())
       << "\n";
  text << "rule " << rule_name << ", mode " << mode_name << "\n";
  text << "verdict: " << (colorable ? "colorable" : "uncolorable") << "\n";
  if (!j["nodes_explored"].is_null()) {
    text << "nodes explored: " << j["nodes_explored"].dump() << "\n";
  }
  if (colorable) {
    text << "witness: ";
    for (const auto& v : j["witness"]) text << v.get<int>();
    text << "\n";
  }
  for (const auto& f : j["flags"]) text << "flag: " << f.get<std::string>() << "\n";
  text << "input digest: " << j["input_digest"].get<std::string>() << "\n";
  flags.emit(text.str(), cert_json.get());
  return colorable ? kExitOk : kExitViolation;
}

// "id:kind:x,y,z" -> setting JSON; spin comes from the state
json parse_menu_setting(const std::string& spec, const std::string& spin) {
  auto first = spec.find(':');
  auto second = spec.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos) {
    throw std::runtime_error("menu setting '" + spec + "' is not id:kind:x,y,z");
  }
  std::string id = spec.substr(0, first);
  std::string kind = spec.substr(first + 1, second - first - 1);
  std::string coords = spec.substr(second + 1);
  std::vector<double> dir;
  std::stringstream ss(coords);
  std::string part;
  while (std::getline(ss, part, ',')) dir.push_back(std::stod(part));
  if (dir.size() != 3) throw std::runtime_error("direction in '" + spec + "' needs 3 components");
  return {{"id", id},
          {"observable", {{"kind", kind}, {"spin", spin}, {"direction", dir}}}};
}

int run_hv_synth(const GlobalFlags& flags, const std::string& state,
                 const std::vector<std::string>& menu_a, const std::vector<std::string>& menu_b) {
  std::string spin = state == "singlet" ? "half" : "one";
  json menus = {{"a", json::array()}, {"b", json::array()}};
  try {
    for (const auto& s : menu_a) menus["a"].push_back(parse_menu_setting(s, spin));
    for (const auto& s : menu_b) menus["b"].push_back(parse_menu_setting(s, spin));
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  std::unique_ptr<qcv_model, ModelDeleter> model(
      qcv_model_synthesize(state.c_str(), menus.dump().c_str()));
  if (!model) return fail(qcv_last_error());
  CString model_json(qcv_model_to_json(model.get()));
  if (!model_json) return fail(qcv_last_error());
  json j = json::parse(model_json.get());
  std::ostringstream text;
  text << "synthesized model: " << j["lambdas"].size() << " hidden states, "
       << j["settings"].size() << " settings\n";
  if (!flags.out_path.empty()) {
    text << "model written to " << flags.out_path << "\n";
  } else if (!flags.json_format()) {
    text << "(use --out PATH to save the model)\n";
  }
  flags.emit(text.str(), model_json.get());
  return kExitOk;
}

std::string render_audit_text(const json& wrapper) {
  const json& report = wrapper["report"];
  std::ostringstream text;
  auto line = [&](const std::string& name, bool ok, const std::string& extra) {
    text << "  " << (ok ? "holds    " : "VIOLATED ") << name;
    if (!extra.empty()) text << "  " << extra;
    text << "\n";
  };
  text << "hidden-variable model audit\n";
  const auto& validate = report["validate"];
  if (!validate["ok"].get<bool>()) {
    text << "  model INVALID\n";
    for (const auto& d : validate["defects"]) text << "    defect: " << d.get<std::string>() << "\n";
    return text.str();
  }
  line("partition laws", report["partition"]["ok"].get<bool>(), "");
  const auto& al = report["assumption_L"];
  line("assumption L", al["holds"].get<bool>(),
       al["holds"].get<bool>()
           ? ""
           : "flip measure " + al["flips"]["measure"].dump() + " (side1 " +
                 al["side1_measure"].dump() + ", side2 " + al["side2_measure"].dump() + ")");
  line("product identity", report["product_identity"]["ok"].get<bool>(),
       report["product_identity"]["counterexample"].get<std::string>());
  const auto& bell = report["bell_factorization"];
  line("bell factorization", bell["ok"].get<bool>(),
       bell["ok"].get<bool>() ? "" : "failure measure " + bell["measure"].dump());
  const auto& pi = report["parameter_independence"];
  line("parameter independence", pi["ok"].get<bool>(),
       pi["ok"].get<bool>() ? "" : "violation measure " + pi["measure"].dump());
  line("outcome independence", report["outcome_independence"]["ok"].get<bool>(), "");
  line("factorization = PI and OI", report["decomposition"]["ok"].get<bool>(),
       report["decomposition"]["counterexample"].get<std::string>());
  const auto& chsh = report["chsh"];
  if (chsh["applicable"].get<bool>()) {
    text << "  chsh max |S| = " << chsh["max_abs"].dump() << "\n";
  } else if (chsh.contains("correlation")) {
    text << "  correlation E = " << chsh["correlation"].dump() << "\n";
  }
  return text.str();
}

int run_hv_audit(const GlobalFlags& flags, const std::string& model_path) {
  std::string text;
  try {
    text = read_file(model_path);
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  std::unique_ptr<qcv_model, ModelDeleter> model(qcv_model_from_json(text.c_str()));
  if (!model) return fail(qcv_last_error());
  CString audit(qcv_model_audit(model.get()));
  if (!audit) return fail(qcv_last_error());
  json j = json::parse(audit.get());
  flags.emit(render_audit_text(j), audit.get());
  if (j["error"].get<bool>()) return kExitError;
  return j["violation"].get<bool>() ? kExitViolation : kExitOk;
}

int run_hv_flips(const GlobalFlags& flags, const std::string& model_path,
                 const std::string& setting, int outcome) {
  std::string text;
  try {
    text = read_file(model_path);
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  std::unique_ptr<qcv_model, ModelDeleter> model(qcv_model_from_json(text.c_str()));
  if (!model) return fail(qcv_last_error());
  CString flips(qcv_model_flips(model.get(), setting.c_str(), outcome));
  if (!flips) return fail(qcv_last_error());
  json j = json::parse(flips.get());
  std::ostringstream out;
  out << "context flips of " << setting << "=" << outcome << ": measure " << j["measure"].dump()
      << " (" << j["measure_exact"].get<std::string>() << "), " << j["sigma"].size()
      << " hidden states, " << j["witnesses"].size() << " witnesses\n";
  for (const auto& w : j["witnesses"]) {
    out << "  " << w["lambda"].get<std::string>() << ": " << w["target"].get<std::string>() << "="
        << w["single_outcome"].dump() << " alone -> " << w["joint_target_outcome"].dump()
        << " with " << w["partner"].get<std::string>() << "="
        << w["joint_partner_outcome"].dump() << "\n";
  }
  flags.emit(out.str(), flips.get());
  return j["sigma"].empty() ? kExitOk : kExitViolation;
}

int run_cf_eval(const GlobalFlags& flags, const std::string& scenario_path,
                const std::string& policy) {
  std::string text;
  json scenario;
  try {
    text = read_file(scenario_path);
    scenario = json::parse(text);
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  if (!scenario.contains("model")) return fail("scenario lacks a 'model' reference");
  std::string model_path = scenario["model"].get<std::string>();
  if (!std::filesystem::exists(model_path)) {
    auto sibling = std::filesystem::path(scenario_path).parent_path() / model_path;
    if (std::filesystem::exists(sibling)) model_path = sibling.string();
  }
  std::string model_text;
  try {
    model_text = read_file(model_path);
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  std::unique_ptr<qcv_model, ModelDeleter> model(qcv_model_from_json(model_text.c_str()));
  if (!model) return fail(qcv_last_error());

  scenario.erase("model");
  if (!scenario.contains("epr")) {
    if (policy == "fix-lambda") {
      scenario["policy"] = "fix-lambda";
    } else if (policy == "fix-outcome" &&
               (!scenario.contains("policy") || scenario["policy"].is_string())) {
      return fail("--policy fix-outcome needs the side and setting; put a policy object "
                  "{\"kind\": \"fix-outcome\", \"side\": N, \"setting\": ID} in the scenario");
    }
  }

  CString result(qcv_cf_eval(model.get(), scenario.dump().c_str()));
  if (!result) return fail(qcv_last_error());
  json j = json::parse(result.get());

  std::ostringstream out;
  if (j["scenario"] == "epr") {
    out << "counterfactual dilemma for k=" << j["k"].get<std::string>()
        << " (outcome 0), l=" << j["l"].get<std::string>() << "\n";
    if (policy != "fix-outcome") {
      const auto& fl = j["fix_lambda"];
      out << "fix-lambda: False on " << fl["false_set"].size() << " of "
          << j["conditioned_lambdas"].size() << " conditioned hidden states, measure "
          << fl["sigma_measure"].dump() << "\n";
      out << "fix-lambda false set matches the flip set: "
          << (fl["sigma_matches_false_set"].get<bool>() ? "yes" : "NO") << "\n";
    }
    if (policy != "fix-lambda") {
      const auto& fo = j["fix_outcome"];
      out << "fix-outcome: verdict " << fo["verdict"].get<std::string>() << ", "
          << fo["breaches"].size() << " breach worlds (measure " << fo["breach_measure"].dump()
          << ")\n";
      for (const auto& w : fo["breaches"]) {
        out << "  breach: lambda " << w["lambda"].get<std::string>() << "\n";
      }
    }
  } else {
    out << "phi: " << j["phi"].get<std::string>() << "\n";
    out << "psi: " << j["psi"].get<std::string>() << "\n";
    out << "verdict: " << j["verdict"].get<std::string>() << "\n";
    out << "witness worlds: " << j["witnesses"].size() << ", breach worlds: "
        << j["breaches"].size() << "\n";
  }
  flags.emit(out.str(), result.get());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qcv: exact Kochen-Specker colorability, spin-1 operator identities, "
               "deterministic hidden-variable audits, and counterfactual evaluation"};
  app.set_version_flag("--version", std::string(qcv_version()));
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalFlags flags;
  app.add_option("--seed", flags.seed, "seed for randomized suites")->capture_default_str();
  app.add_option("--tolerance", flags.tolerance,
                 "override per-check tolerance, in (0, 1e-6]");
  app.add_option("--out", flags.out_path, "also write the machine-readable report to PATH");
  app.add_option("--format", flags.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto* verify_quantum = app.add_subcommand("verify-quantum", "run the operator identity suite");

  auto* ks = app.add_subcommand("ks-search", "decide colorability of a ray set");
  std::string ray_file, rule_name = "101", mode_name = "sequential", certificate_out, verify_path;
  bool use_peres33 = false;
  ks->add_option("rayfile", ray_file, "ray file (see README for the format)");
  ks->add_flag("--peres33", use_peres33, "use the built-in 33-direction set");
  ks->add_option("--rule", rule_name, "101 or projector")->capture_default_str();
  ks->add_option("--mode", mode_name, "sequential or parallel")->capture_default_str();
  ks->add_option("--certificate", certificate_out, "write the certificate JSON to PATH");
  ks->add_option("--verify", verify_path, "verify an existing certificate instead of searching");

  auto* hv = app.add_subcommand("hv", "hidden-variable model tools");
  hv->require_subcommand(1);
  auto* synth = hv->add_subcommand("synth", "synthesize a quantum-faithful model");
  std::string state = "singlet";
  std::vector<std::string> menu_a, menu_b;
  synth->add_option("--state", state, "singlet or ks")->capture_default_str();
  synth->add_option("--menu-a", menu_a, "side-1 setting id:kind:x,y,z (repeatable)")->required();
  synth->add_option("--menu-b", menu_b, "side-2 setting id:kind:x,y,z (repeatable)")->required();
  auto* audit = hv->add_subcommand("audit", "run every locality/contextuality check");
  std::string audit_model;
  audit->add_option("model", audit_model, "model JSON file")->required();
  auto* flips = hv->add_subcommand("flips", "report context flips of one setting");
  std::string flips_model, flips_setting;
  int flips_outcome = 0;
  flips->add_option("model", flips_model, "model JSON file")->required();
  flips->add_option("--setting", flips_setting, "target setting id")->required();
  flips->add_option("--outcome", flips_outcome, "single-measurement outcome")
      ->capture_default_str();

  auto* cf = app.add_subcommand("cf-eval", "evaluate a counterfactual scenario");
  std::string scenario_path, policy;
  cf->add_option("scenario", scenario_path, "scenario JSON file")->required();
  cf->add_option("--policy", policy, "fix-lambda, fix-outcome, or both")
      ->check(CLI::IsMember({"fix-lambda", "fix-outcome", "both"}));

  CLI11_PARSE(app, argc, argv);
  if (int rc = flags.validate(); rc != kExitOk) return rc;

  try {
    if (verify_quantum->parsed()) return run_verify_quantum(flags);
    if (ks->parsed()) {
      return run_ks_search(flags, ray_file, use_peres33, rule_name, mode_name, certificate_out,
                           verify_path);
    }
    if (hv->parsed()) {
      if (synth->parsed()) return run_hv_synth(flags, state, menu_a, menu_b);
      if (audit->parsed()) return run_hv_audit(flags, audit_model);
      if (flips->parsed()) return run_hv_flips(flags, flips_model, flips_setting, flips_outcome);
    }
    if (cf->parsed()) return run_cf_eval(flags, scenario_path, policy);
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  return fail("no command");
}
