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

#include "ks/search.hpp"

#include <atomic>
#include <bit>
#include <cstdio>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "support/sha256.hpp"
#include "version.hpp"

namespace qcv::ks {

using nlohmann::json;

ValueRule ValueRule::from_name(const std::string& name) {
  if (name == "101") return rule101();
  if (name == "projector") return projector();
  throw std::invalid_argument("unknown rule '" + name + "' (expected 101 or projector)");
}

std::string input_digest(const OrthoGraph& g, const ValueRule& rule) {
  digest::Sha256 h;
  h.update(format_ray_text(g.rays));
  h.update("rule:" + rule.name() + "\n");
  return digest::Sha256::hex(h.finish());
}

bool assignment_valid(const OrthoGraph& g, const ValueRule& rule, const Assignment& a) {
  if (static_cast<int>(a.size()) != g.ray_count()) return false;
  for (int v : a) {
    if (v != 0 && v != 1) return false;
  }
  const int marked = rule.marked_value();
  for (const auto& [i, j] : g.edges) {
    if (a[i] == marked && a[j] == marked) return false;
  }
  for (const auto& t : g.triads) {
    int count = 0;
    for (int i : t) count += a[i] == marked ? 1 : 0;
    if (count != 1) return false;
  }
  return true;
}

namespace {

constexpr std::int8_t kUnassigned = -1;

// Backtracking state with unit propagation over the triad/pair rules.
struct Solver {
  const OrthoGraph& g;
  int marked;
  int unmarked;
  std::vector<std::int8_t> values;
  std::vector<int> trail;
  std::uint64_t nodes = 0;
  digest::Sha256* trace = nullptr;

  // parallel-mode cooperation: give up once a strictly earlier task has won
  const std::atomic<int>* winner = nullptr;
  int task_index = 0;
  bool aborted = false;

  Solver(const OrthoGraph& graph, int marked_value)
      : g(graph),
        marked(marked_value),
        unmarked(1 - marked_value),
        values(graph.ray_count(), kUnassigned) {}

  void trace_event(char tag, int a = -1, int b = -1) {
    if (!trace) return;
    char buf[40];
    int len;
    if (a < 0) {
      len = std::snprintf(buf, sizeof buf, "%c;", tag);
    } else if (b < 0) {
      len = std::snprintf(buf, sizeof buf, "%c %d;", tag, a);
    } else {
      len = std::snprintf(buf, sizeof buf, "%c %d %d;", tag, a, b);
    }
    trace->update(buf, static_cast<std::size_t>(len));
  }

  // Sets x := v and runs propagation to a fixed point. Returns false on
  // conflict, leaving the trail for the caller to roll back.
  bool assign_and_propagate(int x, std::int8_t v) {
    std::vector<int> queue;
    values[x] = v;
    trail.push_back(x);
    queue.push_back(x);
    while (!queue.empty()) {
      int cur = queue.back();
      queue.pop_back();
      if (values[cur] == marked) {
        // no orthogonal partner may also carry the marked value
        for (int nb : g.neighbors[cur]) {
          if (values[nb] == marked) {
            trace_event('C');
            return false;
          }
          if (values[nb] == kUnassigned) {
            trace_event('P', nb, unmarked);
            values[nb] = static_cast<std::int8_t>(unmarked);
            trail.push_back(nb);
            queue.push_back(nb);
          }
        }
      } else {
        // a triad with two unmarked rays forces the third to the marked value
        for (int tid : g.triads_of_ray[cur]) {
          const auto& t = g.triads[tid];
          int unmarked_count = 0;
          int open = -1;
          for (int r : t) {
            if (values[r] == static_cast<std::int8_t>(unmarked)) {
              ++unmarked_count;
            } else if (values[r] == kUnassigned) {
              open = r;
            }
          }
          if (unmarked_count == 3) {
            trace_event('C');
            return false;
          }
          if (unmarked_count == 2 && open >= 0) {
            trace_event('P', open, marked);
            values[open] = static_cast<std::int8_t>(marked);
            trail.push_back(open);
            queue.push_back(open);
          }
        }
      }
    }
    return true;
  }

  void rollback(std::size_t mark) {
    while (trail.size() > mark) {
      values[trail.back()] = kUnassigned;
      trail.pop_back();
    }
  }

  bool should_abort() {
    if (winner != nullptr && winner->load(std::memory_order_relaxed) < task_index) {
      aborted = true;
    }
    return aborted;
  }

  // Lowest-index unassigned variable, branch value 0 before 1.
  bool dfs() {
    int x = -1;
    for (int i = 0; i < g.ray_count(); ++i) {
      if (values[i] == kUnassigned) {
        x = i;
        break;
      }
    }
    if (x < 0) return true;
    for (std::int8_t v = 0; v <= 1; ++v) {
      if (should_abort()) return false;
      ++nodes;
      trace_event('D', x, v);
      std::size_t mark = trail.size();
      if (assign_and_propagate(x, v) && dfs()) return true;
      if (aborted) return false;
      rollback(mark);
      trace_event('B', x);
    }
    return false;
  }
};

Certificate make_base_certificate(const OrthoGraph& g, const ValueRule& rule, SearchMode mode) {
  Certificate c;
  c.rule = rule;
  c.mode = mode;
  c.input_digest = input_digest(g, rule);
  c.tool_version = kToolVersion;
  return c;
}

Certificate search_sequential(const OrthoGraph& g, const ValueRule& rule) {
  Certificate cert = make_base_certificate(g, rule, SearchMode::Sequential);
  digest::Sha256 trace;
  Solver s(g, rule.marked_value());
  s.trace = &trace;
  bool sat = s.dfs();
  cert.colorable = sat;
  cert.nodes_explored = s.nodes;
  cert.trace_digest = digest::Sha256::hex(trace.finish());
  if (sat) cert.witness = Assignment(s.values.begin(), s.values.end());
  return cert;
}

// Enumerates the partial assignments reached after `depth` surviving
// decisions, in deterministic branch order. Returns a witness instead when a
// complete assignment is reached while splitting.
struct PrefixSplit {
  std::vector<std::vector<std::int8_t>> tasks;
  std::optional<Assignment> witness;
  std::uint64_t nodes = 0;
};

void split_prefixes(Solver& s, int depth, PrefixSplit& out) {
  if (out.witness) return;
  int x = -1;
  for (int i = 0; i < s.g.ray_count(); ++i) {
    if (s.values[i] == kUnassigned) {
      x = i;
      break;
    }
  }
  if (x < 0) {
    out.witness = Assignment(s.values.begin(), s.values.end());
    return;
  }
  if (depth == 0) {
    out.tasks.push_back(s.values);
    return;
  }
  for (std::int8_t v = 0; v <= 1 && !out.witness; ++v) {
    ++out.nodes;
    std::size_t mark = s.trail.size();
    if (s.assign_and_propagate(x, v)) split_prefixes(s, depth - 1, out);
    s.rollback(mark);
  }
}

Certificate search_parallel(const OrthoGraph& g, const ValueRule& rule) {
  Certificate cert = make_base_certificate(g, rule, SearchMode::Parallel);

  unsigned threads = std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
  int depth = 0;
  while ((1 << depth) < static_cast<int>(4 * threads) && depth < 10 &&
         depth < g.ray_count()) {
    ++depth;
  }

  Solver splitter(g, rule.marked_value());
  PrefixSplit split;
  split_prefixes(splitter, depth, split);
  if (split.witness) {
    cert.colorable = true;
    cert.witness = std::move(split.witness);
    cert.nodes_explored = std::nullopt;
    return cert;
  }

  std::atomic<int> winner{std::numeric_limits<int>::max()};
  std::atomic<std::size_t> next{0};
  std::mutex result_mutex;
  Assignment best_witness;
  std::vector<std::uint64_t> task_nodes(split.tasks.size(), 0);

  auto worker = [&]() {
    for (;;) {
      std::size_t idx = next.fetch_add(1);
      if (idx >= split.tasks.size()) return;
      Solver s(g, rule.marked_value());
      s.values = split.tasks[idx];
      s.winner = &winner;
      s.task_index = static_cast<int>(idx);
      bool sat = s.dfs();
      task_nodes[idx] = s.nodes;
      if (s.aborted) continue;
      if (sat) {
        std::lock_guard<std::mutex> lock(result_mutex);
        int prev = winner.load();
        if (static_cast<int>(idx) < prev) {
          winner.store(static_cast<int>(idx));
          best_witness = Assignment(s.values.begin(), s.values.end());
        }
      }
    }
  };

  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  if (winner.load() != std::numeric_limits<int>::max()) {
    cert.colorable = true;
    cert.witness = std::move(best_witness);
    // node totals depend on scheduling once a witness exists; don't report them
    cert.nodes_explored = std::nullopt;
  } else {
    cert.colorable = false;
    std::uint64_t total = split.nodes;
    for (auto n : task_nodes) total += n;
    cert.nodes_explored = total;  // every task ran to completion: exact sum
  }
  return cert;
}

}  // namespace

Certificate search(const OrthoGraph& g, const ValueRule& rule, SearchMode mode) {
  if (rule.kind == ValueRule::Kind::Projector && rule.basis_size != 3) {
    throw std::invalid_argument("projector rule: only basis size 3 is supported");
  }
  if (g.triads.empty()) {
    // with no triad constraints the all-unmarked assignment always works
    Certificate cert = make_base_certificate(g, rule, mode);
    cert.colorable = true;
    cert.witness = Assignment(static_cast<std::size_t>(g.ray_count()),
                              1 - rule.marked_value());
    cert.nodes_explored = 0;
    cert.flags.push_back("vacuous: no triads");
    digest::Sha256 trace;
    trace.update("vacuous;");
    cert.trace_digest = digest::Sha256::hex(trace.finish());
    return cert;
  }
  return mode == SearchMode::Sequential ? search_sequential(g, rule) : search_parallel(g, rule);
}

VerifyResult verify_certificate(const OrthoGraph& g, const Certificate& c) {
  if (c.input_digest != input_digest(g, c.rule)) {
    return {false, "input digest mismatch: certificate does not bind to this graph/rule"};
  }
  if (c.digest_algo != "sha256") {
    return {false, "unsupported digest algorithm '" + c.digest_algo + "'"};
  }
  if (c.colorable) {
    if (!c.witness) return {false, "colorable certificate lacks a witness"};
    if (!assignment_valid(g, c.rule, *c.witness)) {
      return {false, "witness violates a triad or orthogonal-pair constraint"};
    }
    return {true, ""};
  }
  if (g.ray_count() > 40 && c.trace_digest.empty()) {
    return {false, "uncolorable certificate for >40 rays has no trace digest to replay"};
  }
  Certificate replay = search(g, c.rule, SearchMode::Sequential);
  if (replay.colorable) {
    return {false, "replayed search found a coloring; certificate verdict is wrong"};
  }
  if (!c.trace_digest.empty() && c.trace_digest != replay.trace_digest) {
    return {false, "trace digest mismatch on replay"};
  }
  return {true, ""};
}

Certificate brute_force_oracle(const OrthoGraph& g, const ValueRule& rule) {
  const int n = g.ray_count();
  if (n > 24) throw std::invalid_argument("brute_force_oracle: more than 24 rays");
  Certificate cert = make_base_certificate(g, rule, SearchMode::Sequential);
  cert.nodes_explored = std::uint64_t(1) << n;

  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& [i, j] : g.edges) {
    adj[i] |= 1u << j;
    adj[j] |= 1u << i;
  }
  std::vector<std::uint32_t> triad_masks;
  triad_masks.reserve(g.triads.size());
  for (const auto& t : g.triads) {
    triad_masks.push_back((1u << t[0]) | (1u << t[1]) | (1u << t[2]));
  }
  const bool mark_zero = rule.marked_value() == 0;
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    std::uint32_t values = static_cast<std::uint32_t>(mask);
    std::uint32_t marked = mark_zero ? (~values & full) : values;
    bool ok = true;
    for (std::uint32_t m = marked; m != 0 && ok;) {
      int i = std::countr_zero(m);
      m &= m - 1;
      if (adj[i] & marked) ok = false;
    }
    for (std::size_t t = 0; t < triad_masks.size() && ok; ++t) {
      if (std::popcount(marked & triad_masks[t]) != 1) ok = false;
    }
    if (ok) {
      cert.colorable = true;
      Assignment w(n);
      for (int i = 0; i < n; ++i) w[i] = (values >> i) & 1u;
      cert.witness = std::move(w);
      return cert;
    }
  }
  cert.colorable = false;
  return cert;
}

std::uint64_t brute_force_count(const OrthoGraph& g, const ValueRule& rule) {
  const int n = g.ray_count();
  if (n > 24) throw std::invalid_argument("brute_force_count: more than 24 rays");
  std::uint64_t count = 0;
  Assignment a(n, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    for (int i = 0; i < n; ++i) a[i] = (mask >> i) & 1u;
    if (assignment_valid(g, rule, a)) ++count;
  }
  return count;
}

std::string Certificate::to_json() const {
  json j;
  j["verdict"] = colorable ? "colorable" : "uncolorable";
  j["rule"] = rule.name();
  j["mode"] = mode == SearchMode::Sequential ? "sequential" : "parallel";
  j["witness"] = witness ? json(*witness) : json(nullptr);
  j["nodes_explored"] = nodes_explored ? json(*nodes_explored) : json(nullptr);
  j["input_digest"] = input_digest;
  j["trace_digest"] = trace_digest;
  j["digest_algo"] = digest_algo;
  j["tool_version"] = tool_version;
  j["flags"] = flags;
  return j.dump(2) + "\n";
}

Certificate Certificate::from_json(const std::string& text) {
  json j = json::parse(text);
  Certificate c;
  std::string verdict = j.at("verdict").get<std::string>();
  if (verdict != "colorable" && verdict != "uncolorable") {
    throw std::invalid_argument("certificate: bad verdict '" + verdict + "'");
  }
  c.colorable = verdict == "colorable";
  c.rule = ValueRule::from_name(j.at("rule").get<std::string>());
  std::string mode = j.value("mode", "sequential");
  c.mode = mode == "parallel" ? SearchMode::Parallel : SearchMode::Sequential;
  if (j.contains("witness") && !j["witness"].is_null()) {
    c.witness = j["witness"].get<Assignment>();
  }
  if (j.contains("nodes_explored") && !j["nodes_explored"].is_null()) {
    c.nodes_explored = j["nodes_explored"].get<std::uint64_t>();
  }
  c.input_digest = j.at("input_digest").get<std::string>();
  c.trace_digest = j.value("trace_digest", "");
  c.digest_algo = j.value("digest_algo", "sha256");
  c.tool_version = j.value("tool_version", "");
  if (j.contains("flags")) c.flags = j["flags"].get<std::vector<std::string>>();
  return c;
}

}  // namespace qcv::ks
