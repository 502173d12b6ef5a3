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

#include <algorithm>
#include <random>

#include "ks/graph.hpp"
#include "ks/search.hpp"

using namespace qcv::ks;
using qcv::num::Rational;

namespace {

Ray3 ray(const char* x, const char* y, const char* z) {
  return Ray3::canonicalize(QuadRat::parse(x), QuadRat::parse(y), QuadRat::parse(z));
}

std::vector<Ray3> axes() { return {ray("1", "0", "0"), ray("0", "1", "0"), ray("0", "0", "1")}; }

// a second triad with no coordinate zeros, so it shares no edges with the axes
std::vector<Ray3> skew_triad() {
  return {ray("1", "1", "1"), ray("3", "1", "-4"), ray("5", "-7", "2")};
}

std::mt19937_64 g_rng(777);

Ray3 random_exact_ray() {
  std::uniform_int_distribution<int> small(-2, 2);
  while (true) {
    QuadRat c[3];
    bool nonzero = false;
    for (auto& q : c) {
      q = QuadRat(Rational(small(g_rng)), Rational(small(g_rng)));
      if (!q.is_zero()) nonzero = true;
    }
    if (nonzero) return Ray3::canonicalize(c[0], c[1], c[2]);
  }
}

std::vector<Ray3> dedupe(std::vector<Ray3> rays) {
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  return rays;
}

}  // namespace

TEST_CASE("graph construction on the axes") {
  OrthoGraph g = build_graph(axes());
  CHECK(g.ray_count() == 3);
  CHECK(g.edges.size() == 3);
  CHECK(g.triads.size() == 1);
  OrthoGraph single = build_graph({ray("1", "2", "0")});
  CHECK(single.edges.empty());
  CHECK(single.triads.empty());
}

TEST_CASE("graph rejects duplicate rays") {
  CHECK_THROWS_AS(build_graph({ray("1", "1", "0"), ray("-1", "-1", "0")}),
                  std::invalid_argument);
}

TEST_CASE("graph is independent of input order") {
  std::vector<Ray3> rays = peres33();
  OrthoGraph g1 = build_graph(rays);
  std::shuffle(rays.begin(), rays.end(), g_rng);
  OrthoGraph g2 = build_graph(rays);
  CHECK(g1.rays == g2.rays);
  CHECK(g1.edges == g2.edges);
  CHECK(g1.triads == g2.triads);
}

TEST_CASE("peres33 has the right membership and structure") {
  std::vector<Ray3> rays = peres33();
  CHECK(rays.size() == 33);
  CHECK(std::count(rays.begin(), rays.end(), ray("0", "0", "1")) == 1);
  CHECK(std::count(rays.begin(), rays.end(), ray("1", "1", "0")) == 1);
  CHECK(std::count(rays.begin(), rays.end(), ray("1", "r2", "0")) == 1);
  CHECK(std::count(rays.begin(), rays.end(), ray("r2", "1", "1")) == 1);
  CHECK(std::count(rays.begin(), rays.end(), ray("1", "1", "1")) == 0);

  // triad structure agrees with a direct orthogonality scan
  OrthoGraph g = build_graph(rays);
  std::size_t triads = 0, edges = 0;
  for (int i = 0; i < 33; ++i) {
    for (int j = i + 1; j < 33; ++j) {
      if (Ray3::orthogonal(g.rays[i], g.rays[j])) ++edges;
      for (int k = j + 1; k < 33; ++k) {
        if (Ray3::orthogonal(g.rays[i], g.rays[j]) && Ray3::orthogonal(g.rays[i], g.rays[k]) &&
            Ray3::orthogonal(g.rays[j], g.rays[k])) {
          ++triads;
        }
      }
    }
  }
  CHECK(g.edges.size() == edges);
  CHECK(g.triads.size() == triads);
  CHECK(g.triads.size() >= 16);  // the set is triad-rich
}

TEST_CASE("single triad: three valid 101 colorings, search agrees") {
  OrthoGraph g = build_graph(axes());
  CHECK(brute_force_count(g, ValueRule::rule101()) == 3);
  CHECK(brute_force_count(g, ValueRule::projector()) == 3);
  Certificate c = search(g, ValueRule::rule101());
  CHECK(c.colorable);
  REQUIRE(c.witness.has_value());
  CHECK(assignment_valid(g, ValueRule::rule101(), *c.witness));
  CHECK(std::count(c.witness->begin(), c.witness->end(), 0) == 1);
}

TEST_CASE("two disjoint triads: nine valid colorings by independence") {
  std::vector<Ray3> rays = axes();
  auto extra = skew_triad();
  rays.insert(rays.end(), extra.begin(), extra.end());
  OrthoGraph g = build_graph(rays);
  CHECK(g.triads.size() == 2);
  CHECK(g.edges.size() == 6);
  CHECK(brute_force_count(g, ValueRule::rule101()) == 9);
}

TEST_CASE("empty and triad-free graphs are vacuously colorable") {
  OrthoGraph empty = build_graph({});
  Certificate c = search(empty, ValueRule::rule101());
  CHECK(c.colorable);
  CHECK(c.flags == std::vector<std::string>{"vacuous: no triads"});
  CHECK(c.witness->empty());

  OrthoGraph pair = build_graph({ray("1", "0", "0"), ray("0", "1", "0")});
  Certificate c2 = search(pair, ValueRule::rule101());
  CHECK(c2.colorable);
  CHECK(c2.flags == std::vector<std::string>{"vacuous: no triads"});
  CHECK(*c2.witness == Assignment{1, 1});
  Certificate c3 = search(pair, ValueRule::projector());
  CHECK(*c3.witness == Assignment{0, 0});
}

TEST_CASE("peres33 admits no 101 coloring, projector rule likewise") {
  OrthoGraph g = build_graph(peres33());
  Certificate c = search(g, ValueRule::rule101());
  CHECK_FALSE(c.colorable);
  CHECK(c.nodes_explored.has_value());
  CHECK(*c.nodes_explored > 0);
  Certificate cp = search(g, ValueRule::projector());
  CHECK_FALSE(cp.colorable);
}

TEST_CASE("search is deterministic: identical nodes and trace on a rerun") {
  OrthoGraph g = build_graph(peres33());
  Certificate a = search(g, ValueRule::rule101());
  Certificate b = search(g, ValueRule::rule101());
  CHECK(a.nodes_explored == b.nodes_explored);
  CHECK(a.trace_digest == b.trace_digest);
  CHECK(a.to_json() == b.to_json());
}

TEST_CASE("parallel search verdict matches sequential") {
  OrthoGraph peres = build_graph(peres33());
  Certificate seq = search(peres, ValueRule::rule101(), SearchMode::Sequential);
  Certificate par = search(peres, ValueRule::rule101(), SearchMode::Parallel);
  CHECK(seq.colorable == par.colorable);
  CHECK(par.nodes_explored.has_value());  // full exploration: stable count

  // a colorable instance: witness must verify
  std::vector<Ray3> rays = axes();
  auto extra = skew_triad();
  rays.insert(rays.end(), extra.begin(), extra.end());
  OrthoGraph g = build_graph(rays);
  Certificate par2 = search(g, ValueRule::rule101(), SearchMode::Parallel);
  CHECK(par2.colorable);
  CHECK(assignment_valid(g, ValueRule::rule101(), *par2.witness));
}

TEST_CASE("parallel certificates are schedule-independent") {
  OrthoGraph peres = build_graph(peres33());
  std::string first = search(peres, ValueRule::rule101(), SearchMode::Parallel).to_json();
  for (int i = 0; i < 4; ++i) {
    CHECK(search(peres, ValueRule::rule101(), SearchMode::Parallel).to_json() == first);
  }
  std::vector<Ray3> rays = axes();
  auto extra = skew_triad();
  rays.insert(rays.end(), extra.begin(), extra.end());
  OrthoGraph colorable = build_graph(rays);
  std::string c_first = search(colorable, ValueRule::rule101(), SearchMode::Parallel).to_json();
  Certificate seq = search(colorable, ValueRule::rule101(), SearchMode::Sequential);
  for (int i = 0; i < 4; ++i) {
    Certificate par = search(colorable, ValueRule::rule101(), SearchMode::Parallel);
    CHECK(par.to_json() == c_first);
    CHECK(*par.witness == *seq.witness);  // lowest-prefix witness
  }
}

TEST_CASE("search agrees with the exhaustive oracle on random subsets") {
  std::vector<Ray3> pool = peres33();
  std::uniform_int_distribution<std::size_t> size_dist(1, 14);
  for (int round = 0; round < 60; ++round) {
    std::vector<Ray3> rays = pool;
    std::shuffle(rays.begin(), rays.end(), g_rng);
    rays.erase(rays.begin() + size_dist(g_rng), rays.end());
    for (int extra = std::uniform_int_distribution<int>(0, 2)(g_rng); extra > 0; --extra) {
      rays.push_back(random_exact_ray());
    }
    rays = dedupe(rays);
    OrthoGraph g = build_graph(rays);
    for (auto rule : {ValueRule::rule101(), ValueRule::projector()}) {
      Certificate fast = search(g, rule);
      Certificate slow = brute_force_oracle(g, rule);
      CHECK(fast.colorable == slow.colorable);
      if (fast.colorable) {
        CHECK(assignment_valid(g, rule, *fast.witness));
        CHECK(assignment_valid(g, rule, *slow.witness));
      }
    }
  }
}

TEST_CASE("uncolorability is monotone under adding rays") {
  std::vector<Ray3> rays = peres33();
  for (int i = 0; i < 5; ++i) rays.push_back(random_exact_ray());
  rays = dedupe(rays);
  OrthoGraph g = build_graph(rays);
  CHECK_FALSE(search(g, ValueRule::rule101()).colorable);
}

TEST_CASE("101 and projector rules are dual under complement") {
  std::vector<Ray3> pool = peres33();
  std::uniform_int_distribution<std::size_t> size_dist(3, 12);
  for (int round = 0; round < 50; ++round) {
    std::vector<Ray3> rays = pool;
    std::shuffle(rays.begin(), rays.end(), g_rng);
    rays.erase(rays.begin() + size_dist(g_rng), rays.end());
    rays = dedupe(rays);
    OrthoGraph g = build_graph(rays);
    std::uniform_int_distribution<int> bit(0, 1);
    Assignment a(g.ray_count());
    for (auto& v : a) v = bit(g_rng);
    Assignment complement(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) complement[i] = 1 - a[i];
    CHECK(assignment_valid(g, ValueRule::rule101(), a) ==
          assignment_valid(g, ValueRule::projector(), complement));
  }
}

TEST_CASE("certificates verify and bind to their input") {
  OrthoGraph triad = build_graph(axes());
  Certificate good = search(triad, ValueRule::rule101());
  CHECK(verify_certificate(triad, good).ok);

  // round trip through JSON
  Certificate reloaded = Certificate::from_json(good.to_json());
  CHECK(verify_certificate(triad, reloaded).ok);

  // a witness with two marked rays on an edge must be rejected
  Certificate bad = good;
  bad.witness = Assignment{0, 0, 1};
  auto r = verify_certificate(triad, bad);
  CHECK_FALSE(r.ok);
  CHECK(r.reason.find("constraint") != std::string::npos);

  // tampered digest
  Certificate tampered = good;
  tampered.input_digest[0] = tampered.input_digest[0] == 'a' ? 'b' : 'a';
  CHECK_FALSE(verify_certificate(triad, tampered).ok);

  // certificate bound to a different graph
  OrthoGraph other = build_graph(peres33());
  CHECK_FALSE(verify_certificate(other, good).ok);

  // uncolorable certificate: replay confirms verdict and trace
  Certificate unc = search(build_graph(peres33()), ValueRule::rule101());
  CHECK(verify_certificate(build_graph(peres33()), unc).ok);
  Certificate wrong_verdict = unc;
  wrong_verdict.trace_digest[0] = wrong_verdict.trace_digest[0] == 'a' ? 'b' : 'a';
  CHECK_FALSE(verify_certificate(build_graph(peres33()), wrong_verdict).ok);

  // parallel certificates carry no trace digest; verification replays the verdict
  Certificate par = search(build_graph(peres33()), ValueRule::rule101(), SearchMode::Parallel);
  CHECK(par.trace_digest.empty());
  CHECK(verify_certificate(build_graph(peres33()), par).ok);
}

TEST_CASE("brute force oracle rejects oversized inputs") {
  std::vector<Ray3> rays = peres33();
  OrthoGraph g = build_graph(rays);
  CHECK_THROWS_AS(brute_force_oracle(g, ValueRule::rule101()), std::invalid_argument);
}

TEST_CASE("projector rule only supports basis size 3") {
  OrthoGraph g = build_graph(axes());
  CHECK_THROWS_AS(search(g, ValueRule::projector(4)), std::invalid_argument);
}
