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

#include "quantum/suite.hpp"

#include <cmath>
#include <random>

#include "quantum/spin.hpp"

namespace qcv::quantum {

namespace {

constexpr double kConstructed = 1e-12;
constexpr double kChained = 1e-10;

std::array<double, 3> random_omega(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-M_PI, M_PI);
  return {dist(rng), dist(rng), dist(rng)};
}

double max_abs(const Operator& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

SuiteResult run_identity_suite(std::uint64_t seed, std::optional<double> tolerance_override) {
  SuiteResult result;
  result.seed = seed;
  auto add = [&](std::string name, double residual, double tol) {
    result.checks.push_back(
        {std::move(name), residual, tolerance_override.value_or(tol)});
  };

  // single-particle spin algebra
  for (auto kind : {SpinKind::Half, SpinKind::One}) {
    const char* tag = kind == SpinKind::Half ? "half" : "one";
    SpinTriple s = spin_operators(kind);
    const Complex i_unit{0.0, 1.0};
    add(std::string(tag) + ".commutator_xy_is_i_z",
        max_abs(s.x * s.y - s.y * s.x - i_unit * s.z), kConstructed);
    double casimir = spin_value(kind) * (spin_value(kind) + 1.0);
    add(std::string(tag) + ".sum_of_squares",
        max_abs(s.x * s.x + s.y * s.y + s.z * s.z - casimir * spin_identity(kind)),
        kConstructed);
  }
  {
    SpinTriple s = spin_operators(SpinKind::One);
    Operator sx2 = s.x * s.x, sy2 = s.y * s.y;
    add("one.squared_components_commute", max_abs(sx2 * sy2 - sy2 * sx2), kConstructed);
    Operator sz_expect(3, 3);
    sz_expect << 1, 0, 0, 0, 0, 0, 0, 0, -1;
    add("one.sz_eigenvalues_1_0_m1", max_abs(s.z - sz_expect), kConstructed);
  }
  {
    SpinTriple s = spin_operators(SpinKind::Half);
    Eigen::SelfAdjointEigenSolver<Operator> es(s.z);
    double dev = 0;
    for (int i = 0; i < 2; ++i) dev = std::max(dev, std::abs(std::abs(es.eigenvalues()(i)) - 0.5));
    add("half.component_eigenvalues_pm_half", dev, kConstructed);
  }

  const StateVector psi = ks_state();
  add("ks.norm", std::abs(psi.norm() - 1.0), kConstructed);
  add("ks.total_spin_squared_eigenvalue_0",
      verify_eigenrelation(total_spin_squared(SpinKind::One, SpinKind::One), psi, 0.0),
      kConstructed);

  const auto x = RealDirection::x_axis(), y = RealDirection::y_axis(), z = RealDirection::z_axis();
  add("ks.sum_squares_particle1_eigenvalue_2",
      verify_eigenrelation(triple_squares_operator({x, y, z}, {1, 1, 1}), psi, 2.0),
      kConstructed);
  add("ks.sum_squares_particle2_eigenvalue_2",
      verify_eigenrelation(triple_squares_operator({x, y, z}, {2, 2, 2}), psi, 2.0),
      kConstructed);
  const Operator mixed_z = mixed_triple_operator(x, y, z, 1);
  add("ks.mixed_triple_z_eigenvalue_2", verify_eigenrelation(mixed_z, psi, 2.0), kConstructed);
  {
    // same operator rewritten through sum-of-squares on particle 2
    SpinTriple s = spin_operators(SpinKind::One);
    Operator id = spin_identity(SpinKind::One);
    Operator sz2 = s.z * s.z;
    Operator rewritten = 2.0 * tensor(id, id) - tensor(id, sz2) + tensor(sz2, id);
    add("ks.mixed_triple_operator_identity", max_abs(mixed_z - rewritten), kConstructed);
    add("ks.product_state_1_0_eigenvalue_3",
        verify_eigenrelation(mixed_z, product_state(SpinKind::One, 1, SpinKind::One, 0), 3.0),
        kConstructed);
    add("ks.product_state_0_1_eigenvalue_1",
        verify_eigenrelation(mixed_z, product_state(SpinKind::One, 0, SpinKind::One, 1), 1.0),
        kConstructed);
  }

  std::mt19937_64 rng(seed);
  const std::vector<SpinKind> two_ones{SpinKind::One, SpinKind::One};
  {
    double max_inv = 0, max_unitarity = 0;
    for (int n = 0; n < 1000; ++n) {
      auto omega = random_omega(rng);
      Operator u = rotation_unitary(omega, two_ones);
      max_inv = std::max(max_inv, (u * psi - psi).norm());
      if (n % 100 == 0) max_unitarity = std::max(max_unitarity, unitarity_defect(u));
    }
    add("ks.rotation_invariance_1000", max_inv, kChained);
    add("ks.rotation_unitarity", max_unitarity, kChained);
    add("ks.rotation_identity_at_zero",
        max_abs(rotation_unitary({0, 0, 0}, two_ones) - Operator::Identity(9, 9)),
        kConstructed);
  }
  {
    double max_direct = 0, max_conj = 0, max_agreement = 0;
    for (int n = 0; n < 100; ++n) {
      auto omega = random_omega(rng);
      auto r = rotation_matrix(omega);
      std::array<RealDirection, 3> dirs{
          RealDirection::normalized(r[0][0], r[1][0], r[2][0]),
          RealDirection::normalized(r[0][1], r[1][1], r[2][1]),
          RealDirection::normalized(r[0][2], r[1][2], r[2][2])};
      Operator u = rotation_unitary(omega, two_ones);
      for (int pattern = 0; pattern < 8; ++pattern) {
        std::array<int, 3> parties{1 + (pattern & 1), 1 + ((pattern >> 1) & 1),
                                   1 + ((pattern >> 2) & 1)};
        double direct = verify_eigenrelation(triple_squares_operator(dirs, parties), psi, 2.0);
        Operator axis_version = triple_squares_operator({x, y, z}, parties);
        double conj = (u * (axis_version * (u.adjoint() * psi)) - 2.0 * psi).norm();
        max_direct = std::max(max_direct, direct);
        max_conj = std::max(max_conj, conj);
        max_agreement = std::max(max_agreement, std::abs(direct - conj));
      }
    }
    add("ks.random_triples_direct_100x8", max_direct, kChained);
    add("ks.random_triples_conjugated_100x8", max_conj, kChained);
    add("ks.triple_route_agreement", max_agreement, kChained);
  }

  {
    SpinTriple s = spin_operators(SpinKind::One);
    Operator sz2 = s.z * s.z;
    auto joint = born_joint(psi, sz2, sz2);
    double off_diag = 0, norm_dev = 0;
    double sum = 0;
    for (const auto& o : joint) {
      sum += o.probability;
      if (std::abs(o.a - o.b) > 0.5) off_diag += o.probability;
    }
    norm_dev = std::abs(sum - 1.0);
    add("born.ks_same_axis_squares_perfectly_correlated", off_diag, kConstructed);
    add("born.ks_squares_normalization", norm_dev, kConstructed);

    auto jz = born_joint(psi, s.z, s.z);
    double dev = 0;
    for (const auto& o : jz) {
      double expected = std::abs(o.a + o.b) < 0.5 ? 1.0 / 3.0 : 0.0;
      dev = std::max(dev, std::abs(o.probability - expected));
    }
    add("born.ks_sz_pairs_one_third", dev, kConstructed);
  }
  {
    // marginals of the joint distribution match the single-observable rule
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    double dev = 0;
    for (int n = 0; n < 5; ++n) {
      RealDirection a = RealDirection::normalized(dist(rng), dist(rng), dist(rng));
      RealDirection b = RealDirection::normalized(dist(rng), dist(rng), dist(rng));
      Operator oa = component_along(SpinKind::One, a);
      Operator ob = component_along(SpinKind::One, b);
      auto joint = born_joint(psi, oa, ob);
      auto single = born_single(psi, oa, 1, 3, 3);
      for (const auto& s1 : single) {
        double marginal = 0;
        for (const auto& o : joint) {
          if (std::abs(o.a - s1.value) < 1e-6) marginal += o.probability;
        }
        dev = std::max(dev, std::abs(marginal - s1.probability));
      }
    }
    add("born.ks_marginals_match_single", dev, kConstructed);
  }

  const StateVector singlet = singlet_state();
  add("singlet.norm", std::abs(singlet.norm() - 1.0), kConstructed);
  add("singlet.total_spin_squared_eigenvalue_0",
      verify_eigenrelation(total_spin_squared(SpinKind::Half, SpinKind::Half), singlet, 0.0),
      kConstructed);
  {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    RealDirection n = RealDirection::normalized(dist(rng), dist(rng), dist(rng));
    Operator sigma_n = 2.0 * component_along(SpinKind::Half, n);
    auto joint = born_joint(singlet, sigma_n, sigma_n);
    double same = 0;
    for (const auto& o : joint) {
      if (o.a * o.b > 0) same += o.probability;
    }
    add("singlet.same_axis_anticorrelation", same, kConstructed);
  }
  {
    auto sigma_at = [](double degrees) {
      double rad = degrees * M_PI / 180.0;
      return Operator(2.0 * component_along(
                                SpinKind::Half,
                                RealDirection::normalized(std::sin(rad), 0.0, std::cos(rad))));
    };
    auto corr = [&](const Operator& oa, const Operator& ob) {
      double e = 0;
      for (const auto& o : born_joint(singlet, oa, ob)) e += o.a * o.b * o.probability;
      return e;
    };
    Operator a = sigma_at(90), ap = sigma_at(0), b = sigma_at(45), bp = sigma_at(135);
    double chsh = corr(a, b) + corr(a, bp) + corr(ap, b) - corr(ap, bp);
    add("singlet.chsh_two_sqrt_two", std::abs(std::abs(chsh) - 2.0 * std::sqrt(2.0)),
        kConstructed);
  }

  return result;
}

}  // namespace qcv::quantum
