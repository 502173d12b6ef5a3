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

#include "quantum/spin.hpp"

#include <cmath>
#include <stdexcept>

namespace qcv::quantum {

namespace {
constexpr Complex kI{0.0, 1.0};
}

RealDirection::RealDirection(double x, double y, double z) : c_{x, y, z} {
  double norm = std::sqrt(x * x + y * y + z * z);
  if (std::abs(norm - 1.0) > 1e-12) {
    throw std::invalid_argument("RealDirection: vector is not unit norm");
  }
}

RealDirection RealDirection::normalized(double x, double y, double z) {
  double norm = std::sqrt(x * x + y * y + z * z);
  if (norm == 0.0) throw std::invalid_argument("RealDirection: zero vector");
  return RealDirection(x / norm, y / norm, z / norm);
}

SpinTriple spin_operators(SpinKind kind) {
  if (kind == SpinKind::Half) {
    Operator sx(2, 2), sy(2, 2), sz(2, 2);
    sx << 0, 0.5, 0.5, 0;
    sy << 0, -0.5 * kI, 0.5 * kI, 0;
    sz << 0.5, 0, 0, -0.5;
    return {sx, sy, sz};
  }
  const double r = 1.0 / std::sqrt(2.0);
  Operator sx(3, 3), sy(3, 3), sz(3, 3);
  sx << 0, r, 0, r, 0, r, 0, r, 0;
  sy << 0, -r * kI, 0, r * kI, 0, -r * kI, 0, r * kI, 0;
  sz << 1, 0, 0, 0, 0, 0, 0, 0, -1;
  return {sx, sy, sz};
}

Operator spin_identity(SpinKind kind) {
  int d = dimension(kind);
  return Operator::Identity(d, d);
}

Operator component_along(SpinKind kind, const RealDirection& n) {
  SpinTriple s = spin_operators(kind);
  return n.x() * s.x + n.y() * s.y + n.z() * s.z;
}

Operator rotation_unitary(const std::array<double, 3>& omega,
                          const std::vector<SpinKind>& kinds) {
  if (kinds.empty()) throw std::invalid_argument("rotation_unitary: no particles");
  int total_dim = 1;
  for (auto k : kinds) total_dim *= dimension(k);

  Operator generator = Operator::Zero(total_dim, total_dim);
  for (std::size_t p = 0; p < kinds.size(); ++p) {
    SpinTriple s = spin_operators(kinds[p]);
    std::array<const Operator*, 3> axes{&s.x, &s.y, &s.z};
    for (int a = 0; a < 3; ++a) {
      if (omega[a] == 0.0) continue;
      Operator term = Operator::Identity(1, 1);
      for (std::size_t q = 0; q < kinds.size(); ++q) {
        term = tensor(term, q == p ? *axes[a] : spin_identity(kinds[q]));
      }
      generator += omega[a] * term;
    }
  }
  // generator is hermitian: exponentiate through its spectrum
  Eigen::SelfAdjointEigenSolver<Operator> solver(generator);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("rotation_unitary: eigensolver failed");
  }
  Eigen::VectorXcd phases(total_dim);
  for (int i = 0; i < total_dim; ++i) {
    phases(i) = std::exp(-kI * solver.eigenvalues()(i));
  }
  return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

std::array<std::array<double, 3>, 3> rotation_matrix(const std::array<double, 3>& omega) {
  double theta = std::sqrt(omega[0] * omega[0] + omega[1] * omega[1] + omega[2] * omega[2]);
  std::array<std::array<double, 3>, 3> r{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  if (theta == 0.0) return r;
  double ux = omega[0] / theta, uy = omega[1] / theta, uz = omega[2] / theta;
  double c = std::cos(theta), s = std::sin(theta), v = 1 - c;
  r = {{{c + ux * ux * v, ux * uy * v - uz * s, ux * uz * v + uy * s},
        {uy * ux * v + uz * s, c + uy * uy * v, uy * uz * v - ux * s},
        {uz * ux * v - uy * s, uz * uy * v + ux * s, c + uz * uz * v}}};
  return r;
}

RealDirection rotate_direction(const std::array<double, 3>& omega, const RealDirection& n) {
  auto r = rotation_matrix(omega);
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i) {
    out[i] = r[i][0] * n.x() + r[i][1] * n.y() + r[i][2] * n.z();
  }
  return RealDirection::normalized(out[0], out[1], out[2]);
}

namespace {
int basis_row(SpinKind k, int m) {
  if (k == SpinKind::Half) {
    // m passed in units of 1/2: +1 -> row 0, -1 -> row 1
    if (m == 1) return 0;
    if (m == -1) return 1;
    throw std::invalid_argument("product_state: spin-1/2 m must be +-1 (half units)");
  }
  if (m == 1) return 0;
  if (m == 0) return 1;
  if (m == -1) return 2;
  throw std::invalid_argument("product_state: spin-1 m must be in {1,0,-1}");
}
}  // namespace

StateVector product_state(SpinKind k1, int m1, SpinKind k2, int m2) {
  int d1 = dimension(k1), d2 = dimension(k2);
  StateVector v = StateVector::Zero(d1 * d2);
  v(basis_row(k1, m1) * d2 + basis_row(k2, m2)) = 1.0;
  return v;
}

StateVector ks_state() {
  StateVector v = StateVector::Zero(9);
  const double a = 1.0 / std::sqrt(3.0);
  v(0 * 3 + 2) = a;   // |1>|-1>
  v(1 * 3 + 1) = -a;  // |0>|0>
  v(2 * 3 + 0) = a;   // |-1>|1>
  return v;
}

StateVector singlet_state() {
  StateVector v = StateVector::Zero(4);
  const double a = 1.0 / std::sqrt(2.0);
  v(0 * 2 + 1) = a;   // |+>|->
  v(1 * 2 + 0) = -a;  // |->|+>
  return v;
}

Operator total_spin_squared(SpinKind k1, SpinKind k2) {
  SpinTriple s1 = spin_operators(k1);
  SpinTriple s2 = spin_operators(k2);
  Operator id1 = spin_identity(k1), id2 = spin_identity(k2);
  std::array<std::pair<const Operator*, const Operator*>, 3> axes{
      {{&s1.x, &s2.x}, {&s1.y, &s2.y}, {&s1.z, &s2.z}}};
  Operator total = Operator::Zero(id1.rows() * id2.rows(), id1.rows() * id2.rows());
  for (auto& [a1, a2] : axes) {
    Operator comp = tensor(*a1, id2) + tensor(id1, *a2);
    total += comp * comp;
  }
  return total;
}

double verify_eigenrelation(const Operator& a, const StateVector& s, double value) {
  if (a.cols() != s.size()) {
    throw std::invalid_argument("verify_eigenrelation: dimension mismatch");
  }
  return (a * s - value * s).norm();
}

Operator triple_squares_operator(const std::array<RealDirection, 3>& dirs,
                                 const std::array<int, 3>& parties) {
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (std::abs(dirs[i].dot(dirs[j])) > 1e-9) {
        throw std::invalid_argument("triple_squares_operator: directions are not orthogonal");
      }
    }
  }
  Operator id = spin_identity(SpinKind::One);
  Operator sum = Operator::Zero(9, 9);
  for (int t = 0; t < 3; ++t) {
    if (parties[t] != 1 && parties[t] != 2) {
      throw std::invalid_argument("triple_squares_operator: party must be 1 or 2");
    }
    Operator comp = component_along(SpinKind::One, dirs[t]);
    Operator sq = comp * comp;
    sum += parties[t] == 1 ? tensor(sq, id) : tensor(id, sq);
  }
  return sum;
}

Operator mixed_triple_operator(const RealDirection& i, const RealDirection& j,
                               const RealDirection& k, int party_of_k) {
  if (party_of_k != 1 && party_of_k != 2) {
    throw std::invalid_argument("mixed_triple_operator: party must be 1 or 2");
  }
  int other = party_of_k == 1 ? 2 : 1;
  return triple_squares_operator({i, j, k}, {other, other, party_of_k});
}

namespace {

void check_observable(const Operator& obs, int dim, const char* what) {
  if (obs.rows() != dim || obs.cols() != dim) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch");
  }
  if (!is_hermitian(obs)) {
    throw std::invalid_argument(std::string(what) + ": observable is not hermitian");
  }
}

}  // namespace

std::vector<Outcome> born_single(const StateVector& state, const Operator& obs, int party,
                                 int dim_a, int dim_b) {
  if (state.size() != dim_a * dim_b) {
    throw std::invalid_argument("born_single: state dimension mismatch");
  }
  check_observable(obs, party == 1 ? dim_a : dim_b, "born_single");
  std::vector<Outcome> out;
  for (const auto& c : spectral_clusters(obs)) {
    Operator proj = party == 1 ? tensor(c.projector, Operator::Identity(dim_b, dim_b))
                               : tensor(Operator::Identity(dim_a, dim_a), c.projector);
    double p = (state.adjoint() * proj * state).real()(0, 0);
    out.push_back({c.value, std::max(0.0, p)});
  }
  return out;
}

std::vector<JointOutcome> born_joint(const StateVector& state, const Operator& obs_a,
                                     const Operator& obs_b) {
  const int dim_a = static_cast<int>(obs_a.rows());
  const int dim_b = static_cast<int>(obs_b.rows());
  if (state.size() != dim_a * dim_b) {
    throw std::invalid_argument("born_joint: state dimension mismatch");
  }
  check_observable(obs_a, dim_a, "born_joint");
  check_observable(obs_b, dim_b, "born_joint");
  auto clusters_a = spectral_clusters(obs_a);
  auto clusters_b = spectral_clusters(obs_b);
  std::vector<JointOutcome> out;
  for (const auto& ca : clusters_a) {
    for (const auto& cb : clusters_b) {
      Operator proj = tensor(ca.projector, cb.projector);
      double p = (state.adjoint() * proj * state).real()(0, 0);
      out.push_back({ca.value, cb.value, std::max(0.0, p)});
    }
  }
  return out;
}

}  // namespace qcv::quantum
