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

#pragma once

#include <array>
#include <vector>

#include "quantum/linalg.hpp"

namespace qcv::quantum {

enum class SpinKind { Half, One };

inline int dimension(SpinKind k) { return k == SpinKind::Half ? 2 : 3; }
/// Total spin quantum number s.
inline double spin_value(SpinKind k) { return k == SpinKind::Half ? 0.5 : 1.0; }

/// Unit vector in R^3; the constructor enforces unit norm within 1e-12.
class RealDirection {
 public:
  RealDirection(double x, double y, double z);  // throws std::invalid_argument off the sphere
  static RealDirection normalized(double x, double y, double z);  // throws on zero vector

  static RealDirection x_axis() { return {1, 0, 0}; }
  static RealDirection y_axis() { return {0, 1, 0}; }
  static RealDirection z_axis() { return {0, 0, 1}; }

  double x() const { return c_[0]; }
  double y() const { return c_[1]; }
  double z() const { return c_[2]; }
  const std::array<double, 3>& components() const { return c_; }

  double dot(const RealDirection& o) const {
    return c_[0] * o.c_[0] + c_[1] * o.c_[1] + c_[2] * o.c_[2];
  }

 private:
  std::array<double, 3> c_;
};

struct SpinTriple {
  Operator x, y, z;
};

/// Spin component operators in the standard S_z eigenbasis, rows ordered
/// m = s, s-1, ..., -s.
SpinTriple spin_operators(SpinKind kind);

/// n . S for a unit direction n.
Operator component_along(SpinKind kind, const RealDirection& n);

/// Identity on the single-particle space.
Operator spin_identity(SpinKind kind);

/// Rotation by omega on the tensor product of the given particles:
/// exp(-i omega . S_total), computed by spectral decomposition of the
/// hermitian generator.
Operator rotation_unitary(const std::array<double, 3>& omega,
                          const std::vector<SpinKind>& kinds);

/// 3x3 rotation matrix for the same omega (Rodrigues form), so that
/// conjugation by rotation_unitary maps n . S to (R n) . S.
std::array<std::array<double, 3>, 3> rotation_matrix(const std::array<double, 3>& omega);
RealDirection rotate_direction(const std::array<double, 3>& omega, const RealDirection& n);

/// Product basis state |m1>|m2>, composite index i1 * dim2 + i2.
StateVector product_state(SpinKind k1, int m1, SpinKind k2, int m2);

/// The total-spin-zero state of two spin-1 particles,
/// (|1>|-1> - |0>|0> + |-1>|1>)/sqrt(3), dim 9.
StateVector ks_state();

/// The spin-1/2 singlet (|+>|-> - |->|+>)/sqrt(2), dim 4.
StateVector singlet_state();

/// Square of the total spin on a two-particle space.
Operator total_spin_squared(SpinKind k1, SpinKind k2);

/// || A s - value * s ||.
double verify_eigenrelation(const Operator& a, const StateVector& s, double value);

/// Sum of three squared spin-1 components, one per direction of a mutually
/// orthogonal triple, each placed on the chosen particle (1 or 2) of a
/// two-spin-1 system. Directions must be orthogonal within 1e-9.
Operator triple_squares_operator(const std::array<RealDirection, 3>& dirs,
                                 const std::array<int, 3>& parties);

/// The triple operator with the first two squares on one particle and the
/// third on `party_of_k` (the two-direction side is the other particle).
Operator mixed_triple_operator(const RealDirection& i, const RealDirection& j,
                               const RealDirection& k, int party_of_k);

struct Outcome {
  double value;
  double probability;
};
struct JointOutcome {
  double a;
  double b;
  double probability;
};

/// Born probabilities of a hermitian observable on one party (1 or 2) of a
/// bipartite state; outcomes ascending.
std::vector<Outcome> born_single(const StateVector& state, const Operator& obs, int party,
                                 int dim_a, int dim_b);

/// Joint Born distribution over (eigenvalue of A on party 1, eigenvalue of B
/// on party 2), via joint spectral projectors; degenerate spectra are grouped
/// at gap 1e-9. Rejects non-hermitian input.
std::vector<JointOutcome> born_joint(const StateVector& state, const Operator& obs_a,
                                     const Operator& obs_b);

}  // namespace qcv::quantum
