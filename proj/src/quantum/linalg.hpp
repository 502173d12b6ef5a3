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

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace qcv::quantum {

using Complex = std::complex<double>;
using Operator = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

/// Entrywise distance to the conjugate transpose.
double hermiticity_defect(const Operator& a);
bool is_hermitian(const Operator& a, double tol = 1e-12);

/// Max |U U^dag - 1| entry.
double unitarity_defect(const Operator& u);

/// Kronecker product (row-major composite index: i_a * dim_b + i_b).
Operator tensor(const Operator& a, const Operator& b);

/// Eigenvalues of a hermitian operator grouped into clusters whose members
/// lie within `gap` of each other, with the orthogonal projector onto each
/// cluster's eigenspace. Clusters are in ascending eigenvalue order.
struct SpectralCluster {
  double value;       // cluster mean
  Operator projector;
};
std::vector<SpectralCluster> spectral_clusters(const Operator& a, double gap = 1e-9);

}  // namespace qcv::quantum
