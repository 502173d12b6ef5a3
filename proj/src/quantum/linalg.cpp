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

#include "quantum/linalg.hpp"

#include <stdexcept>

namespace qcv::quantum {

double hermiticity_defect(const Operator& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const Operator& a, double tol) {
  return a.rows() == a.cols() && hermiticity_defect(a) <= tol;
}

double unitarity_defect(const Operator& u) {
  Operator id = Operator::Identity(u.rows(), u.cols());
  return (u * u.adjoint() - id).cwiseAbs().maxCoeff();
}

Operator tensor(const Operator& a, const Operator& b) {
  Operator out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

std::vector<SpectralCluster> spectral_clusters(const Operator& a, double gap) {
  if (!is_hermitian(a, 1e-10)) {
    throw std::invalid_argument("spectral_clusters: operator is not hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Operator> solver(a);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("spectral_clusters: eigensolver failed");
  }
  const auto& evals = solver.eigenvalues();
  const auto& evecs = solver.eigenvectors();
  std::vector<SpectralCluster> clusters;
  Eigen::Index i = 0;
  while (i < evals.size()) {
    Eigen::Index j = i;
    while (j + 1 < evals.size() && evals(j + 1) - evals(j) <= gap) ++j;
    double mean = 0;
    for (Eigen::Index k = i; k <= j; ++k) mean += evals(k);
    mean /= static_cast<double>(j - i + 1);
    Operator block = evecs.middleCols(i, j - i + 1);
    clusters.push_back({mean, block * block.adjoint()});
    i = j + 1;
  }
  return clusters;
}

}  // namespace qcv::quantum
