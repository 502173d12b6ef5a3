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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qcv::quantum {

/// One named identity with its measured residual and the bound it must meet.
/// Constructed identities carry 1e-12; chained computations (rotations,
/// exponentials, long random sweeps) carry 1e-10.
struct IdentityCheck {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass() const { return residual <= tolerance; }
};

struct SuiteResult {
  std::vector<IdentityCheck> checks;
  std::uint64_t seed = 0;
  bool all_pass() const {
    for (const auto& c : checks) {
      if (!c.pass()) return false;
    }
    return true;
  }
};

/// Runs the full operator/state identity battery: spin algebra, the two-spin-1
/// eigenrelations, rotation invariance over 1000 random rotations, the
/// orthogonal-triple relation over 100 random triples with all 8 per-term
/// particle placements (directly and via unitary conjugation), and the Born
/// distribution checks. Deterministic for a fixed seed. When
/// tolerance_override is set, every check uses that bound instead of its
/// default.
SuiteResult run_identity_suite(std::uint64_t seed,
                               std::optional<double> tolerance_override = std::nullopt);

}  // namespace qcv::quantum
