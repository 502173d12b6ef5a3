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

#include <string>
#include <string_view>
#include <vector>

namespace qcv::cf {

/// Boolean combination of measurement atoms. Atoms: performs(side, setting)
/// and outcome(side, setting) = value; a world that does not perform the
/// setting satisfies no outcome atom about it.
///
/// Prefix text form: (performs 2 l), (outcome 2 l 1), (not P), (and P Q...),
/// (or P Q...).
struct Proposition {
  enum class Kind { Performs, OutcomeEq, Not, And, Or };
  Kind kind = Kind::Performs;
  int side = 0;
  std::string setting;
  int value = 0;
  std::vector<Proposition> children;

  static Proposition performs(int side, std::string setting);
  static Proposition outcome_eq(int side, std::string setting, int value);
  static Proposition negation(Proposition p);
  static Proposition conjunction(std::vector<Proposition> ps);
  static Proposition disjunction(std::vector<Proposition> ps);

  static Proposition parse(std::string_view text);  // throws on syntax errors
  std::string to_string() const;
};

}  // namespace qcv::cf
