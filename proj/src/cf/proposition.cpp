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

#include "cf/proposition.hpp"

#include <stdexcept>

namespace qcv::cf {

Proposition Proposition::performs(int side, std::string setting) {
  Proposition p;
  p.kind = Kind::Performs;
  p.side = side;
  p.setting = std::move(setting);
  return p;
}

Proposition Proposition::outcome_eq(int side, std::string setting, int value) {
  Proposition p;
  p.kind = Kind::OutcomeEq;
  p.side = side;
  p.setting = std::move(setting);
  p.value = value;
  return p;
}

Proposition Proposition::negation(Proposition inner) {
  Proposition p;
  p.kind = Kind::Not;
  p.children.push_back(std::move(inner));
  return p;
}

Proposition Proposition::conjunction(std::vector<Proposition> ps) {
  Proposition p;
  p.kind = Kind::And;
  p.children = std::move(ps);
  return p;
}

Proposition Proposition::disjunction(std::vector<Proposition> ps) {
  Proposition p;
  p.kind = Kind::Or;
  p.children = std::move(ps);
  return p;
}

namespace {

struct Tokenizer {
  std::string_view text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n')) {
      ++pos;
    }
  }
  bool at_end() {
    skip_space();
    return pos >= text.size();
  }
  char peek() {
    skip_space();
    if (pos >= text.size()) throw std::invalid_argument("proposition: unexpected end");
    return text[pos];
  }
  void expect(char c) {
    if (peek() != c) {
      throw std::invalid_argument(std::string("proposition: expected '") + c + "' at offset " +
                                  std::to_string(pos));
    }
    ++pos;
  }
  std::string word() {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' && text[pos] != '\n' &&
           text[pos] != '(' && text[pos] != ')') {
      ++pos;
    }
    if (start == pos) throw std::invalid_argument("proposition: expected a token");
    return std::string(text.substr(start, pos - start));
  }
  int integer() {
    std::string w = word();
    try {
      std::size_t used = 0;
      int v = std::stoi(w, &used);
      if (used != w.size()) throw std::invalid_argument("");
      return v;
    } catch (...) {
      throw std::invalid_argument("proposition: expected an integer, got '" + w + "'");
    }
  }
};

Proposition parse_expr(Tokenizer& t) {
  t.expect('(');
  std::string head = t.word();
  Proposition p;
  if (head == "performs") {
    int side = t.integer();
    std::string setting = t.word();
    p = Proposition::performs(side, std::move(setting));
  } else if (head == "outcome") {
    int side = t.integer();
    std::string setting = t.word();
    int value = t.integer();
    p = Proposition::outcome_eq(side, std::move(setting), value);
  } else if (head == "not") {
    p = Proposition::negation(parse_expr(t));
  } else if (head == "and" || head == "or") {
    std::vector<Proposition> children;
    while (t.peek() == '(') children.push_back(parse_expr(t));
    if (children.empty()) throw std::invalid_argument("proposition: empty " + head);
    p = head == "and" ? Proposition::conjunction(std::move(children))
                      : Proposition::disjunction(std::move(children));
  } else {
    throw std::invalid_argument("proposition: unknown operator '" + head + "'");
  }
  t.expect(')');
  return p;
}

}  // namespace

Proposition Proposition::parse(std::string_view text) {
  Tokenizer t{text};
  Proposition p = parse_expr(t);
  if (!t.at_end()) throw std::invalid_argument("proposition: trailing input");
  return p;
}

std::string Proposition::to_string() const {
  switch (kind) {
    case Kind::Performs:
      return "(performs " + std::to_string(side) + " " + setting + ")";
    case Kind::OutcomeEq:
      return "(outcome " + std::to_string(side) + " " + setting + " " + std::to_string(value) +
             ")";
    case Kind::Not:
      return "(not " + children[0].to_string() + ")";
    case Kind::And:
    case Kind::Or: {
      std::string s = kind == Kind::And ? "(and" : "(or";
      for (const auto& c : children) s += " " + c.to_string();
      return s + ")";
    }
  }
  return "";
}

}  // namespace qcv::cf
