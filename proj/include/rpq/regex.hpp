// Copyright 2026 The rpq Authors
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

// Property-path expressions over edge labels.
//
//   expr    := alt
//   alt     := seq ("|" seq)*
//   seq     := postfix ("/" postfix)*
//   postfix := primary ("*" | "+" | "?")*
//   primary := "(" expr ")" | "^"? label
//   label   := [A-Za-z_][A-Za-z0-9_]* | '"' (char | '\"' | '\\')* '"'
//
// `^a` traverses an a-edge backwards. Whitespace between tokens is ignored.

#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rpq/types.hpp"

namespace rpq {

class RegexSyntaxError : public Error {
 public:
  RegexSyntaxError(std::size_t offset, const std::string& what)
      : Error("regex syntax error at offset " + std::to_string(offset) + ": " + what),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

struct Regex {
  enum class Kind { kAtom, kConcat, kAlt, kStar, kPlus, kOptional, kEpsilon };

  Kind kind = Kind::kEpsilon;
  Symbol symbol;                // kAtom only
  std::vector<Regex> children;  // kConcat/kAlt: >= 2, unary ops: 1

  static Regex atom(std::string label, Direction d = Direction::kForward) {
    Regex r;
    r.kind = Kind::kAtom;
    r.symbol = Symbol{std::move(label), d};
    return r;
  }
  static Regex epsilon() { return Regex{}; }
  static Regex unary(Kind k, Regex child) {
    Regex r;
    r.kind = k;
    r.children.push_back(std::move(child));
    return r;
  }
  static Regex nary(Kind k, std::vector<Regex> children) {
    if (children.size() == 1) return std::move(children.front());
    Regex r;
    r.kind = k;
    r.children = std::move(children);
    return r;
  }

  bool operator==(const Regex&) const = default;
};

// Structural rendering, e.g. Concat(Plus(Atom(knows,fwd)),Atom(lives,fwd)).
inline std::string debug_string(const Regex& r) {
  auto join = [&](const char* name) {
    std::string s = std::string(name) + "(";
    for (std::size_t i = 0; i < r.children.size(); ++i) {
      if (i) s += ",";
      s += debug_string(r.children[i]);
    }
    return s + ")";
  };
  switch (r.kind) {
    case Regex::Kind::kAtom:
      return "Atom(" + r.symbol.label + "," + to_string(r.symbol.direction) + ")";
    case Regex::Kind::kConcat: return join("Concat");
    case Regex::Kind::kAlt: return join("Alt");
    case Regex::Kind::kStar: return join("Star");
    case Regex::Kind::kPlus: return join("Plus");
    case Regex::Kind::kOptional: return join("Optional");
    case Regex::Kind::kEpsilon: return "Epsilon";
  }
  return "?";
}

namespace detail {

inline bool is_label_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
inline bool is_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class RegexParser {
 public:
  explicit RegexParser(std::string_view text) : text_(text) {}

  Regex parse() {
    skip_ws();
    if (pos_ == text_.size()) throw RegexSyntaxError(pos_, "empty expression");
    Regex r = parse_alt();
    skip_ws();
    if (pos_ != text_.size()) {
      throw RegexSyntaxError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    }
    return r;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Regex parse_alt() {
    std::vector<Regex> items;
    items.push_back(parse_seq());
    while (accept('|')) items.push_back(parse_seq());
    return Regex::nary(Regex::Kind::kAlt, std::move(items));
  }

  Regex parse_seq() {
    std::vector<Regex> items;
    items.push_back(parse_postfix());
    while (accept('/')) items.push_back(parse_postfix());
    return Regex::nary(Regex::Kind::kConcat, std::move(items));
  }

  Regex parse_postfix() {
    Regex r = parse_primary();
    for (;;) {
      if (accept('*')) {
        r = Regex::unary(Regex::Kind::kStar, std::move(r));
      } else if (accept('+')) {
        r = Regex::unary(Regex::Kind::kPlus, std::move(r));
      } else if (accept('?')) {
        r = Regex::unary(Regex::Kind::kOptional, std::move(r));
      } else {
        return r;
      }
    }
  }

  Regex parse_primary() {
    skip_ws();
    if (pos_ == text_.size()) throw RegexSyntaxError(pos_, "unexpected end of expression");
    if (accept('(')) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == ')') {
        throw RegexSyntaxError(pos_, "empty group");
      }
      Regex inner = parse_alt();
      if (!accept(')')) throw RegexSyntaxError(pos_, "expected ')'");
      return inner;
    }
    Direction d = Direction::kForward;
    if (accept('^')) {
      d = Direction::kInverse;
      skip_ws();
    }
    return Regex::atom(parse_label(), d);
  }

  std::string parse_label() {
    if (pos_ == text_.size()) throw RegexSyntaxError(pos_, "expected a label");
    if (text_[pos_] == '"') {
      const std::size_t open = pos_++;
      std::string label;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\\') {
          if (pos_ + 1 == text_.size()) break;
          ++pos_;
        }
        label += text_[pos_++];
      }
      if (pos_ == text_.size()) throw RegexSyntaxError(open, "unterminated quoted label");
      ++pos_;
      if (label.empty()) throw RegexSyntaxError(open, "empty quoted label");
      return label;
    }
    if (!is_label_start(text_[pos_])) {
      throw RegexSyntaxError(pos_, std::string("expected a label, got '") + text_[pos_] + "'");
    }
    const std::size_t begin = pos_;
    while (pos_ < text_.size() && is_label_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(begin, pos_ - begin));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Regex parse_regex(std::string_view text) { return detail::RegexParser(text).parse(); }

}  // namespace rpq
