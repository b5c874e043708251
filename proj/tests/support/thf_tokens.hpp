/* Copyright 2026 The cjhol Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// A small THF0 tokenizer and checker for the fragment the exporter
// emits: every binary connective and every application sits in its own
// parentheses, symbols are declared before use and variables are bound.

#ifndef CJHOL_TESTS_SUPPORT_THF_TOKENS_HPP_
#define CJHOL_TESTS_SUPPORT_THF_TOKENS_HPP_

#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cjhol::testing {

class ThfSyntaxError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::vector<std::string> tokenize_thf(const std::string& text) {
  std::vector<std::string> out;
  std::size_t k = 0;
  while (k < text.size()) {
    const char c = text[k];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++k;
    } else if (text.compare(k, 3, "<=>") == 0) {
      out.push_back("<=>");
      k += 3;
    } else if (text.compare(k, 2, "=>") == 0) {
      out.push_back("=>");
      k += 2;
    } else if (std::string("()[],.:@>!?^~|&=").find(c) != std::string::npos) {
      out.emplace_back(1, c);
      ++k;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '$') {
      std::size_t end = k + 1;
      while (end < text.size() && (std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_')) ++end;
      out.push_back(text.substr(k, end - k));
      k = end;
    } else {
      throw ThfSyntaxError(std::string("unexpected character '") + c + "'");
    }
  }
  return out;
}

// Prints tokens with the exporter's spacing: a space after commas, after
// colons outside brackets and around infix operators.
inline std::string print_thf_tokens(const std::vector<std::string>& tokens) {
  static const std::set<std::string> kInfix = {"@", "|", "&", "=", ">", "=>", "<=>"};
  std::string out;
  int brackets = 0;
  for (const auto& t : tokens) {
    if (kInfix.count(t)) {
      out += " " + t + " ";
      continue;
    }
    out += t;
    if (t == "[") ++brackets;
    if (t == "]") --brackets;
    if (t == "," || (t == ":" && brackets == 0)) out += " ";
  }
  return out;
}

class ThfChecker {
 public:
  // Checks one annotated formula per line; throws ThfSyntaxError.
  void check_file(const std::string& text) {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      if (line.empty()) continue;
      const auto tokens = tokenize_thf(line);
      if (print_thf_tokens(tokens) != line) throw ThfSyntaxError("round-trip changed: " + line);
      check_line(tokens);
    }
  }

  int axioms = 0;
  int conjectures = 0;
  std::set<std::string> declared;

 private:
  void check_line(const std::vector<std::string>& tokens) {
    toks_ = &tokens;
    pos_ = 0;
    expect("thf");
    expect("(");
    const std::string name = next();
    if (!is_lower(name)) throw ThfSyntaxError("bad formula name " + name);
    expect(",");
    const std::string role = next();
    expect(",");
    if (role == "type") {
      const std::string sym = next();
      if (!is_lower(sym)) throw ThfSyntaxError("bad symbol " + sym);
      expect(":");
      type();
      if (!declared.insert(sym).second) throw ThfSyntaxError("duplicate declaration of " + sym);
    } else if (role == "axiom" || role == "conjecture") {
      (role == "axiom" ? axioms : conjectures) += 1;
      inner();
    } else {
      throw ThfSyntaxError("unknown role " + role);
    }
    expect(")");
    expect(".");
    if (pos_ != tokens.size()) throw ThfSyntaxError("trailing tokens");
    if (!scope_.empty()) throw ThfSyntaxError("unbalanced binders");
  }

  static bool is_lower(const std::string& t) { return !t.empty() && std::islower(static_cast<unsigned char>(t[0])); }
  static bool is_upper(const std::string& t) { return !t.empty() && std::isupper(static_cast<unsigned char>(t[0])); }

  const std::string& peek() const {
    static const std::string kEnd;
    return pos_ < toks_->size() ? (*toks_)[pos_] : kEnd;
  }
  std::string next() {
    if (pos_ >= toks_->size()) throw ThfSyntaxError("unexpected end of formula");
    return (*toks_)[pos_++];
  }
  void expect(const std::string& t) {
    const std::string got = next();
    if (got != t) throw ThfSyntaxError("expected '" + t + "', got '" + got + "'");
  }

  void type() {
    if (peek() == "(") {
      next();
      type();
      expect(")");
    } else {
      const std::string t = next();
      if (t != "$i" && t != "$o") throw ThfSyntaxError("bad type " + t);
    }
    if (peek() == ">") {
      next();
      type();
    }
  }

  // unit [infix unit]
  void inner() {
    unit();
    static const std::set<std::string> kInfix = {"@", "|", "&", "=", "=>", "<=>"};
    if (kInfix.count(peek())) {
      next();
      unit();
    }
  }

  void unit() {
    const std::string t = next();
    if (t == "(") {
      inner();
      expect(")");
    } else if (t == "~") {
      unit();
    } else if (t == "!" || t == "?" || t == "^") {
      expect("[");
      const std::string var = next();
      if (!is_upper(var)) throw ThfSyntaxError("bad variable " + var);
      expect(":");
      type();
      expect("]");
      expect(":");
      scope_.push_back(var);
      unit();
      scope_.pop_back();
    } else if (is_upper(t)) {
      bool bound = false;
      for (const auto& v : scope_) bound = bound || v == t;
      if (!bound) throw ThfSyntaxError("unbound variable " + t);
    } else if (is_lower(t)) {
      if (!declared.count(t)) throw ThfSyntaxError("undeclared symbol " + t);
    } else {
      throw ThfSyntaxError("unexpected token '" + t + "'");
    }
  }

  const std::vector<std::string>* toks_ = nullptr;
  std::size_t pos_ = 0;
  std::vector<std::string> scope_;
};

}  // namespace cjhol::testing

#endif  // CJHOL_TESTS_SUPPORT_THF_TOKENS_HPP_
