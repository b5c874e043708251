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

#include <optional>

#include "cjhol/formula.hpp"

namespace cjhol {

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& msg)
    : std::runtime_error(msg), offset_(offset), expected_(std::move(expected)) {}

namespace {

enum class Tok {
  kIff, kImp, kOr, kAnd, kNot,
  kBox, kBoxA, kBoxP, kDia, kDiaA, kDiaP,
  kOa, kOp, kO, kTop, kBot,
  kLParen, kRParen, kSlash, kIdent, kEnd,
};

struct Token {
  Tok kind;
  std::size_t offset;
  std::string_view text;
};

const std::vector<std::string>& primary_starts() {
  static const std::vector<std::string> kStarts = {
      "atom", "T", "F", "(", "O(", "~", "[]", "[a]", "[p]", "<>", "<a>", "<p>", "Oa", "Op"};
  return kStarts;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) return {Tok::kEnd, start, {}};
    auto take = [&](Tok kind, std::size_t len) {
      pos_ += len;
      return Token{kind, start, text_.substr(start, len)};
    };
    const std::string_view rest = text_.substr(pos_);
    const char c = rest[0];
    if (rest.starts_with("<->")) return take(Tok::kIff, 3);
    if (rest.starts_with("->")) return take(Tok::kImp, 2);
    if (rest.starts_with("<>")) return take(Tok::kDia, 2);
    if (rest.starts_with("<a>")) return take(Tok::kDiaA, 3);
    if (rest.starts_with("<p>")) return take(Tok::kDiaP, 3);
    if (rest.starts_with("[]")) return take(Tok::kBox, 2);
    if (rest.starts_with("[a]")) return take(Tok::kBoxA, 3);
    if (rest.starts_with("[p]")) return take(Tok::kBoxP, 3);
    switch (c) {
      case '|': return take(Tok::kOr, 1);
      case '&': return take(Tok::kAnd, 1);
      case '~': return take(Tok::kNot, 1);
      case '(': return take(Tok::kLParen, 1);
      case ')': return take(Tok::kRParen, 1);
      case '/': return take(Tok::kSlash, 1);
      default: break;
    }
    if (is_word(c)) {
      std::size_t len = 1;
      while (len < rest.size() && is_word(rest[len])) ++len;
      const std::string_view word = rest.substr(0, len);
      if (c >= 'a' && c <= 'z') return take(Tok::kIdent, len);
      if (word == "T") return take(Tok::kTop, len);
      if (word == "F") return take(Tok::kBot, len);
      if (word == "O") return take(Tok::kO, len);
      if (word == "Oa") return take(Tok::kOa, len);
      if (word == "Op") return take(Tok::kOp, len);
      throw ParseError(start, primary_starts(),
                       "unknown keyword '" + std::string(word) + "' at offset " + std::to_string(start));
    }
    throw ParseError(start, {}, "unexpected character '" + std::string(1, c) + "' at offset " +
                                    std::to_string(start));
  }

 private:
  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
  static bool is_word(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { advance(); }

  Formula parse_all() {
    Formula f = parse_iff();
    if (cur_.kind != Tok::kEnd) fail({"<->", "->", "|", "&", "end of input"});
    if (used_constant_ && user_q0_) {
      throw ParseError(*user_q0_, {},
                       "atom 'q0' is reserved for desugaring T/F and cannot be mixed with them");
    }
    return f;
  }

 private:
  void advance() { cur_ = lexer_.next(); }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::string msg = "syntax error at offset " + std::to_string(cur_.offset) + ": found ";
    msg += cur_.kind == Tok::kEnd ? std::string("end of input") : "'" + std::string(cur_.text) + "'";
    msg += ", expected one of:";
    for (const auto& e : expected) msg += " " + e;
    throw ParseError(cur_.offset, std::move(expected), msg);
  }

  void expect(Tok kind, const char* spelling) {
    if (cur_.kind != kind) fail({spelling});
    advance();
  }

  Formula parse_iff() {
    Formula lhs = parse_imp();
    while (cur_.kind == Tok::kIff) {
      advance();
      Formula rhs = parse_imp();
      lhs = Formula::iff(lhs, rhs);
    }
    return lhs;
  }

  Formula parse_imp() {
    Formula lhs = parse_or();
    if (cur_.kind != Tok::kImp) return lhs;
    advance();
    return Formula::implies(lhs, parse_imp());
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    while (cur_.kind == Tok::kOr) {
      advance();
      Formula rhs = parse_and();
      lhs = Formula::disj(lhs, rhs);
    }
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    while (cur_.kind == Tok::kAnd) {
      advance();
      Formula rhs = parse_unary();
      lhs = Formula::conj(lhs, rhs);
    }
    return lhs;
  }

  Formula parse_unary() {
    const Tok kind = cur_.kind;
    switch (kind) {
      case Tok::kNot: advance(); return Formula::neg(parse_unary());
      case Tok::kBox: advance(); return Formula::box(parse_unary());
      case Tok::kBoxA: advance(); return Formula::box_a(parse_unary());
      case Tok::kBoxP: advance(); return Formula::box_p(parse_unary());
      case Tok::kDia: advance(); return Formula::diamond(parse_unary());
      case Tok::kDiaA: advance(); return Formula::diamond_a(parse_unary());
      case Tok::kDiaP: advance(); return Formula::diamond_p(parse_unary());
      case Tok::kOa: advance(); return Formula::ob_a(parse_unary());
      case Tok::kOp: advance(); return Formula::ob_p(parse_unary());
      default: return parse_primary();
    }
  }

  Formula parse_primary() {
    switch (cur_.kind) {
      case Tok::kIdent: {
        const Token tok = cur_;
        if (is_signature_name(tok.text)) {
          throw ParseError(tok.offset, {},
                           "atom '" + std::string(tok.text) + "' at offset " +
                               std::to_string(tok.offset) + " is reserved (av, pv, ob)");
        }
        if (tok.text == kReservedAtom && !user_q0_) user_q0_ = tok.offset;
        advance();
        return Formula::atom(std::string(tok.text));
      }
      case Tok::kTop:
        used_constant_ = true;
        advance();
        return Formula::top();
      case Tok::kBot:
        used_constant_ = true;
        advance();
        return Formula::bottom();
      case Tok::kLParen: {
        advance();
        Formula f = parse_iff();
        if (cur_.kind != Tok::kRParen) fail({")", "<->", "->", "|", "&"});
        advance();
        return f;
      }
      case Tok::kO: {
        advance();
        expect(Tok::kLParen, "(");
        Formula consequent = parse_iff();
        if (cur_.kind != Tok::kSlash) fail({"/", "<->", "->", "|", "&"});
        advance();
        Formula antecedent = parse_iff();
        if (cur_.kind != Tok::kRParen) fail({")", "<->", "->", "|", "&"});
        advance();
        return Formula::ob(antecedent, consequent);
      }
      default:
        fail(primary_starts());
    }
  }

  Lexer lexer_;
  Token cur_{Tok::kEnd, 0, {}};
  bool used_constant_ = false;
  std::optional<std::size_t> user_q0_;
};

}  // namespace

Formula parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace cjhol
