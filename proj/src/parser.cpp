// Copyright 2026 The bilogic Authors
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

#include <algorithm>
#include <array>
#include <map>

#include "bilogic/syntax.hpp"

namespace bilogic {

namespace {

enum class Tok {
  Ident,
  LParen,
  RParen,
  Comma,
  Dot,
  Neg,        // ~
  Delta,      // #
  Baaz,       // @
  Bang,       // !
  Circ,       // %
  StrongAnd,  // &&
  And,        // &
  StrongOr,   // ||
  Or,         // |
  Implies,    // =>
  Forall,
  Exists,
  Pi,
  Sigma,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int column;
};

struct Glyph {
  std::string_view utf8;
  Tok kind;
};

constexpr std::array<Glyph, 14> kGlyphs = {{
    {"∼", Tok::Neg},
    {"▲", Tok::Delta},
    {"Δ", Tok::Baaz},
    {"¬", Tok::Bang},
    {"∘", Tok::Circ},
    {"⊗", Tok::StrongAnd},
    {"∧", Tok::And},
    {"⊕", Tok::StrongOr},
    {"∨", Tok::Or},
    {"→", Tok::Implies},
    {"∀", Tok::Forall},
    {"∃", Tok::Exists},
    {"Π", Tok::Pi},
    {"Σ", Tok::Sigma},
}};

bool ident_start(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9') || c == '\''; }

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  int column = 1;
  auto push = [&](Tok kind, std::size_t bytes, std::string lexeme) {
    out.push_back({kind, std::move(lexeme), column});
    i += bytes;
    ++column;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++i;
      ++column;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      std::string word(text.substr(i, j - i));
      if (word == "E" && j < text.size() && text[j] == '!') {
        word = "E!";
        ++j;
      }
      Tok kind = Tok::Ident;
      if (word == "forall") kind = Tok::Forall;
      else if (word == "exists") kind = Tok::Exists;
      else if (word == "Pi") kind = Tok::Pi;
      else if (word == "Sigma") kind = Tok::Sigma;
      out.push_back({kind, word, column});
      column += static_cast<int>(j - i);
      i = j;
      continue;
    }
    auto two = text.substr(i, 2);
    if (two == "&&") { push(Tok::StrongAnd, 2, "&&"); ++column; continue; }
    if (two == "||") { push(Tok::StrongOr, 2, "||"); ++column; continue; }
    if (two == "=>") { push(Tok::Implies, 2, "=>"); ++column; continue; }
    switch (c) {
      case '(': push(Tok::LParen, 1, "("); continue;
      case ')': push(Tok::RParen, 1, ")"); continue;
      case ',': push(Tok::Comma, 1, ","); continue;
      case '.': push(Tok::Dot, 1, "."); continue;
      case '~': push(Tok::Neg, 1, "~"); continue;
      case '#': push(Tok::Delta, 1, "#"); continue;
      case '@': push(Tok::Baaz, 1, "@"); continue;
      case '!': push(Tok::Bang, 1, "!"); continue;
      case '%': push(Tok::Circ, 1, "%"); continue;
      case '&': push(Tok::And, 1, "&"); continue;
      case '|': push(Tok::Or, 1, "|"); continue;
      default: break;
    }
    bool matched = false;
    for (const auto& g : kGlyphs) {
      if (text.substr(i, g.utf8.size()) == g.utf8) {
        push(g.kind, g.utf8.size(), std::string(g.utf8));
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw ParseError("unexpected character '" + std::string(1, c) + "'", column);
    }
  }
  out.push_back({Tok::End, "", column});
  return out;
}

std::string describe(const Token& t) {
  return t.kind == Tok::End ? std::string("end of input") : "'" + t.text + "'";
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const Signature& sig, const ParseOptions& options)
      : tokens_(std::move(tokens)), sig_(sig), options_(options) {}

  Formula run() {
    Formula f = parse_implies();
    if (peek().kind == Tok::RParen) fail("unbalanced ')'");
    if (peek().kind != Tok::End) fail("unexpected " + describe(peek()));
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, peek().column);
  }
  [[noreturn]] static void fail_at(const Token& t, const std::string& message) {
    throw ParseError(message, t.column);
  }

  void check_fuzzy(const Token& t, std::string_view what) const {
    if (options_.logic == Logic::FourValued) {
      fail_at(t, "'" + t.text + "' (" + std::string(what) +
                     ") is only available in fuzzy mode");
    }
  }

  Formula parse_implies() {
    Formula lhs = parse_weak_or();
    if (accept(Tok::Implies)) {
      return Formula::binary(NodeKind::Implies, std::move(lhs), parse_implies());
    }
    return lhs;
  }

  Formula parse_weak_or() {
    Formula f = parse_strong_or();
    while (accept(Tok::Or)) f = Formula::binary(NodeKind::WeakOr, std::move(f), parse_strong_or());
    return f;
  }

  Formula parse_strong_or() {
    Formula f = parse_weak_and();
    while (peek().kind == Tok::StrongOr) {
      check_fuzzy(next(), "strong disjunction");
      f = Formula::binary(NodeKind::StrongOr, std::move(f), parse_weak_and());
    }
    return f;
  }

  Formula parse_weak_and() {
    Formula f = parse_strong_and();
    while (accept(Tok::And)) f = Formula::binary(NodeKind::WeakAnd, std::move(f), parse_strong_and());
    return f;
  }

  Formula parse_strong_and() {
    Formula f = parse_unary();
    while (peek().kind == Tok::StrongAnd) {
      check_fuzzy(next(), "strong conjunction");
      f = Formula::binary(NodeKind::StrongAnd, std::move(f), parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Neg: next(); return Formula::unary(NodeKind::Neg, parse_unary());
      case Tok::Delta: next(); return Formula::unary(NodeKind::BdDelta, parse_unary());
      case Tok::Bang: next(); return Formula::unary(NodeKind::BivalentNeg, parse_unary());
      case Tok::Circ: next(); return Formula::unary(NodeKind::Circ, parse_unary());
      case Tok::Baaz:
        check_fuzzy(next(), "Baaz delta");
        return Formula::unary(NodeKind::BaazDelta, parse_unary());
      case Tok::Forall: return parse_quantifier(NodeKind::InnerForall);
      case Tok::Exists: return parse_quantifier(NodeKind::InnerExists);
      case Tok::Pi: return parse_quantifier(NodeKind::OuterForall);
      case Tok::Sigma: return parse_quantifier(NodeKind::OuterExists);
      case Tok::LParen: {
        next();
        Formula f = parse_implies();
        if (!accept(Tok::RParen)) fail("expected ')' but found " + describe(peek()));
        return f;
      }
      case Tok::Ident: return parse_atom();
      case Tok::RParen: fail("unbalanced ')'");
      default: fail("expected a formula but found " + describe(t));
    }
  }

  Formula parse_quantifier(NodeKind kind) {
    next();
    if (peek().kind != Tok::Ident || peek().text == kExistence) {
      fail("expected a variable name but found " + describe(peek()));
    }
    std::string var = next().text;
    if (!accept(Tok::Dot)) fail("expected '.' after quantified variable");
    bound_.push_back(var);
    Formula body = parse_implies();
    bound_.pop_back();
    return Formula::quantifier(kind, std::move(var), std::move(body));
  }

  Formula parse_atom() {
    const Token name = next();
    std::vector<Term> terms;
    if (accept(Tok::LParen)) {
      if (!accept(Tok::RParen)) {
        do {
          terms.push_back(parse_term());
        } while (accept(Tok::Comma));
        if (!accept(Tok::RParen)) fail("expected ')' or ',' but found " + describe(peek()));
      }
    }
    check_predicate(name, static_cast<int>(terms.size()));
    return Formula::atom(name.text, std::move(terms));
  }

  Term parse_term() {
    const Token& t = peek();
    if (t.kind != Tok::Ident || t.text == kExistence) {
      fail("expected a term but found " + describe(t));
    }
    next();
    const std::string& name = t.text;
    if (std::find(bound_.begin(), bound_.end(), name) != bound_.end()) {
      return Term::variable(name);
    }
    if (sig_.has_constant(name)) return Term::constant(name);
    if (sig_.has_predicate(name) || local_arity_.contains(name)) {
      fail_at(t, "'" + name + "' is a predicate and cannot be used as a term");
    }
    if (options_.free_variables.contains(name) || looks_like_variable(name)) {
      return Term::variable(name);
    }
    if (options_.strict) fail_at(t, "unknown constant '" + name + "'");
    local_constants_.insert(name);
    return Term::constant(name);
  }

  void check_predicate(const Token& t, int arity) {
    const std::string& name = t.text;
    if (sig_.has_constant(name) || local_constants_.contains(name)) {
      fail_at(t, "'" + name + "' is a constant and cannot be used as a predicate");
    }
    std::optional<int> declared = sig_.arity(name);
    if (!declared && name == kExistence && options_.free_logic) declared = 1;
    if (declared) {
      if (*declared != arity) {
        fail_at(t, "arity mismatch: '" + name + "' has arity " + std::to_string(*declared) +
                       " but is applied to " + std::to_string(arity) + " argument(s)");
      }
      return;
    }
    if (options_.strict) fail_at(t, "unknown predicate '" + name + "'");
    auto [it, inserted] = local_arity_.emplace(name, arity);
    if (!inserted && it->second != arity) {
      fail_at(t, "arity mismatch: '" + name + "' used with " + std::to_string(it->second) +
                     " and " + std::to_string(arity) + " argument(s)");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Signature& sig_;
  const ParseOptions& options_;
  std::vector<std::string> bound_;
  std::map<std::string, int, std::less<>> local_arity_;
  std::set<std::string, std::less<>> local_constants_;
};

}  // namespace

bool looks_like_variable(std::string_view name) noexcept {
  if (name.empty() || name[0] < 'u' || name[0] > 'z') return false;
  return std::all_of(name.begin() + 1, name.end(),
                     [](char c) { return (c >= '0' && c <= '9') || c == '_'; });
}

Formula parse(std::string_view text, const Signature& signature, const ParseOptions& options) {
  return Parser(tokenize(text), signature, options).run();
}

Formula parse(std::string_view text, const ParseOptions& options) {
  static const Signature empty;
  return parse(text, empty, options);
}

}  // namespace bilogic
