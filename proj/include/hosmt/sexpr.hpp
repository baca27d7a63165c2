#pragma once

#include <span>
#include <string>
#include <vector>

#include "hosmt/lexer.hpp"

namespace hosmt {

/// Generic S-expression with source positions. Atoms reuse the token kinds.
struct SExpr {
  bool is_list = false;
  Token atom{TokenKind::symbol, "", {}};
  std::vector<SExpr> items;
  SourcePos pos;

  bool is_symbol() const { return !is_list && atom.kind == TokenKind::symbol; }
  bool is_symbol(std::string_view s) const {
    return is_symbol() && !atom.quoted && atom.text == s;
  }
  bool is_keyword() const { return !is_list && atom.kind == TokenKind::keyword; }

  /// Structural equality; positions are ignored.
  friend bool operator==(const SExpr& a, const SExpr& b);
};

/// Groups a token stream into top-level S-expressions. Throws Error(parse) on
/// unbalanced parentheses.
std::vector<SExpr> read_sexprs(std::span<const Token> tokens);

std::string print_sexpr(const SExpr& e);

}  // namespace hosmt
