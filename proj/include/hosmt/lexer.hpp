#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hosmt/diagnostics.hpp"

namespace hosmt {

enum class TokenKind {
  lparen,
  rparen,
  symbol,   // simple or |quoted| symbol; `text` holds the unquoted name
  keyword,  // `:name`, text includes the colon
  numeral,
  decimal,
  hexadecimal,
  binary,
  string,  // text is the raw literal including quotes
};

struct Token {
  TokenKind kind;
  std::string text;
  SourcePos pos;
  bool quoted = false;  // symbol was written as |...|

  friend bool operator==(const Token&, const Token&) = default;
};

/// Splits SMT-LIB text into tokens. `;` comments are dropped. Throws
/// Error(lexical) on unterminated strings or quoted symbols and on characters
/// that cannot start a token.
std::vector<Token> tokenize(std::string_view input);

/// True if `name` can be printed without `|...|` quoting.
bool is_simple_symbol(std::string_view name);

/// `name` or `|name|` as needed. Reserved words are always quoted.
std::string quote_symbol(std::string_view name);

bool is_reserved_word(std::string_view name);

}  // namespace hosmt
