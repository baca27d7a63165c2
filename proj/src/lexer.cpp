#include "hosmt/lexer.hpp"

#include <array>
#include <cctype>

namespace hosmt {
namespace {

bool is_symbol_char(char c) {
  if (std::isalnum(static_cast<unsigned char>(c))) return true;
  switch (c) {
    case '~': case '!': case '@': case '$': case '%': case '^': case '&':
    case '*': case '_': case '-': case '+': case '=': case '<': case '>':
    case '.': case '?': case '/':
      return true;
    default:
      return false;
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view in) : in_(in) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (skip_blanks()) {
      const SourcePos start = pos();
      const char c = peek();
      if (c == '(') {
        advance();
        out.push_back({TokenKind::lparen, "(", start});
      } else if (c == ')') {
        advance();
        out.push_back({TokenKind::rparen, ")", start});
      } else if (c == '"') {
        out.push_back({TokenKind::string, lex_string(start), start});
      } else if (c == '|') {
        out.push_back({TokenKind::symbol, lex_quoted(start), start, true});
      } else if (c == ':') {
        advance();
        std::string text = ":" + take_while(is_symbol_char);
        if (text.size() == 1) {
          throw Error(ErrorKind::lexical, start, "empty keyword");
        }
        out.push_back({TokenKind::keyword, std::move(text), start});
      } else if (c == '#') {
        out.push_back(lex_hash(start));
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        out.push_back(lex_number(start));
      } else if (is_symbol_char(c)) {
        out.push_back({TokenKind::symbol, take_while(is_symbol_char), start});
      } else {
        throw Error(ErrorKind::lexical, start,
                    std::string("unexpected character '") + c + "'");
      }
    }
    return out;
  }

 private:
  bool at_end() const { return i_ >= in_.size(); }
  char peek() const { return in_[i_]; }
  SourcePos pos() const { return {line_, col_}; }

  void advance() {
    if (in_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  // Returns false at end of input.
  bool skip_blanks() {
    while (!at_end()) {
      const char c = peek();
      if (c == ';') {
        while (!at_end() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return true;
      }
    }
    return false;
  }

  template <typename Pred>
  std::string take_while(Pred pred) {
    std::string s;
    while (!at_end() && pred(peek())) {
      s += peek();
      advance();
    }
    return s;
  }

  std::string lex_string(SourcePos start) {
    std::string s = "\"";
    advance();
    for (;;) {
      if (at_end()) throw Error(ErrorKind::lexical, start, "unterminated string literal");
      const char c = peek();
      advance();
      s += c;
      if (c == '"') {
        // "" is an escaped quote inside a literal
        if (!at_end() && peek() == '"') {
          s += '"';
          advance();
          continue;
        }
        return s;
      }
    }
  }

  std::string lex_quoted(SourcePos start) {
    std::string s;
    advance();
    for (;;) {
      if (at_end()) throw Error(ErrorKind::lexical, start, "unterminated quoted symbol");
      const char c = peek();
      advance();
      if (c == '|') return s;
      if (c == '\\') {
        throw Error(ErrorKind::lexical, start, "backslash inside quoted symbol");
      }
      s += c;
    }
  }

  Token lex_hash(SourcePos start) {
    advance();
    if (at_end()) throw Error(ErrorKind::lexical, start, "dangling '#'");
    const char base = peek();
    advance();
    if (base == 'x') {
      std::string digits = take_while([](char c) { return std::isxdigit(static_cast<unsigned char>(c)) != 0; });
      if (digits.empty()) throw Error(ErrorKind::lexical, start, "empty hexadecimal literal");
      return {TokenKind::hexadecimal, "#x" + digits, start};
    }
    if (base == 'b') {
      std::string digits = take_while([](char c) { return c == '0' || c == '1'; });
      if (digits.empty()) throw Error(ErrorKind::lexical, start, "empty binary literal");
      return {TokenKind::binary, "#b" + digits, start};
    }
    throw Error(ErrorKind::lexical, start, "expected #x or #b literal");
  }

  Token lex_number(SourcePos start) {
    auto digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
    std::string text = take_while(digit);
    TokenKind kind = TokenKind::numeral;
    if (!at_end() && peek() == '.') {
      advance();
      std::string frac = take_while(digit);
      if (frac.empty()) throw Error(ErrorKind::lexical, start, "malformed decimal literal");
      text += "." + frac;
      kind = TokenKind::decimal;
    }
    if (!at_end() && is_symbol_char(peek())) {
      throw Error(ErrorKind::lexical, start, "symbol may not start with a digit");
    }
    return {kind, std::move(text), start};
  }

  std::string_view in_;
  std::size_t i_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

constexpr std::array<std::string_view, 12> kReserved = {
    "!", "_", "as", "exists", "forall", "lambda", "let", "match", "par",
    "choice", "NUMERAL", "DECIMAL",
};

}  // namespace

std::vector<Token> tokenize(std::string_view input) { return Lexer(input).run(); }

bool is_reserved_word(std::string_view name) {
  for (auto r : kReserved) {
    if (r == name) return true;
  }
  return false;
}

bool is_simple_symbol(std::string_view name) {
  if (name.empty()) return false;
  if (std::isdigit(static_cast<unsigned char>(name.front()))) return false;
  for (char c : name) {
    if (!is_symbol_char(c)) return false;
  }
  return true;
}

std::string quote_symbol(std::string_view name) {
  if (is_simple_symbol(name) && !is_reserved_word(name)) return std::string(name);
  return "|" + std::string(name) + "|";
}

}  // namespace hosmt
