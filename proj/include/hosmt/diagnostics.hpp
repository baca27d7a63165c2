#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hosmt {

/// 1-based line/column into the source text. `line == 0` means "no position".
struct SourcePos {
  std::size_t line = 0;
  std::size_t column = 0;

  bool known() const { return line != 0; }
  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

enum class ErrorKind {
  lexical,
  parse,
  sort,
  unsupported,
  certificate,
  io,
};

/// Every user-facing failure (bad input text, ill-sorted terms, malformed
/// certificates) is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, SourcePos pos, const std::string& message)
      : std::runtime_error(message), kind_(kind), pos_(pos) {}

  ErrorKind kind() const { return kind_; }
  SourcePos pos() const { return pos_; }
  std::string_view message() const { return what(); }

 private:
  ErrorKind kind_;
  SourcePos pos_;
};

/// Broken internal invariant (ill-sorted term construction, non sort-preserving
/// substitution). Signals a bug or a caller violating a precondition.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// β-normalization exceeded its step budget.
class DivergenceError : public std::runtime_error {
 public:
  explicit DivergenceError(std::size_t steps)
      : std::runtime_error("beta reduction exceeded " + std::to_string(steps) +
                           " steps"),
        steps_(steps) {}

  std::size_t steps() const { return steps_; }

 private:
  std::size_t steps_;
};

/// `file:line:col: error: message`
inline std::string format_diagnostic(std::string_view file, const Error& e) {
  std::string out(file);
  if (e.pos().known()) {
    out += ':' + std::to_string(e.pos().line) + ':' +
           std::to_string(e.pos().column);
  }
  out += ": error: ";
  out += e.message();
  return out;
}

}  // namespace hosmt
