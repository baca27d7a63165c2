#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hosmt/sexpr.hpp"

namespace hosmt {

/// Sort as written. Arrow sorts keep their n-ary surface shape; currying
/// happens when sorts are resolved against a signature.
struct SurfaceSort {
  enum class Kind { identifier, parametric, arrow };

  Kind kind = Kind::identifier;
  std::string name;                // identifier / parametric head
  std::vector<SurfaceSort> args;   // parametric args; arrow: domains then result
  SourcePos pos;

  static SurfaceSort identifier(std::string name, SourcePos pos = {});
  static SurfaceSort parametric(std::string name, std::vector<SurfaceSort> args,
                                SourcePos pos = {});
  static SurfaceSort arrow(std::vector<SurfaceSort> domains, SurfaceSort result,
                           SourcePos pos = {});

  // arrow only
  std::span<const SurfaceSort> domains() const { return {args.data(), args.size() - 1}; }
  const SurfaceSort& result() const { return args.back(); }

  /// Structural equality; positions are ignored.
  friend bool operator==(const SurfaceSort& a, const SurfaceSort& b);
};

struct SortedVar {
  std::string name;
  SurfaceSort sort;
  SourcePos pos;
  friend bool operator==(const SortedVar& a, const SortedVar& b) {
    return a.name == b.name && a.sort == b.sort;
  }
};

struct Attribute {
  std::string keyword;          // with the leading ':'
  std::optional<SExpr> value;
  friend bool operator==(const Attribute&, const Attribute&) = default;
};

struct MatchPattern {
  std::string constructor;
  std::vector<std::string> variables;  // empty for a nullary constructor
  friend bool operator==(const MatchPattern&, const MatchPattern&) = default;
};

struct VarBinding;
struct MatchCase;

struct SurfaceTerm {
  enum class Kind {
    constant,    // spec constant: numeral, decimal, string, #x, #b
    identifier,  // optionally (as name sort)
    apply,       // children[0] applied to children[1..]
    lambda,
    forall,
    exists,
    choice,
    let,
    match,
    annotated,
  };

  Kind kind = Kind::identifier;
  SourcePos pos;

  TokenKind literal_kind = TokenKind::numeral;  // constant
  std::string text;                             // constant literal / identifier name
  std::optional<SurfaceSort> ascription;        // identifier

  std::vector<SurfaceTerm> children;  // apply: head + args; binders/let/match/annotated: [body]
  std::vector<SortedVar> binders;     // lambda/forall/exists/choice
  std::vector<VarBinding> bindings;   // let
  std::vector<MatchCase> cases;       // match
  std::vector<Attribute> attributes;  // annotated

  static SurfaceTerm constant(TokenKind kind, std::string text, SourcePos pos = {});
  static SurfaceTerm identifier(std::string name, SourcePos pos = {});
  static SurfaceTerm qualified(std::string name, SurfaceSort sort, SourcePos pos = {});
  static SurfaceTerm apply(SurfaceTerm head, std::vector<SurfaceTerm> args, SourcePos pos = {});
  static SurfaceTerm binder(Kind kind, std::vector<SortedVar> vars, SurfaceTerm body,
                            SourcePos pos = {});
  static SurfaceTerm let(std::vector<VarBinding> bindings, SurfaceTerm body, SourcePos pos = {});

  const SurfaceTerm& head() const { return children.front(); }
  const SurfaceTerm& body() const { return children.front(); }
  std::span<const SurfaceTerm> args() const { return {children.data() + 1, children.size() - 1}; }

  friend bool operator==(const SurfaceTerm& a, const SurfaceTerm& b);
};

struct VarBinding {
  std::string name;
  SurfaceTerm value;
  SourcePos pos;
  friend bool operator==(const VarBinding& a, const VarBinding& b) {
    return a.name == b.name && a.value == b.value;
  }
};

struct MatchCase {
  MatchPattern pattern;
  SurfaceTerm body;
  friend bool operator==(const MatchCase& a, const MatchCase& b) {
    return a.pattern == b.pattern && a.body == b.body;
  }
};

struct Command {
  enum class Kind { set_logic, declare_sort, declare_fun, define_fun, assert_, exit, unknown };

  Kind kind = Kind::unknown;
  SourcePos pos;
  std::string name;                     // logic / sort / function name
  unsigned arity = 0;                   // declare-sort
  std::vector<SurfaceSort> arg_sorts;   // declare-fun
  std::vector<SortedVar> params;        // define-fun
  std::optional<SurfaceSort> result;    // declare-fun / define-fun
  std::optional<SurfaceTerm> term;      // assert / define-fun body
  SExpr raw;                            // unknown commands, verbatim
};

}  // namespace hosmt
