#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hosmt/surface.hpp"
#include "hosmt/term.hpp"

namespace hosmt {

/// Declared sorts (with arities) and function symbols. Constructed with the
/// built-in Bool/Int/Real sorts and the core and arithmetic operators.
class Signature {
 public:
  Signature();

  void declare_sort(const std::string& name, unsigned arity, SourcePos pos = {});
  /// Throws Error(sort) if `name` is already declared.
  void declare_fun(const std::string& name, Sort sort, SourcePos pos = {});

  const Sort* lookup(const std::string& name) const;
  std::optional<unsigned> sort_arity(const std::string& name) const;
  bool is_builtin(const std::string& name) const;

  /// Records the logic; logics without integer or real arithmetic drop the
  /// arithmetic operators.
  void set_logic(const std::string& logic);
  const std::optional<std::string>& logic() const { return logic_; }

  /// User-declared symbols and sorts in declaration order.
  const std::vector<std::string>& declared() const { return declared_; }
  const std::vector<std::pair<std::string, unsigned>>& declared_sorts() const { return declared_sorts_; }

 private:
  std::map<std::string, unsigned> sorts_;
  std::map<std::string, Sort> funs_;
  std::vector<std::string> declared_;
  std::vector<std::pair<std::string, unsigned>> declared_sorts_;
  std::optional<std::string> logic_;
};

/// Resolves a surface sort against the signature and curries arrows.
Sort resolve_sort(const Signature& sig, const SurfaceSort& s);

/// The curried sort of `(declare-fun name (args) result)`.
Sort normalize_decl(const Signature& sig, std::span<const SurfaceSort> arg_sorts,
                    const SurfaceSort& result);

/// Signature plus a stack of locally bound variables. Innermost bindings
/// shadow outer ones and signature symbols.
class TypingEnv {
 public:
  using Lookup = std::function<std::optional<Term>(const std::string& name)>;
  using BinderFactory = std::function<Var(const std::string& name, const Sort& sort)>;

  explicit TypingEnv(const Signature& sig) : sig_(&sig) {}

  const Signature& signature() const { return *sig_; }

  void push(const Var& v) { locals_.push_back(v); }
  void pop(std::size_t n = 1) { locals_.resize(locals_.size() - n); }
  const Var* lookup_local(const std::string& name) const;

  /// Creates binder variables; defaults to fresh_var.
  BinderFactory make_binder;
  /// Consulted after local binders but before the signature.
  Lookup before_signature;
  /// Consulted when neither locals nor the signature know a name.
  Lookup after_signature;

 private:
  const Signature* sig_;
  std::vector<Var> locals_;
};

/// Elaborates a surface term to a core term (whose sort is the inferred sort).
/// Throws Error(sort) for unbound symbols and sort clashes and
/// Error(unsupported) for `match` and bit-vector or string literals.
Term infer_sort(TypingEnv& env, const SurfaceTerm& t);

struct CheckedScript {
  Signature signature;
  std::vector<Term> assertions;
  std::vector<std::size_t> assert_commands;  // index of each assertion's command
  std::map<std::string, Term> definitions;   // define-fun bodies as λ-terms
};

/// Processes declarations in order and elaborates every assertion, which must
/// be Bool.
CheckedScript check_script(std::span<const Command> cmds);

}  // namespace hosmt
