#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hosmt/sort.hpp"

namespace hosmt {

using VarId = std::uint64_t;

/// A variable is identified by `id`; `name` is only a display hint.
struct Var {
  VarId id = 0;
  std::string name;
  Sort sort = Sort::boolean();

  friend bool operator==(const Var& a, const Var& b) { return a.id == b.id; }
  friend bool operator<(const Var& a, const Var& b) { return a.id < b.id; }
};

/// New variable with a globally unused id. Thread-safe.
Var fresh_var(std::string hint, Sort sort);

enum class TermKind { var, constant, app, lambda, forall, exists, choice, let };

bool is_binder(TermKind k);

class Term;
using Binding = std::pair<Var, Term>;

/// Immutable, structurally shared higher-order term. Construction checks
/// sorts; every Term in existence is well-sorted.
class Term {
 public:
  TermKind kind() const;
  const Sort& sort() const;

  const Var& var() const;                   // var, and the binder of lambda/forall/exists/choice
  const std::string& name() const;          // constant
  const Term& fun() const;                  // app
  const Term& arg() const;                  // app
  const Term& body() const;                 // binders, let
  std::span<const Binding> bindings() const;  // let

  bool is_var() const { return kind() == TermKind::var; }
  bool is_const() const { return kind() == TermKind::constant; }
  bool is_app() const { return kind() == TermKind::app; }
  bool is_lambda() const { return kind() == TermKind::lambda; }
  bool is_let() const { return kind() == TermKind::let; }
  bool is_binder() const { return hosmt::is_binder(kind()); }
  bool is_const(std::string_view n) const { return is_const() && name() == n; }

  /// Sorted, duplicate-free ids of the free variables.
  std::span<const VarId> free_var_ids() const;
  bool has_free(VarId id) const;
  std::size_t size() const;

  /// Same node in memory (cheap identity test, not equality).
  bool same_node(const Term& other) const { return node_ == other.node_; }

  struct Node;

 private:
  friend Term make_term(std::shared_ptr<const Node>);
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

Term mk_var(const Var& v);
Term mk_const(std::string name, Sort sort);
Term mk_app(const Term& fun, const Term& arg);
/// Left-nested: mk_app(f, {a, b}) = (f a) b.
Term mk_app(const Term& fun, std::span<const Term> args);
Term mk_binder(TermKind kind, const Var& v, const Term& body);
Term mk_lambda(const Var& v, const Term& body);
Term mk_forall(const Var& v, const Term& body);
Term mk_exists(const Var& v, const Term& body);
Term mk_choice(const Var& v, const Term& body);
/// Non-recursive, simultaneous let. Bound variables must be distinct.
Term mk_let(std::vector<Binding> bindings, const Term& body);

// Built-in symbols.
Term mk_eq(const Term& lhs, const Term& rhs);
Term mk_not(const Term& t);
Term mk_implies(const Term& a, const Term& b);
Term eq_symbol(const Sort& s);

/// If t is `(= a b)`, the pair (a, b).
std::optional<std::pair<Term, Term>> as_eq(const Term& t);
/// If t is `(=> a b)`, the pair (a, b).
std::optional<std::pair<Term, Term>> as_implies(const Term& t);

/// Head and arguments of a left-nested application spine.
std::pair<Term, std::vector<Term>> app_spine(const Term& t);

/// Exact structural equality, variable ids included. Use alpha_eq for
/// equality modulo bound-variable renaming.
bool identical(const Term& a, const Term& b);

}  // namespace hosmt
