#pragma once

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hosmt/term_ops.hpp"

namespace hosmt {

struct FixEntry {
  Var var;
};

struct MapEntry {
  std::vector<Binding> pairs;  // simultaneous
};

using ContextEntry = std::variant<FixEntry, MapEntry>;

/// Γ ::= ∅ | Γ, x | Γ, x̄ ↦ t̄. Immutable persistent list; extending shares the
/// prefix. The induced substitution is computed once per node.
class Context {
 public:
  Context() = default;

  bool empty() const { return !node_; }
  std::size_t size() const;

  Context fix(const Var& v) const;
  /// Throws InvariantError for repeated variables or sort mismatches.
  Context map(std::vector<Binding> pairs) const;

  /// Entries outermost first.
  std::vector<ContextEntry> entries() const;
  const ContextEntry& last() const;
  Context parent() const;

  /// subst(Γ).
  const Substitution& subst() const;

  /// Same entries: identical fixed variables, identical mapped variables and
  /// α-equal images.
  friend bool operator==(const Context& a, const Context& b);

  struct Node;

 private:
  explicit Context(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

Context context_of(const std::vector<ContextEntry>& entries);

const Substitution& context_subst(const Context& ctx);

/// Γ(t): capture-avoiding application of subst(Γ).
Term apply_context(const Context& ctx, const Term& t);

/// Appends a freshly created fixed variable.
std::pair<Context, Var> extend_fix(const Context& ctx, const std::string& hint, const Sort& sort);
Context extend_map(const Context& ctx, std::vector<Binding> pairs);

}  // namespace hosmt
