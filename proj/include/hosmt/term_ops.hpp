#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "hosmt/term.hpp"

namespace hosmt {

/// Finite, sort-preserving map from variables to terms, applied
/// simultaneously.
class Substitution {
 public:
  Substitution() = default;
  Substitution(std::initializer_list<Binding> pairs);

  /// Throws InvariantError if the image's sort differs from the variable's.
  void set(const Var& v, const Term& image);
  void erase(VarId id) { map_.erase(id); }

  const Term* find(VarId id) const;
  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }

  const std::map<VarId, Binding>& entries() const { return map_; }

 private:
  std::map<VarId, Binding> map_;  // id -> (variable, image)
};

std::set<VarId> free_vars(const Term& t);

/// Free variables with their sorts and names, in first-occurrence order.
std::vector<Var> free_var_list(const Term& t);

/// Equality up to consistent renaming of bound variables.
bool alpha_eq(const Term& s, const Term& t);

/// Capture-avoiding simultaneous substitution. Binders whose variable occurs
/// free in a relevant image are renamed to fresh variables.
Term substitute(const Term& t, const Substitution& sigma);

/// Contracts the leftmost-outermost β-redex; nullopt if t is β-normal.
/// `let` is not a redex here.
std::optional<Term> beta_step(const Term& t);

/// True if t contains no β-redex.
bool is_beta_normal(const Term& t);

constexpr std::size_t kDefaultMaxBetaSteps = 100000;

/// Iterates beta_step. Throws DivergenceError once `max_steps` contractions
/// have not reached a normal form.
Term beta_normal_form(const Term& t, std::size_t max_steps = kDefaultMaxBetaSteps);

/// Replaces every `let x̄ = v̄ in b` by b{x̄ ↦ v̄}.
Term expand_lets(const Term& t);

}  // namespace hosmt
