#include "hosmt/term_ops.hpp"

#include <algorithm>

#include "hosmt/diagnostics.hpp"

namespace hosmt {

Substitution::Substitution(std::initializer_list<Binding> pairs) {
  for (const auto& [v, t] : pairs) set(v, t);
}

void Substitution::set(const Var& v, const Term& image) {
  if (!(v.sort == image.sort())) {
    throw InvariantError("substitution for " + v.name + " has sort " + to_string(image.sort()) +
                         ", expected " + to_string(v.sort));
  }
  map_.insert_or_assign(v.id, Binding{v, image});
}

const Term* Substitution::find(VarId id) const {
  auto it = map_.find(id);
  return it == map_.end() ? nullptr : &it->second.second;
}

std::set<VarId> free_vars(const Term& t) {
  auto ids = t.free_var_ids();
  return {ids.begin(), ids.end()};
}

namespace {

void collect_free(const Term& t, std::vector<VarId>& bound, std::vector<Var>& out) {
  switch (t.kind()) {
    case TermKind::var: {
      const Var& v = t.var();
      if (std::find(bound.begin(), bound.end(), v.id) != bound.end()) return;
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
      return;
    }
    case TermKind::constant:
      return;
    case TermKind::app:
      collect_free(t.fun(), bound, out);
      collect_free(t.arg(), bound, out);
      return;
    case TermKind::lambda:
    case TermKind::forall:
    case TermKind::exists:
    case TermKind::choice:
      bound.push_back(t.var().id);
      collect_free(t.body(), bound, out);
      bound.pop_back();
      return;
    case TermKind::let:
      for (const auto& b : t.bindings()) collect_free(b.second, bound, out);
      for (const auto& b : t.bindings()) bound.push_back(b.first.id);
      collect_free(t.body(), bound, out);
      bound.resize(bound.size() - t.bindings().size());
      return;
  }
}

using AlphaEnv = std::vector<std::pair<VarId, VarId>>;

bool alpha_rec(const Term& a, const Term& b, AlphaEnv& env) {
  if (a.kind() != b.kind() || !(a.sort() == b.sort())) return false;
  if (env.empty() && a.same_node(b)) return true;
  switch (a.kind()) {
    case TermKind::var: {
      const VarId x = a.var().id;
      const VarId y = b.var().id;
      for (auto it = env.rbegin(); it != env.rend(); ++it) {
        if (it->first == x || it->second == y) return it->first == x && it->second == y;
      }
      return x == y;
    }
    case TermKind::constant:
      return a.name() == b.name();
    case TermKind::app:
      return alpha_rec(a.fun(), b.fun(), env) && alpha_rec(a.arg(), b.arg(), env);
    case TermKind::lambda:
    case TermKind::forall:
    case TermKind::exists:
    case TermKind::choice: {
      if (!(a.var().sort == b.var().sort)) return false;
      env.emplace_back(a.var().id, b.var().id);
      const bool eq = alpha_rec(a.body(), b.body(), env);
      env.pop_back();
      return eq;
    }
    case TermKind::let: {
      auto ab = a.bindings();
      auto bb = b.bindings();
      if (ab.size() != bb.size()) return false;
      for (std::size_t i = 0; i < ab.size(); ++i) {
        if (!alpha_rec(ab[i].second, bb[i].second, env)) return false;
      }
      for (std::size_t i = 0; i < ab.size(); ++i) env.emplace_back(ab[i].first.id, bb[i].first.id);
      const bool eq = alpha_rec(a.body(), b.body(), env);
      env.resize(env.size() - ab.size());
      return eq;
    }
  }
  return false;
}

// The part of sigma that can affect t.
Substitution restrict_to(const Substitution& sigma, const Term& t) {
  Substitution out;
  auto fv = t.free_var_ids();
  if (fv.size() < sigma.size()) {
    for (VarId id : fv) {
      auto it = sigma.entries().find(id);
      if (it != sigma.entries().end()) out.set(it->second.first, it->second.second);
    }
  } else {
    for (const auto& [id, b] : sigma.entries()) {
      if (t.has_free(id)) out.set(b.first, b.second);
    }
  }
  return out;
}

bool range_mentions(const Substitution& sigma, VarId id) {
  for (const auto& [key, b] : sigma.entries()) {
    if (b.second.has_free(id)) return true;
  }
  return false;
}

Term subst_rec(const Term& t, const Substitution& outer) {
  Substitution sigma = restrict_to(outer, t);
  if (sigma.empty()) return t;
  switch (t.kind()) {
    case TermKind::var:
      return *sigma.find(t.var().id);
    case TermKind::constant:
      return t;
    case TermKind::app:
      return mk_app(subst_rec(t.fun(), sigma), subst_rec(t.arg(), sigma));
    case TermKind::lambda:
    case TermKind::forall:
    case TermKind::exists:
    case TermKind::choice: {
      Var x = t.var();
      if (range_mentions(sigma, x.id)) {
        Var renamed = fresh_var(x.name, x.sort);
        sigma.set(x, mk_var(renamed));
        x = renamed;
      }
      return mk_binder(t.kind(), x, subst_rec(t.body(), sigma));
    }
    case TermKind::let: {
      std::vector<Binding> bindings;
      Substitution body_sigma = restrict_to(sigma, t.body());
      for (const auto& b : t.bindings()) body_sigma.erase(b.first.id);
      for (const auto& [x, value] : t.bindings()) {
        Var bound = x;
        if (range_mentions(body_sigma, x.id)) {
          bound = fresh_var(x.name, x.sort);
        }
        bindings.emplace_back(bound, subst_rec(value, sigma));
      }
      for (std::size_t i = 0; i < bindings.size(); ++i) {
        const Var& orig = t.bindings()[i].first;
        if (bindings[i].first.id != orig.id) body_sigma.set(orig, mk_var(bindings[i].first));
      }
      return mk_let(std::move(bindings), subst_rec(t.body(), body_sigma));
    }
  }
  return t;
}

std::optional<Term> step_rec(const Term& t) {
  switch (t.kind()) {
    case TermKind::var:
    case TermKind::constant:
      return std::nullopt;
    case TermKind::app: {
      if (t.fun().is_lambda()) {
        const Term& lam = t.fun();
        return substitute(lam.body(), Substitution{{lam.var(), t.arg()}});
      }
      if (auto f = step_rec(t.fun())) return mk_app(*f, t.arg());
      if (auto a = step_rec(t.arg())) return mk_app(t.fun(), *a);
      return std::nullopt;
    }
    case TermKind::lambda:
    case TermKind::forall:
    case TermKind::exists:
    case TermKind::choice:
      if (auto b = step_rec(t.body())) return mk_binder(t.kind(), t.var(), *b);
      return std::nullopt;
    case TermKind::let: {
      auto bs = t.bindings();
      for (std::size_t i = 0; i < bs.size(); ++i) {
        if (auto v = step_rec(bs[i].second)) {
          std::vector<Binding> copy(bs.begin(), bs.end());
          copy[i].second = *v;
          return mk_let(std::move(copy), t.body());
        }
      }
      if (auto b = step_rec(t.body())) {
        return mk_let(std::vector<Binding>(bs.begin(), bs.end()), *b);
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<Var> free_var_list(const Term& t) {
  std::vector<VarId> bound;
  std::vector<Var> out;
  collect_free(t, bound, out);
  return out;
}

bool alpha_eq(const Term& s, const Term& t) {
  AlphaEnv env;
  return alpha_rec(s, t, env);
}

Term substitute(const Term& t, const Substitution& sigma) {
  if (sigma.empty()) return t;
  return subst_rec(t, sigma);
}

std::optional<Term> beta_step(const Term& t) { return step_rec(t); }

bool is_beta_normal(const Term& t) {
  switch (t.kind()) {
    case TermKind::var:
    case TermKind::constant:
      return true;
    case TermKind::app:
      return !t.fun().is_lambda() && is_beta_normal(t.fun()) && is_beta_normal(t.arg());
    case TermKind::lambda:
    case TermKind::forall:
    case TermKind::exists:
    case TermKind::choice:
      return is_beta_normal(t.body());
    case TermKind::let:
      for (const auto& b : t.bindings()) {
        if (!is_beta_normal(b.second)) return false;
      }
      return is_beta_normal(t.body());
  }
  return true;
}

Term beta_normal_form(const Term& t, std::size_t max_steps) {
  Term cur = t;
  for (std::size_t n = 0;; ++n) {
    auto next = beta_step(cur);
    if (!next) return cur;
    if (n == max_steps) throw DivergenceError(max_steps);
    cur = std::move(*next);
  }
}

Term expand_lets(const Term& t) {
  switch (t.kind()) {
    case TermKind::var:
    case TermKind::constant:
      return t;
    case TermKind::app:
      return mk_app(expand_lets(t.fun()), expand_lets(t.arg()));
    case TermKind::lambda:
    case TermKind::forall:
    case TermKind::exists:
    case TermKind::choice:
      return mk_binder(t.kind(), t.var(), expand_lets(t.body()));
    case TermKind::let: {
      Substitution sigma;
      for (const auto& [x, value] : t.bindings()) sigma.set(x, expand_lets(value));
      return substitute(expand_lets(t.body()), sigma);
    }
  }
  return t;
}

}  // namespace hosmt
