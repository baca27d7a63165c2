#pragma once

// Nameless reference implementation used to cross-check the named core:
// bound variables are de Bruijn indices, free variables keep their ids.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hosmt/term.hpp"
#include "hosmt/term_ops.hpp"

namespace hosmt::testing {

struct DB;
using DBPtr = std::shared_ptr<const DB>;

struct DB {
  enum class Kind { bound, free, constant, app, binder, let };
  Kind kind;
  std::size_t index = 0;      // bound
  VarId id = 0;               // free
  std::string name;           // constant
  TermKind binder = TermKind::lambda;
  std::string sort;           // binder / let variable sorts, constant sort
  std::vector<DBPtr> kids;    // app: fun, arg; binder: body; let: values..., body
};

inline DBPtr db_node(DB d) { return std::make_shared<const DB>(std::move(d)); }

inline bool db_equal(const DBPtr& a, const DBPtr& b) {
  if (a == b) return true;
  if (a->kind != b->kind || a->index != b->index || a->id != b->id || a->name != b->name ||
      a->binder != b->binder || a->sort != b->sort || a->kids.size() != b->kids.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a->kids.size(); ++i) {
    if (!db_equal(a->kids[i], b->kids[i])) return false;
  }
  return true;
}

inline DBPtr to_db(const Term& t, std::vector<VarId>& scope) {
  DB d{};
  switch (t.kind()) {
    case TermKind::var: {
      for (std::size_t i = scope.size(); i-- > 0;) {
        if (scope[i] == t.var().id) {
          d.kind = DB::Kind::bound;
          d.index = scope.size() - 1 - i;
          return db_node(d);
        }
      }
      d.kind = DB::Kind::free;
      d.id = t.var().id;
      return db_node(d);
    }
    case TermKind::constant:
      d.kind = DB::Kind::constant;
      d.name = t.name();
      d.sort = to_string(t.sort());
      return db_node(d);
    case TermKind::app:
      d.kind = DB::Kind::app;
      d.kids = {to_db(t.fun(), scope), to_db(t.arg(), scope)};
      return db_node(d);
    case TermKind::let: {
      d.kind = DB::Kind::let;
      for (const auto& [x, v] : t.bindings()) {
        d.kids.push_back(to_db(v, scope));
        d.sort += to_string(x.sort) + ";";
      }
      for (const auto& [x, v] : t.bindings()) scope.push_back(x.id);
      d.kids.push_back(to_db(t.body(), scope));
      scope.resize(scope.size() - t.bindings().size());
      return db_node(d);
    }
    default:
      d.kind = DB::Kind::binder;
      d.binder = t.kind();
      d.sort = to_string(t.var().sort);
      scope.push_back(t.var().id);
      d.kids = {to_db(t.body(), scope)};
      scope.pop_back();
      return db_node(d);
  }
}

inline DBPtr to_db(const Term& t) {
  std::vector<VarId> scope;
  return to_db(t, scope);
}

/// Adds `by` to every index >= cutoff.
inline DBPtr db_shift(const DBPtr& t, std::size_t by, std::size_t cutoff = 0) {
  if (by == 0) return t;
  DB d = *t;
  switch (t->kind) {
    case DB::Kind::bound:
      if (d.index >= cutoff) d.index += by;
      return db_node(d);
    case DB::Kind::free:
    case DB::Kind::constant:
      return t;
    case DB::Kind::app:
      d.kids = {db_shift(t->kids[0], by, cutoff), db_shift(t->kids[1], by, cutoff)};
      return db_node(d);
    case DB::Kind::binder:
      d.kids = {db_shift(t->kids[0], by, cutoff + 1)};
      return db_node(d);
    case DB::Kind::let: {
      std::size_t n = t->kids.size() - 1;
      for (std::size_t i = 0; i < n; ++i) d.kids[i] = db_shift(t->kids[i], by, cutoff);
      d.kids[n] = db_shift(t->kids[n], by, cutoff + n);
      return db_node(d);
    }
  }
  return t;
}

/// Replaces free variables by (locally closed) images. Nothing can be
/// captured, so no renaming is involved.
inline DBPtr db_subst_free(const DBPtr& t, const std::map<VarId, DBPtr>& sigma) {
  switch (t->kind) {
    case DB::Kind::free: {
      auto it = sigma.find(t->id);
      return it == sigma.end() ? t : it->second;
    }
    case DB::Kind::bound:
    case DB::Kind::constant:
      return t;
    default: {
      DB d = *t;
      for (auto& k : d.kids) k = db_subst_free(k, sigma);
      return db_node(d);
    }
  }
}

// Instantiates index `depth` with u (u's own indices are relative to the
// binder being removed) and lowers the indices above it.
inline DBPtr db_instantiate(const DBPtr& t, const DBPtr& u, std::size_t depth = 0) {
  DB d = *t;
  switch (t->kind) {
    case DB::Kind::bound:
      if (t->index == depth) return db_shift(u, depth);
      if (t->index > depth) d.index -= 1;
      return db_node(d);
    case DB::Kind::free:
    case DB::Kind::constant:
      return t;
    case DB::Kind::app:
      d.kids = {db_instantiate(t->kids[0], u, depth), db_instantiate(t->kids[1], u, depth)};
      return db_node(d);
    case DB::Kind::binder:
      d.kids = {db_instantiate(t->kids[0], u, depth + 1)};
      return db_node(d);
    case DB::Kind::let: {
      std::size_t n = t->kids.size() - 1;
      for (std::size_t i = 0; i < n; ++i) d.kids[i] = db_instantiate(t->kids[i], u, depth);
      d.kids[n] = db_instantiate(t->kids[n], u, depth + n);
      return db_node(d);
    }
  }
  return t;
}

/// Removes lets: value i of n binds index n-1-i in the body.
inline DBPtr db_expand_lets(const DBPtr& t) {
  if (t->kind == DB::Kind::let) {
    std::size_t n = t->kids.size() - 1;
    DBPtr body = db_expand_lets(t->kids[n]);
    // Innermost index first; each instantiation lowers the remaining ones.
    for (std::size_t i = n; i-- > 0;) {
      DBPtr v = db_shift(db_expand_lets(t->kids[i]), i);
      body = db_instantiate(body, v);
    }
    return body;
  }
  if (t->kids.empty()) return t;
  DB d = *t;
  for (auto& k : d.kids) k = db_expand_lets(k);
  return db_node(d);
}

/// Applicative order: arguments first, then the redex. Terminates on simply
/// sorted input; `budget` bounds the contractions anyway.
inline DBPtr db_normalize(const DBPtr& t, std::size_t& budget) {
  switch (t->kind) {
    case DB::Kind::bound:
    case DB::Kind::free:
    case DB::Kind::constant:
      return t;
    case DB::Kind::binder: {
      DB d = *t;
      d.kids = {db_normalize(t->kids[0], budget)};
      return db_node(d);
    }
    case DB::Kind::app: {
      DBPtr f = db_normalize(t->kids[0], budget);
      DBPtr a = db_normalize(t->kids[1], budget);
      if (f->kind == DB::Kind::binder && f->binder == TermKind::lambda) {
        if (budget == 0) throw std::runtime_error("reference reducer budget exhausted");
        --budget;
        return db_normalize(db_instantiate(f->kids[0], a), budget);
      }
      DB d = *t;
      d.kids = {f, a};
      return db_node(d);
    }
    case DB::Kind::let:
      return db_normalize(db_expand_lets(t), budget);
  }
  return t;
}

inline DBPtr db_normal_form(const Term& t, std::size_t budget = 1000000) {
  return db_normalize(to_db(t), budget);
}

/// Reference result of substitute(t, sigma), in nameless form.
inline DBPtr db_substitute(const Term& t, const Substitution& sigma) {
  std::map<VarId, DBPtr> images;
  for (const auto& [id, b] : sigma.entries()) images[id] = to_db(b.second);
  return db_subst_free(to_db(t), images);
}

}  // namespace hosmt::testing
