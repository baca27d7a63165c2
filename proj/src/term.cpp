#include "hosmt/term.hpp"

#include <algorithm>
#include <atomic>
#include <iterator>

#include "hosmt/diagnostics.hpp"

namespace hosmt {

struct Term::Node {
  TermKind kind;
  Sort sort = Sort::boolean();
  Var var;                     // var / binder
  std::string name;            // constant
  std::vector<Term> kids;      // app: {fun, arg}; binder/let: {body}
  std::vector<Binding> bindings;
  std::vector<VarId> fv;
  std::size_t size = 1;
};

Term make_term(std::shared_ptr<const Term::Node> n) { return Term(std::move(n)); }

namespace {

std::atomic<VarId> g_next_var_id{1};

std::vector<VarId> merge(std::span<const VarId> a, std::span<const VarId> b) {
  std::vector<VarId> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<VarId> without(std::span<const VarId> a, VarId id) {
  std::vector<VarId> out;
  out.reserve(a.size());
  for (VarId x : a) {
    if (x != id) out.push_back(x);
  }
  return out;
}

[[noreturn]] void sort_violation(const std::string& what) { throw InvariantError(what); }

}  // namespace

Var fresh_var(std::string hint, Sort sort) {
  return Var{g_next_var_id.fetch_add(1, std::memory_order_relaxed), std::move(hint), std::move(sort)};
}

bool is_binder(TermKind k) {
  return k == TermKind::lambda || k == TermKind::forall || k == TermKind::exists ||
         k == TermKind::choice;
}

TermKind Term::kind() const { return node_->kind; }
const Sort& Term::sort() const { return node_->sort; }
const Var& Term::var() const { return node_->var; }
const std::string& Term::name() const { return node_->name; }
const Term& Term::fun() const { return node_->kids[0]; }
const Term& Term::arg() const { return node_->kids[1]; }
const Term& Term::body() const { return node_->kids[0]; }
std::span<const Binding> Term::bindings() const { return node_->bindings; }
std::span<const VarId> Term::free_var_ids() const { return node_->fv; }
std::size_t Term::size() const { return node_->size; }

bool Term::has_free(VarId id) const {
  return std::binary_search(node_->fv.begin(), node_->fv.end(), id);
}

Term mk_var(const Var& v) {
  auto n = std::make_shared<Term::Node>(Term::Node{TermKind::var, v.sort, v, {}, {}, {}, {v.id}});
  return make_term(std::move(n));
}

Term mk_const(std::string name, Sort sort) {
  auto n = std::make_shared<Term::Node>(Term::Node{TermKind::constant, std::move(sort), {}, std::move(name), {}, {}, {}});
  return make_term(std::move(n));
}

Term mk_app(const Term& fun, const Term& arg) {
  if (!fun.sort().is_fun()) {
    sort_violation("applying a term of non-functional sort " + to_string(fun.sort()));
  }
  if (!(fun.sort().domain() == arg.sort())) {
    sort_violation("argument sort mismatch: expected " + to_string(fun.sort().domain()) +
                   ", found " + to_string(arg.sort()));
  }
  auto n = std::make_shared<Term::Node>();
  n->kind = TermKind::app;
  n->sort = fun.sort().codomain();
  n->kids = {fun, arg};
  n->fv = merge(fun.free_var_ids(), arg.free_var_ids());
  n->size = 1 + fun.size() + arg.size();
  return make_term(std::move(n));
}

Term mk_app(const Term& fun, std::span<const Term> args) {
  Term t = fun;
  for (const Term& a : args) t = mk_app(t, a);
  return t;
}

Term mk_binder(TermKind kind, const Var& v, const Term& body) {
  if (!is_binder(kind)) throw InvariantError("mk_binder on a non-binder kind");
  Sort sort = body.sort();
  switch (kind) {
    case TermKind::lambda:
      sort = Sort::fun(v.sort, body.sort());
      break;
    case TermKind::forall:
    case TermKind::exists:
      if (!body.sort().is_bool()) sort_violation("quantifier body has sort " + to_string(body.sort()) + ", expected Bool");
      sort = Sort::boolean();
      break;
    case TermKind::choice:
      if (!body.sort().is_bool()) sort_violation("choice body has sort " + to_string(body.sort()) + ", expected Bool");
      sort = v.sort;
      break;
    default:
      break;
  }
  auto n = std::make_shared<Term::Node>();
  n->kind = kind;
  n->sort = std::move(sort);
  n->var = v;
  n->kids = {body};
  n->fv = without(body.free_var_ids(), v.id);
  n->size = 1 + body.size();
  return make_term(std::move(n));
}

Term mk_lambda(const Var& v, const Term& body) { return mk_binder(TermKind::lambda, v, body); }
Term mk_forall(const Var& v, const Term& body) { return mk_binder(TermKind::forall, v, body); }
Term mk_exists(const Var& v, const Term& body) { return mk_binder(TermKind::exists, v, body); }
Term mk_choice(const Var& v, const Term& body) { return mk_binder(TermKind::choice, v, body); }

Term mk_let(std::vector<Binding> bindings, const Term& body) {
  if (bindings.empty()) throw InvariantError("let without bindings");
  std::vector<VarId> bound;
  std::vector<VarId> fv;
  std::size_t size = 1 + body.size();
  for (const auto& [v, value] : bindings) {
    if (!(v.sort == value.sort())) {
      sort_violation("let binding for " + v.name + " has sort " + to_string(value.sort()) +
                     ", expected " + to_string(v.sort));
    }
    if (std::find(bound.begin(), bound.end(), v.id) != bound.end()) {
      throw InvariantError("let binds " + v.name + " twice");
    }
    bound.push_back(v.id);
    fv = merge(fv, value.free_var_ids());
    size += value.size();
  }
  std::vector<VarId> body_fv(body.free_var_ids().begin(), body.free_var_ids().end());
  for (VarId id : bound) body_fv = without(body_fv, id);
  auto n = std::make_shared<Term::Node>();
  n->kind = TermKind::let;
  n->sort = body.sort();
  n->kids = {body};
  n->bindings = std::move(bindings);
  n->fv = merge(fv, body_fv);
  n->size = size;
  return make_term(std::move(n));
}

Term eq_symbol(const Sort& s) {
  return mk_const("=", Sort::fun(s, Sort::fun(s, Sort::boolean())));
}

Term mk_eq(const Term& lhs, const Term& rhs) {
  return mk_app(mk_app(eq_symbol(lhs.sort()), lhs), rhs);
}

Term mk_not(const Term& t) {
  return mk_app(mk_const("not", Sort::fun(Sort::boolean(), Sort::boolean())), t);
}

Term mk_implies(const Term& a, const Term& b) {
  static const Sort s = Sort::fun(Sort::boolean(), Sort::fun(Sort::boolean(), Sort::boolean()));
  return mk_app(mk_app(mk_const("=>", s), a), b);
}

namespace {

std::optional<std::pair<Term, Term>> as_binary(const Term& t, std::string_view op) {
  if (!t.is_app() || !t.fun().is_app() || !t.fun().fun().is_const(op)) return std::nullopt;
  return std::make_pair(t.fun().arg(), t.arg());
}

}  // namespace

std::optional<std::pair<Term, Term>> as_eq(const Term& t) { return as_binary(t, "="); }
std::optional<std::pair<Term, Term>> as_implies(const Term& t) { return as_binary(t, "=>"); }

std::pair<Term, std::vector<Term>> app_spine(const Term& t) {
  std::vector<Term> args;
  const Term* cur = &t;
  while (cur->is_app()) {
    args.push_back(cur->arg());
    cur = &cur->fun();
  }
  std::reverse(args.begin(), args.end());
  return {*cur, std::move(args)};
}

bool identical(const Term& a, const Term& b) {
  if (a.same_node(b)) return true;
  if (a.kind() != b.kind() || !(a.sort() == b.sort())) return false;
  switch (a.kind()) {
    case TermKind::var:
      return a.var().id == b.var().id;
    case TermKind::constant:
      return a.name() == b.name();
    case TermKind::app:
      return identical(a.fun(), b.fun()) && identical(a.arg(), b.arg());
    case TermKind::lambda:
    case TermKind::forall:
    case TermKind::exists:
    case TermKind::choice:
      return a.var().id == b.var().id && identical(a.body(), b.body());
    case TermKind::let: {
      auto ab = a.bindings();
      auto bb = b.bindings();
      if (ab.size() != bb.size()) return false;
      for (std::size_t i = 0; i < ab.size(); ++i) {
        if (ab[i].first.id != bb[i].first.id || !identical(ab[i].second, bb[i].second)) return false;
      }
      return identical(a.body(), b.body());
    }
  }
  return false;
}

}  // namespace hosmt
