#include "hosmt/typing.hpp"

#include <algorithm>
#include <set>

#include "hosmt/diagnostics.hpp"

namespace hosmt {
namespace {

[[noreturn]] void sort_error(SourcePos pos, const std::string& msg) {
  throw Error(ErrorKind::sort, pos, msg);
}

const Sort& B() { return Sort::boolean(); }
const Sort& I() { return Sort::integer(); }

Sort binary(const Sort& a, const Sort& r) { return Sort::fun(a, Sort::fun(a, r)); }

const std::set<std::string>& arithmetic_symbols() {
  static const std::set<std::string> s{"+", "-", "*", "<=", "<", ">=", ">"};
  return s;
}

const std::set<std::string>& left_assoc() {
  static const std::set<std::string> s{"and", "or", "xor", "+", "-", "*"};
  return s;
}

const std::set<std::string>& chainable() {
  static const std::set<std::string> s{"=", "<=", "<", ">=", ">"};
  return s;
}

bool is_eq_sort(const Sort& s) {
  return s.is_fun() && s.codomain().is_fun() && s.domain() == s.codomain().domain() &&
         s.codomain().codomain().is_bool();
}

Term apply_checked(const Term& fun, const Term& arg, SourcePos pos) {
  if (!fun.sort().is_fun()) {
    sort_error(pos, "applying a term of non-functional sort " + to_string(fun.sort()));
  }
  if (!(fun.sort().domain() == arg.sort())) {
    sort_error(pos, "argument sort mismatch: expected " + to_string(fun.sort().domain()) +
                        ", found " + to_string(arg.sort()));
  }
  return mk_app(fun, arg);
}

Term binary_op(const std::string& op, const Sort& sort, const Term& a, const Term& b, SourcePos pos) {
  return apply_checked(apply_checked(mk_const(op, sort), a, pos), b, pos);
}

class Elaborator {
 public:
  explicit Elaborator(TypingEnv& env) : env_(env) {}

  Term run(const SurfaceTerm& t) {
    using K = SurfaceTerm::Kind;
    switch (t.kind) {
      case K::constant:
        return literal(t);
      case K::identifier:
        return identifier(t);
      case K::apply:
        return application(t);
      case K::lambda:
      case K::forall:
      case K::exists:
      case K::choice:
        return binder(t);
      case K::let:
        return let(t);
      case K::match:
        throw Error(ErrorKind::unsupported, t.pos, "unsupported construct: match");
      case K::annotated:
        return run(t.body());
    }
    throw InvariantError("unknown surface term kind");
  }

 private:
  Term literal(const SurfaceTerm& t) {
    switch (t.literal_kind) {
      case TokenKind::numeral:
        return mk_const(t.text, I());
      case TokenKind::decimal:
        return mk_const(t.text, Sort::real());
      default:
        throw Error(ErrorKind::unsupported, t.pos, "unsupported construct: literal " + t.text);
    }
  }

  // Builtin polymorphic equality is recognised only when no local or declared
  // symbol named "=" is in scope, which the signature forbids anyway.
  bool is_eq_head(const SurfaceTerm& t) const {
    return t.kind == SurfaceTerm::Kind::identifier && !t.ascription && t.text == "=" &&
           !env_.lookup_local("=");
  }

  Term lookup(const std::string& name, SourcePos pos) {
    if (const Var* v = env_.lookup_local(name)) return mk_var(*v);
    if (env_.before_signature) {
      if (auto t = env_.before_signature(name)) return *t;
    }
    if (const Sort* s = env_.signature().lookup(name)) return mk_const(name, *s);
    if (env_.after_signature) {
      if (auto t = env_.after_signature(name)) return *t;
    }
    sort_error(pos, "unbound symbol '" + name + "'");
  }

  Term identifier(const SurfaceTerm& t) {
    if (t.text == "=" && !env_.lookup_local("=")) {
      if (!t.ascription) sort_error(t.pos, "'=' needs arguments or a sort ascription");
      Sort s = resolve_sort(env_.signature(), *t.ascription);
      if (!is_eq_sort(s)) {
        sort_error(t.pos, "'=' cannot have sort " + to_string(s));
      }
      return eq_symbol(s.domain());
    }
    Term term = lookup(t.text, t.pos);
    if (t.ascription) {
      Sort s = resolve_sort(env_.signature(), *t.ascription);
      if (!(s == term.sort())) {
        sort_error(t.pos, "ascribed sort " + to_string(s) + " does not match inferred sort " +
                              to_string(term.sort()));
      }
    }
    return term;
  }

  Term application(const SurfaceTerm& t) {
    const SurfaceTerm& head = t.head();
    std::vector<Term> args;
    for (const auto& a : t.args()) args.push_back(run(a));

    if (is_eq_head(head)) {
      const Sort& s = args.front().sort();
      return chain("=", binary(s, B()), args, t);
    }
    bool builtin_head = head.kind == SurfaceTerm::Kind::identifier && !head.ascription &&
                        !env_.lookup_local(head.text) && env_.signature().is_builtin(head.text);
    if (builtin_head && args.size() > 2) {
      const std::string& op = head.text;
      const Sort& sort = *env_.signature().lookup(op);
      if (chainable().count(op)) return chain(op, sort, args, t);
      if (left_assoc().count(op)) {
        Term acc = args[0];
        for (std::size_t i = 1; i < args.size(); ++i) acc = binary_op(op, sort, acc, args[i], t.pos);
        return acc;
      }
      if (op == "=>") {
        Term acc = args.back();
        for (std::size_t i = args.size() - 1; i-- > 0;) acc = binary_op(op, sort, args[i], acc, t.pos);
        return acc;
      }
    }
    Term fun = run(head);
    for (std::size_t i = 0; i < args.size(); ++i) fun = apply_checked(fun, args[i], t.args()[i].pos);
    return fun;
  }

  // (op a b c) = (and (op a b) (op b c))
  Term chain(const std::string& op, const Sort& sort, const std::vector<Term>& args, const SurfaceTerm& t) {
    if (args.size() < 2) {
      Term fun = mk_const(op, sort);
      for (std::size_t i = 0; i < args.size(); ++i) fun = apply_checked(fun, args[i], t.args()[i].pos);
      return fun;
    }
    std::optional<Term> acc;
    Sort and_sort = binary(B(), B());
    for (std::size_t i = 0; i + 1 < args.size(); ++i) {
      Term lhs = apply_checked(mk_const(op, sort), args[i], t.args()[i].pos);
      Term link = apply_checked(lhs, args[i + 1], t.args()[i + 1].pos);
      acc = acc ? mk_app(mk_app(mk_const("and", and_sort), *acc), link) : link;
    }
    return *acc;
  }

  Term binder(const SurfaceTerm& t) {
    using K = SurfaceTerm::Kind;
    std::vector<Var> vars;
    for (const auto& sv : t.binders) {
      Sort s = resolve_sort(env_.signature(), sv.sort);
      Var v = env_.make_binder ? env_.make_binder(sv.name, s) : fresh_var(sv.name, s);
      vars.push_back(v);
      env_.push(v);
    }
    Term body = [&] {
      try {
        return run(t.body());
      } catch (...) {
        env_.pop(vars.size());
        throw;
      }
    }();
    env_.pop(vars.size());
    if (t.kind != K::lambda && !body.sort().is_bool()) {
      std::string what = t.kind == K::choice ? "choice" : "quantifier";
      sort_error(t.body().pos, what + " body has sort " + to_string(body.sort()) + ", expected Bool");
    }
    if (t.kind == K::choice && vars.size() != 1) {
      sort_error(t.pos, "choice binds exactly one variable");
    }
    TermKind kind = t.kind == K::lambda   ? TermKind::lambda
                    : t.kind == K::forall ? TermKind::forall
                    : t.kind == K::exists ? TermKind::exists
                                          : TermKind::choice;
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = mk_binder(kind, *it, body);
    return body;
  }

  Term let(const SurfaceTerm& t) {
    std::vector<Binding> bindings;
    for (const auto& b : t.bindings) {
      Term value = run(b.value);
      Var v = env_.make_binder ? env_.make_binder(b.name, value.sort()) : fresh_var(b.name, value.sort());
      for (const auto& prev : bindings) {
        if (prev.first.name == b.name) sort_error(b.pos, "let binds '" + b.name + "' twice");
      }
      bindings.emplace_back(v, value);
    }
    for (const auto& b : bindings) env_.push(b.first);
    Term body = [&] {
      try {
        return run(t.body());
      } catch (...) {
        env_.pop(bindings.size());
        throw;
      }
    }();
    env_.pop(bindings.size());
    return mk_let(std::move(bindings), body);
  }

  TypingEnv& env_;
};

}  // namespace

Signature::Signature() {
  sorts_ = {{"Bool", 0}, {"Int", 0}, {"Real", 0}};
  Sort b1 = Sort::fun(B(), B());
  Sort b2 = binary(B(), B());
  funs_.emplace("true", B());
  funs_.emplace("false", B());
  funs_.emplace("not", b1);
  for (const char* op : {"and", "or", "=>", "xor"}) funs_.emplace(op, b2);
  for (const char* op : {"+", "-", "*"}) funs_.emplace(op, binary(I(), I()));
  for (const char* op : {"<=", "<", ">=", ">"}) funs_.emplace(op, binary(I(), B()));
}

void Signature::declare_sort(const std::string& name, unsigned arity, SourcePos pos) {
  if (!sorts_.emplace(name, arity).second) sort_error(pos, "duplicate declaration of sort " + name);
  declared_sorts_.emplace_back(name, arity);
}

void Signature::declare_fun(const std::string& name, Sort sort, SourcePos pos) {
  if (name == "=" || funs_.count(name)) sort_error(pos, "duplicate declaration of " + name);
  funs_.emplace(name, std::move(sort));
  declared_.push_back(name);
}

const Sort* Signature::lookup(const std::string& name) const {
  auto it = funs_.find(name);
  return it == funs_.end() ? nullptr : &it->second;
}

std::optional<unsigned> Signature::sort_arity(const std::string& name) const {
  auto it = sorts_.find(name);
  if (it == sorts_.end()) return std::nullopt;
  return it->second;
}

bool Signature::is_builtin(const std::string& name) const {
  return funs_.count(name) && std::find(declared_.begin(), declared_.end(), name) == declared_.end();
}

void Signature::set_logic(const std::string& logic) {
  logic_ = logic;
  bool arith = logic == "ALL" || logic.find("IA") != std::string::npos ||
               logic.find("RA") != std::string::npos;
  if (!arith) {
    for (const auto& op : arithmetic_symbols()) {
      if (is_builtin(op)) funs_.erase(op);
    }
  }
}

Sort resolve_sort(const Signature& sig, const SurfaceSort& s) {
  switch (s.kind) {
    case SurfaceSort::Kind::identifier: {
      auto arity = sig.sort_arity(s.name);
      if (!arity) sort_error(s.pos, "unknown sort " + s.name);
      if (*arity != 0) {
        sort_error(s.pos, "sort " + s.name + " expects " + std::to_string(*arity) + " arguments");
      }
      return Sort::atom(s.name);
    }
    case SurfaceSort::Kind::parametric: {
      auto arity = sig.sort_arity(s.name);
      if (!arity) sort_error(s.pos, "unknown sort " + s.name);
      if (*arity != s.args.size()) {
        sort_error(s.pos, "sort " + s.name + " expects " + std::to_string(*arity) + " arguments");
      }
      std::vector<Sort> args;
      for (const auto& a : s.args) args.push_back(resolve_sort(sig, a));
      return Sort::applied(s.name, std::move(args));
    }
    case SurfaceSort::Kind::arrow: {
      std::vector<Sort> doms;
      for (const auto& d : s.domains()) doms.push_back(resolve_sort(sig, d));
      return Sort::curried(doms, resolve_sort(sig, s.result()));
    }
  }
  throw InvariantError("unknown surface sort kind");
}

Sort normalize_decl(const Signature& sig, std::span<const SurfaceSort> arg_sorts,
                    const SurfaceSort& result) {
  std::vector<Sort> doms;
  for (const auto& a : arg_sorts) doms.push_back(resolve_sort(sig, a));
  return Sort::curried(doms, resolve_sort(sig, result));
}

const Var* TypingEnv::lookup_local(const std::string& name) const {
  for (auto it = locals_.rbegin(); it != locals_.rend(); ++it) {
    if (it->name == name) return &*it;
  }
  return nullptr;
}

Term infer_sort(TypingEnv& env, const SurfaceTerm& t) { return Elaborator(env).run(t); }

CheckedScript check_script(std::span<const Command> cmds) {
  CheckedScript out;
  Signature& sig = out.signature;
  for (std::size_t i = 0; i < cmds.size(); ++i) {
    const Command& c = cmds[i];
    switch (c.kind) {
      case Command::Kind::set_logic:
        sig.set_logic(c.name);
        break;
      case Command::Kind::declare_sort:
        sig.declare_sort(c.name, c.arity, c.pos);
        break;
      case Command::Kind::declare_fun:
        sig.declare_fun(c.name, normalize_decl(sig, c.arg_sorts, *c.result), c.pos);
        break;
      case Command::Kind::define_fun: {
        TypingEnv env(sig);
        std::vector<Var> params;
        for (const auto& p : c.params) {
          params.push_back(fresh_var(p.name, resolve_sort(sig, p.sort)));
          env.push(params.back());
        }
        Term body = infer_sort(env, *c.term);
        Sort result = resolve_sort(sig, *c.result);
        if (!(body.sort() == result)) {
          sort_error(c.term->pos, "define-fun body has sort " + to_string(body.sort()) + ", expected " +
                                      to_string(result));
        }
        for (auto it = params.rbegin(); it != params.rend(); ++it) body = mk_lambda(*it, body);
        sig.declare_fun(c.name, body.sort(), c.pos);
        out.definitions.emplace(c.name, body);
        break;
      }
      case Command::Kind::assert_: {
        TypingEnv env(sig);
        Term t = infer_sort(env, *c.term);
        if (!t.sort().is_bool()) {
          sort_error(c.term->pos, "assert body has sort " + to_string(t.sort()) + ", expected Bool");
        }
        out.assertions.push_back(t);
        out.assert_commands.push_back(i);
        break;
      }
      case Command::Kind::exit:
      case Command::Kind::unknown:
        break;
    }
  }
  return out;
}

}  // namespace hosmt
