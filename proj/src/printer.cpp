#include "hosmt/printer.hpp"

#include "hosmt/lexer.hpp"

namespace hosmt {
namespace {

std::string binder_keyword(SurfaceTerm::Kind k) {
  switch (k) {
    case SurfaceTerm::Kind::lambda: return "lambda";
    case SurfaceTerm::Kind::forall: return "forall";
    case SurfaceTerm::Kind::exists: return "exists";
    case SurfaceTerm::Kind::choice: return "choice";
    default: return "?";
  }
}

std::string sorted_vars(std::span<const SortedVar> vars) {
  std::string out = "(";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out += ' ';
    out += "(" + quote_symbol(vars[i].name) + " " + print_sort(vars[i].sort) + ")";
  }
  return out + ")";
}

std::string pattern(const MatchPattern& p) {
  if (p.variables.empty()) return quote_symbol(p.constructor);
  std::string out = "(" + quote_symbol(p.constructor);
  for (const auto& v : p.variables) out += " " + quote_symbol(v);
  return out + ")";
}

}  // namespace

std::string print_sort(const SurfaceSort& s) {
  switch (s.kind) {
    case SurfaceSort::Kind::identifier:
      return quote_symbol(s.name);
    case SurfaceSort::Kind::parametric:
    case SurfaceSort::Kind::arrow: {
      std::string out = "(" + (s.kind == SurfaceSort::Kind::arrow ? std::string("->") : quote_symbol(s.name));
      for (const auto& a : s.args) out += " " + print_sort(a);
      return out + ")";
    }
  }
  return {};
}

std::string print_term(const SurfaceTerm& t) {
  using K = SurfaceTerm::Kind;
  switch (t.kind) {
    case K::constant:
      return t.text;
    case K::identifier:
      if (t.ascription) return "(as " + quote_symbol(t.text) + " " + print_sort(*t.ascription) + ")";
      return quote_symbol(t.text);
    case K::apply: {
      std::string out = "(";
      for (std::size_t i = 0; i < t.children.size(); ++i) {
        if (i) out += ' ';
        out += print_term(t.children[i]);
      }
      return out + ")";
    }
    case K::lambda:
    case K::forall:
    case K::exists:
    case K::choice:
      return "(" + binder_keyword(t.kind) + " " + sorted_vars(t.binders) + " " + print_term(t.body()) + ")";
    case K::let: {
      std::string out = "(let (";
      for (std::size_t i = 0; i < t.bindings.size(); ++i) {
        if (i) out += ' ';
        out += "(" + quote_symbol(t.bindings[i].name) + " " + print_term(t.bindings[i].value) + ")";
      }
      return out + ") " + print_term(t.body()) + ")";
    }
    case K::match: {
      std::string out = "(match " + print_term(t.children.front()) + " (";
      for (std::size_t i = 0; i < t.cases.size(); ++i) {
        if (i) out += ' ';
        out += "(" + pattern(t.cases[i].pattern) + " " + print_term(t.cases[i].body) + ")";
      }
      return out + "))";
    }
    case K::annotated: {
      std::string out = "(! " + print_term(t.children.front());
      for (const auto& a : t.attributes) {
        out += " " + a.keyword;
        if (a.value) out += " " + print_sexpr(*a.value);
      }
      return out + ")";
    }
  }
  return {};
}

std::string print_command(const Command& c) {
  using K = Command::Kind;
  switch (c.kind) {
    case K::set_logic:
      return "(set-logic " + quote_symbol(c.name) + ")";
    case K::declare_sort:
      return "(declare-sort " + quote_symbol(c.name) + " " + std::to_string(c.arity) + ")";
    case K::declare_fun: {
      std::string out = "(declare-fun " + quote_symbol(c.name) + " (";
      for (std::size_t i = 0; i < c.arg_sorts.size(); ++i) {
        if (i) out += ' ';
        out += print_sort(c.arg_sorts[i]);
      }
      return out + ") " + print_sort(*c.result) + ")";
    }
    case K::define_fun:
      return "(define-fun " + quote_symbol(c.name) + " " + sorted_vars(c.params) + " " +
             print_sort(*c.result) + " " + print_term(*c.term) + ")";
    case K::assert_:
      return "(assert " + print_term(*c.term) + ")";
    case K::exit:
      return "(exit)";
    case K::unknown:
      return print_sexpr(c.raw);
  }
  return {};
}

std::string print_script(std::span<const Command> cmds) {
  std::string out;
  for (const auto& c : cmds) out += print_command(c) + "\n";
  return out;
}

}  // namespace hosmt
