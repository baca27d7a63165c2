#include "hosmt/core_printer.hpp"

#include <cctype>

#include "hosmt/lexer.hpp"
#include "hosmt/printer.hpp"

namespace hosmt {
namespace {

const char* const kBuiltinNames[] = {
    "true", "false", "not", "and", "or", "=>", "xor", "=", "+", "-", "*", "<=", "<", ">=", ">",
    "ite", "distinct", "Bool", "Int", "Real",
};

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

SurfaceTerm constant_term(const std::string& name) {
  if (all_digits(name)) return SurfaceTerm::constant(TokenKind::numeral, name);
  if (auto dot = name.find('.'); dot != std::string::npos && all_digits(name.substr(0, dot)) &&
                                 all_digits(name.substr(dot + 1))) {
    return SurfaceTerm::constant(TokenKind::decimal, name);
  }
  if (!name.empty() && name.front() == '"') return SurfaceTerm::constant(TokenKind::string, name);
  return SurfaceTerm::identifier(name);
}

SortedVar sorted_var(const Var& v, NameTable& names) {
  return SortedVar{names.name_of(v), to_surface(v.sort), {}};
}

bool collapsible(const std::vector<SortedVar>& vars, const std::string& name) {
  for (const auto& sv : vars) {
    if (sv.name == name) return false;
  }
  return true;
}

void collect_constants(const Term& t, NameTable& names) {
  switch (t.kind()) {
    case TermKind::var:
      return;
    case TermKind::constant:
      names.reserve(t.name());
      return;
    case TermKind::app:
      collect_constants(t.fun(), names);
      collect_constants(t.arg(), names);
      return;
    case TermKind::let:
      for (const auto& b : t.bindings()) collect_constants(b.second, names);
      collect_constants(t.body(), names);
      return;
    default:
      collect_constants(t.body(), names);
      return;
  }
}

}  // namespace

NameTable::NameTable() {
  for (const char* n : kBuiltinNames) used_.insert(n);
  for (const char* n : {"!", "_", "as", "exists", "forall", "lambda", "let", "match", "par", "choice",
                        "NUMERAL", "DECIMAL", "STRING"}) {
    used_.insert(n);
  }
}

const std::string& NameTable::name_of(const Var& v) {
  auto it = names_.find(v.id);
  if (it != names_.end()) return it->second;
  std::string name = v.name.empty() ? "v" : v.name;
  if (used_.count(name)) {
    std::string stem = name;
    while (stem.size() > 1 && std::isdigit(static_cast<unsigned char>(stem.back()))) stem.pop_back();
    for (unsigned i = 1;; ++i) {
      std::string candidate = stem + std::to_string(i);
      if (!used_.count(candidate)) {
        name = std::move(candidate);
        break;
      }
    }
  }
  used_.insert(name);
  return names_.emplace(v.id, std::move(name)).first->second;
}

SurfaceSort to_surface(const Sort& s) {
  switch (s.kind()) {
    case Sort::Kind::atom:
      return SurfaceSort::identifier(s.name());
    case Sort::Kind::applied: {
      std::vector<SurfaceSort> args;
      for (const auto& a : s.args()) args.push_back(to_surface(a));
      return SurfaceSort::parametric(s.name(), std::move(args));
    }
    case Sort::Kind::fun: {
      std::vector<SurfaceSort> domains;
      const Sort* cur = &s;
      while (cur->is_fun()) {
        domains.push_back(to_surface(cur->domain()));
        cur = &cur->codomain();
      }
      return SurfaceSort::arrow(std::move(domains), to_surface(*cur));
    }
  }
  return {};
}

SurfaceTerm to_surface(const Term& t, NameTable& names) {
  using K = SurfaceTerm::Kind;
  switch (t.kind()) {
    case TermKind::var:
      return SurfaceTerm::identifier(names.name_of(t.var()));
    case TermKind::constant:
      if (t.name() == "=") return SurfaceTerm::qualified("=", to_surface(t.sort()));
      return constant_term(t.name());
    case TermKind::app: {
      auto [head, args] = app_spine(t);
      std::vector<SurfaceTerm> sargs;
      for (const auto& a : args) sargs.push_back(to_surface(a, names));
      SurfaceTerm shead = (head.is_const("=") && args.size() == 2) ? SurfaceTerm::identifier("=")
                                                                    : to_surface(head, names);
      return SurfaceTerm::apply(std::move(shead), std::move(sargs));
    }
    case TermKind::lambda:
    case TermKind::forall:
    case TermKind::exists:
    case TermKind::choice: {
      K kind = t.kind() == TermKind::lambda   ? K::lambda
               : t.kind() == TermKind::forall ? K::forall
               : t.kind() == TermKind::exists ? K::exists
                                              : K::choice;
      std::vector<SortedVar> vars{sorted_var(t.var(), names)};
      const Term* body = &t.body();
      // Choice binds exactly one variable in the concrete syntax.
      if (kind != K::choice) {
        while (body->kind() == t.kind() && collapsible(vars, names.name_of(body->var()))) {
          vars.push_back(sorted_var(body->var(), names));
          body = &body->body();
        }
      }
      return SurfaceTerm::binder(kind, std::move(vars), to_surface(*body, names));
    }
    case TermKind::let: {
      std::vector<VarBinding> bindings;
      for (const auto& [v, value] : t.bindings()) {
        bindings.push_back(VarBinding{names.name_of(v), to_surface(value, names), {}});
      }
      return SurfaceTerm::let(std::move(bindings), to_surface(t.body(), names));
    }
  }
  return {};
}

void reserve_constants(const Term& t, NameTable& names) { collect_constants(t, names); }

std::string to_string(const Term& t, NameTable& names) { return print_term(to_surface(t, names)); }

std::string to_string(const Term& t) {
  NameTable names;
  reserve_constants(t, names);
  return to_string(t, names);
}

}  // namespace hosmt
