#include "hosmt/surface.hpp"

namespace hosmt {

SurfaceSort SurfaceSort::identifier(std::string name, SourcePos pos) {
  SurfaceSort s;
  s.kind = Kind::identifier;
  s.name = std::move(name);
  s.pos = pos;
  return s;
}

SurfaceSort SurfaceSort::parametric(std::string name, std::vector<SurfaceSort> args, SourcePos pos) {
  SurfaceSort s;
  s.kind = Kind::parametric;
  s.name = std::move(name);
  s.args = std::move(args);
  s.pos = pos;
  return s;
}

SurfaceSort SurfaceSort::arrow(std::vector<SurfaceSort> domains, SurfaceSort result, SourcePos pos) {
  SurfaceSort s;
  s.kind = Kind::arrow;
  s.name = "->";
  s.args = std::move(domains);
  s.args.push_back(std::move(result));
  s.pos = pos;
  return s;
}

bool operator==(const SurfaceSort& a, const SurfaceSort& b) {
  return a.kind == b.kind && a.name == b.name && a.args == b.args;
}

SurfaceTerm SurfaceTerm::constant(TokenKind kind, std::string text, SourcePos pos) {
  SurfaceTerm t;
  t.kind = Kind::constant;
  t.literal_kind = kind;
  t.text = std::move(text);
  t.pos = pos;
  return t;
}

SurfaceTerm SurfaceTerm::identifier(std::string name, SourcePos pos) {
  SurfaceTerm t;
  t.kind = Kind::identifier;
  t.text = std::move(name);
  t.pos = pos;
  return t;
}

SurfaceTerm SurfaceTerm::qualified(std::string name, SurfaceSort sort, SourcePos pos) {
  SurfaceTerm t = identifier(std::move(name), pos);
  t.ascription = std::move(sort);
  return t;
}

SurfaceTerm SurfaceTerm::apply(SurfaceTerm head, std::vector<SurfaceTerm> args, SourcePos pos) {
  SurfaceTerm t;
  t.kind = Kind::apply;
  t.pos = pos;
  t.children.reserve(args.size() + 1);
  t.children.push_back(std::move(head));
  for (auto& a : args) t.children.push_back(std::move(a));
  return t;
}

SurfaceTerm SurfaceTerm::binder(Kind kind, std::vector<SortedVar> vars, SurfaceTerm body, SourcePos pos) {
  SurfaceTerm t;
  t.kind = kind;
  t.pos = pos;
  t.binders = std::move(vars);
  t.children.push_back(std::move(body));
  return t;
}

SurfaceTerm SurfaceTerm::let(std::vector<VarBinding> bindings, SurfaceTerm body, SourcePos pos) {
  SurfaceTerm t;
  t.kind = Kind::let;
  t.pos = pos;
  t.bindings = std::move(bindings);
  t.children.push_back(std::move(body));
  return t;
}

bool operator==(const SurfaceTerm& a, const SurfaceTerm& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case SurfaceTerm::Kind::constant:
      return a.literal_kind == b.literal_kind && a.text == b.text;
    case SurfaceTerm::Kind::identifier:
      return a.text == b.text && a.ascription == b.ascription;
    case SurfaceTerm::Kind::apply:
      return a.children == b.children;
    case SurfaceTerm::Kind::lambda:
    case SurfaceTerm::Kind::forall:
    case SurfaceTerm::Kind::exists:
    case SurfaceTerm::Kind::choice:
      return a.binders == b.binders && a.children == b.children;
    case SurfaceTerm::Kind::let:
      return a.bindings == b.bindings && a.children == b.children;
    case SurfaceTerm::Kind::match:
      return a.children == b.children && a.cases == b.cases;
    case SurfaceTerm::Kind::annotated:
      return a.children == b.children && a.attributes == b.attributes;
  }
  return false;
}

}  // namespace hosmt
