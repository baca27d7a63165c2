#include "hosmt/sort.hpp"

#include "hosmt/diagnostics.hpp"
#include "hosmt/lexer.hpp"

namespace hosmt {

struct Sort::Node {
  Kind kind;
  std::string name;
  std::vector<Sort> args;  // applied args, or {domain, codomain}
};

Sort Sort::atom(std::string name) {
  return Sort(std::make_shared<const Node>(Node{Kind::atom, std::move(name), {}}));
}

Sort Sort::applied(std::string name, std::vector<Sort> args) {
  if (args.empty()) throw InvariantError("applied sort without arguments");
  return Sort(std::make_shared<const Node>(Node{Kind::applied, std::move(name), std::move(args)}));
}

Sort Sort::fun(Sort domain, Sort codomain) {
  return Sort(std::make_shared<const Node>(Node{Kind::fun, "->", {std::move(domain), std::move(codomain)}}));
}

Sort Sort::curried(std::span<const Sort> domains, Sort result) {
  Sort s = std::move(result);
  for (auto it = domains.rbegin(); it != domains.rend(); ++it) s = fun(*it, std::move(s));
  return s;
}

const Sort& Sort::boolean() {
  static const Sort s = atom("Bool");
  return s;
}

const Sort& Sort::integer() {
  static const Sort s = atom("Int");
  return s;
}

const Sort& Sort::real() {
  static const Sort s = atom("Real");
  return s;
}

Sort::Kind Sort::kind() const { return node_->kind; }
const std::string& Sort::name() const { return node_->name; }
std::span<const Sort> Sort::args() const { return node_->args; }

const Sort& Sort::domain() const {
  if (node_->kind != Kind::fun) throw InvariantError("domain of a non-functional sort");
  return node_->args[0];
}

const Sort& Sort::codomain() const {
  if (node_->kind != Kind::fun) throw InvariantError("codomain of a non-functional sort");
  return node_->args[1];
}

bool Sort::is_bool() const { return node_->kind == Kind::atom && node_->name == "Bool"; }

std::size_t Sort::arity() const {
  std::size_t n = 0;
  for (const Sort* s = this; s->is_fun(); s = &s->codomain()) ++n;
  return n;
}

bool operator==(const Sort& a, const Sort& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->kind == b.node_->kind && a.node_->name == b.node_->name &&
         a.node_->args == b.node_->args;
}

bool operator<(const Sort& a, const Sort& b) {
  if (a.node_ == b.node_) return false;
  if (a.node_->kind != b.node_->kind) return a.node_->kind < b.node_->kind;
  if (a.node_->name != b.node_->name) return a.node_->name < b.node_->name;
  return a.node_->args < b.node_->args;
}

std::string to_string(const Sort& s) {
  switch (s.kind()) {
    case Sort::Kind::atom:
      return quote_symbol(s.name());
    case Sort::Kind::applied: {
      std::string out = "(" + quote_symbol(s.name());
      for (const auto& a : s.args()) out += " " + to_string(a);
      return out + ")";
    }
    case Sort::Kind::fun: {
      std::string out = "(->";
      const Sort* cur = &s;
      while (cur->is_fun()) {
        out += " " + to_string(cur->domain());
        cur = &cur->codomain();
      }
      return out + " " + to_string(*cur) + ")";
    }
  }
  return {};
}

}  // namespace hosmt
