#include "hosmt/sexpr.hpp"

namespace hosmt {

bool operator==(const SExpr& a, const SExpr& b) {
  if (a.is_list != b.is_list) return false;
  if (a.is_list) return a.items == b.items;
  return a.atom.kind == b.atom.kind && a.atom.text == b.atom.text &&
         a.atom.quoted == b.atom.quoted;
}

std::vector<SExpr> read_sexprs(std::span<const Token> tokens) {
  std::vector<SExpr> top;
  std::vector<SExpr> stack;  // open lists
  for (const Token& t : tokens) {
    if (t.kind == TokenKind::lparen) {
      SExpr list;
      list.is_list = true;
      list.pos = t.pos;
      stack.push_back(std::move(list));
      continue;
    }
    SExpr done;
    if (t.kind == TokenKind::rparen) {
      if (stack.empty()) throw Error(ErrorKind::parse, t.pos, "unbalanced ')'");
      done = std::move(stack.back());
      stack.pop_back();
    } else {
      done.atom = t;
      done.pos = t.pos;
    }
    if (stack.empty()) {
      top.push_back(std::move(done));
    } else {
      stack.back().items.push_back(std::move(done));
    }
  }
  if (!stack.empty()) {
    throw Error(ErrorKind::parse, stack.back().pos, "unbalanced '(': missing ')'");
  }
  return top;
}

std::string print_sexpr(const SExpr& e) {
  if (!e.is_list) {
    if (e.atom.kind == TokenKind::symbol) {
      return e.atom.quoted ? "|" + e.atom.text + "|" : e.atom.text;
    }
    return e.atom.text;
  }
  std::string out = "(";
  for (std::size_t i = 0; i < e.items.size(); ++i) {
    if (i) out += ' ';
    out += print_sexpr(e.items[i]);
  }
  return out + ")";
}

}  // namespace hosmt
