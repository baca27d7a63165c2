#include "hosmt/parser.hpp"

#include <set>

namespace hosmt {
namespace {

[[noreturn]] void fail(SourcePos pos, const std::string& msg) {
  throw Error(ErrorKind::parse, pos, msg);
}

std::string describe(const SExpr& e) {
  return e.is_list ? "a list" : "'" + print_sexpr(e) + "'";
}

const std::string& expect_symbol(const SExpr& e, std::string_view what) {
  if (!e.is_symbol()) fail(e.pos, "expected " + std::string(what) + ", found " + describe(e));
  return e.atom.text;
}

const SExpr& expect_list(const SExpr& e, std::string_view what) {
  if (!e.is_list) fail(e.pos, "expected " + std::string(what) + ", found " + describe(e));
  return e;
}

void expect_arity(const SExpr& e, std::size_t n, std::string_view shape) {
  if (e.items.size() != n) fail(e.pos, "malformed " + std::string(shape));
}

std::vector<SortedVar> sorted_vars(const SExpr& e, bool allow_empty) {
  expect_list(e, "a list of sorted variables");
  if (e.items.empty() && !allow_empty) fail(e.pos, "binder list must not be empty");
  std::vector<SortedVar> vars;
  std::set<std::string> seen;
  for (const SExpr& item : e.items) {
    if (!item.is_list || item.items.size() != 2) {
      fail(item.pos, "expected (<symbol> <sort>)");
    }
    SortedVar v{expect_symbol(item.items[0], "a variable name"),
                sort_from_sexpr(item.items[1]), item.pos};
    if (!seen.insert(v.name).second) {
      fail(item.pos, "duplicate binder name '" + v.name + "'");
    }
    vars.push_back(std::move(v));
  }
  return vars;
}

MatchPattern pattern_from_sexpr(const SExpr& e) {
  MatchPattern p;
  if (!e.is_list) {
    p.constructor = expect_symbol(e, "a constructor");
    return p;
  }
  if (e.items.size() < 2) fail(e.pos, "malformed pattern");
  p.constructor = expect_symbol(e.items[0], "a constructor");
  for (std::size_t i = 1; i < e.items.size(); ++i) {
    p.variables.push_back(expect_symbol(e.items[i], "a pattern variable"));
  }
  return p;
}

std::vector<Attribute> attributes_from(std::span<const SExpr> items, SourcePos pos) {
  if (items.empty()) fail(pos, "annotation needs at least one attribute");
  std::vector<Attribute> attrs;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!items[i].is_keyword()) fail(items[i].pos, "expected attribute keyword, found " + describe(items[i]));
    Attribute a{items[i].atom.text, std::nullopt};
    if (i + 1 < items.size() && !items[i + 1].is_keyword()) {
      a.value = items[++i];
    }
    attrs.push_back(std::move(a));
  }
  return attrs;
}

SurfaceTerm binder_term(SurfaceTerm::Kind kind, const SExpr& e) {
  const std::string& head = e.items[0].atom.text;
  if (e.items.size() < 3) fail(e.pos, "malformed " + head);
  auto vars = sorted_vars(e.items[1], false);
  if (kind != SurfaceTerm::Kind::lambda && e.items.size() != 3) {
    fail(e.items[3].pos, head + " takes exactly one body term");
  }
  std::vector<SurfaceTerm> body;
  for (std::size_t i = 2; i < e.items.size(); ++i) body.push_back(term_from_sexpr(e.items[i]));
  if (body.size() == 1) {
    return SurfaceTerm::binder(kind, std::move(vars), std::move(body.front()), e.pos);
  }
  // `(lambda (...) f x)` juxtaposition: body is the application (f x)
  SurfaceTerm fn = std::move(body.front());
  const SourcePos fpos = fn.pos;
  std::vector<SurfaceTerm> args(std::make_move_iterator(body.begin() + 1),
                                std::make_move_iterator(body.end()));
  return SurfaceTerm::binder(kind, std::move(vars),
                             SurfaceTerm::apply(std::move(fn), std::move(args), fpos), e.pos);
}

SurfaceTerm list_term(const SExpr& e) {
  if (e.items.empty()) fail(e.pos, "empty application");
  const SExpr& head = e.items[0];
  if (head.is_symbol() && !head.atom.quoted) {
    const std::string& h = head.atom.text;
    if (h == "lambda") return binder_term(SurfaceTerm::Kind::lambda, e);
    if (h == "forall") return binder_term(SurfaceTerm::Kind::forall, e);
    if (h == "exists") return binder_term(SurfaceTerm::Kind::exists, e);
    if (h == "choice") return binder_term(SurfaceTerm::Kind::choice, e);
    if (h == "let") {
      expect_arity(e, 3, "let");
      const SExpr& bl = expect_list(e.items[1], "a list of bindings");
      if (bl.items.empty()) fail(bl.pos, "let needs at least one binding");
      std::vector<VarBinding> bindings;
      std::set<std::string> seen;
      for (const SExpr& b : bl.items) {
        if (!b.is_list || b.items.size() != 2) fail(b.pos, "expected (<symbol> <term>)");
        VarBinding vb{expect_symbol(b.items[0], "a variable name"), term_from_sexpr(b.items[1]), b.pos};
        if (!seen.insert(vb.name).second) fail(b.pos, "duplicate binder name '" + vb.name + "'");
        bindings.push_back(std::move(vb));
      }
      return SurfaceTerm::let(std::move(bindings), term_from_sexpr(e.items[2]), e.pos);
    }
    if (h == "match") {
      expect_arity(e, 3, "match");
      SurfaceTerm t;
      t.kind = SurfaceTerm::Kind::match;
      t.pos = e.pos;
      t.children.push_back(term_from_sexpr(e.items[1]));
      const SExpr& cl = expect_list(e.items[2], "a list of match cases");
      if (cl.items.empty()) fail(cl.pos, "match needs at least one case");
      for (const SExpr& c : cl.items) {
        if (!c.is_list || c.items.size() != 2) fail(c.pos, "expected (<pattern> <term>)");
        t.cases.push_back({pattern_from_sexpr(c.items[0]), term_from_sexpr(c.items[1])});
      }
      return t;
    }
    if (h == "!") {
      if (e.items.size() < 3) fail(e.pos, "malformed annotation");
      SurfaceTerm t;
      t.kind = SurfaceTerm::Kind::annotated;
      t.pos = e.pos;
      t.children.push_back(term_from_sexpr(e.items[1]));
      t.attributes = attributes_from(std::span(e.items).subspan(2), e.pos);
      return t;
    }
    if (h == "as") {
      expect_arity(e, 3, "qualified identifier (as <symbol> <sort>)");
      return SurfaceTerm::qualified(expect_symbol(e.items[1], "a symbol"),
                                    sort_from_sexpr(e.items[2]), e.pos);
    }
    if (h == "_") {
      throw Error(ErrorKind::unsupported, e.pos, "indexed identifiers are not supported");
    }
  }
  if (e.items.size() < 2) fail(e.pos, "application needs at least one argument");
  SurfaceTerm fn = term_from_sexpr(head);
  std::vector<SurfaceTerm> args;
  for (std::size_t i = 1; i < e.items.size(); ++i) args.push_back(term_from_sexpr(e.items[i]));
  return SurfaceTerm::apply(std::move(fn), std::move(args), e.pos);
}

template <typename T, typename F>
T exactly_one(std::span<const Token> tokens, std::string_view what, F convert) {
  auto es = read_sexprs(tokens);
  if (es.size() != 1) {
    SourcePos pos = es.size() > 1 ? es[1].pos : SourcePos{};
    fail(pos, "expected exactly one " + std::string(what));
  }
  return convert(es.front());
}

}  // namespace

SurfaceSort sort_from_sexpr(const SExpr& e) {
  if (!e.is_list) {
    const std::string& name = expect_symbol(e, "a sort");
    return SurfaceSort::identifier(name, e.pos);
  }
  if (e.items.empty()) fail(e.pos, "empty sort");
  const SExpr& head = e.items[0];
  if (head.is_symbol("->")) {
    if (e.items.size() < 3) fail(e.pos, "arrow sort needs at least one argument sort and a result sort");
    std::vector<SurfaceSort> doms;
    for (std::size_t i = 1; i + 1 < e.items.size(); ++i) doms.push_back(sort_from_sexpr(e.items[i]));
    return SurfaceSort::arrow(std::move(doms), sort_from_sexpr(e.items.back()), e.pos);
  }
  if (head.is_symbol("_")) {
    throw Error(ErrorKind::unsupported, e.pos, "indexed sorts are not supported");
  }
  const std::string& name = expect_symbol(head, "a sort constructor");
  if (e.items.size() < 2) fail(e.pos, "parametric sort needs at least one argument");
  std::vector<SurfaceSort> args;
  for (std::size_t i = 1; i < e.items.size(); ++i) args.push_back(sort_from_sexpr(e.items[i]));
  return SurfaceSort::parametric(name, std::move(args), e.pos);
}

SurfaceTerm term_from_sexpr(const SExpr& e) {
  if (e.is_list) return list_term(e);
  switch (e.atom.kind) {
    case TokenKind::numeral:
    case TokenKind::decimal:
    case TokenKind::hexadecimal:
    case TokenKind::binary:
    case TokenKind::string:
      return SurfaceTerm::constant(e.atom.kind, e.atom.text, e.pos);
    case TokenKind::symbol:
      if (!e.atom.quoted && is_reserved_word(e.atom.text)) {
        fail(e.pos, "unexpected reserved word '" + e.atom.text + "'");
      }
      return SurfaceTerm::identifier(e.atom.text, e.pos);
    default:
      fail(e.pos, "expected a term, found " + describe(e));
  }
}

Command command_from_sexpr(const SExpr& e) {
  Command c;
  c.pos = e.pos;
  c.raw = e;
  if (!e.is_list || e.items.empty() || !e.items[0].is_symbol()) {
    fail(e.pos, "expected a command, found " + describe(e));
  }
  const std::string& head = e.items[0].atom.text;
  if (head == "set-logic") {
    expect_arity(e, 2, "set-logic");
    c.kind = Command::Kind::set_logic;
    c.name = expect_symbol(e.items[1], "a logic name");
  } else if (head == "declare-sort") {
    if (e.items.size() != 2 && e.items.size() != 3) fail(e.pos, "malformed declare-sort");
    c.kind = Command::Kind::declare_sort;
    c.name = expect_symbol(e.items[1], "a sort name");
    if (e.items.size() == 3) {
      const SExpr& n = e.items[2];
      if (n.is_list || n.atom.kind != TokenKind::numeral) fail(n.pos, "expected sort arity numeral");
      c.arity = static_cast<unsigned>(std::stoul(n.atom.text));
    }
  } else if (head == "declare-fun") {
    expect_arity(e, 4, "declare-fun");
    c.kind = Command::Kind::declare_fun;
    c.name = expect_symbol(e.items[1], "a function name");
    for (const SExpr& s : expect_list(e.items[2], "a list of argument sorts").items) {
      c.arg_sorts.push_back(sort_from_sexpr(s));
    }
    // `(declare-fun g (Int) (Int))`: a result sort wrapped in a singleton
    // list is read as the sort itself.
    const SExpr& result = e.items[3];
    bool wrapped = result.is_list && result.items.size() == 1;
    c.result = sort_from_sexpr(wrapped ? result.items[0] : result);
  } else if (head == "declare-const") {
    expect_arity(e, 3, "declare-const");
    c.kind = Command::Kind::declare_fun;
    c.name = expect_symbol(e.items[1], "a constant name");
    c.result = sort_from_sexpr(e.items[2]);
  } else if (head == "define-fun") {
    expect_arity(e, 5, "define-fun");
    c.kind = Command::Kind::define_fun;
    c.name = expect_symbol(e.items[1], "a function name");
    c.params = sorted_vars(e.items[2], true);
    c.result = sort_from_sexpr(e.items[3]);
    c.term = term_from_sexpr(e.items[4]);
  } else if (head == "assert") {
    expect_arity(e, 2, "assert");
    c.kind = Command::Kind::assert_;
    c.term = term_from_sexpr(e.items[1]);
  } else if (head == "exit") {
    expect_arity(e, 1, "exit");
    c.kind = Command::Kind::exit;
  } else {
    c.kind = Command::Kind::unknown;
    c.name = head;
  }
  return c;
}

std::vector<Command> parse_script(std::span<const Token> tokens) {
  std::vector<Command> cmds;
  for (const SExpr& e : read_sexprs(tokens)) cmds.push_back(command_from_sexpr(e));
  return cmds;
}

std::vector<Command> parse_script(std::string_view text) {
  const auto tokens = tokenize(text);
  return parse_script(tokens);
}

SurfaceSort parse_sort(std::span<const Token> tokens) {
  return exactly_one<SurfaceSort>(tokens, "sort", sort_from_sexpr);
}

SurfaceSort parse_sort(std::string_view text) {
  const auto tokens = tokenize(text);
  return parse_sort(tokens);
}

SurfaceTerm parse_term(std::span<const Token> tokens) {
  return exactly_one<SurfaceTerm>(tokens, "term", term_from_sexpr);
}

SurfaceTerm parse_term(std::string_view text) {
  const auto tokens = tokenize(text);
  return parse_term(tokens);
}

}  // namespace hosmt
