#include "hosmt/certificate.hpp"

#include <array>
#include <map>
#include <set>

#include "hosmt/core_printer.hpp"
#include "hosmt/diagnostics.hpp"
#include "hosmt/parser.hpp"
#include "hosmt/printer.hpp"

namespace hosmt {
namespace {

constexpr std::array<std::pair<Rule, std::string_view>, 11> kRuleNames{{
    {Rule::refl, "refl"},
    {Rule::trans, "trans"},
    {Rule::cong, "cong"},
    {Rule::bind, "bind"},
    {Rule::beta, "beta"},
    {Rule::let, "let"},
    {Rule::sko_ex, "sko_ex"},
    {Rule::sko_forall, "sko_forall"},
    {Rule::taut, "taut"},
    {Rule::inst_forall, "inst_forall"},
    {Rule::inst_exists, "inst_exists"},
}};

[[noreturn]] void cert_error(SourcePos pos, const std::string& msg) {
  throw Error(ErrorKind::certificate, pos, msg);
}

class Reader {
 public:
  Reader() : env_(cert_.signature) {
    env_.make_binder = [this](const std::string& name, const Sort& sort) { return global(name, sort); };
    env_.before_signature = [this](const std::string& name) -> std::optional<Term> {
      for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
        if (it->name == name) return mk_var(*it);
      }
      return std::nullopt;
    };
    env_.after_signature = [this](const std::string& name) -> std::optional<Term> {
      const Var* found = nullptr;
      for (const auto& [key, v] : globals_) {
        if (key.first != name) continue;
        if (found) return std::nullopt;
        found = &v;
      }
      if (!found) return std::nullopt;
      return mk_var(*found);
    };
  }

  Certificate run(std::string_view text) {
    auto tokens = tokenize(text);
    auto forms = read_sexprs(tokens);
    bool seen_step = false;
    for (const SExpr& form : forms) {
      if (form.is_list && !form.items.empty() && form.items[0].is_symbol("step")) {
        seen_step = true;
        cert_.steps.push_back(step(form));
        continue;
      }
      if (seen_step) cert_error(form.pos, "declarations must precede the first step");
      declaration(form);
    }
    if (cert_.steps.empty()) cert_error({}, "certificate has no steps");
    return std::move(cert_);
  }

 private:
  Var global(const std::string& name, const Sort& sort) {
    auto key = std::make_pair(name, sort);
    auto it = globals_.find(key);
    if (it != globals_.end()) return it->second;
    return globals_.emplace(key, fresh_var(name, sort)).first->second;
  }

  void declaration(const SExpr& form) {
    Command c = command_from_sexpr(form);
    switch (c.kind) {
      case Command::Kind::declare_sort:
        cert_.signature.declare_sort(c.name, c.arity, c.pos);
        break;
      case Command::Kind::declare_fun:
        cert_.signature.declare_fun(c.name, normalize_decl(cert_.signature, c.arg_sorts, *c.result), c.pos);
        break;
      default:
        cert_error(form.pos, "expected a declaration or a step");
    }
  }

  Term term(const SExpr& e) { return infer_sort(env_, term_from_sexpr(e)); }

  Context context(const SExpr& e) {
    if (!e.is_list) cert_error(e.pos, "expected a list of context entries");
    Context ctx;
    for (const SExpr& entry : e.items) {
      if (!entry.is_list || entry.items.empty()) cert_error(entry.pos, "malformed context entry");
      const SExpr& head = entry.items[0];
      if (head.is_symbol("fix")) {
        if (entry.items.size() != 3 || !entry.items[1].is_symbol()) {
          cert_error(entry.pos, "expected (fix <name> <sort>)");
        }
        Var v = global(entry.items[1].atom.text,
                       resolve_sort(cert_.signature, sort_from_sexpr(entry.items[2])));
        ctx = ctx.fix(v);
        scope_.push_back(v);
      } else if (head.is_symbol("map")) {
        if (entry.items.size() < 2) cert_error(entry.pos, "expected (map (<name> <term>)+)");
        std::vector<Binding> pairs;
        for (std::size_t i = 1; i < entry.items.size(); ++i) {
          const SExpr& p = entry.items[i];
          if (!p.is_list || p.items.size() != 2 || !p.items[0].is_symbol()) {
            cert_error(p.pos, "expected (<name> <term>)");
          }
          Term image = term(p.items[1]);
          pairs.emplace_back(global(p.items[0].atom.text, image.sort()), image);
        }
        try {
          ctx = ctx.map(pairs);
        } catch (const InvariantError& err) {
          cert_error(entry.pos, err.what());
        }
        for (const auto& pr : pairs) scope_.push_back(pr.first);
      } else {
        cert_error(entry.pos, "expected a fix or map entry");
      }
    }
    return ctx;
  }

  ProofStep step(const SExpr& form) {
    ProofStep s;
    s.pos = form.pos;
    if (form.items.size() < 2 || !form.items[1].is_symbol()) cert_error(form.pos, "expected (step <id> ...)");
    s.id = form.items[1].atom.text;
    if (cert_.find(s.id)) cert_error(form.pos, "duplicate step id " + s.id);

    std::map<std::string, const SExpr*> attrs;
    for (std::size_t i = 2; i < form.items.size(); i += 2) {
      const SExpr& key = form.items[i];
      if (!key.is_keyword()) cert_error(key.pos, "expected a keyword");
      if (i + 1 >= form.items.size()) cert_error(key.pos, "missing value for " + key.atom.text);
      static const std::set<std::string> known{":rule", ":premises", ":context", ":conclusion",
                                               ":binding", ":theory"};
      if (!known.count(key.atom.text)) cert_error(key.pos, "unknown attribute " + key.atom.text);
      if (!attrs.emplace(key.atom.text, &form.items[i + 1]).second) {
        cert_error(key.pos, "repeated attribute " + key.atom.text);
      }
    }
    auto get = [&](const char* k) -> const SExpr* {
      auto it = attrs.find(k);
      return it == attrs.end() ? nullptr : it->second;
    };

    const SExpr* rule = get(":rule");
    if (!rule || !rule->is_symbol()) cert_error(form.pos, "step " + s.id + " has no :rule");
    auto r = rule_from_name(rule->atom.text);
    if (!r) cert_error(rule->pos, "unknown rule '" + rule->atom.text + "'");
    s.rule = *r;

    if (const SExpr* ps = get(":premises")) {
      if (!ps->is_list) cert_error(ps->pos, "expected a list of premise ids");
      for (const SExpr& p : ps->items) {
        if (!p.is_symbol()) cert_error(p.pos, "expected a step id");
        s.premises.push_back(p.atom.text);
      }
    }
    if (const SExpr* th = get(":theory")) {
      if (!th->is_symbol()) cert_error(th->pos, "expected a theory name");
      s.theory = th->atom.text;
    }

    scope_.clear();
    const SExpr* concl = get(":conclusion");
    if (!concl) cert_error(form.pos, "step " + s.id + " has no :conclusion");
    if (is_lemma_rule(s.rule)) {
      if (get(":context")) cert_error(form.pos, "lemma step " + s.id + " takes no :context");
      Term f = term(*concl);
      if (!f.sort().is_bool()) cert_error(concl->pos, "lemma conclusion must be a formula");
      s.conclusion = f;
      const SExpr* binding = get(":binding");
      if (!binding || !binding->is_list || binding->items.empty()) {
        cert_error(form.pos, "lemma step " + s.id + " needs a :binding");
      }
      for (const SExpr& b : binding->items) {
        if (!b.is_list || b.items.size() != 2 || !b.items[0].is_symbol()) {
          cert_error(b.pos, "expected (<name> <term>)");
        }
        Term t = term(b.items[1]);
        s.binding.emplace_back(global(b.items[0].atom.text, t.sort()), t);
      }
      return s;
    }
    if (get(":binding")) cert_error(form.pos, "only lemma steps take a :binding");
    Context ctx;
    if (const SExpr* c = get(":context")) ctx = context(*c);
    if (!concl->is_list || concl->items.size() != 3 || !concl->items[0].is_symbol("=")) {
      cert_error(concl->pos, "expected an equality (= <term> <term>)");
    }
    Term lhs = term(concl->items[1]);
    Term rhs = term(concl->items[2]);
    if (!(lhs.sort() == rhs.sort())) {
      cert_error(concl->pos, "equality between sorts " + to_string(lhs.sort()) + " and " +
                                 to_string(rhs.sort()));
    }
    s.conclusion = EqJudgment{ctx, lhs, rhs};
    scope_.clear();
    return s;
  }

  Certificate cert_;
  TypingEnv env_;
  std::map<std::pair<std::string, Sort>, Var> globals_;
  std::vector<Var> scope_;
};

std::string print_entries(const Context& ctx, NameTable& names) {
  std::string out = "(";
  bool first = true;
  for (const auto& e : ctx.entries()) {
    if (!first) out += ' ';
    first = false;
    if (const auto* f = std::get_if<FixEntry>(&e)) {
      out += "(fix " + quote_symbol(names.name_of(f->var)) + " " + print_sort(to_surface(f->var.sort)) + ")";
    } else {
      out += "(map";
      for (const auto& [x, t] : std::get<MapEntry>(e).pairs) {
        out += " (" + quote_symbol(names.name_of(x)) + " " + to_string(t, names) + ")";
      }
      out += ")";
    }
  }
  return out + ")";
}

std::string print_declaration(const std::string& name, const Sort& sort) {
  std::string out = "(declare-fun " + quote_symbol(name) + " (";
  const Sort* cur = &sort;
  bool first = true;
  while (cur->is_fun()) {
    if (!first) out += ' ';
    first = false;
    out += print_sort(to_surface(cur->domain()));
    cur = &cur->codomain();
  }
  return out + ") " + print_sort(to_surface(*cur)) + ")";
}

}  // namespace

std::string_view rule_name(Rule r) {
  for (const auto& [rule, name] : kRuleNames) {
    if (rule == r) return name;
  }
  return "?";
}

std::optional<Rule> rule_from_name(std::string_view name) {
  for (const auto& [rule, n] : kRuleNames) {
    if (n == name) return rule;
  }
  return std::nullopt;
}

bool is_lemma_rule(Rule r) { return r == Rule::inst_forall || r == Rule::inst_exists; }

const ProofStep* Certificate::find(std::string_view id) const {
  for (const auto& s : steps) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

Certificate parse_certificate(std::string_view text) { return Reader().run(text); }

std::string print_step(const ProofStep& step, NameTable& names) {
  std::string out = "(step " + quote_symbol(step.id) + " :rule " + std::string(rule_name(step.rule));
  if (!step.premises.empty()) {
    out += " :premises (";
    for (std::size_t i = 0; i < step.premises.size(); ++i) {
      if (i) out += ' ';
      out += quote_symbol(step.premises[i]);
    }
    out += ")";
  }
  if (step.is_lemma()) {
    out += " :conclusion " + to_string(step.formula(), names) + " :binding (";
    for (std::size_t i = 0; i < step.binding.size(); ++i) {
      if (i) out += ' ';
      out += "(" + quote_symbol(names.name_of(step.binding[i].first)) + " " +
             to_string(step.binding[i].second, names) + ")";
    }
    out += ")";
  } else {
    const EqJudgment& j = step.judgment();
    out += " :context " + print_entries(j.context, names);
    out += " :conclusion (= " + to_string(j.lhs, names) + " " + to_string(j.rhs, names) + ")";
  }
  if (step.theory) out += " :theory " + quote_symbol(*step.theory);
  return out + ")";
}

std::string print_certificate(const Certificate& cert) {
  NameTable names;
  std::string out;
  for (const auto& [name, arity] : cert.signature.declared_sorts()) {
    names.reserve(name);
    out += "(declare-sort " + quote_symbol(name) + " " + std::to_string(arity) + ")\n";
  }
  for (const auto& name : cert.signature.declared()) {
    names.reserve(name);
    out += print_declaration(name, *cert.signature.lookup(name)) + "\n";
  }
  for (const auto& step : cert.steps) out += print_step(step, names) + "\n";
  return out;
}

std::string print_judgment(const EqJudgment& j) {
  NameTable names;
  reserve_constants(j.lhs, names);
  reserve_constants(j.rhs, names);
  return print_entries(j.context, names) + " |> (= " + to_string(j.lhs, names) + " " +
         to_string(j.rhs, names) + ")";
}

}  // namespace hosmt
