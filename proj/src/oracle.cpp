#include "hosmt/oracle.hpp"

#include "hosmt/core_printer.hpp"
#include "hosmt/diagnostics.hpp"
#include "hosmt/lexer.hpp"
#include "hosmt/printer.hpp"

namespace hosmt {
namespace {

BoxedTerm encode(const std::vector<ContextEntry>& entries, std::size_t i, const Term& t) {
  if (i == entries.size()) return BoxedTerm::box(t);
  BoxedTerm inner = encode(entries, i + 1, t);
  if (const auto* f = std::get_if<FixEntry>(&entries[i])) return BoxedTerm::lambda(f->var, std::move(inner));
  std::vector<Var> xs;
  std::vector<Term> args;
  for (const auto& [x, s] : std::get<MapEntry>(entries[i]).pairs) {
    xs.push_back(x);
    args.push_back(s);
  }
  return BoxedTerm::apply(std::move(xs), std::move(inner), std::move(args));
}

bool range_mentions(const Substitution& sigma, VarId id) {
  for (const auto& [key, b] : sigma.entries()) {
    if (b.second.has_free(id)) return true;
  }
  return false;
}

void normalize(const BoxedTerm& m, Substitution sigma, BoxNormalForm& out) {
  switch (m.kind()) {
    case BoxedTerm::Kind::box:
      out.body = substitute(m.content(), sigma);
      return;
    case BoxedTerm::Kind::lambda: {
      Var x = m.vars().front();
      sigma.erase(x.id);
      if (range_mentions(sigma, x.id)) {
        Var renamed = fresh_var(x.name, x.sort);
        sigma.set(x, mk_var(renamed));
        x = renamed;
      }
      out.prefix.push_back(x);
      normalize(m.body(), std::move(sigma), out);
      return;
    }
    case BoxedTerm::Kind::apply: {
      Substitution inner = sigma;
      for (std::size_t i = 0; i < m.vars().size(); ++i) {
        inner.set(m.vars()[i], substitute(m.args()[i], sigma));
      }
      normalize(m.body(), std::move(inner), out);
      return;
    }
  }
}

std::string show(const BoxedTerm& m, NameTable& names) {
  switch (m.kind()) {
    case BoxedTerm::Kind::box:
      return "[" + to_string(m.content(), names) + "]";
    case BoxedTerm::Kind::lambda: {
      const Var& x = m.vars().front();
      return "(lambda ((" + quote_symbol(names.name_of(x)) + " " + print_sort(to_surface(x.sort)) + ")) " +
             show(m.body(), names) + ")";
    }
    case BoxedTerm::Kind::apply: {
      std::string out = "((lambda (";
      for (std::size_t i = 0; i < m.vars().size(); ++i) {
        if (i) out += ' ';
        out += "(" + quote_symbol(names.name_of(m.vars()[i])) + " " + print_sort(to_surface(m.vars()[i].sort)) + ")";
      }
      out += ") " + show(m.body(), names) + ")";
      for (const auto& a : m.args()) out += " " + to_string(a, names);
      return out + ")";
    }
  }
  return {};
}

struct Aligned {
  std::vector<Var> prefix;
  Term lhs;
  Term rhs;
};

Aligned align(const BoxedTerm& m, const BoxedTerm& n) {
  BoxNormalForm l{{}, mk_const("true", Sort::boolean())};
  BoxNormalForm r = l;
  normalize(m, {}, l);
  normalize(n, {}, r);
  if (l.prefix.size() != r.prefix.size()) {
    throw Error(ErrorKind::certificate, {}, "encoding prefix mismatch: " + std::to_string(l.prefix.size()) +
                                                " vs " + std::to_string(r.prefix.size()) + " binders");
  }
  Substitution rename;
  for (std::size_t i = 0; i < l.prefix.size(); ++i) {
    if (!(l.prefix[i].sort == r.prefix[i].sort)) {
      throw Error(ErrorKind::certificate, {}, "encoding prefix mismatch: binder sorts differ");
    }
    if (!(l.prefix[i] == r.prefix[i])) rename.set(r.prefix[i], mk_var(l.prefix[i]));
  }
  Term rhs = substitute(r.body, rename);
  if (!(l.body.sort() == rhs.sort())) {
    throw Error(ErrorKind::certificate, {}, "encoded sides have different sorts");
  }
  return {std::move(l.prefix), std::move(l.body), std::move(rhs)};
}

}  // namespace

BoxedTerm BoxedTerm::box(Term t) {
  BoxedTerm m;
  m.kind_ = Kind::box;
  m.content_ = std::move(t);
  return m;
}

BoxedTerm BoxedTerm::lambda(Var x, BoxedTerm body) {
  BoxedTerm m;
  m.kind_ = Kind::lambda;
  m.vars_ = {std::move(x)};
  m.body_ = std::make_shared<const BoxedTerm>(std::move(body));
  return m;
}

BoxedTerm BoxedTerm::apply(std::vector<Var> xs, BoxedTerm body, std::vector<Term> args) {
  if (xs.empty() || xs.size() != args.size()) throw InvariantError("malformed boxed application");
  BoxedTerm m;
  m.kind_ = Kind::apply;
  m.vars_ = std::move(xs);
  m.args_ = std::move(args);
  m.body_ = std::make_shared<const BoxedTerm>(std::move(body));
  return m;
}

std::string to_string(const BoxedTerm& m) {
  NameTable names;
  return show(m, names);
}

BoxedTerm encode_left(const Context& ctx, const Term& t) { return encode(ctx.entries(), 0, t); }

BoxedTerm encode_right(const Context& ctx, const Term& u) { return encode(ctx.entries(), 0, u); }

BoxNormalForm normalize_boxed(const BoxedTerm& m) {
  BoxNormalForm out{{}, mk_const("true", Sort::boolean())};
  normalize(m, {}, out);
  return out;
}

Term reify(const BoxedTerm& m, const BoxedTerm& n) {
  Aligned a = align(m, n);
  Term f = mk_eq(a.lhs, a.rhs);
  for (auto it = a.prefix.rbegin(); it != a.prefix.rend(); ++it) f = mk_forall(*it, f);
  return f;
}

std::string_view oracle_verdict_name(OracleVerdict v) {
  return v == OracleVerdict::lambda_valid ? "lambda-valid" : "needs-theory";
}

OracleResult oracle_check(const EqJudgment& j, std::size_t max_steps) {
  BoxedTerm m = encode_left(j.context, j.lhs);
  BoxedTerm n = encode_right(j.context, j.rhs);
  Aligned a = align(m, n);
  Term f = mk_eq(a.lhs, a.rhs);
  for (auto it = a.prefix.rbegin(); it != a.prefix.rend(); ++it) f = mk_forall(*it, f);
  bool same = alpha_eq(beta_normal_form(expand_lets(a.lhs), max_steps),
                       beta_normal_form(expand_lets(a.rhs), max_steps));
  return {same ? OracleVerdict::lambda_valid : OracleVerdict::needs_theory, f};
}

CertificateOracleReport oracle_check_certificate(const Certificate& cert, std::size_t max_steps) {
  CertificateOracleReport report;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const ProofStep& s = cert.steps[i];
    if (s.is_lemma()) continue;
    ++report.checked;
    if (oracle_check(s.judgment(), max_steps).verdict != OracleVerdict::lambda_valid) {
      report.first_rejected = i;
      break;
    }
  }
  return report;
}

}  // namespace hosmt
