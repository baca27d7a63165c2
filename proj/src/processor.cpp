#include "hosmt/processor.hpp"

#include "hosmt/diagnostics.hpp"

namespace hosmt {
namespace {

bool binder_free(const Term& t) {
  switch (t.kind()) {
    case TermKind::var:
    case TermKind::constant:
      return true;
    case TermKind::app:
      return binder_free(t.fun()) && binder_free(t.arg());
    default:
      return false;
  }
}

class Processor {
 public:
  Processor(const Signature& sig, const ProcessOptions& opts) : opts_(opts) { cert_.signature = sig; }

  Processed run(const Term& t) {
    Result r = proc(Context{}, t);
    return {r.term, std::move(cert_)};
  }

 private:
  struct Result {
    Term term;
    std::string id;
  };

  std::string emit(Rule rule, std::vector<std::string> premises, const Context& ctx, const Term& lhs,
                   const Term& rhs) {
    ProofStep s;
    s.id = opts_.step_prefix + std::to_string(cert_.steps.size() + 1);
    s.rule = rule;
    s.premises = std::move(premises);
    s.conclusion = EqJudgment{ctx, lhs, rhs};
    cert_.steps.push_back(std::move(s));
    return cert_.steps.back().id;
  }

  Var canonical(const Sort& sort) {
    std::string name = next_name_ == 0 ? "w" : "w" + std::to_string(next_name_);
    ++next_name_;
    return fresh_var(std::move(name), sort);
  }

  void count_beta() {
    if (++betas_ > opts_.max_beta_steps) throw DivergenceError(opts_.max_beta_steps);
  }

  bool leaf(const Context& ctx, const Term& t) const {
    if (t.is_var() || t.is_const()) return true;
    if (opts_.leaves == LeafGranularity::atoms) return false;
    return binder_free(t) && is_beta_normal(apply_context(ctx, t));
  }

  Result proc(const Context& ctx, const Term& t) {
    if (leaf(ctx, t)) {
      Term u = apply_context(ctx, t);
      return {u, emit(Rule::refl, {}, ctx, t, u)};
    }
    switch (t.kind()) {
      case TermKind::lambda:
      case TermKind::forall:
      case TermKind::exists:
      case TermKind::choice: {
        const Var& x = t.var();
        Var y = canonical(x.sort);
        Context inner = ctx.fix(y).map({{x, mk_var(y)}});
        Result body = proc(inner, t.body());
        Term u = mk_binder(t.kind(), y, body.term);
        return {u, emit(Rule::bind, {body.id}, ctx, t, u)};
      }
      case TermKind::let: {
        std::vector<std::string> premises;
        std::vector<Binding> pairs;
        for (const auto& [x, v] : t.bindings()) {
          Result r = proc(ctx, v);
          premises.push_back(r.id);
          pairs.emplace_back(x, r.term);
        }
        Result body = proc(ctx.map(std::move(pairs)), t.body());
        premises.push_back(body.id);
        return {body.term, emit(Rule::let, std::move(premises), ctx, t, body.term)};
      }
      case TermKind::app:
        if (t.fun().is_lambda()) return beta(ctx, t);
        return application(ctx, t);
      default:
        throw InvariantError("unexpected term in processing");
    }
  }

  // Γ ⊳ (λx. b) v
  Result beta(const Context& ctx, const Term& t) {
    count_beta();
    const Term& lam = t.fun();
    Result arg = proc(ctx, t.arg());
    Result body = proc(ctx.map({{lam.var(), arg.term}}), lam.body());
    return {body.term, emit(Rule::beta, {arg.id, body.id}, ctx, t, body.term)};
  }

  Result application(const Context& ctx, const Term& t) {
    Result head = proc(ctx, t.fun());
    Result arg = proc(ctx, t.arg());
    Term u = mk_app(head.term, arg.term);
    std::string cong = emit(Rule::cong, {head.id, arg.id}, ctx, t, u);
    if (!head.term.is_lambda()) return {u, cong};
    // The head reduced to an abstraction: contract the new redex and chain.
    Result reduced = beta(ctx, u);
    return {reduced.term, emit(Rule::trans, {cong, reduced.id}, ctx, t, reduced.term)};
  }

  ProcessOptions opts_;
  Certificate cert_;
  std::size_t next_name_ = 0;
  std::size_t betas_ = 0;
};

Lemma instantiate(const Term& phi, const Term& t, const std::string& id, bool forall) {
  TermKind want = forall ? TermKind::forall : TermKind::exists;
  if (phi.kind() != want) {
    throw Error(ErrorKind::sort, {}, forall ? "not a universal" : "not an existential");
  }
  const Var& x = phi.var();
  if (!(x.sort == t.sort())) {
    throw Error(ErrorKind::sort, {}, "instantiation of " + x.name + " expects sort " + to_string(x.sort) +
                                         ", found " + to_string(t.sort()));
  }
  Term instance = substitute(phi.body(), Substitution{{x, t}});
  Term formula = forall ? mk_implies(phi, instance) : mk_implies(instance, phi);
  ProofStep step;
  step.id = id;
  step.rule = forall ? Rule::inst_forall : Rule::inst_exists;
  step.conclusion = formula;
  step.binding = {{x, t}};
  return {formula, std::move(step)};
}

}  // namespace

Processed process(const Term& t, const Signature& sig, const ProcessOptions& opts) {
  return Processor(sig, opts).run(t);
}

Lemma instantiate_forall(const Term& phi, const Term& t, const std::string& id) {
  return instantiate(phi, t, id, true);
}

Lemma instantiate_exists(const Term& phi, const Term& t, const std::string& id) {
  return instantiate(phi, t, id, false);
}

}  // namespace hosmt
