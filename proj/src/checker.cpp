#include "hosmt/checker.hpp"

#include <set>

#include "hosmt/core_printer.hpp"
#include "hosmt/diagnostics.hpp"

namespace hosmt {
namespace {

StepCheck ok() { return {}; }

StepCheck failure(const ProofStep& s, const std::string& msg) {
  return {StepStatus::failed, std::string(rule_name(s.rule)) + " at step " + s.id + ": " + msg};
}

bool same_binder_kind(TermKind k) {
  return k == TermKind::lambda || k == TermKind::forall || k == TermKind::exists || k == TermKind::choice;
}

std::string show(const Term& t) { return "'" + to_string(t) + "'"; }

class RuleChecker {
 public:
  RuleChecker(const ProofStep& step, std::span<const ProofStep* const> premises,
              const TautologyValidators& validators)
      : s_(step), ps_(premises), validators_(validators) {}

  StepCheck run() {
    if (is_lemma_rule(s_.rule)) {
      if (!s_.is_lemma()) return failure(s_, "expected a lemma formula as conclusion");
      if (!ps_.empty()) return failure(s_, "takes no premises");
      return instantiation();
    }
    if (s_.is_lemma()) return failure(s_, "expected an equality judgment as conclusion");
    for (std::size_t i = 0; i < ps_.size(); ++i) {
      if (ps_[i]->is_lemma()) return failure(s_, "premise " + ps_[i]->id + " is not an equality judgment");
    }
    switch (s_.rule) {
      case Rule::refl:
        return refl();
      case Rule::cong:
        // A premise-free cong leaf is read as refl.
        return ps_.empty() ? refl() : cong();
      case Rule::trans:
        return trans();
      case Rule::bind:
        return bind();
      case Rule::beta:
        return beta();
      case Rule::let:
        return let();
      case Rule::sko_ex:
      case Rule::sko_forall:
        return skolem();
      case Rule::taut:
        return taut();
      default:
        return failure(s_, "unexpected rule");
    }
  }

 private:
  const EqJudgment& concl() const { return s_.judgment(); }
  const EqJudgment& premise(std::size_t i) const { return ps_[i]->judgment(); }

  StepCheck arity(std::size_t n) const {
    if (ps_.size() != n) {
      return failure(s_, "expected " + std::to_string(n) + " premises, found " + std::to_string(ps_.size()));
    }
    return ok();
  }

  std::optional<StepCheck> same_context(std::size_t i) const {
    if (!(premise(i).context == concl().context)) {
      return failure(s_, "context of premise " + ps_[i]->id + " differs from the conclusion's");
    }
    return std::nullopt;
  }

  StepCheck refl() const {
    if (auto a = arity(0); a.status == StepStatus::failed) return a;
    Term applied = apply_context(concl().context, concl().lhs);
    if (!alpha_eq(applied, concl().rhs)) {
      return failure(s_, "context applied to the left side gives " + show(applied) + ", not " +
                             show(concl().rhs));
    }
    return ok();
  }

  StepCheck cong() const {
    if (auto a = arity(2); a.status == StepStatus::failed) return a;
    const Term& l = concl().lhs;
    const Term& r = concl().rhs;
    if (!l.is_app() || !r.is_app()) return failure(s_, "both sides must be applications");
    for (std::size_t i = 0; i < 2; ++i) {
      if (auto c = same_context(i)) return *c;
    }
    if (!alpha_eq(premise(0).lhs, l.fun()) || !alpha_eq(premise(0).rhs, r.fun())) {
      return failure(s_, "premise " + ps_[0]->id + " does not relate the heads " + show(l.fun()) +
                             " and " + show(r.fun()));
    }
    if (!alpha_eq(premise(1).lhs, l.arg()) || !alpha_eq(premise(1).rhs, r.arg())) {
      return failure(s_, "premise " + ps_[1]->id + " does not relate the arguments " + show(l.arg()) +
                             " and " + show(r.arg()));
    }
    return ok();
  }

  StepCheck trans() const {
    if (ps_.size() < 2) return failure(s_, "expected at least 2 premises");
    for (std::size_t i = 0; i < ps_.size(); ++i) {
      if (auto c = same_context(i)) return *c;
    }
    if (!alpha_eq(premise(0).lhs, concl().lhs)) {
      return failure(s_, "left side " + show(concl().lhs) + " does not start the chain");
    }
    for (std::size_t i = 0; i + 1 < ps_.size(); ++i) {
      if (!alpha_eq(premise(i).rhs, premise(i + 1).lhs)) {
        return failure(s_, "premises " + ps_[i]->id + " and " + ps_[i + 1]->id + " do not chain at " +
                               show(premise(i).rhs));
      }
    }
    if (!alpha_eq(premise(ps_.size() - 1).rhs, concl().rhs)) {
      return failure(s_, "right side " + show(concl().rhs) + " does not end the chain");
    }
    return ok();
  }

  // (Γ, y, x ↦ y) ⊳ s ≃ t  gives  Γ ⊳ Bx. s ≃ By. t  if y ∉ FV(Bx. s)
  StepCheck bind() const {
    if (auto a = arity(1); a.status == StepStatus::failed) return a;
    const Term& l = concl().lhs;
    const Term& r = concl().rhs;
    if (!same_binder_kind(l.kind()) || l.kind() != r.kind()) {
      return failure(s_, "both sides must be binders of the same kind");
    }
    const Var& x = l.var();
    const Var& y = r.var();
    if (!(x.sort == y.sort)) return failure(s_, "bound variables have different sorts");
    if (l.has_free(y.id)) {
      return failure(s_, "side condition y not in FV violated: " + y.name + " occurs free in " + show(l));
    }
    const Context& pc = premise(0).context;
    bool shape = pc.size() == concl().context.size() + 2;
    if (shape) {
      const auto* m = std::get_if<MapEntry>(&pc.last());
      const auto* f = std::get_if<FixEntry>(&pc.parent().last());
      shape = m && f && f->var == y && m->pairs.size() == 1 && m->pairs[0].first == x &&
              m->pairs[0].second.is_var() && m->pairs[0].second.var() == y &&
              pc.parent().parent() == concl().context;
    }
    if (!shape) return failure(s_, "premise context must extend the conclusion's by " + y.name + ", " + x.name + " -> " + y.name);
    if (!alpha_eq(premise(0).lhs, l.body()) || !alpha_eq(premise(0).rhs, r.body())) {
      return failure(s_, "premise does not relate the binder bodies " + show(l.body()) + " and " +
                             show(r.body()));
    }
    return ok();
  }

  // Γ ⊳ v ≃ s and (Γ, x ↦ s) ⊳ t ≃ u  give  Γ ⊳ (λx. t) v ≃ u  if Γ(s) = s
  StepCheck beta() const {
    if (auto a = arity(2); a.status == StepStatus::failed) return a;
    const Term& l = concl().lhs;
    if (!l.is_app() || !l.fun().is_lambda()) return failure(s_, "left side " + show(l) + " is not a beta-redex");
    const Var& x = l.fun().var();
    const Context& g = concl().context;
    if (auto c = same_context(0)) return *c;
    if (!alpha_eq(premise(0).lhs, l.arg())) {
      return failure(s_, "premise " + ps_[0]->id + " does not start from the argument " + show(l.arg()));
    }
    const Term& s = premise(0).rhs;
    if (!alpha_eq(apply_context(g, s), s)) {
      return failure(s_, "side condition Gamma(s) = s violated for " + show(s));
    }
    if (!(premise(1).context == g.map({{x, s}}))) {
      return failure(s_, "context of premise " + ps_[1]->id + " must extend the conclusion's by " + x.name +
                             " -> " + to_string(s));
    }
    if (!alpha_eq(premise(1).lhs, l.fun().body())) {
      return failure(s_, "premise " + ps_[1]->id + " does not start from the body " + show(l.fun().body()));
    }
    if (!alpha_eq(premise(1).rhs, concl().rhs)) {
      return failure(s_, "right side " + show(concl().rhs) + " differs from premise " + ps_[1]->id);
    }
    return ok();
  }

  StepCheck let() const {
    const Term& l = concl().lhs;
    if (!l.is_let()) return failure(s_, "left side " + show(l) + " is not a let");
    auto bs = l.bindings();
    if (auto a = arity(bs.size() + 1); a.status == StepStatus::failed) return a;
    const Context& g = concl().context;
    std::vector<Binding> pairs;
    for (std::size_t i = 0; i < bs.size(); ++i) {
      if (auto c = same_context(i)) return *c;
      if (!alpha_eq(premise(i).lhs, bs[i].second)) {
        return failure(s_, "premise " + ps_[i]->id + " does not start from " + show(bs[i].second));
      }
      const Term& s = premise(i).rhs;
      if (!alpha_eq(apply_context(g, s), s)) {
        return failure(s_, "side condition Gamma(s) = s violated for " + show(s));
      }
      pairs.emplace_back(bs[i].first, s);
    }
    const EqJudgment& last = premise(bs.size());
    if (!(last.context == g.map(std::move(pairs)))) {
      return failure(s_, "context of premise " + ps_.back()->id + " must extend the conclusion's by the let bindings");
    }
    if (!alpha_eq(last.lhs, l.body())) {
      return failure(s_, "premise " + ps_.back()->id + " does not start from the body " + show(l.body()));
    }
    if (!alpha_eq(last.rhs, concl().rhs)) {
      return failure(s_, "right side " + show(concl().rhs) + " differs from premise " + ps_.back()->id);
    }
    return ok();
  }

  // (Γ, x ↦ εx. φ) ⊳ φ ≃ ψ  gives  Γ ⊳ ∃x. φ ≃ ψ; sko_forall uses εx. ¬φ.
  StepCheck skolem() const {
    if (auto a = arity(1); a.status == StepStatus::failed) return a;
    const Term& l = concl().lhs;
    TermKind want = s_.rule == Rule::sko_ex ? TermKind::exists : TermKind::forall;
    if (l.kind() != want) return failure(s_, "left side " + show(l) + " has the wrong quantifier");
    const Var& x = l.var();
    Term chosen = mk_choice(x, s_.rule == Rule::sko_ex ? l.body() : mk_not(l.body()));
    if (!(premise(0).context == concl().context.map({{x, chosen}}))) {
      return failure(s_, "premise context must extend the conclusion's by " + x.name + " -> " + to_string(chosen));
    }
    if (!alpha_eq(premise(0).lhs, l.body())) {
      return failure(s_, "premise does not start from the quantifier body " + show(l.body()));
    }
    if (!alpha_eq(premise(0).rhs, concl().rhs)) {
      return failure(s_, "right side " + show(concl().rhs) + " differs from the premise");
    }
    return ok();
  }

  StepCheck taut() const {
    if (auto a = arity(0); a.status == StepStatus::failed) return a;
    std::string theory = s_.theory.value_or("");
    if (const auto* v = validators_.find(theory)) {
      if (!(*v)(concl())) return failure(s_, "not a tautology of theory " + theory);
      return ok();
    }
    return {StepStatus::trusted, "taut at step " + s_.id + ": trusted leaf" +
                                     (theory.empty() ? std::string() : " of theory " + theory)};
  }

  StepCheck instantiation() const {
    bool forall = s_.rule == Rule::inst_forall;
    auto imp = as_implies(s_.formula());
    if (!imp) return failure(s_, "conclusion is not an implication");
    const Term& quantified = forall ? imp->first : imp->second;
    const Term& instance = forall ? imp->second : imp->first;
    TermKind want = forall ? TermKind::forall : TermKind::exists;
    if (s_.binding.empty()) return failure(s_, "empty binding");
    const Term* body = &quantified;
    Substitution sigma;
    for (const auto& [x, t] : s_.binding) {
      if (body->kind() != want) {
        return failure(s_, show(*body) + " is not " + (forall ? "a universal" : "an existential") +
                               " binding " + x.name);
      }
      if (!(body->var() == x)) {
        return failure(s_, "binding names " + x.name + " but the quantifier binds " + body->var().name);
      }
      if (!(x.sort == t.sort())) return failure(s_, "binding for " + x.name + " has the wrong sort");
      sigma.set(x, t);
      body = &body->body();
    }
    Term expected = substitute(*body, sigma);
    if (!alpha_eq(expected, instance)) {
      return failure(s_, "instance " + show(instance) + " differs from " + show(expected));
    }
    return ok();
  }

  const ProofStep& s_;
  std::span<const ProofStep* const> ps_;
  const TautologyValidators& validators_;
};

bool eq_tautology(const EqJudgment& j) {
  Term l = beta_normal_form(expand_lets(apply_context(j.context, j.lhs)));
  Term r = beta_normal_form(expand_lets(apply_context(j.context, j.rhs)));
  return alpha_eq(l, r);
}

}  // namespace

TautologyValidators::TautologyValidators() { add("eq", eq_tautology); }

const TautologyValidators::Validator* TautologyValidators::find(const std::string& theory) const {
  auto it = validators_.find(theory);
  return it == validators_.end() ? nullptr : &it->second;
}

StepCheck check_rule(const ProofStep& step, std::span<const ProofStep* const> premises,
                     const TautologyValidators& validators) {
  try {
    return RuleChecker(step, premises, validators).run();
  } catch (const DivergenceError& e) {
    return failure(step, e.what());
  } catch (const InvariantError& e) {
    return failure(step, e.what());
  }
}

StepCheck check_step(const Certificate& cert, std::size_t index, const TautologyValidators& validators) {
  const ProofStep& step = cert.steps.at(index);
  std::vector<const ProofStep*> premises;
  for (const auto& id : step.premises) {
    const ProofStep* found = nullptr;
    for (std::size_t i = 0; i < index; ++i) {
      if (cert.steps[i].id == id) found = &cert.steps[i];
    }
    if (!found) {
      bool later = false;
      for (std::size_t i = index; i < cert.steps.size(); ++i) later |= cert.steps[i].id == id;
      return failure(step, later ? "premise " + id + " does not precede the step"
                                 : "dangling premise id " + id);
    }
    premises.push_back(found);
  }
  return check_rule(step, premises, validators);
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::valid:
      return "valid";
    case Verdict::invalid:
      return "invalid";
    case Verdict::valid_with_trust:
      return "valid-with-trust";
  }
  return "?";
}

CheckReport check_certificate(const Certificate& cert, const TautologyValidators& validators) {
  CheckReport report;
  if (cert.steps.empty()) {
    report.message = "certificate has no steps";
    return report;
  }
  std::set<std::string> ids;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const ProofStep& step = cert.steps[i];
    StepCheck c = ids.insert(step.id).second ? check_step(cert, i, validators)
                                             : failure(step, "duplicate step id");
    if (c.status == StepStatus::trusted) ++report.trusted;
    if (c.status == StepStatus::failed && !report.first_failure) report.first_failure = i;
    report.steps.push_back({step.id, std::move(c)});
  }
  const ProofStep& last = cert.final_step();
  if (!last.is_lemma() && !last.judgment().context.empty()) {
    report.message = "final step " + last.id + " has a non-empty context";
  }
  if (report.first_failure || !report.message.empty()) {
    report.verdict = Verdict::invalid;
  } else {
    report.verdict = report.trusted ? Verdict::valid_with_trust : Verdict::valid;
  }
  return report;
}

}  // namespace hosmt
