#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hosmt/context.hpp"
#include "hosmt/typing.hpp"

namespace hosmt {

enum class Rule {
  refl,
  trans,
  cong,
  bind,
  beta,
  let,
  sko_ex,
  sko_forall,
  taut,
  inst_forall,
  inst_exists,
};

std::string_view rule_name(Rule r);
std::optional<Rule> rule_from_name(std::string_view name);
bool is_lemma_rule(Rule r);

/// Γ ⊳ lhs ≃ rhs
struct EqJudgment {
  Context context;
  Term lhs;
  Term rhs;
};

struct ProofStep {
  std::string id;
  Rule rule = Rule::refl;
  std::vector<std::string> premises;
  std::variant<EqJudgment, Term> conclusion{mk_const("true", Sort::boolean())};  // Term: lemma formula
  std::vector<Binding> binding;               // inst_forall / inst_exists
  std::optional<std::string> theory;          // taut
  SourcePos pos;

  bool is_lemma() const { return std::holds_alternative<Term>(conclusion); }
  const EqJudgment& judgment() const { return std::get<EqJudgment>(conclusion); }
  const Term& formula() const { return std::get<Term>(conclusion); }
};

/// Steps in topological order; the last one is the final step.
struct Certificate {
  Signature signature;
  std::vector<ProofStep> steps;

  const ProofStep& final_step() const { return steps.back(); }
  const ProofStep* find(std::string_view id) const;
};

/// Reads the `.hoproof` format: optional `declare-sort`/`declare-fun`/
/// `declare-const` commands followed by `(step ...)` forms. Throws Error with
/// positions for syntax errors, unknown rules and ill-sorted terms.
Certificate parse_certificate(std::string_view text);

/// One declaration or step per line. Variables get names unique within the
/// certificate, so the output re-parses to the same certificate.
std::string print_certificate(const Certificate& cert);
std::string print_step(const ProofStep& step, class NameTable& names);
std::string print_judgment(const EqJudgment& j);

}  // namespace hosmt
