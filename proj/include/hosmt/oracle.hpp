#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hosmt/certificate.hpp"

namespace hosmt {

/// M ::= ⌜t⌝ | λx. M | (λx̄. M) t̄, a λ-term over exactly one boxed core term.
class BoxedTerm {
 public:
  enum class Kind { box, lambda, apply };

  static BoxedTerm box(Term t);
  static BoxedTerm lambda(Var x, BoxedTerm body);
  static BoxedTerm apply(std::vector<Var> xs, BoxedTerm body, std::vector<Term> args);

  Kind kind() const { return kind_; }
  const Term& content() const { return *content_; }      // box
  const std::vector<Var>& vars() const { return vars_; }  // lambda: one; apply: x̄
  const std::vector<Term>& args() const { return args_; } // apply
  const BoxedTerm& body() const { return *body_; }

 private:
  BoxedTerm() = default;
  Kind kind_ = Kind::box;
  std::optional<Term> content_;
  std::vector<Var> vars_;
  std::vector<Term> args_;
  std::shared_ptr<const BoxedTerm> body_;
};

/// `[t]` for boxes, SMT-LIB-like syntax otherwise.
std::string to_string(const BoxedTerm& m);

/// L(∅)[t] = ⌜t⌝, L(x, Γ)[t] = λx. L(Γ)[t], L(x̄ ↦ s̄, Γ)[t] = (λx̄. L(Γ)[t]) s̄.
BoxedTerm encode_left(const Context& ctx, const Term& t);
/// Mirror image of encode_left.
BoxedTerm encode_right(const Context& ctx, const Term& u);

/// λx1 ... λxn. ⌜t⌝, the β-normal shape of an encoding.
struct BoxNormalForm {
  std::vector<Var> prefix;
  Term body;
};

/// Contracts every encoding-level redex, pushing the substitutions into the
/// box.
BoxNormalForm normalize_boxed(const BoxedTerm& m);

/// ∀x̄. t ≃ u. Throws Error(certificate) when the λ-prefixes of the two
/// encodings differ.
Term reify(const BoxedTerm& m, const BoxedTerm& n);

enum class OracleVerdict { lambda_valid, needs_theory };

std::string_view oracle_verdict_name(OracleVerdict v);

struct OracleResult {
  OracleVerdict verdict;
  Term formula;  // the reified judgment
};

/// lambda_valid iff both reified sides have α-equal β-normal forms (lets
/// expanded).
OracleResult oracle_check(const EqJudgment& j, std::size_t max_steps = kDefaultMaxBetaSteps);

struct CertificateOracleReport {
  std::size_t checked = 0;                    // equality steps examined
  std::optional<std::size_t> first_rejected;  // index of first needs_theory step
};

/// Runs oracle_check on every equality step; lemma steps are skipped.
CertificateOracleReport oracle_check_certificate(const Certificate& cert,
                                                 std::size_t max_steps = kDefaultMaxBetaSteps);

}  // namespace hosmt
