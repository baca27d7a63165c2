#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hosmt/certificate.hpp"

namespace hosmt {

enum class StepStatus { ok, trusted, failed };

struct StepCheck {
  StepStatus status = StepStatus::ok;
  std::string message;  // failure reason or trust warning
};

/// Decides `taut` leaves tagged with a theory name.
class TautologyValidators {
 public:
  using Validator = std::function<bool(const EqJudgment&)>;

  /// Registers the built-in `eq` validator: both sides, with the context
  /// applied, have α-equal β-normal forms.
  TautologyValidators();

  void add(std::string theory, Validator v) { validators_[std::move(theory)] = std::move(v); }
  const Validator* find(const std::string& theory) const;

 private:
  std::map<std::string, Validator> validators_;
};

/// Checks one rule application given the steps its premises refer to, in
/// order. Looks at nothing else.
StepCheck check_rule(const ProofStep& step, std::span<const ProofStep* const> premises,
                     const TautologyValidators& validators = {});

/// Checks steps[index] against the earlier steps of the certificate.
StepCheck check_step(const Certificate& cert, std::size_t index,
                     const TautologyValidators& validators = {});

enum class Verdict { valid, invalid, valid_with_trust };

std::string_view verdict_name(Verdict v);

struct StepReport {
  std::string id;
  StepCheck check;
};

struct CheckReport {
  Verdict verdict = Verdict::invalid;
  std::vector<StepReport> steps;
  std::size_t trusted = 0;
  std::optional<std::size_t> first_failure;  // index into steps
  std::string message;                       // certificate-level failure
};

/// Checks every step in order plus the certificate-level conditions (unique
/// ids, final judgment with empty context).
CheckReport check_certificate(const Certificate& cert, const TautologyValidators& validators = {});

}  // namespace hosmt
