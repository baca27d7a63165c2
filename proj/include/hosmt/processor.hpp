#pragma once

#include <cstddef>
#include <string>

#include "hosmt/certificate.hpp"

namespace hosmt {

/// Which leaves the processor closes with a single refl step.
enum class LeafGranularity {
  /// Any binder- and let-free subterm whose context image is already
  /// β-normal.
  redex_free,
  /// Only variables and constants; applications always go through cong.
  atoms,
};

struct ProcessOptions {
  LeafGranularity leaves = LeafGranularity::redex_free;
  std::size_t max_beta_steps = kDefaultMaxBetaSteps;
  std::string step_prefix = "t";
};

struct Processed {
  Term term;
  Certificate certificate;  // final judgment: ∅ ⊳ input ≃ term
};

/// β-normalizes, expands lets and renames every binder to a fresh canonical
/// variable (w, w1, w2, ...), recording a derivation. The certificate carries
/// `sig` as its declarations. Throws DivergenceError once more than
/// `max_beta_steps` β-steps were emitted.
Processed process(const Term& t, const Signature& sig = {}, const ProcessOptions& opts = {});

struct Lemma {
  Term formula;
  ProofStep step;
};

/// (∀x. φ) → φ{x ↦ t}. Throws Error(sort) if φ is not a universal or t's sort
/// differs from x's.
Lemma instantiate_forall(const Term& phi, const Term& t, const std::string& id = "i1");
/// φ{x ↦ t} → (∃x. φ).
Lemma instantiate_exists(const Term& phi, const Term& t, const std::string& id = "i1");

}  // namespace hosmt
