// The template-extended core calculus G: generators for its axiomatic
// structural principles over *-nnf formulas, the translation of nnf
// classical proofs into G, the feasible deduction theorem back into the
// plain core calculus, and the assembly of the monotone split sequent.

#pragma once

#include "prooflab/proof.hpp"

namespace prooflab {

enum class StructuralGoal : uint8_t {
  Unit, // A => 1
  Zero, // 0 => A
  Em,   // => A \/ neg A
  Dup,  // A => A * A
};

// Tree-like G proof of the requested sequent for a *-nnf formula.
Proof structural_axiom_proof(Formula a, StructuralGoal goal);

// Tree-like single-conclusion nnf proof -> tree-like G proof of the same
// sequent; weakenings and contractions become cuts against the structural
// axioms above.
Proof translate_lknn_to_g(const Proof& p);

struct DeductionResult {
  FormulaMultiset sigma; // single-variable members, each of shape (C /\ 1)
  Proof proof;           // plain core proof of (Sigma, Gamma => Delta)
};

// Trades the initial templates of a tree-like G proof for antecedent
// hypotheses, keeping everything inside the template-free core calculus.
DeductionResult feasible_deduction(const Proof& p);

struct SnResult {
  Sequent s_n;
  Proof proof; // core-calculus proof of s_n
  FormulaMultiset sigma_ps; // members over the shared/edge atoms
  FormulaMultiset pi;       // the remainder
};

// Runs the whole pipeline on an nnf proof of
// (Clique^{k+1}_n => nnf-negated Color^k_n), k = floor(sqrt(n)), and
// produces the monotone split sequent with its checked proof.
SnResult assemble_sn(uint32_t n, const Proof& lknn_proof);

} // namespace prooflab
