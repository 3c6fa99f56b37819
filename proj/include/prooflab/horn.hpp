// Implicational Horn sequents: grammar membership, least-model validity,
// the quadratic unit-propagation proof generator, and the sequent/formula
// interpretation bridge.

#pragma once

#include "prooflab/proof.hpp"

namespace prooflab {

// F := p | 1 | (fusion of atoms) -> p | p -> (fusion of atoms) | F /\ F
bool is_implicational_horn_formula(Formula f);
// antecedent of such formulas, succedent a single atom
bool is_implicational_horn(const Sequent& s);

// Classical validity via the least-model fixpoint (semantic unit
// propagation); throws std::invalid_argument off the grammar.
bool horn_valid(const Sequent& s);

// The atoms of the least model (closure of the facts under the rules).
std::vector<uint32_t> horn_closure(const Sequent& s);

// A checked proof in the full structural core calculus; throws
// std::invalid_argument when the sequent is invalid (quoting the closure)
// or off the grammar.
Proof unit_prop_prove(const Sequent& s);

// I(t) and the polynomial-overhead lift of a proof of (=> I(t)) to t.
Formula sequent_to_formula_goal(const Sequent& t);
Proof lift_formula_proof(const Proof& p, const Sequent& t,
                         const std::vector<Sequent>& hypotheses = {});

} // namespace prooflab
