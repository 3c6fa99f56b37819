// Generators for the clique/coloring clause families, their implication,
// the negation-free variants with fresh complement atoms, and the unit-
// guarded fusion variant, plus the weakening/contraction collapse bridge.

#pragma once

#include "prooflab/proof.hpp"

namespace prooflab {

// Clause-set atoms are 1-based: edges p_i_j (i<j), clique selectors r_u_i,
// colors s_i_a.  The negation-free family is 0-based: p_i_j / q_i_j over
// ordered pairs, s_i_l / sp_i_l, r_i_l / rp_i_l.
Formula edge_atom(uint32_t i, uint32_t j);   // canonicalizes to i<j

std::vector<Formula> clique_clauses(uint32_t n, uint32_t k);
std::vector<Formula> color_clauses(uint32_t n, uint32_t m);

Formula clique_formula(uint32_t n, uint32_t k); // conjunction, canonical order
Formula color_formula(uint32_t n, uint32_t m);

// Clique^{k+1}_n(p,r) -> neg Color^k_n(p,s); a classical tautology.
Formula clique_color_implication(uint32_t n, uint32_t k);

uint32_t default_k(uint32_t n); // floor(sqrt(n))

Formula alpha(uint32_t n, uint32_t k);
Formula beta(uint32_t n, uint32_t k);
Formula theta(uint32_t n, uint32_t k);     // uses beta with parameter k+1
Formula theta_bot(uint32_t n);             // negation-bearing variant
Formula theta_star(uint32_t n, uint32_t k); // unit-guarded fusion variant

// The succedent of the micro pipeline: Color_n in nnf, negated.
Formula colorbar_formula(uint32_t n, uint32_t m);

// True iff every occurrence of the given atoms in f is positive.
bool monotone_in(Formula f, const std::vector<uint32_t>& atom_ids);

struct EquivProofs {
  Proof fwd; // f => g
  Proof bwd; // g => f
};

// The weakening/contraction bridge: g = f with * as /\ and unit guards
// dropped; returns checked LK_u proofs of both directions.
struct CollapseEquiv {
  Formula image;
  EquivProofs proofs;
};
CollapseEquiv prove_collapse_equiv(Formula f);

} // namespace prooflab
