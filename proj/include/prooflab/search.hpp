// Brute-force oracles: complete cut-free backward search for the
// contraction-free calculi, budgeted iterative-deepening search elsewhere,
// Boolean validity, and a decision procedure for nnf sequents that emits
// checked tree-like proofs.

#pragma once

#include <optional>

#include "prooflab/proof.hpp"

namespace prooflab {

struct SearchBudget {
  uint64_t max_nodes = 30;        // proof node count cap
  uint64_t max_visited = 500000;  // visited-sequent cap
};

struct DecideResult {
  bool provable = false;
  std::optional<Proof> proof; // present iff provable
};

// Exhaustive backward proof search without cut.  Only sound as a decision
// procedure for calculi where every rule read backwards shrinks the total
// formula weight: the contraction-free, exponential-free systems.  Throws
// std::invalid_argument on anything else.
DecideResult decide_contraction_free(const Calculus& c, const Sequent& s);

struct BoundedResult {
  bool found = false;
  bool complete = true; // false when the visited cap truncated the search
  std::optional<Proof> proof;
  SearchBudget budget;
};

// Iterative deepening over proof node count.  Cut is searched only when
// `analytic_cut` is set, with candidates restricted to subformulas of the
// goal sequent.
BoundedResult bounded_search(const Calculus& c, const Sequent& s,
                             const SearchBudget& budget,
                             bool analytic_cut = false);

// Exhaustive valuation check of forgetful(f); throws beyond 24 atoms.
bool boolean_valid(Formula f);
bool boolean_valid_sequent(const Sequent& s); // forgetful interpretation

// Decision procedure for single-conclusion sequents of nnf formulas:
// either a checked tree-like proof in the nnf calculus, or a falsifying
// assignment (atom id -> value; atoms absent are false).
struct NnfDecision {
  std::optional<Proof> proof;
  std::vector<std::pair<uint32_t, bool>> countermodel;
};

NnfDecision lknn_decide(const Sequent& s);

} // namespace prooflab
