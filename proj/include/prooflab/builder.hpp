// Forward proof construction.  `app1`/`app2` compute the conclusion of a
// rule instance from the premises and the principal formula, so generator
// code reads as a rule-by-rule derivation.  Nothing here is trusted: every
// produced proof goes back through check_proof.

#pragma once

#include <unordered_map>

#include "prooflab/proof.hpp"

namespace prooflab {

class ProofBuilder {
public:
  // dedup=true interns identical nodes, producing a DAG with shared
  // subproofs; dedup=false keeps every addition distinct (tree-like output
  // when each node is referenced once).
  explicit ProofBuilder(Calculus calc, bool dedup = false)
      : calc_(std::move(calc)), dedup_(dedup) {}

  NodeId ax_id(Formula a); // A => A
  NodeId ax_one_r();       // => 1
  NodeId ax_zero_l();      // 0 =>
  // top/bot axioms carry arbitrary context, so the conclusion is explicit.
  NodeId ax_top_r(Sequent conclusion);
  NodeId ax_bot_l(Sequent conclusion);
  NodeId ax_initial(TemplateId tmpl, Formula atom = Formula());
  NodeId ax_hypothesis(Sequent s);

  NodeId app1(Rule r, NodeId prem, Formula principal = Formula());
  NodeId app2(Rule r, NodeId p1, NodeId p2, Formula principal);

  // Grafts another proof (same calculus family assumed); returns the id of
  // its root in this builder.
  NodeId graft(const Proof& p);

  const Sequent& seq(NodeId n) const { return nodes_[n].conclusion; }
  size_t node_count() const { return nodes_.size(); }

  // Finalizes with the given root; unreachable nodes are dropped and ids
  // remapped (premises always point to earlier nodes).
  Proof finish(NodeId root) const;

private:
  NodeId push(ProofNode n);
  Sequent conclude1(Rule r, const Sequent& p, Formula pr) const;
  Sequent conclude2(Rule r, const Sequent& p1, const Sequent& p2, Formula pr) const;

  Calculus calc_;
  bool dedup_;
  std::vector<ProofNode> nodes_;
  std::unordered_map<uint64_t, std::vector<NodeId>> memo_;
};

// ---- shared derivation helpers --------------------------------------------

// Proof of (elements of ms => bigstar(ms)); empty multiset gives (=> 1).
NodeId derive_spread_to_star(ProofBuilder& b, const FormulaMultiset& ms);

// Given a node whose antecedent contains the elements of ms spread out,
// fold them into the single formula bigstar(ms) with (L*) steps.  An empty
// ms instead introduces the unit with (1w).  Returns the new node; its
// antecedent is (old - ms) + {bigstar(ms)}.
NodeId derive_fold_ante_star(ProofBuilder& b, NodeId n, const FormulaMultiset& ms);

// Proof of (leaf multiset of t => t) for an arbitrary *-tree t, matching
// t's own association.
NodeId derive_star_tree(ProofBuilder& b, Formula t);

// Collects the *-leaves of t (with multiplicity).
FormulaMultiset star_leaves(Formula t);

// Proof of (X->Y, Y->Z => X->Z).
NodeId derive_imp_trans(ProofBuilder& b, Formula x, Formula y, Formula z);

// Proof of (X, X->Y => Y).
NodeId derive_imp_apply(ProofBuilder& b, Formula x, Formula y);

// From a node with succedent {target-component}, walks a /\-path inside
// `conj` and returns a proof ending with `conj` in place of the component.
// `path` lists, outermost first, whether the component sits left or right.
NodeId derive_fold_ante_and(ProofBuilder& b, NodeId n, Formula conj,
                            const std::vector<bool>& path_is_left);

// Proof of (conj => member) where member is a /\-leaf of conj (found by
// structural search); throws if absent.
NodeId derive_and_project(ProofBuilder& b, Formula conj, Formula member);

} // namespace prooflab
