// Proof objects: DAGs of rule instances with explicit principal-formula
// bookkeeping, checked but never trusted.  The JSON exchange format mirrors
// this structure field for field.

#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "prooflab/calculus.hpp"
#include "prooflab/sequent.hpp"

namespace prooflab {

using NodeId = uint32_t;

struct ProofNode {
  Rule rule = Rule::Id;
  Sequent conclusion;
  std::vector<NodeId> premises;
  // Principal-formula bookkeeping.  For logical rules, the principal
  // occurrence in the conclusion; for cut, the cut formula; for Id, the
  // axiom formula; for Initial, the instantiating atom (invalid for the
  // atom-free templates).
  Formula principal;
  TemplateId tmpl = TemplateId::None;
};

struct Proof {
  Calculus calculus;
  std::vector<ProofNode> nodes;
  NodeId root = 0;

  const Sequent& conclusion() const { return nodes[root].conclusion; }
};

struct ProofMetrics {
  uint64_t size = 0;       // total formula symbols + one per sequent arrow
  uint64_t lines = 0;      // total formula count over all sequents
  uint64_t node_count = 0;
  bool tree_like = false;
};

// Metrics alone (no checking); each DAG node counted once.
ProofMetrics proof_metrics(const Proof& p);

struct Violation {
  NodeId node = 0;
  Rule rule = Rule::Id;
  std::string message;
};

using CheckResult = std::variant<ProofMetrics, Violation>;

inline bool check_ok(const CheckResult& r) {
  return std::holds_alternative<ProofMetrics>(r);
}
inline const ProofMetrics& check_metrics(const CheckResult& r) {
  return std::get<ProofMetrics>(r);
}
inline const Violation& check_violation(const CheckResult& r) {
  return std::get<Violation>(r);
}
std::string check_message(const CheckResult& r);

// Validates a single node against its calculus given the premise sequents.
// Returns an empty string on success, a mismatch description otherwise.
std::string check_rule_instance(const CalculusRules& rules, const Calculus& calc,
                                const ProofNode& node,
                                const std::vector<Sequent>& premise_seqs);

// Validates the whole proof: acyclicity, premise indices, language
// membership, conclusion discipline, rule instances; leaves must be axioms,
// initial templates, or hypotheses.  Nodes are checked in index order, so
// the first violation is deterministic.
CheckResult check_proof(const Proof& p,
                        const std::vector<Sequent>& hypotheses = {});

// Re-tags a proof under a larger calculus and re-checks it.  Throws
// std::runtime_error listing offending rules if the rule sets are not
// contained.
Proof subcalculus_embed(const Proof& p, const Calculus& to);

// ---- exchange format ------------------------------------------------------

std::string proof_to_json(const Proof& p);
Proof proof_from_json(std::string_view text); // throws ParseError

} // namespace prooflab
