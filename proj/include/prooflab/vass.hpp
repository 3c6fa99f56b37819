// Vector addition systems with states: plain, contractive (merge a
// doubled counter), and expansion (duplicate a positive counter) step
// semantics, bounded reachability, the coverability reduction, run
// decontraction, and the constructive encoding of runs as checked proofs
// in the contraction-extended core calculus.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prooflab/proof.hpp"

namespace prooflab {

struct VassRule {
  uint32_t src = 0;
  std::vector<int64_t> delta;
  uint32_t dst = 0;
};

struct Vass {
  uint32_t dim = 1;
  std::vector<std::string> states;
  std::vector<VassRule> rules;

  uint32_t add_state(const std::string& name);
  std::optional<uint32_t> state_id(const std::string& name) const;
  void add_rule(uint32_t src, std::vector<int64_t> delta, uint32_t dst);

  // every rule is +-e_i for a single component
  bool is_ordinary() const;
};

struct Config {
  uint32_t state = 0;
  std::vector<uint64_t> vec;

  bool operator==(const Config& o) const {
    return state == o.state && vec == o.vec;
  }
  bool covers(const Config& o) const;
};

enum class StepMode : uint8_t { Plain, Contractive, Expansion };

struct RunStep {
  enum Kind : uint8_t { Rule, Contract, Expand } kind = Rule;
  uint32_t index = 0; // rule index, or 0-based component
};

struct Run {
  Config start;
  std::vector<RunStep> steps;
};

// Single-step semantics; throw on violations.
Config apply_rule(const Vass& v, const Config& c, uint32_t rule_index);
Config apply_contract(const Config& c, uint32_t component); // needs >= 2
Config apply_expand(const Config& c, uint32_t component);   // needs >= 1

// Replays the run; Contract steps require Contractive mode, Expand steps
// Expansion mode (rule steps are fine everywhere).  Returns the final
// configuration or an error message.
std::variant<Config, std::string> replay_run(const Vass& v, const Run& run,
                                             StepMode mode);

struct ReachBounds {
  uint64_t component_cap = 8;
  uint64_t max_configs = 50000;
};

struct ReachResult {
  bool found = false;
  // true when the bounded exploration exhausted the whole space under the
  // caps, so "not found" is meaningful within bounds
  bool complete = false;
  std::optional<Run> run;
  uint64_t visited = 0;
};

ReachResult reach_bfs(const Vass& v, const Config& from, const Config& to,
                      StepMode mode, const ReachBounds& bounds);

// Coverability: reach `state` with vector componentwise >= target
// (the default target is the zero vector, i.e. state reachability).
ReachResult cover_bfs(const Vass& v, const Config& from, uint32_t state,
                      const std::vector<uint64_t>& target,
                      const ReachBounds& bounds);

// Adds q_new and the 2^d draining rules (r, -sum b_i e_i, q_new); the new
// state is the last one.  Dimension capped at 16.
Vass cover_reduce(const Vass& v, uint32_t r);

// Lemma-22 style decontraction: drops Contract steps carrying slack; the
// result replays plainly and ends at (same state, final + slack).
Run decontract_run(const Vass& v, const Run& run);

// ---- logic encoding ------------------------------------------------------------

// {state atom, counter atoms with multiplicities}
FormulaMultiset theta_encode(const Vass& v, const Config& c);
std::vector<Formula> theory_formulas(const Vass& v); // one per rule
// ((/\ Th) /\ 1, q => r)
Sequent encode_sequent(const Vass& v, uint32_t q, uint32_t r);

// Checked proof of ((/\ Th) /\ 1, bigstar theta(q,u) => bigstar theta(r,w)).
// Rule steps become cuts against the matching theory implication (re-
// extracted from the guarded conjunction and merged back by contraction);
// expansion steps become (Lc) on the counter atom.  Contractive runs are
// first decontracted, so w then dominates the run's own endpoint.
Proof run_to_proof(const Vass& v, const Run& run);

// ---- text format ---------------------------------------------------------------

// header `vass d=<d>`, then `state <name>` and `rule <src> <ints> <dst>`
std::string vass_to_text(const Vass& v);
Vass vass_from_text(std::string_view text);

} // namespace prooflab
