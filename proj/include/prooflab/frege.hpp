// Hilbert-style systems: axiom schemas, schema matching, proof checking.
// Schemas are formulas over reserved metavariable atoms A, B, C (uppercase,
// so they cannot collide with parseable atoms).

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "prooflab/formula.hpp"

namespace prooflab {

enum class FregeAxiom : uint8_t {
  Id, Pf, Per, StarAnd, AndTo1, AndTo2, ToAnd, ToOr1, ToOr2, OrTo,
  ToStar, StarTo, One, OneTo, Top, Bot, Dn, W, C,
  BangW, BangC, BangK, BangT, Bang4,
};

enum class FregeSystem : uint8_t {
  FLe_F, CFLe_F, CFLew_F, MALL_F, AMALL_F, CLL_F, ALL_F,
};

Formula axiom_schema(FregeAxiom ax);
std::string axiom_name(FregeAxiom ax);
std::optional<FregeAxiom> axiom_from_name(std::string_view name);

std::vector<FregeAxiom> system_axioms(FregeSystem sys);
bool system_has_nec(FregeSystem sys);
Lang system_lang(FregeSystem sys);
std::string system_name(FregeSystem sys);
std::optional<FregeSystem> system_from_name(std::string_view name);

// Substitution for schema metavariables.
struct FregeSubst {
  std::vector<std::pair<Formula, Formula>> map; // (metavar atom, formula)

  Formula lookup(Formula metavar) const;
  void bind(Formula metavar, Formula f);
};

Formula apply_subst(Formula schema, const FregeSubst& s);

// First-occurrence binding, then equality checking.
std::optional<FregeSubst> match_axiom(FregeAxiom ax, Formula f);

struct FregeJust {
  enum Kind { Axiom, Mp, Adj, Nec, Hyp } kind = Hyp;
  FregeAxiom ax = FregeAxiom::Id;
  FregeSubst subst;
  uint32_t i = 0, j = 0; // 0-based line references
};

struct FregeLine {
  Formula formula;
  FregeJust just;
};

struct FregeProof {
  std::vector<FregeLine> lines;
  Formula conclusion() const { return lines.back().formula; }
};

struct FregeMetrics {
  uint64_t lines = 0;
  uint64_t size = 0;
};

struct FregeViolation {
  uint32_t line = 0;
  std::string message;
};

using FregeCheckResult = std::variant<FregeMetrics, FregeViolation>;

inline bool frege_ok(const FregeCheckResult& r) {
  return std::holds_alternative<FregeMetrics>(r);
}
std::string frege_check_message(const FregeCheckResult& r);

FregeCheckResult check_frege_proof(FregeSystem sys, const FregeProof& proof,
                                   const std::vector<Formula>& hypotheses = {});

// Text format: one line per step, `index. formula ; justification` with
// justification in {`ax <name> [A := f, ...]`, `mp i j`, `adj i`, `nec i`,
// `hyp`}; indices are 1-based in the text form.
std::string frege_to_text(const FregeProof& p);
FregeProof frege_from_text(std::string_view text);

// Convenience constructors for building proofs in code.
FregeLine frege_ax(FregeAxiom ax, const FregeSubst& s);
FregeLine frege_mp(Formula f, uint32_t i, uint32_t j);
FregeLine frege_adj(uint32_t i, Formula of);
FregeLine frege_nec(uint32_t i, Formula of);
FregeLine frege_hyp(Formula f);

// Metavariables.
Formula meta_A();
Formula meta_B();
Formula meta_C();

} // namespace prooflab
