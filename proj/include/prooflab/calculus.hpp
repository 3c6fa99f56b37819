// Rule identifiers and calculus descriptors for the sequent systems:
// the exchange-only core and its weakening/contraction/exponential
// extensions, the classical systems over the propositional language,
// the nnf calculus, the template-extended core G, and the template
// family iG_D parameterised by a base and formulas D, N.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prooflab/formula.hpp"

namespace prooflab {

enum class Rule : uint8_t {
  Id,      // A => A
  OneR,    // => 1
  ZeroL,   // 0 =>
  OneW,    // (1w)
  ZeroW,   // (0w)
  LAndL,   // (L/\) picking left conjunct
  LAndR,   // (L/\) picking right conjunct
  RAnd,    // (R/\), shared context
  LOr,     // (L\/), shared context
  ROrL,    // (R\/) picking left disjunct
  ROrR,    // (R\/) picking right disjunct
  LStar,   // (L*)
  RStar,   // (R*), split context
  LImp,    // (L->), split context
  RImp,    // (R->)
  Cut,
  TopR,    // Gamma => top, Delta
  BotL,    // Gamma, bot => Delta
  Lw, Rw,  // weakening
  Lc, Rc,  // contraction
  RBang,   // !Gamma => A / !Gamma => !A
  LBang,   // dereliction
  WBang,   // !-weakening
  CBang,   // !-contraction
  Initial, // template instance (see TemplateId)
  Hypothesis, // leaf matching a supplied hypothesis sequent
};

enum class TemplateId : uint8_t {
  None,
  Em,       //       => p \/ (p -> 0)
  UnitPos,  // p     => 1
  UnitNeg,  // p->0  => 1
  ZeroPos,  // 0     => p
  ZeroNeg,  // 0     => p -> 0
  ZeroFuse, // 0     => 0 * 0
  Dual,     // p, N  => D        (iG_D)
  LitPos,   // p     => p        (nnf calculus)
  LitNeg,   // p->0  => p->0
  Clash,    // p, p->0 =>
};

enum class CalcName : uint8_t {
  FL_e, FL_ew, FL_ec, LJ_u,
  CFL_e, CFL_ew, CFL_ec, LK_u,
  IMALL, AIMALL, RIMALL, LJ_b,
  MALL, AMALL, RMALL, LK_b,
  ILL, AILL, RILL, LJ_bang,
  CLL, ALL, RLL, LK_bang,
  LK, LJ,
  LK_nn, G, IGD,
};

struct Calculus {
  CalcName name = CalcName::FL_e;
  bool cut_free = false;
  // iG_D payload; base must be one of the single-conclusion calculi.
  CalcName igd_base = CalcName::FL_e;
  Formula D, N;

  static Calculus plain(CalcName n, bool cut_free = false) {
    Calculus c;
    c.name = n;
    c.cut_free = cut_free;
    return c;
  }
  static Calculus igd(CalcName base, Formula D, Formula N) {
    Calculus c;
    c.name = CalcName::IGD;
    c.igd_base = base;
    c.D = D;
    c.N = N;
    return c;
  }

  bool operator==(const Calculus& o) const {
    return name == o.name && cut_free == o.cut_free &&
           (name != CalcName::IGD ||
            (igd_base == o.igd_base && D == o.D && N == o.N));
  }
};

struct CalculusRules {
  std::vector<Rule> rules;            // without Initial/Hypothesis
  std::vector<TemplateId> templates;  // admissible initial templates
  Lang lang;
  bool single_conclusion;

  bool has(Rule r) const;
  bool has_template(TemplateId t) const;
};

// The exact schema set of a calculus (cut removed for cut-free variants).
CalculusRules calculus_rules(const Calculus& c);

// rule set of `from` contained in rule set of `to` (templates included);
// returns the offending rule names otherwise.
std::vector<std::string> rule_set_gap(const Calculus& from, const Calculus& to);

std::string rule_name(Rule r);
std::string template_name(TemplateId t);
std::optional<Rule> rule_from_name(std::string_view name);
std::optional<TemplateId> template_from_name(std::string_view name);

std::string calculus_to_string(const Calculus& c);
Calculus calculus_from_string(std::string_view text); // throws ParseError

} // namespace prooflab
