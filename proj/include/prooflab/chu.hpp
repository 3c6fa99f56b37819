// The polarity-indexed translation pair (.)^t / (.)^s parameterised by
// formulas D and N, the per-axiom proof constructions that transport
// Hilbert-style proofs into the single-conclusion template calculi, the
// conservative formula grammar, and the end-to-end conservativity pipeline.

#pragma once

#include <optional>
#include <unordered_map>

#include "prooflab/frege.hpp"
#include "prooflab/proof.hpp"

namespace prooflab {

struct ChuParams {
  Formula D, N;
};

// Memoizing translator; results are shared subterms internally, while
// Formula::size() still reports tree sizes.
class ChuTranslator {
public:
  explicit ChuTranslator(ChuParams p) : params_(p) {}

  Formula t(Formula f);
  Formula s(Formula f);
  const ChuParams& params() const { return params_; }

private:
  ChuParams params_;
  std::unordered_map<uint32_t, Formula> t_memo_, s_memo_;
};

// Base calculus hosting the translated proofs of a given system; CFLew-F
// and the affine systems need the bounded base for the D = bot case.
CalcName igd_base_for_system(FregeSystem sys);
Calculus igd_for_system(FregeSystem sys, const ChuParams& p);

struct EquivPair {
  Proof fwd, bwd;
};

struct DualityProofs {
  Proof absorb;    // A^t, A^s => D
  EquivPair neg_t; // (neg A)^t <=> A^s
  EquivPair neg_s; // (neg A)^s <=> A^t
};

// Structural-induction proofs of the duality laws; target must be an iG_D
// calculus whose base covers the formula's language.
DualityProofs prove_duality(Formula a, const ChuParams& p, const Calculus& target);

// A checked iG_D proof of (=> alpha^t) for the instantiated axiom, built by
// the per-axiom recipe; the weakening axiom demands D = bot.
Proof translate_axiom(FregeAxiom ax, const FregeSubst& subst,
                      const ChuParams& p, FregeSystem sys);

// Line-linear simulation of a whole hypothesis-free proof.
Proof translate_frege_proof(const FregeProof& fp, const ChuParams& p,
                            FregeSystem sys);

enum class ConservativityClass { FullyConservative, Conservative, Neither };

ConservativityClass classify_conservative(Formula f);
std::string conservativity_name(ConservativityClass c);

struct ConservativeEquiv {
  EquivPair t_equiv;                // f^t <=> f
  std::optional<EquivPair> s_bot;   // f^s <=> bot, fully conservative only
};

// Lemma-17-style equivalences at D = N = bot; target is the plain IMALL or
// ILL core (no templates left).
ConservativeEquiv prove_conservative_equiv(Formula f, ConservativityClass cls,
                                           CalcName target);

// Full pipeline: translate the proof, discharge the dual templates (trivial
// at D = N = bot), and cut with the conservativity equivalence.  Accepts
// the bounded/exponential classical systems; output is a checked proof of
// (=> A) in the matching intuitionistic calculus.
Proof conservativity_pipeline(const FregeProof& fp, FregeSystem sys);

} // namespace prooflab
