#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prooflab/chu.hpp"
#include "prooflab/gen.hpp"
#include "prooflab/hard_formulas.hpp"

using namespace prooflab;

namespace {

Formula P() { return Formula::atom("p"); }
Formula Q() { return Formula::atom("q"); }

ChuParams atoms_dn() { return {Formula::atom("d"), Formula::atom("n")}; }
ChuParams bots() { return {Formula::bot(), Formula::bot()}; }

void check_proof_ok(const Proof& p, const char* what) {
  auto r = check_proof(p);
  std::string msg = std::string(what) + ": " + check_message(r);
  CHECK_MESSAGE(check_ok(r), msg);
}

uint64_t lines_of(const Proof& p) { return check_metrics(check_proof(p)).lines; }

} // namespace

TEST_CASE("translation clauses") {
  ChuParams prm = atoms_dn();
  ChuTranslator tr(prm);
  CHECK(tr.t(P()) == P());
  CHECK(tr.s(Formula::one()) == prm.D);
  CHECK(tr.t(Formula::zero()) == prm.D);
  CHECK(tr.t(f_imp(P(), Q())) ==
        f_and(f_imp(P(), Q()), f_imp(prm.N, prm.N)));
  CHECK(tr.s(f_star(P(), Q())) ==
        f_and(f_imp(P(), prm.N), f_imp(Q(), prm.N)));
  CHECK(tr.s(f_imp(P(), Q())) == f_star(P(), prm.N));
  CHECK(tr.t(Formula::bang(P())) == Formula::bang(P()));
  CHECK(tr.s(Formula::bang(P())) == f_imp(Formula::bang(P()), prm.D));
}

TEST_CASE("duality proofs on the base cases") {
  ChuParams prm = atoms_dn();
  Calculus tgt = Calculus::igd(CalcName::FL_e, prm.D, prm.N);
  // atom: the absorb proof is a single template leaf
  DualityProofs dp = prove_duality(P(), prm, tgt);
  check_proof_ok(dp.absorb, "absorb p");
  CHECK(dp.absorb.nodes.size() == 1);
  CHECK(dp.absorb.nodes[0].tmpl == TemplateId::Dual);
  // unit: 1, D => D via (1w)
  DualityProofs d1 = prove_duality(Formula::one(), prm, tgt);
  check_proof_ok(d1.absorb, "absorb 1");
  CHECK(d1.absorb.conclusion() ==
        parse_sequent("1, d => d"));
  // conjunction assembles the two branches
  DualityProofs dc = prove_duality(f_and(P(), Q()), prm, tgt);
  check_proof_ok(dc.absorb, "absorb p/\\q");
  check_proof_ok(dc.neg_t.fwd, "negt fwd");
  check_proof_ok(dc.neg_t.bwd, "negt bwd");
  check_proof_ok(dc.neg_s.fwd, "negs fwd");
  check_proof_ok(dc.neg_s.bwd, "negs bwd");
}

TEST_CASE("duality across languages with bounded lines") {
  Rng rng(31);
  struct Cfg {
    Lang lang;
    CalcName base;
  };
  Cfg cfgs[3] = {{Lang::Lu, CalcName::FL_e},
                 {Lang::Lb, CalcName::IMALL},
                 {Lang::Lbang, CalcName::ILL}};
  double worst = 0;
  for (const Cfg& cfg : cfgs) {
    ChuParams prm = cfg.lang == Lang::Lu ? atoms_dn() : bots();
    Calculus tgt = Calculus::igd(cfg.base, prm.D, prm.N);
    for (int i = 0; i < 70; ++i) {
      Formula a = random_formula(cfg.lang, 1 + i % 20, rng, 3);
      DualityProofs dp = prove_duality(a, prm, tgt);
      for (const Proof* pr :
           {&dp.absorb, &dp.neg_t.fwd, &dp.neg_t.bwd, &dp.neg_s.fwd,
            &dp.neg_s.bwd}) {
        auto r = check_proof(*pr);
        REQUIRE_MESSAGE(check_ok(r), check_message(r));
        double ratio = static_cast<double>(check_metrics(r).lines) /
                       static_cast<double>(a.size());
        worst = std::max(worst, ratio);
      }
    }
  }
  CHECK(worst <= 60.0);
  MESSAGE("duality worst lines/|A| ratio: ", worst);
}

TEST_CASE("axiom translations: all cases, checked, linear lines") {
  Rng rng(77);
  struct Want {
    FregeAxiom ax;
    FregeSystem sys;
    int metavars;
  };
  std::vector<Want> cases = {
      {FregeAxiom::Id, FregeSystem::CFLe_F, 1},
      {FregeAxiom::Pf, FregeSystem::CFLe_F, 3},
      {FregeAxiom::Per, FregeSystem::CFLe_F, 3},
      {FregeAxiom::StarAnd, FregeSystem::CFLe_F, 2},
      {FregeAxiom::AndTo1, FregeSystem::CFLe_F, 2},
      {FregeAxiom::AndTo2, FregeSystem::CFLe_F, 2},
      {FregeAxiom::ToAnd, FregeSystem::CFLe_F, 3},
      {FregeAxiom::ToOr1, FregeSystem::CFLe_F, 2},
      {FregeAxiom::ToOr2, FregeSystem::CFLe_F, 2},
      {FregeAxiom::OrTo, FregeSystem::CFLe_F, 3},
      {FregeAxiom::ToStar, FregeSystem::CFLe_F, 2},
      {FregeAxiom::StarTo, FregeSystem::CFLe_F, 3},
      {FregeAxiom::One, FregeSystem::CFLe_F, 0},
      {FregeAxiom::OneTo, FregeSystem::CFLe_F, 1},
      {FregeAxiom::Dn, FregeSystem::CFLe_F, 1},
      {FregeAxiom::Top, FregeSystem::MALL_F, 1},
      {FregeAxiom::Bot, FregeSystem::MALL_F, 1},
      {FregeAxiom::W, FregeSystem::CFLew_F, 2},
      {FregeAxiom::BangW, FregeSystem::CLL_F, 2},
      {FregeAxiom::BangC, FregeSystem::CLL_F, 2},
      {FregeAxiom::BangK, FregeSystem::CLL_F, 2},
      {FregeAxiom::BangT, FregeSystem::CLL_F, 1},
      {FregeAxiom::Bang4, FregeSystem::CLL_F, 1},
  };
  for (const Want& w : cases) {
    CAPTURE(axiom_name(w.ax));
    Lang lang = system_lang(w.sys);
    for (int i = 0; i < 6; ++i) {
      ChuParams prm =
          w.sys == FregeSystem::CFLe_F && i % 2 == 0 && w.ax != FregeAxiom::Dn
              ? atoms_dn()
              : (w.sys == FregeSystem::CFLe_F ? ChuParams{Formula::zero(),
                                                          Formula::zero()}
                                              : bots());
      if (w.sys == FregeSystem::CFLew_F) prm = bots();
      FregeSubst subst;
      Formula metas[3] = {meta_A(), meta_B(), meta_C()};
      for (int m = 0; m < w.metavars; ++m)
        subst.bind(metas[m], random_formula(lang, 1 + (i * 3 + m) % 8, rng, 3));
      Proof pr = translate_axiom(w.ax, subst, prm, w.sys);
      auto r = check_proof(pr);
      std::string msg = axiom_name(w.ax) + ": " + check_message(r);
      REQUIRE_MESSAGE(check_ok(r), msg);
      Formula inst = apply_subst(axiom_schema(w.ax), subst);
      ChuTranslator tr(prm);
      Sequent want;
      want.succ.add(tr.t(inst));
      CHECK(pr.conclusion() == want);
      CHECK(check_metrics(r).lines <= 90 * inst.size() + 40);
    }
  }
}

TEST_CASE("weakening axiom demands D = bot") {
  FregeSubst s;
  s.bind(meta_A(), P());
  s.bind(meta_B(), Q());
  CHECK_THROWS_AS(translate_axiom(FregeAxiom::W, s,
                                  ChuParams{Formula::one(), Formula::bot()},
                                  FregeSystem::CFLew_F),
                  std::invalid_argument);
  CHECK_NOTHROW(
      translate_axiom(FregeAxiom::W, s, bots(), FregeSystem::CFLew_F));
  // the contraction axiom is in no listed system
  CHECK_THROWS(translate_axiom(FregeAxiom::C, s, bots(), FregeSystem::CFLe_F));
}

TEST_CASE("whole-proof translation simulates the rules") {
  ChuParams prm = atoms_dn();
  // single axiom
  {
    FregeSubst s;
    s.bind(meta_A(), f_star(P(), Q()));
    FregeProof fp;
    fp.lines.push_back(frege_ax(FregeAxiom::Id, s));
    Proof pr = translate_frege_proof(fp, prm, FregeSystem::CFLe_F);
    check_proof_ok(pr, "single axiom");
  }
  // mp: 1, 1 -> (p -> p), p -> p
  {
    FregeProof fp;
    fp.lines.push_back(frege_ax(FregeAxiom::One, FregeSubst{}));
    FregeSubst s;
    s.bind(meta_A(), P());
    fp.lines.push_back(frege_ax(FregeAxiom::OneTo, s));
    fp.lines.push_back(frege_mp(f_imp(P(), P()), 0, 1));
    REQUIRE(frege_ok(check_frege_proof(FregeSystem::CFLe_F, fp)));
    Proof pr = translate_frege_proof(fp, prm, FregeSystem::CFLe_F);
    check_proof_ok(pr, "mp chain");
    ChuTranslator tr(prm);
    CHECK(pr.conclusion().succ.contains(tr.t(f_imp(P(), P()))));
    // line-count overhead is a constant per step
    CHECK(lines_of(pr) <= 200);
  }
  // adj
  {
    FregeProof fp;
    fp.lines.push_back(frege_ax(FregeAxiom::One, FregeSubst{}));
    fp.lines.push_back(frege_adj(0, Formula::one()));
    Proof pr = translate_frege_proof(fp, prm, FregeSystem::CFLe_F);
    check_proof_ok(pr, "adjunction");
  }
  // nec in CLL-F
  {
    FregeProof fp;
    fp.lines.push_back(frege_ax(FregeAxiom::One, FregeSubst{}));
    fp.lines.push_back(frege_nec(0, Formula::one()));
    Proof pr = translate_frege_proof(fp, bots(), FregeSystem::CLL_F);
    check_proof_ok(pr, "necessitation");
    CHECK(pr.conclusion() == parse_sequent("=> !1"));
  }
}

TEST_CASE("conservativity classifier") {
  CHECK(classify_conservative(theta_star(1, 1)) ==
        ConservativityClass::FullyConservative);
  CHECK(classify_conservative(theta_star(2, 1)) ==
        ConservativityClass::FullyConservative);
  CHECK(classify_conservative(f_star(P(), Q())) ==
        ConservativityClass::Conservative);
  CHECK(classify_conservative(f_star(P(), Q())) !=
        ConservativityClass::FullyConservative);
  CHECK(classify_conservative(Formula::zero()) == ConservativityClass::Neither);
  CHECK(classify_conservative(Formula::bot()) == ConservativityClass::Conservative);
  // double negation in B-position is rejected
  CHECK(classify_conservative(f_imp(neg(neg(P())), P())) ==
        ConservativityClass::Neither);
  CHECK(classify_conservative(Formula::bang(f_star(P(), P()))) ==
        ConservativityClass::Conservative);
}

TEST_CASE("grammar-generated formulas classify as declared") {
  Rng rng(5);
  for (int i = 0; i < 300; ++i) {
    Formula b = random_fully_conservative(1 + i % 25, rng, 3);
    CHECK(classify_conservative(b) == ConservativityClass::FullyConservative);
    Formula c = random_conservative(1 + i % 25, rng, 3);
    CHECK(classify_conservative(c) != ConservativityClass::Neither);
  }
}

TEST_CASE("conservative equivalences check with linear lines") {
  Rng rng(13);
  double worst = 0;
  for (int i = 0; i < 80; ++i) {
    bool fully = i % 2 == 0;
    Formula f = fully ? random_fully_conservative(1 + i % 25, rng, 3)
                      : random_conservative(1 + i % 25, rng, 3);
    ConservativityClass cls = classify_conservative(f);
    ConservativeEquiv eq = prove_conservative_equiv(f, cls, CalcName::IMALL);
    for (const Proof* pr : {&eq.t_equiv.fwd, &eq.t_equiv.bwd}) {
      auto r = check_proof(*pr);
      REQUIRE_MESSAGE(check_ok(r), check_message(r));
      worst = std::max(worst, static_cast<double>(check_metrics(r).lines) /
                                  static_cast<double>(f.size()));
    }
    if (eq.s_bot) {
      check_proof_ok(eq.s_bot->fwd, "s fwd");
      check_proof_ok(eq.s_bot->bwd, "s bwd");
    }
    ChuTranslator tr(bots());
    CHECK(eq.t_equiv.fwd.conclusion() ==
          Sequent{FormulaMultiset{tr.t(f)}, FormulaMultiset{f}});
  }
  CHECK(worst < 40.0);
  // bang formulas go through ILL
  Formula f = Formula::bang(f_star(P(), Q()));
  ConservativeEquiv eq = prove_conservative_equiv(
      f, ConservativityClass::Conservative, CalcName::ILL);
  check_proof_ok(eq.t_equiv.fwd, "ILL fwd");
}

TEST_CASE("pipeline end to end on hand-built proofs") {
  // ((p -> p) /\ 1) \/ (q /\ 1) via id, adj, to_or_1, mp
  Formula A = f_and(f_imp(P(), P()), Formula::one());
  Formula B = f_and(Q(), Formula::one());
  Formula goal = f_or(A, B);
  FregeProof fp;
  FregeSubst s1;
  s1.bind(meta_A(), P());
  fp.lines.push_back(frege_ax(FregeAxiom::Id, s1));
  fp.lines.push_back(frege_adj(0, f_imp(P(), P())));
  FregeSubst s2;
  s2.bind(meta_A(), A);
  s2.bind(meta_B(), B);
  fp.lines.push_back(frege_ax(FregeAxiom::ToOr1, s2));
  fp.lines.push_back(frege_mp(goal, 1, 2));
  for (FregeSystem sys : {FregeSystem::MALL_F, FregeSystem::AMALL_F,
                          FregeSystem::CLL_F, FregeSystem::ALL_F}) {
    REQUIRE(frege_ok(check_frege_proof(sys, fp)));
    Proof out = conservativity_pipeline(fp, sys);
    auto r = check_proof(out);
    std::string msg = system_name(sys) + ": " + check_message(r);
    REQUIRE_MESSAGE(check_ok(r), msg);
    // lands in the plain intuitionistic calculus, no templates left
    CHECK(out.calculus.name == igd_base_for_system(sys));
    for (const ProofNode& n : out.nodes) CHECK(n.rule != Rule::Initial);
    Sequent want;
    want.succ.add(goal);
    CHECK(out.conclusion() == want);
  }
  // a non-conservative conclusion is rejected up front
  FregeProof bad;
  FregeSubst s3;
  s3.bind(meta_A(), P());
  bad.lines.push_back(frege_ax(FregeAxiom::Dn, s3));
  CHECK_THROWS_AS(conservativity_pipeline(bad, FregeSystem::MALL_F),
                  std::invalid_argument);
}
