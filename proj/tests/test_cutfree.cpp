#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prooflab/builder.hpp"
#include "prooflab/cutfree.hpp"
#include "prooflab/gen.hpp"
#include "prooflab/hard_formulas.hpp"
#include "prooflab/search.hpp"

using namespace prooflab;

namespace {

void require_ok_tree(const Proof& p, const char* what) {
  auto r = check_proof(p);
  std::string msg = std::string(what) + ": " + check_message(r);
  REQUIRE_MESSAGE(check_ok(r), msg);
  std::string tmsg = std::string(what) + ": not tree-like";
  CHECK_MESSAGE(check_metrics(r).tree_like, tmsg);
}

Sequent goal_sequent(Formula a, StructuralGoal g) {
  Sequent s;
  switch (g) {
    case StructuralGoal::Unit:
      s.ante.add(a);
      s.succ.add(Formula::one());
      break;
    case StructuralGoal::Zero:
      s.ante.add(Formula::zero());
      s.succ.add(a);
      break;
    case StructuralGoal::Em:
      s.succ.add(f_or(a, neg(a)));
      break;
    case StructuralGoal::Dup:
      s.ante.add(a);
      s.succ.add(f_star(a, a));
      break;
  }
  return s;
}

} // namespace

TEST_CASE("structural axioms at the leaves") {
  Formula p = Formula::atom("p");
  // the excluded-middle of an atom is exactly the template
  Proof em = structural_axiom_proof(p, StructuralGoal::Em);
  CHECK(em.nodes.size() == 1);
  CHECK(em.nodes[0].tmpl == TemplateId::Em);
  // negated literal per the displayed tree
  Proof em2 = structural_axiom_proof(neg(p), StructuralGoal::Em);
  require_ok_tree(em2, "em of a negated literal");
  CHECK(em2.conclusion() == goal_sequent(neg(p), StructuralGoal::Em));
  // fusion zero goes through the fused-zero template
  Proof z = structural_axiom_proof(parse_formula("p * q"), StructuralGoal::Zero);
  require_ok_tree(z, "zero of a fusion");
  bool used_fuse = false;
  for (auto& n : z.nodes)
    if (n.tmpl == TemplateId::ZeroFuse) used_fuse = true;
  CHECK(used_fuse);
}

TEST_CASE("structural axioms on random *-nnf formulas, cubic-bounded") {
  Rng rng(64);
  double worst = 0;
  for (int i = 0; i < 60; ++i) {
    Formula a = random_formula(Lang::Lstarnn, 1 + i % 24, rng, 3);
    for (StructuralGoal g : {StructuralGoal::Unit, StructuralGoal::Zero,
                             StructuralGoal::Em, StructuralGoal::Dup}) {
      Proof pr = structural_axiom_proof(a, g);
      auto r = check_proof(pr);
      REQUIRE_MESSAGE(check_ok(r), check_message(r));
      CHECK(check_metrics(r).tree_like);
      CHECK(pr.conclusion() == goal_sequent(a, g));
      double sz = static_cast<double>(check_metrics(r).size);
      double asz = static_cast<double>(a.size());
      worst = std::max(worst, sz / (asz * asz * asz));
    }
  }
  CHECK(worst < 60.0);
  CHECK_THROWS(structural_axiom_proof(parse_formula("p -> q"), StructuralGoal::Em));
}

TEST_CASE("nnf proofs translate to checked tree-like G proofs") {
  // base cases of the translation
  {
    ProofBuilder b(Calculus::plain(CalcName::LK_nn));
    Proof p = b.finish(b.ax_initial(TemplateId::Clash, Formula::atom("p")));
    Proof g = translate_lknn_to_g(p);
    require_ok_tree(g, "clash leaf");
    CHECK(g.conclusion() == p.conclusion());
  }
  // one weakening
  {
    ProofBuilder b(Calculus::plain(CalcName::LK_nn));
    NodeId n = b.ax_initial(TemplateId::LitPos, Formula::atom("p"));
    n = b.app1(Rule::Lw, n, parse_formula("q \\/ (r -> 0)"));
    Proof p = b.finish(n);
    REQUIRE(check_ok(check_proof(p)));
    Proof g = translate_lknn_to_g(p);
    require_ok_tree(g, "left weakening");
    CHECK(g.conclusion() == p.conclusion());
  }
  // one contraction (after an explicit duplication by weakening)
  {
    ProofBuilder b(Calculus::plain(CalcName::LK_nn));
    Formula a = parse_formula("p /\\ q");
    NodeId n = b.ax_initial(TemplateId::LitPos, Formula::atom("p"));
    n = b.app1(Rule::LAndL, n, a); // p /\ q => p
    n = b.app1(Rule::Lw, n, a);    // p /\ q, p /\ q => p
    n = b.app1(Rule::Lc, n, a);    // p /\ q => p
    Proof p = b.finish(n);
    REQUIRE(check_ok(check_proof(p)));
    Proof g = translate_lknn_to_g(p);
    require_ok_tree(g, "left contraction");
    CHECK(g.conclusion() == p.conclusion());
  }
  // right weakening from an empty succedent
  {
    ProofBuilder b(Calculus::plain(CalcName::LK_nn));
    NodeId n = b.ax_initial(TemplateId::Clash, Formula::atom("p"));
    n = b.app1(Rule::Rw, n, parse_formula("q \\/ (q -> 0)"));
    Proof p = b.finish(n);
    REQUIRE(check_ok(check_proof(p)));
    Proof g = translate_lknn_to_g(p);
    require_ok_tree(g, "right weakening");
    CHECK(g.conclusion() == p.conclusion());
  }
}

TEST_CASE("oracle-found nnf proofs translate wholesale") {
  Rng rng(2718);
  int translated = 0;
  for (int i = 0; i < 120 && translated < 25; ++i) {
    Sequent s;
    if (i % 2) s.ante.add(random_formula(Lang::Lnn, 1 + i % 8, rng, 3));
    s.succ.add(random_formula(Lang::Lnn, 1 + i % 9, rng, 3));
    auto d = lknn_decide(s);
    if (!d.proof) continue;
    Proof g = translate_lknn_to_g(*d.proof);
    auto r = check_proof(g);
    REQUIRE_MESSAGE(check_ok(r), check_message(r));
    CHECK(check_metrics(r).tree_like);
    CHECK(g.conclusion() == s);
    ++translated;
  }
  CHECK(translated >= 20);
}

TEST_CASE("feasible deduction: bases and merging") {
  // a pure core proof passes through with an empty multiset
  {
    ProofBuilder b(Calculus::plain(CalcName::G));
    Proof p = b.finish(b.app1(Rule::RImp, b.ax_id(Formula::atom("p")),
                              parse_formula("p -> p")));
    DeductionResult d = feasible_deduction(p);
    CHECK(d.sigma.empty());
    REQUIRE(check_ok(check_proof(d.proof)));
    CHECK(d.proof.conclusion() == p.conclusion());
  }
  // a bare template contributes its guarded member
  {
    ProofBuilder b(Calculus::plain(CalcName::G));
    Proof p = b.finish(b.ax_initial(TemplateId::Em, Formula::atom("p")));
    DeductionResult d = feasible_deduction(p);
    Formula member = parse_formula("(p \\/ (p -> 0)) /\\ 1");
    CHECK(d.sigma.count(member) == 1);
    REQUIRE(check_ok(check_proof(d.proof)));
    Sequent want;
    want.ante.add(member);
    want.succ.add(parse_formula("p \\/ (p -> 0)"));
    CHECK(d.proof.conclusion() == want);
  }
  // additive merge duplicates members across branches
  {
    ProofBuilder b(Calculus::plain(CalcName::G));
    NodeId l = b.ax_initial(TemplateId::UnitPos, Formula::atom("p"));
    NodeId r = b.ax_initial(TemplateId::UnitPos, Formula::atom("p"));
    NodeId n = b.app2(Rule::RAnd, l, r, parse_formula("1 /\\ 1"));
    Proof p = b.finish(n);
    REQUIRE(check_ok(check_proof(p)));
    DeductionResult d = feasible_deduction(p);
    CHECK(d.sigma.count(parse_formula("(p -> 1) /\\ 1")) == 2);
    REQUIRE(check_ok(check_proof(d.proof)));
  }
}

TEST_CASE("deduction postconditions on translated random proofs") {
  Rng rng(31415);
  int done = 0;
  for (int i = 0; i < 150 && done < 20; ++i) {
    Sequent s;
    if (i % 3 != 0) s.ante.add(random_formula(Lang::Lnn, 1 + i % 7, rng, 3));
    s.succ.add(random_formula(Lang::Lnn, 1 + i % 8, rng, 3));
    auto dec = lknn_decide(s);
    if (!dec.proof) continue;
    Proof g = translate_lknn_to_g(*dec.proof);
    DeductionResult d = feasible_deduction(g);
    auto r = check_proof(d.proof);
    REQUIRE_MESSAGE(check_ok(r), check_message(r));
    // members: single-variable, (C /\ 1)-shaped, classically valid
    for (const auto& [f, cnt] : d.sigma.items()) {
      CHECK(is_single_variable(f));
      CHECK(f.is_bin(BinOp::And));
      CHECK(f.right() == Formula::one());
      CHECK(boolean_valid(f));
    }
    // conclusion: sigma members prepended to the original sequent
    Sequent want = s;
    want.ante = want.ante.plus(d.sigma);
    CHECK(d.proof.conclusion() == want);
    ++done;
  }
  CHECK(done >= 15);
}

TEST_CASE("micro assembly of the monotone split sequent") {
  uint32_t n = 2, k = default_k(2);
  REQUIRE(k == 1);
  Formula clique = clique_formula(n, k + 1);
  Formula colorbar = colorbar_formula(n, k);
  Sequent target;
  target.ante.add(clique);
  target.succ.add(colorbar);
  // the oracle supplies the nnf proof
  auto dec = lknn_decide(target);
  REQUIRE_MESSAGE(dec.proof, "the micro clique/color sequent must be provable");
  REQUIRE(check_ok(check_proof(*dec.proof)));

  SnResult sn = assemble_sn(n, *dec.proof);
  auto r = check_proof(sn.proof);
  REQUIRE_MESSAGE(check_ok(r), check_message(r));

  // the antecedent is monotone in the edge atoms
  std::vector<uint32_t> edges;
  for (uint32_t i = 1; i <= n; ++i)
    for (uint32_t j = i + 1; j <= n; ++j)
      edges.push_back(edge_atom(i, j).atom_id());
  for (const auto& [f, cnt] : sn.s_n.ante.items())
    CHECK(monotone_in(f, edges));

  // the remainder shares no variables with the edge/color families
  std::set<uint32_t> ps;
  for (uint32_t e : edges) ps.insert(e);
  for (uint32_t i = 1; i <= n; ++i)
    for (uint32_t a = 1; a <= k; ++a)
      ps.insert(Formula::atom("s_" + std::to_string(i) + "_" +
                              std::to_string(a))
                    .atom_id());
  for (const auto& [f, cnt] : sn.pi.items())
    for (uint32_t v : var_ids(f)) CHECK(ps.count(v) == 0);

  // the sequent's classical reading is a tautology
  CHECK(boolean_valid(interpretation(sn.s_n)));

  // shape: Clique, Pi => (fused sigma) -> colorbar
  CHECK(sn.s_n.ante.contains(clique));
  FormulaMultiset rest;
  REQUIRE(sn.s_n.ante.minus(FormulaMultiset{clique}, rest));
  CHECK(rest == sn.pi);
}
