#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prooflab/builder.hpp"
#include "prooflab/proof.hpp"

using namespace prooflab;

namespace {

Formula P() { return Formula::atom("p"); }
Formula Q() { return Formula::atom("q"); }
Formula R() { return Formula::atom("r"); }

Proof one_node(Calculus c, ProofNode n) {
  Proof p;
  p.calculus = c;
  p.nodes = {std::move(n)};
  p.root = 0;
  return p;
}

} // namespace

TEST_CASE("identity axiom checks, wrong shapes rejected") {
  Calculus fle = Calculus::plain(CalcName::FL_e);
  ProofBuilder b(fle);
  NodeId n = b.ax_id(P());
  Proof p = b.finish(n);
  CheckResult r = check_proof(p);
  REQUIRE(check_ok(r));
  CHECK(check_metrics(r).lines == 2);
  CHECK(check_metrics(r).tree_like);

  // mutation: conclusion p => q is no (id) instance
  ProofNode bad;
  bad.rule = Rule::Id;
  bad.principal = P();
  bad.conclusion.ante.add(P());
  bad.conclusion.succ.add(Q());
  CHECK_FALSE(check_ok(check_proof(one_node(fle, bad))));
}

TEST_CASE("cut assembles p=>q and q=>r") {
  Calculus fle = Calculus::plain(CalcName::FL_e);
  Sequent pq = parse_sequent("p => q"), qr = parse_sequent("q => r");
  ProofBuilder b(fle);
  NodeId h1 = b.ax_hypothesis(pq);
  NodeId h2 = b.ax_hypothesis(qr);
  NodeId cut = b.app2(Rule::Cut, h1, h2, Q());
  Proof p = b.finish(cut);
  CHECK(p.conclusion() == parse_sequent("p => r"));
  CHECK(check_ok(check_proof(p, {pq, qr})));
  // without the hypotheses the leaves are rejected
  CHECK_FALSE(check_ok(check_proof(p)));
}

TEST_CASE("every rule has a valid and a mutated instance") {
  // Valid instance per rule, each fully checked; then a mutation knocking
  // out context arithmetic, the principal, or the calculus.
  struct Case {
    std::string name;
    Calculus calc;
    Proof good;
    Proof bad;
  };
  std::vector<Case> cases;
  Calculus fle = Calculus::plain(CalcName::FL_e);
  Calculus lku = Calculus::plain(CalcName::LK_u);
  Calculus mall = Calculus::plain(CalcName::MALL);
  Calculus cll = Calculus::plain(CalcName::CLL);
  Calculus rll = Calculus::plain(CalcName::RLL);

  auto add_case = [&](std::string name, Calculus c, Proof good, Proof bad) {
    cases.push_back({std::move(name), c, std::move(good), std::move(bad)});
  };

  // oneR / zeroL: context must be empty
  {
    ProofBuilder b(fle);
    Proof good = b.finish(b.ax_one_r());
    ProofNode bad;
    bad.rule = Rule::OneR;
    bad.conclusion = parse_sequent("q => 1");
    add_case("oneR", fle, good, one_node(fle, bad));
  }
  {
    ProofBuilder b(fle);
    Proof good = b.finish(b.ax_zero_l());
    ProofNode bad;
    bad.rule = Rule::ZeroL;
    bad.conclusion = parse_sequent("0, q =>");
    add_case("zeroL", fle, good, one_node(fle, bad));
  }
  // oneW / zeroW
  {
    ProofBuilder b(fle);
    Proof good = b.finish(b.app1(Rule::OneW, b.ax_id(P())));
    Proof bad = good;
    bad.nodes[bad.root].conclusion = parse_sequent("1, 1, p => p");
    add_case("oneW", fle, good, bad);
  }
  {
    ProofBuilder b(fle);
    NodeId n = b.app1(Rule::ZeroW, b.ax_hypothesis(parse_sequent("p =>")));
    Proof good = b.finish(n);
    Proof bad = good;
    bad.nodes[bad.root].conclusion = parse_sequent("p => 1");
    add_case("zeroW", fle, good, bad);
  }
  // LandL / LandR: premise must use the matching conjunct
  {
    ProofBuilder b(fle);
    Proof good = b.finish(b.app1(Rule::LAndL, b.ax_id(P()), f_and(P(), Q())));
    Proof bad = good;
    bad.nodes[bad.root].principal = f_and(Q(), P()); // wrong side
    add_case("LandL", fle, good, bad);
  }
  {
    ProofBuilder b(fle);
    Proof good = b.finish(b.app1(Rule::LAndR, b.ax_id(Q()), f_and(P(), Q())));
    Proof bad = good;
    bad.nodes[bad.root].principal = f_and(Q(), Q());
    add_case("LandR", fle, good, bad);
  }
  // Rand: shared context
  {
    ProofBuilder b(fle);
    NodeId l = b.ax_hypothesis(parse_sequent("s => p"));
    NodeId r = b.ax_hypothesis(parse_sequent("s => q"));
    Proof good = b.finish(b.app2(Rule::RAnd, l, r, f_and(P(), Q())));
    Proof bad = good;
    bad.nodes[1].conclusion = parse_sequent("t => q"); // context differs
    add_case("Rand", fle, good, bad);
  }
  // Lor
  {
    ProofBuilder b(fle);
    NodeId l = b.ax_hypothesis(parse_sequent("p => r"));
    NodeId r = b.ax_hypothesis(parse_sequent("q => r"));
    Proof good = b.finish(b.app2(Rule::LOr, l, r, f_or(P(), Q())));
    Proof bad = good;
    bad.nodes[bad.root].principal = f_or(Q(), P());
    add_case("Lor", fle, good, bad);
  }
  // RorL / RorR
  {
    ProofBuilder b(fle);
    Proof good = b.finish(b.app1(Rule::ROrL, b.ax_id(P()), f_or(P(), Q())));
    Proof bad = good;
    bad.nodes[bad.root].principal = f_or(Q(), P());
    add_case("RorL", fle, good, bad);
  }
  {
    ProofBuilder b(fle);
    Proof good = b.finish(b.app1(Rule::ROrR, b.ax_id(Q()), f_or(P(), Q())));
    Proof bad = good;
    bad.nodes[bad.root].principal = f_or(Q(), Q());
    add_case("RorR", fle, good, bad);
  }
  // Lstar
  {
    ProofBuilder b(fle);
    NodeId n = b.ax_hypothesis(parse_sequent("p, q => r"));
    Proof good = b.finish(b.app1(Rule::LStar, n, f_star(P(), Q())));
    Proof bad = good;
    bad.nodes[bad.root].conclusion = parse_sequent("q * p => r"); // wrong fusion
    add_case("Lstar", fle, good, bad);
  }
  // Rstar: context split
  {
    ProofBuilder b(fle);
    NodeId l = b.ax_hypothesis(parse_sequent("s => p"));
    NodeId r = b.ax_hypothesis(parse_sequent("t => q"));
    Proof good = b.finish(b.app2(Rule::RStar, l, r, f_star(P(), Q())));
    Proof bad = good;
    bad.nodes[bad.root].conclusion = parse_sequent("s => p * q"); // lost t
    add_case("Rstar", fle, good, bad);
  }
  // Limp
  {
    ProofBuilder b(fle);
    NodeId l = b.ax_hypothesis(parse_sequent("s => p"));
    NodeId r = b.ax_hypothesis(parse_sequent("t, q => r"));
    Proof good = b.finish(b.app2(Rule::LImp, l, r, f_imp(P(), Q())));
    Proof bad = good;
    bad.nodes[bad.root].conclusion = parse_sequent("s, t, p -> q => r, r");
    add_case("Limp", fle, good, bad);
  }
  // Rimp
  {
    ProofBuilder b(fle);
    NodeId n = b.ax_hypothesis(parse_sequent("s, p => q"));
    Proof good = b.finish(b.app1(Rule::RImp, n, f_imp(P(), Q())));
    Proof bad = good;
    bad.nodes[bad.root].conclusion = parse_sequent("s, p => p -> q");
    add_case("Rimp", fle, good, bad);
  }
  // cut: wrong cut formula
  {
    ProofBuilder b(fle);
    NodeId l = b.ax_hypothesis(parse_sequent("p => q"));
    NodeId r = b.ax_hypothesis(parse_sequent("q => r"));
    Proof good = b.finish(b.app2(Rule::Cut, l, r, Q()));
    Proof bad = good;
    bad.nodes[bad.root].principal = R();
    add_case("cut", fle, good, bad);
  }
  // top / bot with context (MALL)
  {
    ProofBuilder b(mall);
    Proof good = b.finish(b.ax_top_r(parse_sequent("q => top, r")));
    ProofNode bad;
    bad.rule = Rule::TopR;
    bad.conclusion = parse_sequent("q => r");
    add_case("topR", mall, good, one_node(mall, bad));
  }
  {
    ProofBuilder b(mall);
    Proof good = b.finish(b.ax_bot_l(parse_sequent("q, bot => r")));
    ProofNode bad;
    bad.rule = Rule::BotL;
    bad.conclusion = parse_sequent("q => r");
    add_case("botL", mall, good, one_node(mall, bad));
  }
  // Lw / Rw / Lc / Rc (LK_u)
  {
    ProofBuilder b(lku);
    Proof good = b.finish(b.app1(Rule::Lw, b.ax_id(P()), Q()));
    Proof bad = good;
    bad.nodes[bad.root].conclusion = parse_sequent("p => p"); // nothing added
    add_case("Lw", lku, good, bad);
  }
  {
    ProofBuilder b(lku);
    Proof good = b.finish(b.app1(Rule::Rw, b.ax_id(P()), Q()));
    Proof bad = good;
    bad.nodes[bad.root].principal = R();
    add_case("Rw", lku, good, bad);
  }
  {
    ProofBuilder b(lku);
    NodeId n = b.ax_hypothesis(parse_sequent("p, p => q"));
    Proof good = b.finish(b.app1(Rule::Lc, n, P()));
    Proof bad = good;
    bad.nodes[bad.root].conclusion = parse_sequent("=> q"); // contracted twice
    add_case("Lc", lku, good, bad);
  }
  {
    ProofBuilder b(lku);
    NodeId n = b.ax_hypothesis(parse_sequent("q => p, p"));
    Proof good = b.finish(b.app1(Rule::Rc, n, P()));
    Proof bad = good;
    bad.nodes[bad.root].conclusion = parse_sequent("q => q");
    add_case("Rc", lku, good, bad);
  }
  // exponentials (CLL)
  {
    ProofBuilder b(cll);
    NodeId n = b.ax_hypothesis(parse_sequent("!p => q"));
    Proof good = b.finish(b.app1(Rule::RBang, n, Formula::bang(Q())));
    // mutation: non-! context
    Proof bad = good;
    bad.nodes[0].conclusion = parse_sequent("p => q");
    bad.nodes[1].conclusion = parse_sequent("p => !q");
    add_case("Rbang", cll, good, bad);
  }
  {
    ProofBuilder b(cll);
    NodeId n = b.ax_hypothesis(parse_sequent("p => q"));
    Proof good = b.finish(b.app1(Rule::LBang, n, Formula::bang(P())));
    Proof bad = good;
    bad.nodes[bad.root].principal = Formula::bang(Q());
    add_case("Lbang", cll, good, bad);
  }
  {
    ProofBuilder b(cll);
    Proof good = b.finish(b.app1(Rule::WBang, b.ax_id(Q()), Formula::bang(P())));
    Proof bad = good;
    bad.nodes[bad.root].conclusion = parse_sequent("p, q => q"); // not banged
    bad.nodes[bad.root].principal = P();
    add_case("Wbang", cll, good, bad);
  }
  {
    ProofBuilder b(cll);
    NodeId n = b.ax_hypothesis(parse_sequent("!p, !p => q"));
    Proof good = b.finish(b.app1(Rule::CBang, n, Formula::bang(P())));
    Proof bad = good;
    bad.nodes[bad.root].conclusion = parse_sequent("=> q");
    add_case("Cbang", cll, good, bad);
  }
  // G templates
  Calculus g = Calculus::plain(CalcName::G);
  {
    ProofBuilder b(g);
    Proof good = b.finish(b.ax_initial(TemplateId::Em, P()));
    ProofNode bad;
    bad.rule = Rule::Initial;
    bad.tmpl = TemplateId::Em;
    bad.principal = f_and(Q(), R()); // substitution not allowed
    bad.conclusion.succ.add(f_or(f_and(Q(), R()), neg(f_and(Q(), R()))));
    add_case("initial:em", g, good, one_node(g, bad));
  }
  for (TemplateId t : {TemplateId::UnitPos, TemplateId::UnitNeg,
                       TemplateId::ZeroPos, TemplateId::ZeroNeg}) {
    ProofBuilder b(g);
    Proof good = b.finish(b.ax_initial(t, P()));
    Proof bad = good;
    bad.nodes[0].tmpl = t == TemplateId::UnitPos ? TemplateId::UnitNeg
                                                 : TemplateId::UnitPos;
    add_case("initial:" + template_name(t), g, good, bad);
  }
  {
    ProofBuilder b(g);
    Proof good = b.finish(b.ax_initial(TemplateId::ZeroFuse));
    Proof bad = good;
    bad.nodes[0].conclusion = parse_sequent("0 => 0 * 1");
    add_case("initial:zero_fuse", g, good, bad);
  }
  // LK_nn templates
  Calculus lknn = Calculus::plain(CalcName::LK_nn);
  {
    ProofBuilder b(lknn);
    Proof good = b.finish(b.ax_initial(TemplateId::LitPos, P()));
    ProofNode bad;
    bad.rule = Rule::Initial;
    bad.tmpl = TemplateId::LitPos;
    bad.principal = f_and(P(), Q());
    bad.conclusion = parse_sequent("p /\\ q => p /\\ q");
    add_case("initial:lit_pos", lknn, good, one_node(lknn, bad));
  }
  {
    ProofBuilder b(lknn);
    Proof good = b.finish(b.ax_initial(TemplateId::LitNeg, P()));
    Proof bad = good;
    bad.nodes[0].conclusion = parse_sequent("p -> 0 => q -> 0");
    add_case("initial:lit_neg", lknn, good, bad);
  }
  {
    ProofBuilder b(lknn);
    Proof good = b.finish(b.ax_initial(TemplateId::Clash, P()));
    Proof bad = good;
    bad.nodes[0].conclusion = parse_sequent("p, q -> 0 =>");
    add_case("initial:clash", lknn, good, bad);
  }
  // iG_D dual template
  Calculus igd = Calculus::igd(CalcName::IMALL, Formula::bot(), Formula::bot());
  {
    ProofBuilder b(igd);
    Proof good = b.finish(b.ax_initial(TemplateId::Dual, P()));
    Proof bad = good;
    bad.nodes[0].conclusion = parse_sequent("p, bot => top");
    add_case("initial:dual", igd, good, bad);
  }
  // rule-not-in-calculus mutations
  {
    ProofBuilder b(lku);
    NodeId n = b.ax_hypothesis(parse_sequent("p, p => q"));
    Proof good = b.finish(b.app1(Rule::Lc, n, P()));
    Proof bad = good;
    bad.calculus = fle; // FL_e has no contraction
    add_case("Lc-not-in-FL_e", lku, good, bad);
  }
  {
    ProofBuilder b(rll);
    Proof good = b.finish(b.app1(Rule::Lw, b.ax_id(P()), Q()));
    good.calculus = rll;
    Proof bad = good; // RLL has no plain weakening
    add_case("Lw-not-in-RLL", Calculus::plain(CalcName::ALL), good, bad);
  }

  int total = 0;
  for (auto& c : cases) {
    CAPTURE(c.name);
    std::vector<Sequent> hyps;
    for (const auto& n : c.good.nodes)
      if (n.rule == Rule::Hypothesis) hyps.push_back(n.conclusion);
    c.good.calculus = c.calc;
    std::string good_msg = c.name + ": " + check_message(check_proof(c.good, hyps));
    CHECK_MESSAGE(check_ok(check_proof(c.good, hyps)), good_msg);
    std::vector<Sequent> bhyps;
    for (const auto& n : c.bad.nodes)
      if (n.rule == Rule::Hypothesis) bhyps.push_back(n.conclusion);
    std::string bad_msg = c.name + ": mutation not rejected";
    CHECK_MESSAGE(!check_ok(check_proof(c.bad, bhyps)), bad_msg);
    ++total;
  }
  CHECK(total >= 26);
}

TEST_CASE("language violations are caught") {
  // top is not in the FL_e language
  Calculus fle = Calculus::plain(CalcName::FL_e);
  ProofNode n;
  n.rule = Rule::Id;
  n.principal = Formula::top();
  n.conclusion.ante.add(Formula::top());
  n.conclusion.succ.add(Formula::top());
  CheckResult r = check_proof(one_node(fle, n));
  REQUIRE_FALSE(check_ok(r));
  CHECK(check_violation(r).message.find("language") != std::string::npos);
}

TEST_CASE("single-conclusion discipline enforced") {
  Calculus fle = Calculus::plain(CalcName::FL_e);
  ProofNode n;
  n.rule = Rule::ZeroW;
  n.conclusion = parse_sequent("q => 0, p");
  ProofNode prem;
  prem.rule = Rule::Id;
  prem.principal = Q();
  prem.conclusion = parse_sequent("q => q");
  Proof p;
  p.calculus = fle;
  p.nodes = {prem, n};
  p.nodes[1].premises = {0};
  p.root = 1;
  CHECK_FALSE(check_ok(check_proof(p)));
  // same proof in the multi-conclusion CFL_e: conclusion q => 0, q is fine
  p.nodes[1].conclusion = parse_sequent("q => 0, q");
  p.calculus = Calculus::plain(CalcName::CFL_e);
  CHECK(check_ok(check_proof(p)));
}

TEST_CASE("metrics: lines <= size, dag counted once") {
  Calculus fle = Calculus::plain(CalcName::FL_e);
  ProofBuilder b(fle, /*dedup=*/true);
  NodeId a1 = b.ax_id(P());
  NodeId a2 = b.ax_id(P()); // same node via dedup
  CHECK(a1 == a2);
  NodeId st = b.app2(Rule::RStar, a1, a2, f_star(P(), P()));
  Proof p = b.finish(st);
  CheckResult r = check_proof(p);
  REQUIRE(check_ok(r));
  CHECK(check_metrics(r).node_count == 2);
  CHECK_FALSE(check_metrics(r).tree_like);
  CHECK(check_metrics(r).lines <= check_metrics(r).size);
}

TEST_CASE("checker is deterministic") {
  Calculus fle = Calculus::plain(CalcName::FL_e);
  // two bad nodes; the reported one must always be the first
  Proof p;
  p.calculus = fle;
  ProofNode bad1, bad2;
  bad1.rule = Rule::OneR;
  bad1.conclusion = parse_sequent("p => 1");
  bad2.rule = Rule::ZeroL;
  bad2.conclusion = parse_sequent("0 => p");
  ProofNode root;
  root.rule = Rule::Cut;
  root.principal = Formula::one();
  root.conclusion = parse_sequent("p, 0 => p");
  p.nodes = {bad1, bad2, root};
  p.nodes[2].premises = {0, 1};
  p.root = 2;
  auto r1 = check_proof(p);
  auto r2 = check_proof(p);
  REQUIRE_FALSE(check_ok(r1));
  CHECK(check_violation(r1).node == check_violation(r2).node);
  CHECK(check_violation(r1).node == 0);
  CHECK(check_violation(r1).message == check_violation(r2).message);
}

TEST_CASE("cut-free acceptance implies full acceptance") {
  Calculus flem = Calculus::plain(CalcName::FL_e, /*cut_free=*/true);
  ProofBuilder b(flem);
  NodeId n = b.app1(Rule::RImp, b.ax_id(P()), f_imp(P(), P()));
  // wait: RImp needs p in ante and p in succ; ax_id(p) gives p => p
  Proof p = b.finish(n);
  REQUIRE(check_ok(check_proof(p)));
  p.calculus = Calculus::plain(CalcName::FL_e);
  CHECK(check_ok(check_proof(p)));
}

TEST_CASE("cut rejected in cut-free variant") {
  Calculus fle = Calculus::plain(CalcName::FL_e);
  ProofBuilder b(fle);
  NodeId l = b.ax_hypothesis(parse_sequent("p => q"));
  NodeId r = b.ax_hypothesis(parse_sequent("q => r"));
  Proof p = b.finish(b.app2(Rule::Cut, l, r, Q()));
  std::vector<Sequent> hyps = {parse_sequent("p => q"), parse_sequent("q => r")};
  REQUIRE(check_ok(check_proof(p, hyps)));
  p.calculus = Calculus::plain(CalcName::FL_e, /*cut_free=*/true);
  CHECK_FALSE(check_ok(check_proof(p, hyps)));
}

TEST_CASE("subcalculus embedding") {
  Calculus fle = Calculus::plain(CalcName::FL_e);
  ProofBuilder b(fle);
  Proof p = b.finish(b.app1(Rule::RImp, b.ax_id(P()), f_imp(P(), P())));
  REQUIRE(check_ok(check_proof(p)));

  Proof q = subcalculus_embed(p, Calculus::plain(CalcName::FL_ec));
  CHECK(check_ok(check_proof(q)));
  Proof r = subcalculus_embed(q, Calculus::plain(CalcName::RLL));
  CHECK(check_ok(check_proof(r)));

  // MALL proof using top cannot embed into CFL_e
  ProofBuilder mb(Calculus::plain(CalcName::MALL));
  Proof mp = mb.finish(mb.ax_top_r(parse_sequent("=> top")));
  REQUIRE(check_ok(check_proof(mp)));
  CHECK_THROWS(subcalculus_embed(mp, Calculus::plain(CalcName::CFL_e)));
}

TEST_CASE("proof json round trip") {
  // => (p -> 0) \/ p from the excluded-middle template by cut
  Calculus g = Calculus::plain(CalcName::G);
  ProofBuilder b(g);
  Formula goal = f_or(neg(P()), P());
  NodeId em = b.ax_initial(TemplateId::Em, P());
  NodeId l = b.app1(Rule::ROrR, b.ax_id(P()), goal);
  NodeId r = b.app1(Rule::ROrL, b.ax_id(neg(P())), goal);
  NodeId lor = b.app2(Rule::LOr, l, r, f_or(P(), neg(P())));
  Proof p = b.finish(b.app2(Rule::Cut, em, lor, f_or(P(), neg(P()))));
  REQUIRE(check_ok(check_proof(p)));
  std::string js = proof_to_json(p);
  Proof q = proof_from_json(js);
  CHECK(q.calculus == p.calculus);
  CHECK(q.nodes.size() == p.nodes.size());
  CHECK(check_message(check_proof(q)) == check_message(check_proof(p)));

  Calculus igd = Calculus::igd(CalcName::ILL, Formula::bot(), Formula::bot());
  CHECK(calculus_from_string(calculus_to_string(igd)) == igd);
  CHECK(calculus_from_string("FL_e^-") == Calculus::plain(CalcName::FL_e, true));
}
