// The proof checker.  Checking is multiset arithmetic against the stored
// principal bookkeeping; no search happens here.

#include "prooflab/proof.hpp"

namespace prooflab {

namespace {

std::string fmt(const Sequent& s) { return "[" + to_string(s) + "]"; }

// Verifies conclusion == expectation and reports the discrepancy.
std::string expect_seq(const Sequent& got, const Sequent& want,
                       const char* what) {
  if (got == want) return {};
  return std::string(what) + ": expected " + fmt(want) + ", got " + fmt(got);
}

struct Ctx {
  const CalculusRules& rules;
  const Calculus& calc;
  const ProofNode& n;
  const std::vector<Sequent>& prem;

  const Sequent& C() const { return n.conclusion; }
  Formula pr() const { return n.principal; }
};

std::string check_initial(const Ctx& c) {
  if (!c.rules.has_template(c.n.tmpl))
    return "template '" + template_name(c.n.tmpl) + "' not in calculus";
  Formula p = c.pr();
  Sequent want;
  switch (c.n.tmpl) {
    case TemplateId::Em:
      if (!p.is_atom()) return "template requires atom";
      want.succ.add(f_or(p, neg(p)));
      break;
    case TemplateId::UnitPos:
      if (!p.is_atom()) return "template requires atom";
      want.ante.add(p);
      want.succ.add(Formula::one());
      break;
    case TemplateId::UnitNeg:
      if (!p.is_atom()) return "template requires atom";
      want.ante.add(neg(p));
      want.succ.add(Formula::one());
      break;
    case TemplateId::ZeroPos:
      if (!p.is_atom()) return "template requires atom";
      want.ante.add(Formula::zero());
      want.succ.add(p);
      break;
    case TemplateId::ZeroNeg:
      if (!p.is_atom()) return "template requires atom";
      want.ante.add(Formula::zero());
      want.succ.add(neg(p));
      break;
    case TemplateId::ZeroFuse:
      want.ante.add(Formula::zero());
      want.succ.add(f_star(Formula::zero(), Formula::zero()));
      break;
    case TemplateId::Dual:
      if (!p.is_atom()) return "template requires atom";
      if (c.calc.name != CalcName::IGD) return "dual template outside iG_D";
      want.ante.add(p);
      want.ante.add(c.calc.N);
      want.succ.add(c.calc.D);
      break;
    case TemplateId::LitPos:
      if (!p.is_atom()) return "template requires atom";
      want.ante.add(p);
      want.succ.add(p);
      break;
    case TemplateId::LitNeg:
      if (!p.is_atom()) return "template requires atom";
      want.ante.add(neg(p));
      want.succ.add(neg(p));
      break;
    case TemplateId::Clash:
      if (!p.is_atom()) return "template requires atom";
      want.ante.add(p);
      want.ante.add(neg(p));
      break;
    case TemplateId::None:
      return "initial node without template";
  }
  return expect_seq(c.C(), want, "initial template mismatch");
}

std::string check_schema(const Ctx& c) {
  const Sequent& C = c.C();
  Formula pr = c.pr();
  auto need_principal = [&]() -> std::string {
    if (!pr.valid()) return "missing principal formula";
    return {};
  };

  switch (c.n.rule) {
    case Rule::Id: {
      if (auto e = need_principal(); !e.empty()) return e;
      Sequent want;
      want.ante.add(pr);
      want.succ.add(pr);
      return expect_seq(C, want, "(id) mismatch");
    }
    case Rule::OneR: {
      Sequent want;
      want.succ.add(Formula::one());
      return expect_seq(C, want, "(1R) must be exactly => 1");
    }
    case Rule::ZeroL: {
      Sequent want;
      want.ante.add(Formula::zero());
      return expect_seq(C, want, "(0L) must be exactly 0 =>");
    }
    case Rule::TopR:
      if (!C.succ.contains(Formula::top()))
        return "(top) needs top in the succedent";
      return {};
    case Rule::BotL:
      if (!C.ante.contains(Formula::bot()))
        return "(bot) needs bot in the antecedent";
      return {};
    case Rule::OneW: {
      Sequent want = c.prem[0];
      want.ante.add(Formula::one());
      return expect_seq(C, want, "(1w) mismatch");
    }
    case Rule::ZeroW: {
      Sequent want = c.prem[0];
      want.succ.add(Formula::zero());
      return expect_seq(C, want, "(0w) mismatch");
    }
    case Rule::LAndL:
    case Rule::LAndR: {
      if (auto e = need_principal(); !e.empty()) return e;
      if (!pr.is_bin(BinOp::And)) return "principal is not a conjunction";
      Formula piece = c.n.rule == Rule::LAndL ? pr.left() : pr.right();
      Sequent want = C;
      if (!want.ante.remove(pr)) return "principal not in antecedent";
      want.ante.add(piece);
      return expect_seq(c.prem[0], want, "(L/\\) premise mismatch");
    }
    case Rule::RAnd: {
      if (auto e = need_principal(); !e.empty()) return e;
      if (!pr.is_bin(BinOp::And)) return "principal is not a conjunction";
      Sequent base = C;
      if (!base.succ.remove(pr)) return "principal not in succedent";
      Sequent w1 = base, w2 = base;
      w1.succ.add(pr.left());
      w2.succ.add(pr.right());
      if (auto e = expect_seq(c.prem[0], w1, "(R/\\) left premise"); !e.empty()) return e;
      return expect_seq(c.prem[1], w2, "(R/\\) right premise");
    }
    case Rule::LOr: {
      if (auto e = need_principal(); !e.empty()) return e;
      if (!pr.is_bin(BinOp::Or)) return "principal is not a disjunction";
      Sequent base = C;
      if (!base.ante.remove(pr)) return "principal not in antecedent";
      Sequent w1 = base, w2 = base;
      w1.ante.add(pr.left());
      w2.ante.add(pr.right());
      if (auto e = expect_seq(c.prem[0], w1, "(L\\/) left premise"); !e.empty()) return e;
      return expect_seq(c.prem[1], w2, "(L\\/) right premise");
    }
    case Rule::ROrL:
    case Rule::ROrR: {
      if (auto e = need_principal(); !e.empty()) return e;
      if (!pr.is_bin(BinOp::Or)) return "principal is not a disjunction";
      Formula piece = c.n.rule == Rule::ROrL ? pr.left() : pr.right();
      Sequent want = C;
      if (!want.succ.remove(pr)) return "principal not in succedent";
      want.succ.add(piece);
      return expect_seq(c.prem[0], want, "(R\\/) premise mismatch");
    }
    case Rule::LStar: {
      if (auto e = need_principal(); !e.empty()) return e;
      if (!pr.is_bin(BinOp::Star)) return "principal is not a fusion";
      Sequent want = C;
      if (!want.ante.remove(pr)) return "principal not in antecedent";
      want.ante.add(pr.left());
      want.ante.add(pr.right());
      return expect_seq(c.prem[0], want, "(L*) premise mismatch");
    }
    case Rule::RStar: {
      if (auto e = need_principal(); !e.empty()) return e;
      if (!pr.is_bin(BinOp::Star)) return "principal is not a fusion";
      Sequent p1 = c.prem[0], p2 = c.prem[1];
      if (!p1.succ.remove(pr.left()))
        return "(R*) left component missing in first premise succedent";
      if (!p2.succ.remove(pr.right()))
        return "(R*) right component missing in second premise succedent";
      Sequent want;
      want.ante = p1.ante.plus(p2.ante);
      want.succ = p1.succ.plus(p2.succ);
      want.succ.add(pr);
      return expect_seq(C, want, "(R*) context split mismatch");
    }
    case Rule::LImp: {
      if (auto e = need_principal(); !e.empty()) return e;
      if (!pr.is_bin(BinOp::Imp)) return "principal is not an implication";
      Sequent p1 = c.prem[0], p2 = c.prem[1];
      if (!p1.succ.remove(pr.left()))
        return "(L->) antecedent part missing in first premise succedent";
      if (!p2.ante.remove(pr.right()))
        return "(L->) consequent part missing in second premise antecedent";
      Sequent want;
      want.ante = p1.ante.plus(p2.ante);
      want.ante.add(pr);
      want.succ = p1.succ.plus(p2.succ);
      return expect_seq(C, want, "(L->) context split mismatch");
    }
    case Rule::RImp: {
      if (auto e = need_principal(); !e.empty()) return e;
      if (!pr.is_bin(BinOp::Imp)) return "principal is not an implication";
      Sequent want = C;
      if (!want.succ.remove(pr)) return "principal not in succedent";
      want.ante.add(pr.left());
      want.succ.add(pr.right());
      return expect_seq(c.prem[0], want, "(R->) premise mismatch");
    }
    case Rule::Cut: {
      if (auto e = need_principal(); !e.empty()) return e;
      Sequent p1 = c.prem[0], p2 = c.prem[1];
      if (!p1.succ.remove(pr)) return "cut formula missing in first premise succedent";
      if (!p2.ante.remove(pr)) return "cut formula missing in second premise antecedent";
      Sequent want;
      want.ante = p1.ante.plus(p2.ante);
      want.succ = p1.succ.plus(p2.succ);
      return expect_seq(C, want, "(cut) context mismatch");
    }
    case Rule::Lw: {
      if (auto e = need_principal(); !e.empty()) return e;
      Sequent want = C;
      if (!want.ante.remove(pr)) return "weakened formula not in antecedent";
      return expect_seq(c.prem[0], want, "(Lw) premise mismatch");
    }
    case Rule::Rw: {
      if (auto e = need_principal(); !e.empty()) return e;
      Sequent want = C;
      if (!want.succ.remove(pr)) return "weakened formula not in succedent";
      return expect_seq(c.prem[0], want, "(Rw) premise mismatch");
    }
    case Rule::Lc: {
      if (auto e = need_principal(); !e.empty()) return e;
      if (!C.ante.contains(pr)) return "contracted formula not in antecedent";
      Sequent want = C;
      want.ante.add(pr);
      return expect_seq(c.prem[0], want, "(Lc) premise mismatch");
    }
    case Rule::Rc: {
      if (auto e = need_principal(); !e.empty()) return e;
      if (!C.succ.contains(pr)) return "contracted formula not in succedent";
      Sequent want = C;
      want.succ.add(pr);
      return expect_seq(c.prem[0], want, "(Rc) premise mismatch");
    }
    case Rule::RBang: {
      if (auto e = need_principal(); !e.empty()) return e;
      if (!pr.is_bang()) return "principal is not a !-formula";
      for (const auto& [f, cnt] : C.ante.items())
        if (!f.is_bang()) return "(R!) antecedent must be fully !-prefixed";
      Sequent wantc;
      wantc.ante = C.ante;
      wantc.succ.add(pr);
      if (auto e = expect_seq(C, wantc, "(R!) conclusion shape"); !e.empty()) return e;
      Sequent want;
      want.ante = C.ante;
      want.succ.add(pr.sub());
      return expect_seq(c.prem[0], want, "(R!) premise mismatch");
    }
    case Rule::LBang: {
      if (auto e = need_principal(); !e.empty()) return e;
      if (!pr.is_bang()) return "principal is not a !-formula";
      Sequent want = C;
      if (!want.ante.remove(pr)) return "principal not in antecedent";
      want.ante.add(pr.sub());
      return expect_seq(c.prem[0], want, "(L!) premise mismatch");
    }
    case Rule::WBang: {
      if (auto e = need_principal(); !e.empty()) return e;
      if (!pr.is_bang()) return "principal is not a !-formula";
      Sequent want = C;
      if (!want.ante.remove(pr)) return "principal not in antecedent";
      return expect_seq(c.prem[0], want, "(W!) premise mismatch");
    }
    case Rule::CBang: {
      if (auto e = need_principal(); !e.empty()) return e;
      if (!pr.is_bang()) return "principal is not a !-formula";
      if (!C.ante.contains(pr)) return "principal not in antecedent";
      Sequent want = C;
      want.ante.add(pr);
      return expect_seq(c.prem[0], want, "(C!) premise mismatch");
    }
    case Rule::Initial:
      return check_initial(c);
    case Rule::Hypothesis:
      return {}; // membership handled by check_proof
  }
  return "unhandled rule";
}

constexpr int arity_of(Rule r) {
  switch (r) {
    case Rule::Id: case Rule::OneR: case Rule::ZeroL: case Rule::TopR:
    case Rule::BotL: case Rule::Initial: case Rule::Hypothesis:
      return 0;
    case Rule::RAnd: case Rule::LOr: case Rule::RStar: case Rule::LImp:
    case Rule::Cut:
      return 2;
    default:
      return 1;
  }
}

} // namespace

std::string check_rule_instance(const CalculusRules& rules, const Calculus& calc,
                                const ProofNode& node,
                                const std::vector<Sequent>& premise_seqs) {
  if (node.rule != Rule::Initial && node.rule != Rule::Hypothesis &&
      !rules.has(node.rule))
    return "rule not in calculus";
  if (static_cast<int>(premise_seqs.size()) != arity_of(node.rule))
    return "wrong premise count for rule";
  Ctx c{rules, calc, node, premise_seqs};
  return check_schema(c);
}

CheckResult check_proof(const Proof& p, const std::vector<Sequent>& hypotheses) {
  if (p.nodes.empty())
    return Violation{0, Rule::Id, "empty proof"};
  if (p.root >= p.nodes.size())
    return Violation{p.root, Rule::Id, "root index out of range"};

  CalculusRules rules = calculus_rules(p.calculus);

  // premise bounds + acyclicity (iterative DFS, gray/black marking)
  for (NodeId i = 0; i < p.nodes.size(); ++i)
    for (NodeId q : p.nodes[i].premises)
      if (q >= p.nodes.size())
        return Violation{i, p.nodes[i].rule, "premise index out of range"};
  {
    std::vector<uint8_t> color(p.nodes.size(), 0);
    for (NodeId start = 0; start < p.nodes.size(); ++start) {
      if (color[start]) continue;
      std::vector<std::pair<NodeId, size_t>> stack{{start, 0}};
      color[start] = 1;
      while (!stack.empty()) {
        auto& [n, k] = stack.back();
        if (k == p.nodes[n].premises.size()) {
          color[n] = 2;
          stack.pop_back();
          continue;
        }
        NodeId q = p.nodes[n].premises[k++];
        if (color[q] == 1)
          return Violation{n, p.nodes[n].rule, "cycle through premises"};
        if (color[q] == 0) {
          color[q] = 1;
          stack.emplace_back(q, 0);
        }
      }
    }
  }

  for (NodeId i = 0; i < p.nodes.size(); ++i) {
    const ProofNode& n = p.nodes[i];
    // conclusion discipline and language membership
    if (rules.single_conclusion && n.conclusion.succ.cardinality() > 1)
      return Violation{i, n.rule, "succedent exceeds single-conclusion discipline"};
    for (const auto& side : {&n.conclusion.ante, &n.conclusion.succ})
      for (const auto& [f, cnt] : side->items())
        if (!in_language(f, rules.lang))
          return Violation{i, n.rule, "formula outside calculus language: " + to_string(f)};
    if (n.rule == Rule::Hypothesis) {
      bool found = false;
      for (const Sequent& h : hypotheses)
        if (h == n.conclusion) { found = true; break; }
      if (!found)
        return Violation{i, n.rule, "hypothesis leaf not among supplied hypotheses"};
      continue;
    }
    std::vector<Sequent> prem;
    prem.reserve(n.premises.size());
    for (NodeId q : n.premises) prem.push_back(p.nodes[q].conclusion);
    std::string err = check_rule_instance(rules, p.calculus, n, prem);
    if (!err.empty()) return Violation{i, n.rule, err};
  }

  return proof_metrics(p);
}

} // namespace prooflab
