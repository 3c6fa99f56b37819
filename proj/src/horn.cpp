#include "prooflab/horn.hpp"

#include <algorithm>
#include <set>

#include "prooflab/builder.hpp"

namespace prooflab {

namespace {

bool atoms_fusion(Formula f) {
  if (f.is_atom()) return true;
  return f.is_bin(BinOp::Star) && atoms_fusion(f.left()) &&
         atoms_fusion(f.right());
}

} // namespace

bool is_implicational_horn_formula(Formula f) {
  if (f.is_atom() || f.is_const(Konst::One)) return true;
  if (f.is_bin(BinOp::And))
    return is_implicational_horn_formula(f.left()) &&
           is_implicational_horn_formula(f.right());
  if (f.is_bin(BinOp::Imp)) {
    if (atoms_fusion(f.left()) && f.right().is_atom()) return true;
    if (f.left().is_atom() && atoms_fusion(f.right())) return true;
  }
  return false;
}

bool is_implicational_horn(const Sequent& s) {
  if (s.succ.cardinality() != 1 || !s.succ.items()[0].first.is_atom())
    return false;
  for (const auto& [f, cnt] : s.ante.items())
    if (!is_implicational_horn_formula(f)) return false;
  return true;
}

namespace {

struct HornCore {
  // facts and (body, head) rules over atom ids
  std::set<uint32_t> facts;
  std::vector<std::pair<std::vector<uint32_t>, uint32_t>> rules;
  uint32_t goal = 0;

  static HornCore of(const Sequent& s) {
    if (!is_implicational_horn(s))
      throw std::invalid_argument("sequent is not implicational Horn");
    HornCore core;
    core.goal = s.succ.items()[0].first.atom_id();
    std::vector<Formula> todo;
    for (const auto& [f, cnt] : s.ante.items())
      for (uint32_t i = 0; i < cnt; ++i) todo.push_back(f);
    while (!todo.empty()) {
      Formula f = todo.back();
      todo.pop_back();
      if (f.is_const(Konst::One)) continue;
      if (f.is_atom()) {
        core.facts.insert(f.atom_id());
        continue;
      }
      if (f.is_bin(BinOp::And)) {
        todo.push_back(f.left());
        todo.push_back(f.right());
        continue;
      }
      // implication
      if (f.right().is_atom() && atoms_fusion(f.left())) {
        std::vector<uint32_t> body;
        for (Formula leaf : star_leaves(f.left()).canonical_elements())
          body.push_back(leaf.atom_id());
        core.rules.emplace_back(std::move(body), f.right().atom_id());
      } else {
        // p -> fusion: one rule per fused atom
        for (Formula leaf : star_leaves(f.right()).canonical_elements())
          core.rules.emplace_back(std::vector<uint32_t>{f.left().atom_id()},
                                  leaf.atom_id());
      }
    }
    return core;
  }

  std::set<uint32_t> closure() const {
    std::set<uint32_t> known = facts;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [body, head] : rules) {
        if (known.count(head)) continue;
        bool fire = true;
        for (uint32_t a : body)
          if (!known.count(a)) { fire = false; break; }
        if (fire) {
          known.insert(head);
          changed = true;
        }
      }
    }
    return known;
  }
};

} // namespace

bool horn_valid(const Sequent& s) {
  HornCore core = HornCore::of(s);
  return core.closure().count(core.goal) > 0;
}

std::vector<uint32_t> horn_closure(const Sequent& s) {
  auto cl = HornCore::of(s).closure();
  return {cl.begin(), cl.end()};
}

// ---- the unit propagation prover -------------------------------------------------

namespace {

struct HornProver {
  ProofBuilder b{Calculus::plain(CalcName::LK_u)};
  Formula goal;

  static Formula least(const std::vector<Formula>& fs) {
    return *std::min_element(fs.begin(), fs.end(), StructLess{});
  }

  // proof of (members of G => goal); G must be classically valid for goal
  NodeId prove(const FormulaMultiset& G) {
    // non-core members are normalized first, one at a time
    for (const auto& [f, cnt] : G.items()) {
      if (f.is_const(Konst::One)) {
        FormulaMultiset rest = G;
        rest.remove(f);
        return b.app1(Rule::OneW, prove(rest));
      }
      if (f.is_bin(BinOp::And)) {
        FormulaMultiset rest = G;
        rest.remove(f);
        FormulaMultiset sub = rest;
        sub.add(f.left());
        sub.add(f.right());
        NodeId n = prove(sub);
        // cut with A /\ B => A and A /\ B => B, then merge the two copies
        NodeId l1 = b.app1(Rule::LAndL, b.ax_id(f.left()), f);
        n = b.app2(Rule::Cut, l1, n, f.left());
        NodeId l2 = b.app1(Rule::LAndR, b.ax_id(f.right()), f);
        n = b.app2(Rule::Cut, l2, n, f.right());
        return b.app1(Rule::Lc, n, f);
      }
      if (f.is_bin(BinOp::Imp) && !f.right().is_atom()) {
        // p -> fusion: replace by the component implications
        FormulaMultiset rest = G;
        rest.remove(f);
        Formula p = f.left();
        std::vector<Formula> leaves = star_leaves(f.right()).canonical_elements();
        FormulaMultiset sub = rest;
        for (Formula q : leaves) sub.add(f_imp(p, q));
        NodeId n = prove(sub);
        for (Formula q : leaves) {
          // lemma: f => p -> q, peeling q out of the fusion by weakening
          NodeId fus_to_q = b.ax_id(q);
          FormulaMultiset rest_leaves = star_leaves(f.right());
          rest_leaves.remove(q);
          for (const auto& [o, c2] : rest_leaves.items())
            for (uint32_t k = 0; k < c2; ++k)
              fus_to_q = b.app1(Rule::Lw, fus_to_q, o);
          fus_to_q = derive_fold_ante_star_tree(fus_to_q, f.right());
          NodeId use = b.app2(Rule::LImp, b.ax_id(p), fus_to_q, f);
          NodeId lem = b.app1(Rule::RImp, use, f_imp(p, q));
          n = b.app2(Rule::Cut, lem, n, f_imp(p, q));
        }
        for (size_t k = 1; k < leaves.size(); ++k) n = b.app1(Rule::Lc, n, f);
        return n;
      }
    }
    // core: facts and (fusion -> atom) rules
    if (G.contains(goal)) {
      NodeId n = b.ax_id(goal);
      FormulaMultiset rest = G;
      rest.remove(goal);
      for (const auto& [f, cnt] : rest.items())
        for (uint32_t k = 0; k < cnt; ++k) n = b.app1(Rule::Lw, n, f);
      return n;
    }
    // find the least fact occurring in some rule
    std::vector<Formula> facts, rules;
    for (const auto& [f, cnt] : G.items())
      (f.is_atom() ? facts : rules).push_back(f);
    std::sort(facts.begin(), facts.end(), StructLess{});
    std::sort(rules.begin(), rules.end(), StructLess{});
    for (Formula q : facts) {
      for (Formula A : rules) {
        FormulaMultiset body = star_leaves(A.left());
        Formula head = A.right();
        bool in_body = body.contains(q);
        if (head != q && !in_body) continue;
        FormulaMultiset rest = G;
        rest.remove(A);
        if (head == q) {
          // the rule is redundant
          NodeId n = prove(rest);
          return b.app1(Rule::Lw, n, A);
        }
        if (body.cardinality() > 1) {
          // shrink the body by one occurrence of q
          FormulaMultiset rem = body;
          rem.remove(q);
          Formula Ap = f_imp(bigstar(rem), head);
          FormulaMultiset sub = rest;
          sub.add(Ap);
          NodeId n = prove(sub);
          // lemma: q, A => A'
          NodeId prem1 = derive_star_tree(b, A.left());
          NodeId use = b.app2(Rule::LImp, prem1, b.ax_id(head), A);
          use = derive_fold_ante_star(b, use, rem);
          NodeId lem = b.app1(Rule::RImp, use, Ap);
          n = b.app2(Rule::Cut, lem, n, Ap);
          return b.app1(Rule::Lc, n, q);
        }
        // A = q -> head
        FormulaMultiset sub = rest;
        sub.add(head);
        NodeId n = prove(sub);
        NodeId lem = b.app2(Rule::LImp, b.ax_id(q), b.ax_id(head), A);
        n = b.app2(Rule::Cut, lem, n, head);
        return b.app1(Rule::Lc, n, q);
      }
    }
    throw std::logic_error(
        "unit propagation: no applicable fact, input was not valid");
  }

  // folds the spread leaves of a fusion tree back into the tree shape
  NodeId derive_fold_ante_star_tree(NodeId n, Formula tree) {
    if (!tree.is_bin(BinOp::Star)) return n;
    n = derive_fold_ante_star_tree(n, tree.left());
    n = derive_fold_ante_star_tree(n, tree.right());
    return b.app1(Rule::LStar, n, tree);
  }
};

} // namespace

Proof unit_prop_prove(const Sequent& s) {
  HornCore core = HornCore::of(s);
  auto closure = core.closure();
  if (!closure.count(core.goal)) {
    std::string msg = "sequent is not valid; least model {";
    bool first = true;
    for (uint32_t a : closure) {
      if (!first) msg += ", ";
      msg += atom_name_of(a);
      first = false;
    }
    msg += "} misses ";
    msg += atom_name_of(core.goal);
    throw std::invalid_argument(msg);
  }
  HornProver hp;
  hp.goal = s.succ.items()[0].first;
  NodeId root = hp.prove(s.ante);
  return hp.b.finish(root);
}

// ---- sequent/formula bridge --------------------------------------------------------

Formula sequent_to_formula_goal(const Sequent& t) { return interpretation(t); }

namespace {

// proof of (bigplus of ms => elements of ms), multi-conclusion
NodeId derive_plus_decompose(ProofBuilder& b, const FormulaMultiset& ms) {
  std::vector<Formula> elems = ms.canonical_elements();
  if (elems.empty()) return b.ax_zero_l();
  NodeId acc = b.ax_id(elems[0]);
  Formula accf = elems[0];
  for (size_t i = 1; i < elems.size(); ++i) {
    // acc: accf => e_1, ..., e_i
    Formula next = par(accf, elems[i]);
    NodeId l = b.app1(Rule::ZeroW, acc);
    l = b.app1(Rule::RImp, l, neg(accf));
    NodeId r = b.app1(Rule::ZeroW, b.ax_id(elems[i]));
    r = b.app1(Rule::RImp, r, neg(elems[i]));
    NodeId both = b.app2(Rule::RStar, l, r, f_star(neg(accf), neg(elems[i])));
    NodeId out = b.app2(Rule::LImp, both, b.ax_zero_l(), next);
    acc = out;
    accf = next;
  }
  return acc;
}

} // namespace

Proof lift_formula_proof(const Proof& p, const Sequent& t,
                         const std::vector<Sequent>& hypotheses) {
  CheckResult chk = check_proof(p, hypotheses);
  if (!check_ok(chk))
    throw std::invalid_argument("input proof does not check: " +
                                check_message(chk));
  Sequent want;
  want.succ.add(interpretation(t));
  if (!(p.conclusion() == want))
    throw std::invalid_argument("input proof does not conclude (=> I(t))");

  ProofBuilder b(p.calculus, /*dedup=*/false);
  NodeId have = b.graft(p);
  NodeId prem1 = derive_spread_to_star(b, t.ante);
  NodeId prem2 = derive_plus_decompose(b, t.succ);
  NodeId use = b.app2(Rule::LImp, prem1, prem2, interpretation(t));
  NodeId root = b.app2(Rule::Cut, have, use, interpretation(t));
  return b.finish(root);
}

} // namespace prooflab
