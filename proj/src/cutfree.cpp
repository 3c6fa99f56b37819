#include "prooflab/cutfree.hpp"

#include "prooflab/builder.hpp"
#include "prooflab/hard_formulas.hpp"

namespace prooflab {

namespace {

struct StructEngine {
  ProofBuilder b{Calculus::plain(CalcName::G), /*dedup=*/false};
  Formula one = Formula::one();

  static Formula lit_atom(Formula a) {
    return a.is_atom() ? a : a.left(); // neg literal
  }

  // A => 1
  NodeId unit(Formula a) {
    if (a.is_atom()) return b.ax_initial(TemplateId::UnitPos, a);
    if (is_neg_literal(a)) return b.ax_initial(TemplateId::UnitNeg, a.left());
    Formula l = a.left(), r = a.right();
    switch (a.op()) {
      case BinOp::And:
        return b.app1(Rule::LAndL, unit(l), a);
      case BinOp::Or:
        return b.app2(Rule::LOr, unit(l), unit(r), a);
      case BinOp::Star: {
        NodeId rn = b.app1(Rule::OneW, unit(r)); // C, 1 => 1
        NodeId n = b.app2(Rule::Cut, unit(l), rn, one);
        return b.app1(Rule::LStar, n, a);
      }
      default:
        throw std::logic_error("unit: not *-nnf");
    }
  }

  // 0 => A
  NodeId zero(Formula a) {
    if (a.is_atom()) return b.ax_initial(TemplateId::ZeroPos, a);
    if (is_neg_literal(a)) return b.ax_initial(TemplateId::ZeroNeg, a.left());
    Formula l = a.left(), r = a.right();
    switch (a.op()) {
      case BinOp::And:
        return b.app2(Rule::RAnd, zero(l), zero(r), a);
      case BinOp::Or:
        return b.app1(Rule::ROrL, zero(l), a);
      case BinOp::Star: {
        NodeId n = b.app2(Rule::RStar, zero(l), zero(r), a); // 0, 0 => l * r
        n = b.app1(Rule::LStar, n, f_star(Formula::zero(), Formula::zero()));
        return b.app2(Rule::Cut, b.ax_initial(TemplateId::ZeroFuse), n,
                      f_star(Formula::zero(), Formula::zero()));
      }
      default:
        throw std::logic_error("zero: not *-nnf");
    }
  }

  // p, neg p =>   (for an atom p)
  NodeId clash(Formula p) {
    return b.app2(Rule::LImp, b.ax_id(p), b.ax_zero_l(), neg(p));
  }

  Formula guard(Formula f) { return f_and(f, one); }

  // => (f /\ 1) \/ (neg f /\ 1)
  NodeId em_aux(Formula a) {
    Formula na = neg(a);
    Formula goal = f_or(guard(a), guard(na));
    if (a.is_atom() || is_neg_literal(a)) {
      Formula p = lit_atom(a);
      Formula dis = f_or(p, neg(p));
      NodeId pos, ng;
      if (a.is_atom()) {
        pos = b.app2(Rule::RAnd, b.ax_id(a),
                     b.ax_initial(TemplateId::UnitPos, p), guard(a));
        pos = b.app1(Rule::ROrL, pos, goal);
        ng = b.app2(Rule::RAnd, b.ax_id(na),
                    b.ax_initial(TemplateId::UnitNeg, p), guard(na));
        ng = b.app1(Rule::ROrR, ng, goal);
      } else {
        // a = neg p: the p branch proves the double negation
        NodeId dn = b.app1(Rule::ZeroW, clash(p));
        dn = b.app1(Rule::RImp, dn, na); // p => neg neg p
        ng = b.app2(Rule::RAnd, dn, b.ax_initial(TemplateId::UnitPos, p),
                    guard(na));
        ng = b.app1(Rule::ROrR, ng, goal);
        pos = b.app2(Rule::RAnd, b.ax_id(a),
                     b.ax_initial(TemplateId::UnitNeg, p), guard(a));
        pos = b.app1(Rule::ROrL, pos, goal);
      }
      NodeId lor = b.app2(Rule::LOr, a.is_atom() ? pos : ng,
                          a.is_atom() ? ng : pos, dis);
      return b.app2(Rule::Cut, b.ax_initial(TemplateId::Em, p), lor, dis);
    }

    Formula l = a.left(), r = a.right();
    Formula gl = guard(l), gnl = guard(neg(l));
    Formula gr = guard(r), gnr = guard(neg(r));

    // both guards collapse to 1
    auto guards_to_one = [&](Formula g1, Formula g2) {
      NodeId n = b.app1(Rule::OneW, b.app1(Rule::OneW, b.ax_one_r()));
      n = b.app1(Rule::LAndR, n, g1);
      return b.app1(Rule::LAndR, n, g2);
    };
    // side => goal picking the positive disjunct with core proof `pos`
    auto commit_left = [&](NodeId pos_core, Formula g1, Formula g2) {
      NodeId n = b.app2(Rule::RAnd, pos_core, guards_to_one(g1, g2), guard(a));
      return b.app1(Rule::ROrL, n, goal);
    };
    auto commit_right = [&](NodeId neg_core, Formula g1, Formula g2) {
      NodeId n = b.app2(Rule::RAnd, neg_core, guards_to_one(g1, g2), guard(na));
      return b.app1(Rule::ROrR, n, goal);
    };

    NodeId br_pp, br_pn, br_np, br_nn;
    switch (a.op()) {
      case BinOp::And: {
        // (l/\1, r/\1): a itself
        NodeId c1l = b.app1(Rule::OneW, b.ax_id(l));
        c1l = b.app1(Rule::LAndR, c1l, gr);
        c1l = b.app1(Rule::LAndL, c1l, gl);
        NodeId c1r = b.app1(Rule::OneW, b.ax_id(r));
        c1r = b.app1(Rule::LAndR, c1r, gl);
        c1r = b.app1(Rule::LAndL, c1r, gr);
        br_pp = commit_left(b.app2(Rule::RAnd, c1l, c1r, a), gl, gr);
        // (l/\1, neg r/\1): refute via the right conjunct
        NodeId c2 = b.app1(Rule::ZeroW, clash(r));
        c2 = b.app1(Rule::OneW, c2);
        c2 = b.app1(Rule::LAndR, c2, gl);
        c2 = b.app1(Rule::LAndL, c2, gnr);
        c2 = b.app1(Rule::LAndR, c2, a);
        br_pn = commit_right(b.app1(Rule::RImp, c2, na), gl, gnr);
        // (neg l/\1, r/\1)
        NodeId c3 = b.app1(Rule::ZeroW, clash(l));
        c3 = b.app1(Rule::OneW, c3);
        c3 = b.app1(Rule::LAndR, c3, gr);
        c3 = b.app1(Rule::LAndL, c3, gnl);
        c3 = b.app1(Rule::LAndL, c3, a);
        br_np = commit_right(b.app1(Rule::RImp, c3, na), gnl, gr);
        // (neg l/\1, neg r/\1): refute via the left conjunct
        NodeId c4 = b.app1(Rule::ZeroW, clash(l));
        c4 = b.app1(Rule::OneW, c4);
        c4 = b.app1(Rule::LAndR, c4, gnr);
        c4 = b.app1(Rule::LAndL, c4, gnl);
        c4 = b.app1(Rule::LAndL, c4, a);
        br_nn = commit_right(b.app1(Rule::RImp, c4, na), gnl, gnr);
        break;
      }
      case BinOp::Or: {
        auto pick = [&](bool left_branch, Formula my_guard, Formula other_guard) {
          Formula mine = left_branch ? l : r;
          NodeId n = b.ax_id(mine);
          n = b.app1(left_branch ? Rule::ROrL : Rule::ROrR, n, a);
          n = b.app1(Rule::OneW, n);
          n = b.app1(Rule::LAndR, n, other_guard);
          n = b.app1(Rule::LAndL, n, my_guard);
          return n;
        };
        // commit to the true disjunct; the other hypothesis dies by guard
        {
          NodeId core = pick(true, gl, gr);
          br_pp = commit_left(core, gl, gr);
        }
        br_pn = commit_left(pick(true, gl, gnr), gl, gnr);
        br_np = commit_left(pick(false, gr, gnl), gnl, gr);
        // (neg l/\1, neg r/\1): refute both branches
        NodeId d1 = b.app1(Rule::ZeroW, clash(l));
        d1 = b.app1(Rule::OneW, d1);
        d1 = b.app1(Rule::LAndR, d1, gnr);
        d1 = b.app1(Rule::LAndL, d1, gnl);
        NodeId d2 = b.app1(Rule::ZeroW, clash(r));
        d2 = b.app1(Rule::OneW, d2);
        d2 = b.app1(Rule::LAndR, d2, gnl);
        d2 = b.app1(Rule::LAndL, d2, gnr);
        NodeId dd = b.app2(Rule::LOr, d1, d2, a);
        br_nn = commit_right(b.app1(Rule::RImp, dd, na), gnl, gnr);
        break;
      }
      case BinOp::Star: {
        NodeId c1 = b.app2(Rule::RStar, b.ax_id(l), b.ax_id(r), a);
        c1 = b.app1(Rule::LAndL, c1, gl);
        c1 = b.app1(Rule::LAndL, c1, gr);
        br_pp = commit_left(c1, gl, gr);
        // refute with the clashing component, absorb the other by its unit
        auto refute = [&](bool clash_right, Formula g_pos, Formula g_neg) {
          Formula keep = clash_right ? l : r;   // absorbed via unit
          Formula bad = clash_right ? r : l;    // clashes with its negation
          NodeId n = b.app1(Rule::ZeroW, clash(bad));
          n = b.app1(Rule::OneW, n);
          n = b.app2(Rule::Cut, unit(keep), n, one);
          n = b.app1(Rule::OneW, n);
          n = b.app1(Rule::LAndR, n, g_pos);
          n = b.app1(Rule::LAndL, n, g_neg);
          n = b.app1(Rule::LStar, n, a);
          return b.app1(Rule::RImp, n, na);
        };
        br_pn = commit_right(refute(true, gl, gnr), gl, gnr);
        br_np = commit_right(refute(false, gr, gnl), gnl, gr);
        br_nn = commit_right(refute(true, gnl, gnr), gnl, gnr);
        break;
      }
      default:
        throw std::logic_error("em: not *-nnf");
    }
    Formula rdis = f_or(gr, gnr), ldis = f_or(gl, gnl);
    NodeId with_l = b.app2(Rule::LOr, br_pp, br_pn, rdis);
    NodeId with_nl = b.app2(Rule::LOr, br_np, br_nn, rdis);
    NodeId both = b.app2(Rule::LOr, with_l, with_nl, ldis);
    NodeId cut_r = b.app2(Rule::Cut, em_aux(r), both, rdis);
    return b.app2(Rule::Cut, em_aux(l), cut_r, ldis);
  }

  // => A \/ neg A
  NodeId em(Formula a) {
    if (a.is_atom()) return b.ax_initial(TemplateId::Em, a);
    Formula na = neg(a);
    Formula goal = f_or(a, na);
    NodeId l = b.app1(Rule::ROrL, b.app1(Rule::LAndL, b.ax_id(a), guard(a)), goal);
    NodeId r = b.app1(Rule::ROrR, b.app1(Rule::LAndL, b.ax_id(na), guard(na)), goal);
    NodeId lor = b.app2(Rule::LOr, l, r, f_or(guard(a), guard(na)));
    return b.app2(Rule::Cut, em_aux(a), lor, f_or(guard(a), guard(na)));
  }

  // A => A * A
  NodeId dup(Formula a) {
    Formula na = neg(a);
    Formula aa = f_star(a, a);
    NodeId both = b.app2(Rule::RStar, b.ax_id(a), b.ax_id(a), aa);
    NodeId contra = b.app2(Rule::LImp, b.ax_id(a), zero(aa), na);
    NodeId lor = b.app2(Rule::LOr, both, contra, f_or(a, na));
    return b.app2(Rule::Cut, em(a), lor, f_or(a, na));
  }
};

} // namespace

Proof structural_axiom_proof(Formula a, StructuralGoal goal) {
  if (!in_language(a, Lang::Lstarnn))
    throw std::invalid_argument("structural axioms need a *-nnf formula: " +
                                to_string(a));
  StructEngine eng;
  NodeId n = 0;
  switch (goal) {
    case StructuralGoal::Unit: n = eng.unit(a); break;
    case StructuralGoal::Zero: n = eng.zero(a); break;
    case StructuralGoal::Em: n = eng.em(a); break;
    case StructuralGoal::Dup: n = eng.dup(a); break;
  }
  return eng.b.finish(n);
}

// ---- nnf -> G ------------------------------------------------------------------

Proof translate_lknn_to_g(const Proof& p) {
  if (p.calculus.name != CalcName::LK_nn)
    throw std::invalid_argument("input must be an nnf-calculus proof");
  CheckResult chk = check_proof(p);
  if (!check_ok(chk))
    throw std::invalid_argument("input proof does not check: " +
                                check_message(chk));
  if (!check_metrics(chk).tree_like)
    throw std::invalid_argument("input proof must be tree-like");

  ProofBuilder b(Calculus::plain(CalcName::G), /*dedup=*/false);
  std::vector<NodeId> map(p.nodes.size());
  std::vector<int8_t> done(p.nodes.size(), 0);
  // explicit post-order walk
  std::vector<std::pair<NodeId, size_t>> st{{p.root, 0}};
  while (!st.empty()) {
    auto& [idx, k] = st.back();
    const ProofNode& n = p.nodes[idx];
    if (k < n.premises.size()) {
      NodeId q = n.premises[k++];
      if (!done[q]) st.emplace_back(q, 0);
      continue;
    }
    if (!done[idx]) {
      done[idx] = 1;
      switch (n.rule) {
        case Rule::Initial:
          switch (n.tmpl) {
            case TemplateId::LitPos:
              map[idx] = b.ax_id(n.principal);
              break;
            case TemplateId::LitNeg:
              map[idx] = b.ax_id(neg(n.principal));
              break;
            case TemplateId::Clash:
              map[idx] = b.app2(Rule::LImp, b.ax_id(n.principal),
                                b.ax_zero_l(), neg(n.principal));
              break;
            case TemplateId::Em:
              map[idx] = b.ax_initial(TemplateId::Em, n.principal);
              break;
            default:
              throw std::logic_error("unexpected template in nnf proof");
          }
          break;
        case Rule::Lw: {
          Formula a = n.principal;
          NodeId sub = b.app1(Rule::OneW, map[n.premises[0]]);
          Proof u = structural_axiom_proof(a, StructuralGoal::Unit);
          map[idx] = b.app2(Rule::Cut, b.graft(u), sub, Formula::one());
          break;
        }
        case Rule::Rw: {
          Formula a = n.principal;
          NodeId sub = b.app1(Rule::ZeroW, map[n.premises[0]]);
          Proof z = structural_axiom_proof(a, StructuralGoal::Zero);
          map[idx] = b.app2(Rule::Cut, sub, b.graft(z), Formula::zero());
          break;
        }
        case Rule::Lc: {
          Formula a = n.principal;
          NodeId sub = b.app1(Rule::LStar, map[n.premises[0]], f_star(a, a));
          Proof d = structural_axiom_proof(a, StructuralGoal::Dup);
          map[idx] = b.app2(Rule::Cut, b.graft(d), sub, f_star(a, a));
          break;
        }
        case Rule::Rc:
          throw std::invalid_argument(
              "right contraction cannot occur in a single-conclusion proof");
        case Rule::LAndL:
        case Rule::LAndR:
        case Rule::ROrL:
        case Rule::ROrR:
          map[idx] = b.app1(n.rule, map[n.premises[0]], n.principal);
          break;
        case Rule::RAnd:
        case Rule::LOr:
        case Rule::Cut:
          map[idx] = b.app2(n.rule, map[n.premises[0]], map[n.premises[1]],
                            n.principal);
          break;
        default:
          throw std::logic_error("unexpected rule in nnf proof: " +
                                 rule_name(n.rule));
      }
      // the translated node must conclude the same sequent
      if (!(b.seq(map[idx]) == n.conclusion))
        throw std::logic_error("translation drifted at node " +
                               std::to_string(idx));
    }
    st.pop_back();
  }
  return b.finish(map[p.root]);
}

// ---- feasible deduction -----------------------------------------------------------

DeductionResult feasible_deduction(const Proof& p) {
  if (p.calculus.name != CalcName::G)
    throw std::invalid_argument("deduction input must be a G proof");
  CheckResult chk = check_proof(p);
  if (!check_ok(chk))
    throw std::invalid_argument("input proof does not check: " +
                                check_message(chk));
  ProofMetrics m = check_metrics(chk);
  if (!m.tree_like)
    throw std::invalid_argument("deduction input must be tree-like");

  ProofBuilder b(Calculus::plain(CalcName::FL_e), /*dedup=*/false);
  Formula one = Formula::one();
  std::vector<NodeId> map(p.nodes.size());
  std::vector<FormulaMultiset> sig(p.nodes.size());
  std::vector<int8_t> done(p.nodes.size(), 0);
  std::vector<std::pair<NodeId, size_t>> st{{p.root, 0}};
  while (!st.empty()) {
    auto& [idx, k] = st.back();
    const ProofNode& n = p.nodes[idx];
    if (k < n.premises.size()) {
      NodeId q = n.premises[k++];
      if (!done[q]) st.emplace_back(q, 0);
      continue;
    }
    if (done[idx]) {
      st.pop_back();
      continue;
    }
    done[idx] = 1;
    switch (n.rule) {
      case Rule::Id:
        map[idx] = b.ax_id(n.principal);
        break;
      case Rule::OneR:
        map[idx] = b.ax_one_r();
        break;
      case Rule::ZeroL:
        map[idx] = b.ax_zero_l();
        break;
      case Rule::Initial: {
        // A => B contributes ((A -> B) /\ 1); => B contributes (B /\ 1)
        const Sequent& c = n.conclusion;
        Formula member, core;
        NodeId nd;
        if (c.ante.empty()) {
          core = c.succ.items()[0].first;
          member = f_and(core, one);
          nd = b.app1(Rule::LAndL, b.ax_id(core), member);
        } else {
          Formula a = c.ante.items()[0].first;
          Formula bfm = c.succ.empty() ? Formula() : c.succ.items()[0].first;
          if (!bfm.valid())
            throw std::logic_error("template with empty succedent");
          core = f_imp(a, bfm);
          member = f_and(core, one);
          NodeId use = b.app2(Rule::LImp, b.ax_id(a), b.ax_id(bfm), core);
          nd = b.app1(Rule::LAndL, use, member);
        }
        map[idx] = nd;
        sig[idx].add(member);
        break;
      }
      case Rule::OneW:
      case Rule::ZeroW:
        map[idx] = b.app1(n.rule, map[n.premises[0]]);
        sig[idx] = sig[n.premises[0]];
        break;
      case Rule::LAndL:
      case Rule::LAndR:
      case Rule::ROrL:
      case Rule::ROrR:
      case Rule::LStar:
      case Rule::RImp:
        map[idx] = b.app1(n.rule, map[n.premises[0]], n.principal);
        sig[idx] = sig[n.premises[0]];
        break;
      case Rule::RStar:
      case Rule::LImp:
      case Rule::Cut:
        map[idx] = b.app2(n.rule, map[n.premises[0]], map[n.premises[1]],
                          n.principal);
        sig[idx] = sig[n.premises[0]].plus(sig[n.premises[1]]);
        break;
      case Rule::RAnd:
      case Rule::LOr: {
        // weaken each branch with the other's members ((1w) then (L/\))
        NodeId l = map[n.premises[0]], r = map[n.premises[1]];
        const FormulaMultiset& sl = sig[n.premises[0]];
        const FormulaMultiset& sr = sig[n.premises[1]];
        for (Formula mfm : sr.canonical_elements())
          l = b.app1(Rule::LAndR, b.app1(Rule::OneW, l), mfm);
        for (Formula mfm : sl.canonical_elements())
          r = b.app1(Rule::LAndR, b.app1(Rule::OneW, r), mfm);
        map[idx] = b.app2(n.rule, l, r, n.principal);
        sig[idx] = sl.plus(sr);
        break;
      }
      default:
        throw std::logic_error("unexpected rule in G proof: " +
                               rule_name(n.rule));
    }
    st.pop_back();
  }

  DeductionResult out;
  out.sigma = sig[p.root];
  out.proof = b.finish(map[p.root]);
  return out;
}

// ---- the monotone split assembly ----------------------------------------------------

SnResult assemble_sn(uint32_t n, const Proof& lknn_proof) {
  uint32_t k = default_k(n);
  Formula clique = clique_formula(n, k + 1);
  Formula colorbar = colorbar_formula(n, k);
  Sequent want;
  want.ante.add(clique);
  want.succ.add(colorbar);
  if (!(lknn_proof.conclusion() == want))
    throw std::invalid_argument(
        "input must conclude (Clique => negated Color) at the given n");

  Proof g = translate_lknn_to_g(lknn_proof);
  DeductionResult ded = feasible_deduction(g);

  // shared-atom split: members whose variables live in the edge and color
  // families (the empty-variable members included)
  std::set<uint32_t> ps_atoms;
  for (uint32_t i = 1; i <= n; ++i)
    for (uint32_t j = i + 1; j <= n; ++j)
      ps_atoms.insert(edge_atom(i, j).atom_id());
  for (uint32_t i = 1; i <= n; ++i)
    for (uint32_t a = 1; a <= k; ++a)
      ps_atoms.insert(Formula::atom("s_" + std::to_string(i) + "_" +
                                    std::to_string(a))
                          .atom_id());
  SnResult out;
  for (const auto& [f, cnt] : ded.sigma.items()) {
    bool inside = true;
    for (uint32_t v : var_ids(f))
      if (!ps_atoms.count(v)) inside = false;
    (inside ? out.sigma_ps : out.pi).add(f, cnt);
  }

  ProofBuilder b(Calculus::plain(CalcName::FL_e), /*dedup=*/false);
  NodeId root = b.graft(ded.proof);
  root = derive_fold_ante_star(b, root, out.sigma_ps);
  Formula fused = bigstar(out.sigma_ps);
  root = b.app1(Rule::RImp, root, f_imp(fused, colorbar));
  out.proof = b.finish(root);
  out.s_n = out.proof.conclusion();
  return out;
}

} // namespace prooflab
