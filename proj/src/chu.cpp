#include "prooflab/chu.hpp"

#include "prooflab/builder.hpp"

namespace prooflab {

Formula ChuTranslator::t(Formula f) {
  auto it = t_memo_.find(f.id());
  if (it != t_memo_.end()) return it->second;
  Formula out;
  switch (f.kind()) {
    case FKind::Atom:
      out = f;
      break;
    case FKind::Const:
      switch (f.const_kind()) {
        case Konst::One: out = Formula::one(); break;
        case Konst::Zero: out = params_.D; break;
        case Konst::Top: out = Formula::top(); break;
        case Konst::Bot: out = Formula::bot(); break;
      }
      break;
    case FKind::Bang:
      out = Formula::bang(t(f.sub()));
      break;
    case FKind::Bin:
      switch (f.op()) {
        case BinOp::And:
        case BinOp::Or:
        case BinOp::Star:
          out = Formula::bin(f.op(), t(f.left()), t(f.right()));
          break;
        case BinOp::Imp:
          out = f_and(f_imp(t(f.left()), t(f.right())),
                      f_imp(s(f.right()), s(f.left())));
          break;
      }
      break;
  }
  t_memo_.emplace(f.id(), out);
  return out;
}

Formula ChuTranslator::s(Formula f) {
  auto it = s_memo_.find(f.id());
  if (it != s_memo_.end()) return it->second;
  Formula out;
  switch (f.kind()) {
    case FKind::Atom:
      out = params_.N;
      break;
    case FKind::Const:
      switch (f.const_kind()) {
        case Konst::One: out = params_.D; break;
        case Konst::Zero: out = Formula::one(); break;
        case Konst::Top: out = Formula::bot(); break;
        case Konst::Bot: out = Formula::top(); break;
      }
      break;
    case FKind::Bang:
      out = f_imp(Formula::bang(t(f.sub())), params_.D);
      break;
    case FKind::Bin:
      switch (f.op()) {
        case BinOp::And:
          out = f_or(s(f.left()), s(f.right()));
          break;
        case BinOp::Or:
          out = f_and(s(f.left()), s(f.right()));
          break;
        case BinOp::Star:
          out = f_and(f_imp(t(f.left()), s(f.right())),
                      f_imp(t(f.right()), s(f.left())));
          break;
        case BinOp::Imp:
          out = f_star(t(f.left()), s(f.right()));
          break;
      }
      break;
  }
  s_memo_.emplace(f.id(), out);
  return out;
}

CalcName igd_base_for_system(FregeSystem sys) {
  switch (sys) {
    case FregeSystem::FLe_F:
    case FregeSystem::CFLe_F: return CalcName::FL_e;
    case FregeSystem::CFLew_F: return CalcName::AIMALL; // (bot) needed at D=bot
    case FregeSystem::MALL_F: return CalcName::IMALL;
    case FregeSystem::AMALL_F: return CalcName::AIMALL;
    case FregeSystem::CLL_F: return CalcName::ILL;
    case FregeSystem::ALL_F: return CalcName::AILL;
  }
  return CalcName::FL_e;
}

Calculus igd_for_system(FregeSystem sys, const ChuParams& p) {
  return Calculus::igd(igd_base_for_system(sys), p.D, p.N);
}

// ---- the proof engine --------------------------------------------------------

namespace {

struct ChuEngine {
  ChuTranslator tr;
  Calculus calc;
  ProofBuilder b;
  std::unordered_map<uint32_t, NodeId> absorb_memo;

  ChuEngine(const ChuParams& p, Calculus c)
      : tr(p), calc(std::move(c)), b(calc, /*dedup=*/true) {}

  Formula D() const { return tr.params().D; }
  Formula t(Formula f) { return tr.t(f); }
  Formula s(Formula f) { return tr.s(f); }

  NodeId id(Formula f) { return b.ax_id(f); }
  NodeId rimp(NodeId n, Formula f) { return b.app1(Rule::RImp, n, f); }
  NodeId rand(NodeId l, NodeId r, Formula f) { return b.app2(Rule::RAnd, l, r, f); }
  NodeId apply_imp(Formula x, Formula y) { return derive_imp_apply(b, x, y); }

  // A^t, A^s => D
  NodeId absorb(Formula a) {
    auto it = absorb_memo.find(a.id());
    if (it != absorb_memo.end()) return it->second;
    NodeId out = 0;
    switch (a.kind()) {
      case FKind::Atom:
        out = b.ax_initial(TemplateId::Dual, a);
        break;
      case FKind::Const:
        switch (a.const_kind()) {
          case Konst::One:  // 1, D => D
          case Konst::Zero: // D, 1 => D
            out = b.app1(Rule::OneW, id(D()));
            break;
          case Konst::Top:
          case Konst::Bot: { // top, bot => D
            Sequent c;
            c.ante.add(Formula::top());
            c.ante.add(Formula::bot());
            c.succ.add(D());
            out = b.ax_bot_l(c);
            break;
          }
        }
        break;
      case FKind::Bang:
        // !A^t, !A^t -> D => D
        out = b.app2(Rule::LImp, id(t(a)), id(D()), s(a));
        break;
      case FKind::Bin: {
        Formula l = a.left(), r = a.right();
        switch (a.op()) {
          case BinOp::And: {
            NodeId n1 = b.app1(Rule::LAndL, absorb(l), t(a));
            NodeId n2 = b.app1(Rule::LAndR, absorb(r), t(a));
            out = b.app2(Rule::LOr, n1, n2, s(a));
            break;
          }
          case BinOp::Or: {
            NodeId n1 = b.app1(Rule::LAndL, absorb(l), s(a));
            NodeId n2 = b.app1(Rule::LAndR, absorb(r), s(a));
            out = b.app2(Rule::LOr, n1, n2, t(a));
            break;
          }
          case BinOp::Star: {
            NodeId n =
                b.app2(Rule::LImp, id(t(l)), absorb(r), f_imp(t(l), s(r)));
            n = b.app1(Rule::LAndL, n, s(a));
            out = b.app1(Rule::LStar, n, t(a));
            break;
          }
          case BinOp::Imp: {
            NodeId n =
                b.app2(Rule::LImp, id(s(r)), absorb(l), f_imp(s(r), s(l)));
            n = b.app1(Rule::LAndR, n, t(a));
            out = b.app1(Rule::LStar, n, s(a));
            break;
          }
        }
        break;
      }
    }
    absorb_memo.emplace(a.id(), out);
    return out;
  }

  // (neg A)^t => A^s
  NodeId negt_fwd(Formula a) {
    NodeId n = b.app2(Rule::LImp, b.ax_one_r(), id(s(a)),
                      f_imp(Formula::one(), s(a)));
    return b.app1(Rule::LAndR, n, t(neg(a)));
  }
  // A^s => (neg A)^t
  NodeId negt_bwd(Formula a) {
    NodeId p1 = rimp(absorb(a), f_imp(t(a), D()));
    NodeId p2 =
        rimp(b.app1(Rule::OneW, id(s(a))), f_imp(Formula::one(), s(a)));
    return rand(p1, p2, t(neg(a)));
  }
  // (neg A)^s => A^t
  NodeId negs_fwd(Formula a) {
    NodeId n = b.app1(Rule::OneW, id(t(a)));
    return b.app1(Rule::LStar, n, s(neg(a)));
  }
  // A^t => (neg A)^s
  NodeId negs_bwd(Formula a) {
    return b.app2(Rule::RStar, id(t(a)), b.ax_one_r(), s(neg(a)));
  }

  // ---- axiom cases: each returns a node concluding (=> t of the instance)

  NodeId case_id(Formula A) {
    NodeId beta = rimp(id(t(A)), f_imp(t(A), t(A)));
    NodeId gamma = rimp(id(s(A)), f_imp(s(A), s(A)));
    return rand(beta, gamma, t(f_imp(A, A)));
  }

  NodeId case_pf(Formula A, Formula B, Formula C) {
    Formula tA = t(A), tB = t(B), tC = t(C), sA = s(A), sB = s(B), sC = s(C);
    Formula phi = t(f_imp(A, B));
    Formula phiCA = t(f_imp(C, A)), phiCB = t(f_imp(C, B));
    Formula psi = f_imp(phiCA, phiCB);
    Formula theta = f_imp(s(f_imp(C, B)), s(f_imp(C, A)));
    // phi => theta: lift sB->sA through the fused context tC * (.)
    NodeId n = b.app2(Rule::RStar, id(tC), apply_imp(sB, sA), f_star(tC, sA));
    n = b.app1(Rule::LStar, n, f_star(tC, sB));
    n = rimp(n, theta);
    NodeId phi_theta = b.app1(Rule::LAndR, n, phi);
    // phi => psi: compose both component implications
    NodeId l1 = derive_imp_trans(b, tC, tA, tB);
    l1 = b.app1(Rule::LAndL, l1, phiCA);
    l1 = b.app1(Rule::LAndL, l1, phi);
    NodeId l2 = derive_imp_trans(b, sB, sA, sC);
    l2 = b.app1(Rule::LAndR, l2, phiCA);
    l2 = b.app1(Rule::LAndR, l2, phi);
    NodeId phi_psi = rimp(rand(l1, l2, phiCB), psi);
    NodeId beta =
        rimp(rand(phi_psi, phi_theta, f_and(psi, theta)),
             f_imp(phi, f_and(psi, theta)));
    // gamma: (phiCA * (tC * sB)) -> tA * sB
    NodeId g = apply_imp(tC, tA);
    g = b.app1(Rule::LAndL, g, phiCA);
    g = b.app2(Rule::RStar, g, id(sB), f_star(tA, sB));
    g = b.app1(Rule::LStar, g, f_star(tC, sB));
    g = b.app1(Rule::LStar, g, f_star(phiCA, f_star(tC, sB)));
    NodeId gamma = rimp(g, f_imp(f_star(phiCA, f_star(tC, sB)), f_star(tA, sB)));
    return rand(beta, gamma,
                t(f_imp(f_imp(A, B), f_imp(f_imp(C, A), f_imp(C, B)))));
  }

  NodeId case_per(Formula A, Formula B, Formula C) {
    Formula tA = t(A), tB = t(B), tC = t(C), sA = s(A), sB = s(B), sC = s(C);
    Formula inner = t(f_imp(B, C));
    Formula phi = t(f_imp(A, f_imp(B, C)));
    Formula tAC = t(f_imp(A, C));
    Formula psi1 = f_imp(tB, tAC);
    Formula psi2 = f_imp(s(f_imp(A, C)), sB);
    // phi, tB => tA -> tC
    NodeId core1 = b.app1(Rule::LAndL, apply_imp(tB, tC), inner);
    NodeId q1 = b.app2(Rule::LImp, id(tA), core1, f_imp(tA, inner));
    q1 = b.app1(Rule::LAndL, q1, phi);
    q1 = rimp(q1, f_imp(tA, tC));
    // phi, tB => sC -> sA
    NodeId st = b.app2(Rule::RStar, id(tB), id(sC), f_star(tB, sC));
    NodeId q2 =
        b.app2(Rule::LImp, st, id(sA), f_imp(f_star(tB, sC), sA));
    q2 = b.app1(Rule::LAndR, q2, phi);
    q2 = rimp(q2, f_imp(sC, sA));
    NodeId psi1n = rimp(rand(q1, q2, tAC), psi1);
    // phi => psi2
    NodeId core2 = b.app1(Rule::LAndR, apply_imp(sC, sB), inner);
    NodeId p2 = b.app2(Rule::LImp, id(tA), core2, f_imp(tA, inner));
    p2 = b.app1(Rule::LAndL, p2, phi);
    p2 = b.app1(Rule::LStar, p2, f_star(tA, sC));
    p2 = rimp(p2, psi2);
    NodeId beta =
        rimp(rand(psi1n, p2, f_and(psi1, psi2)), f_imp(phi, f_and(psi1, psi2)));
    // gamma: tB * (tA * sC) -> tA * (tB * sC)
    NodeId g = b.app2(Rule::RStar, id(tB), id(sC), f_star(tB, sC));
    g = b.app2(Rule::RStar, id(tA), g, f_star(tA, f_star(tB, sC)));
    g = b.app1(Rule::LStar, g, f_star(tA, sC));
    g = b.app1(Rule::LStar, g, f_star(tB, f_star(tA, sC)));
    NodeId gamma = rimp(
        g, f_imp(f_star(tB, f_star(tA, sC)), f_star(tA, f_star(tB, sC))));
    return rand(beta, gamma,
                t(f_imp(f_imp(A, f_imp(B, C)), f_imp(B, f_imp(A, C)))));
  }

  NodeId case_star_and(Formula A, Formula B) {
    Formula one = Formula::one();
    Formula tA = t(A), tB = t(B), sA = s(A), sB = s(B);
    Formula gA = f_and(tA, one), gB = f_and(tB, one);
    // beta: (tA /\ 1) * (tB /\ 1) -> tA /\ tB
    NodeId p1 = b.app1(Rule::OneW, id(tA));
    p1 = b.app1(Rule::LAndR, p1, gB);
    p1 = b.app1(Rule::LAndL, p1, gA);
    NodeId p2 = b.app1(Rule::OneW, id(tB));
    p2 = b.app1(Rule::LAndR, p2, gA);
    p2 = b.app1(Rule::LAndL, p2, gB);
    NodeId n = rand(p1, p2, f_and(tA, tB));
    n = b.app1(Rule::LStar, n, f_star(gA, gB));
    NodeId beta = rimp(n, f_imp(f_star(gA, gB), f_and(tA, tB)));
    // gamma: sA \/ sB -> (gA -> sB \/ D) /\ (gB -> sA \/ D)
    Formula phi = f_imp(gA, f_or(sB, D()));
    Formula psi = f_imp(gB, f_or(sA, D()));
    // sA branch
    NodeId a1 = b.app1(Rule::LAndL, absorb(A), gA);
    a1 = b.app1(Rule::ROrR, a1, f_or(sB, D()));
    a1 = rimp(a1, phi);
    NodeId a2 = b.app1(Rule::OneW, id(sA));
    a2 = b.app1(Rule::LAndR, a2, gB);
    a2 = b.app1(Rule::ROrL, a2, f_or(sA, D()));
    a2 = rimp(a2, psi);
    NodeId abranch = rand(a1, a2, f_and(phi, psi));
    // sB branch
    NodeId b1 = b.app1(Rule::OneW, id(sB));
    b1 = b.app1(Rule::LAndR, b1, gA);
    b1 = b.app1(Rule::ROrL, b1, f_or(sB, D()));
    b1 = rimp(b1, phi);
    NodeId b2 = b.app1(Rule::LAndL, absorb(B), gB);
    b2 = b.app1(Rule::ROrR, b2, f_or(sA, D()));
    b2 = rimp(b2, psi);
    NodeId bbranch = rand(b1, b2, f_and(phi, psi));
    NodeId g = b.app2(Rule::LOr, abranch, bbranch, f_or(sA, sB));
    NodeId gamma = rimp(g, f_imp(f_or(sA, sB), f_and(phi, psi)));
    return rand(beta, gamma,
                t(f_imp(f_star(f_and(A, one), f_and(B, one)), f_and(A, B))));
  }

  NodeId case_and_to(Formula A, Formula B, bool first) {
    Formula tA = t(A), tB = t(B), sA = s(A), sB = s(B);
    Formula tconj = f_and(tA, tB), sdis = f_or(sA, sB);
    Formula kept_t = first ? tA : tB, kept_s = first ? sA : sB;
    NodeId beta = rimp(
        b.app1(first ? Rule::LAndL : Rule::LAndR, id(kept_t), tconj),
        f_imp(tconj, kept_t));
    NodeId gamma = rimp(
        b.app1(first ? Rule::ROrL : Rule::ROrR, id(kept_s), sdis),
        f_imp(kept_s, sdis));
    Formula alpha = f_imp(f_and(A, B), first ? A : B);
    return rand(beta, gamma, t(alpha));
  }

  NodeId case_to_and(Formula A, Formula B, Formula C) {
    Formula tA = t(A), tB = t(B), tC = t(C), sA = s(A), sB = s(B), sC = s(C);
    Formula iAB = t(f_imp(A, B)), iAC = t(f_imp(A, C));
    Formula Phi = f_and(iAB, iAC);
    Formula rt = t(f_imp(A, f_and(B, C)));
    // Phi => tA -> tB /\ tC
    NodeId u1 = b.app1(Rule::LAndL, apply_imp(tA, tB), iAB);
    u1 = b.app1(Rule::LAndL, u1, Phi);
    NodeId u2 = b.app1(Rule::LAndL, apply_imp(tA, tC), iAC);
    u2 = b.app1(Rule::LAndR, u2, Phi);
    NodeId u = rimp(rand(u1, u2, f_and(tB, tC)), f_imp(tA, f_and(tB, tC)));
    // Phi => (sB \/ sC) -> sA
    NodeId v1 = b.app1(Rule::LAndR, apply_imp(sB, sA), iAB);
    v1 = b.app1(Rule::LAndL, v1, Phi);
    NodeId v2 = b.app1(Rule::LAndR, apply_imp(sC, sA), iAC);
    v2 = b.app1(Rule::LAndR, v2, Phi);
    NodeId v = rimp(b.app2(Rule::LOr, v1, v2, f_or(sB, sC)),
                    f_imp(f_or(sB, sC), sA));
    NodeId beta = rimp(rand(u, v, rt), f_imp(Phi, rt));
    // gamma: tA * (sB \/ sC) -> (tA * sB) \/ (tA * sC)
    Formula goal = f_or(f_star(tA, sB), f_star(tA, sC));
    NodeId g1 = b.app2(Rule::RStar, id(tA), id(sB), f_star(tA, sB));
    g1 = b.app1(Rule::ROrL, g1, goal);
    NodeId g2 = b.app2(Rule::RStar, id(tA), id(sC), f_star(tA, sC));
    g2 = b.app1(Rule::ROrR, g2, goal);
    NodeId g = b.app2(Rule::LOr, g1, g2, f_or(sB, sC));
    g = b.app1(Rule::LStar, g, f_star(tA, f_or(sB, sC)));
    NodeId gamma = rimp(g, f_imp(f_star(tA, f_or(sB, sC)), goal));
    Formula alpha = f_imp(f_and(f_imp(A, B), f_imp(A, C)), f_imp(A, f_and(B, C)));
    return rand(beta, gamma, t(alpha));
  }

  NodeId case_to_or(Formula A, Formula B, bool first) {
    Formula tA = t(A), tB = t(B), sA = s(A), sB = s(B);
    Formula tdis = f_or(tA, tB), sconj = f_and(sA, sB);
    Formula mine_t = first ? tA : tB, mine_s = first ? sA : sB;
    NodeId beta = rimp(
        b.app1(first ? Rule::ROrL : Rule::ROrR, id(mine_t), tdis),
        f_imp(mine_t, tdis));
    NodeId gamma = rimp(
        b.app1(first ? Rule::LAndL : Rule::LAndR, id(mine_s), sconj),
        f_imp(sconj, mine_s));
    Formula alpha = f_imp(first ? A : B, f_or(A, B));
    return rand(beta, gamma, t(alpha));
  }

  NodeId case_or_to(Formula A, Formula B, Formula C) {
    Formula tA = t(A), tB = t(B), tC = t(C), sA = s(A), sB = s(B), sC = s(C);
    Formula iAC = t(f_imp(A, C)), iBC = t(f_imp(B, C));
    Formula Phi = f_and(iAC, iBC);
    Formula rt = t(f_imp(f_or(A, B), C));
    // Phi => (tA \/ tB) -> tC
    NodeId u1 = b.app1(Rule::LAndL, apply_imp(tA, tC), iAC);
    u1 = b.app1(Rule::LAndL, u1, Phi);
    NodeId u2 = b.app1(Rule::LAndL, apply_imp(tB, tC), iBC);
    u2 = b.app1(Rule::LAndR, u2, Phi);
    NodeId u = rimp(b.app2(Rule::LOr, u1, u2, f_or(tA, tB)),
                    f_imp(f_or(tA, tB), tC));
    // Phi => sC -> sA /\ sB
    NodeId v1 = b.app1(Rule::LAndR, apply_imp(sC, sA), iAC);
    v1 = b.app1(Rule::LAndL, v1, Phi);
    NodeId v2 = b.app1(Rule::LAndR, apply_imp(sC, sB), iBC);
    v2 = b.app1(Rule::LAndR, v2, Phi);
    NodeId v = rimp(rand(v1, v2, f_and(sA, sB)), f_imp(sC, f_and(sA, sB)));
    NodeId beta = rimp(rand(u, v, rt), f_imp(Phi, rt));
    // gamma: (tA \/ tB) * sC -> (tA * sC) \/ (tB * sC)
    Formula goal = f_or(f_star(tA, sC), f_star(tB, sC));
    NodeId g1 = b.app2(Rule::RStar, id(tA), id(sC), f_star(tA, sC));
    g1 = b.app1(Rule::ROrL, g1, goal);
    NodeId g2 = b.app2(Rule::RStar, id(tB), id(sC), f_star(tB, sC));
    g2 = b.app1(Rule::ROrR, g2, goal);
    NodeId g = b.app2(Rule::LOr, g1, g2, f_or(tA, tB));
    g = b.app1(Rule::LStar, g, f_star(f_or(tA, tB), sC));
    NodeId gamma = rimp(g, f_imp(f_star(f_or(tA, tB), sC), goal));
    Formula alpha = f_imp(f_and(f_imp(A, C), f_imp(B, C)), f_imp(f_or(A, B), C));
    return rand(beta, gamma, t(alpha));
  }

  NodeId case_to_star(Formula A, Formula B) {
    Formula tA = t(A), tB = t(B), sA = s(A), sB = s(B);
    Formula sAB = s(f_star(A, B)); // (tA -> sB) /\ (tB -> sA)
    Formula rt = t(f_imp(A, f_star(A, B)));
    // tB => tA -> tA * tB
    NodeId u = b.app2(Rule::RStar, id(tA), id(tB), f_star(tA, tB));
    u = rimp(u, f_imp(tA, f_star(tA, tB)));
    // tB => sAB -> sA
    NodeId v = b.app1(Rule::LAndR, apply_imp(tB, sA), sAB);
    v = rimp(v, f_imp(sAB, sA));
    NodeId beta = rimp(rand(u, v, rt), f_imp(tB, rt));
    // gamma: tA * sAB -> sB
    NodeId g = b.app1(Rule::LAndL, apply_imp(tA, sB), sAB);
    g = b.app1(Rule::LStar, g, f_star(tA, sAB));
    NodeId gamma = rimp(g, f_imp(f_star(tA, sAB), sB));
    Formula alpha = f_imp(B, f_imp(A, f_star(A, B)));
    return rand(beta, gamma, t(alpha));
  }

  NodeId case_star_to(Formula A, Formula B, Formula C) {
    Formula tA = t(A), tB = t(B), tC = t(C), sA = s(A), sB = s(B), sC = s(C);
    Formula inner = t(f_imp(A, C)); // (tA -> tC) /\ (sC -> sA)
    Formula phi1 = f_imp(tB, inner);
    Formula phi2 = f_imp(f_star(tA, sC), sB);
    Formula Phi = f_and(phi1, phi2); // = t(B -> (A -> C))
    Formula psi1 = f_imp(f_star(tA, tB), tC);
    Formula sStar = s(f_star(A, B)); // (tA -> sB) /\ (tB -> sA)
    Formula psi2 = f_imp(sC, sStar);
    // Phi => psi1
    NodeId c1 = b.app1(Rule::LAndL, apply_imp(tA, tC), inner);
    NodeId n1 = b.app2(Rule::LImp, id(tB), c1, phi1);
    n1 = b.app1(Rule::LAndL, n1, Phi);
    n1 = b.app1(Rule::LStar, n1, f_star(tA, tB));
    n1 = rimp(n1, psi1);
    // Phi, sC => tA -> sB
    NodeId st = b.app2(Rule::RStar, id(tA), id(sC), f_star(tA, sC));
    NodeId n2 = b.app2(Rule::LImp, st, id(sB), phi2);
    n2 = b.app1(Rule::LAndR, n2, Phi);
    n2 = rimp(n2, f_imp(tA, sB));
    // Phi, sC => tB -> sA
    NodeId c3 = b.app1(Rule::LAndR, apply_imp(sC, sA), inner);
    NodeId n3 = b.app2(Rule::LImp, id(tB), c3, phi1);
    n3 = b.app1(Rule::LAndL, n3, Phi);
    n3 = rimp(n3, f_imp(tB, sA));
    NodeId n23 = rimp(rand(n2, n3, sStar), psi2);
    Formula rt = t(f_imp(f_star(A, B), C));
    NodeId beta = rimp(rand(n1, n23, rt), f_imp(Phi, rt));
    // gamma: (tA * tB) * sC -> tB * (tA * sC)
    NodeId g = b.app2(Rule::RStar, id(tA), id(sC), f_star(tA, sC));
    g = b.app2(Rule::RStar, id(tB), g, f_star(tB, f_star(tA, sC)));
    g = b.app1(Rule::LStar, g, f_star(tA, tB));
    g = b.app1(Rule::LStar, g, f_star(f_star(tA, tB), sC));
    NodeId gamma = rimp(
        g, f_imp(f_star(f_star(tA, tB), sC), f_star(tB, f_star(tA, sC))));
    Formula alpha = f_imp(f_imp(B, f_imp(A, C)), f_imp(f_star(A, B), C));
    return rand(beta, gamma, t(alpha));
  }

  NodeId case_one() { return b.ax_one_r(); }

  NodeId case_one_to(Formula A) {
    Formula one = Formula::one();
    Formula tA = t(A), sA = s(A);
    Formula core = t(f_imp(A, A));
    NodeId u1 = rimp(b.app1(Rule::OneW, id(tA)), f_imp(tA, tA));
    NodeId u2 = rimp(b.app1(Rule::OneW, id(sA)), f_imp(sA, sA));
    NodeId beta = rimp(rand(u1, u2, core), f_imp(one, core));
    NodeId g = b.app1(Rule::LStar, absorb(A), f_star(tA, sA));
    NodeId gamma = rimp(g, f_imp(f_star(tA, sA), D()));
    return rand(beta, gamma, t(f_imp(one, f_imp(A, A))));
  }

  NodeId case_top(Formula A) {
    Sequent s1;
    s1.ante.add(t(A));
    s1.succ.add(Formula::top());
    NodeId beta = rimp(b.ax_top_r(s1), f_imp(t(A), Formula::top()));
    Sequent s2;
    s2.ante.add(Formula::bot());
    s2.succ.add(s(A));
    NodeId gamma = rimp(b.ax_bot_l(s2), f_imp(Formula::bot(), s(A)));
    return rand(beta, gamma, t(f_imp(A, Formula::top())));
  }

  NodeId case_bot(Formula A) {
    Sequent s1;
    s1.ante.add(Formula::bot());
    s1.succ.add(t(A));
    NodeId beta = rimp(b.ax_bot_l(s1), f_imp(Formula::bot(), t(A)));
    Sequent s2;
    s2.ante.add(s(A));
    s2.succ.add(Formula::top());
    NodeId gamma = rimp(b.ax_top_r(s2), f_imp(s(A), Formula::top()));
    return rand(beta, gamma, t(f_imp(Formula::bot(), A)));
  }

  NodeId case_dn(Formula A) {
    Formula nA = neg(A), nnA = neg(nA);
    // beta: t(neg neg A) => s(neg A) => t(A)
    NodeId u = b.app2(Rule::Cut, negt_fwd(nA), negs_fwd(A), s(nA));
    NodeId beta = rimp(u, f_imp(t(nnA), t(A)));
    // gamma: s(A) => t(neg A) => s(neg neg A)
    NodeId v = b.app2(Rule::Cut, negt_bwd(A), negs_bwd(nA), t(nA));
    NodeId gamma = rimp(v, f_imp(s(A), s(nnA)));
    return rand(beta, gamma, t(f_imp(nnA, A)));
  }

  NodeId case_w(Formula A, Formula B) {
    if (!(D() == Formula::bot()))
      throw std::invalid_argument(
          "weakening axiom translates only with D = bot");
    Formula tA = t(A), tB = t(B), sA = s(A), sB = s(B);
    NodeId u1 = rimp(b.app1(Rule::Lw, id(tA), tB), f_imp(tB, tA));
    Sequent botseq;
    botseq.ante.add(Formula::bot());
    botseq.succ.add(sB);
    NodeId u2 = b.app2(Rule::Cut, absorb(A), b.ax_bot_l(botseq), Formula::bot());
    u2 = rimp(u2, f_imp(sA, sB));
    Formula core = t(f_imp(B, A));
    NodeId beta = rimp(rand(u1, u2, core), f_imp(tA, core));
    NodeId g = b.app1(Rule::Lw, id(sA), tB);
    g = b.app1(Rule::LStar, g, f_star(tB, sA));
    NodeId gamma = rimp(g, f_imp(f_star(tB, sA), sA));
    return rand(beta, gamma, t(f_imp(A, f_imp(B, A))));
  }

  NodeId case_bang_w(Formula A, Formula B) {
    Formula tA = t(A), sA = s(A);
    Formula bB = Formula::bang(t(B));
    NodeId u1 = rimp(b.app1(Rule::WBang, id(tA), bB), f_imp(bB, tA));
    NodeId u2 = b.app1(Rule::WBang, absorb(A), bB);
    u2 = rimp(u2, f_imp(bB, D()));
    u2 = rimp(u2, f_imp(sA, f_imp(bB, D())));
    Formula core = t(f_imp(Formula::bang(B), A));
    NodeId beta = rimp(rand(u1, u2, core), f_imp(tA, core));
    NodeId g = b.app1(Rule::WBang, id(sA), bB);
    g = b.app1(Rule::LStar, g, f_star(bB, sA));
    NodeId gamma = rimp(g, f_imp(f_star(bB, sA), sA));
    return rand(beta, gamma, t(f_imp(A, f_imp(Formula::bang(B), A))));
  }

  NodeId case_bang_c(Formula A, Formula B) {
    Formula E = Formula::bang(t(A));
    Formula tB = t(B), sB = s(B);
    Formula inner = t(f_imp(Formula::bang(A), B)); // (E->tB) /\ (sB -> (E->D))
    Formula phi1 = f_imp(E, inner);
    Formula sEB = s(f_imp(Formula::bang(A), B)); // E * sB
    Formula phi2 = f_imp(sEB, f_imp(E, D()));
    Formula Phi = f_and(phi1, phi2);
    Formula psi1 = f_imp(E, tB);
    Formula psi2 = f_imp(sB, f_imp(E, D()));
    // Phi => psi1
    NodeId c1 = b.app1(Rule::LAndL, apply_imp(E, tB), inner);
    NodeId n1 = b.app2(Rule::LImp, id(E), c1, phi1);
    n1 = b.app1(Rule::CBang, n1, E);
    n1 = b.app1(Rule::LAndL, n1, Phi);
    n1 = rimp(n1, psi1);
    // Phi => psi2
    NodeId st = b.app2(Rule::RStar, id(E), id(sB), sEB);
    NodeId n2 = b.app2(Rule::LImp, st, apply_imp(E, D()), phi2);
    n2 = b.app1(Rule::CBang, n2, E);
    n2 = b.app1(Rule::LAndR, n2, Phi);
    n2 = rimp(n2, f_imp(E, D()));
    n2 = rimp(n2, psi2);
    Formula rt = f_and(psi1, psi2);
    NodeId beta = rimp(rand(n1, n2, rt), f_imp(Phi, rt));
    // gamma: E * sB -> E * (E * sB)
    NodeId g = b.app2(Rule::RStar, id(E), id(sB), sEB);
    g = b.app2(Rule::RStar, id(E), g, f_star(E, sEB));
    g = b.app1(Rule::CBang, g, E);
    g = b.app1(Rule::LStar, g, sEB);
    NodeId gamma = rimp(g, f_imp(sEB, f_star(E, sEB)));
    Formula bA = Formula::bang(A);
    Formula alpha = f_imp(f_imp(bA, f_imp(bA, B)), f_imp(bA, B));
    return rand(beta, gamma, t(alpha));
  }

  NodeId case_bang_k(Formula A, Formula B) {
    Formula W = t(f_imp(A, B));
    Formula bW = Formula::bang(W);
    Formula tA = t(A), tB = t(B);
    Formula btA = Formula::bang(tA), btB = Formula::bang(tB);
    // S: bW, !tA => !tB
    NodeId S = b.app1(Rule::LAndL, apply_imp(tA, tB), W);
    S = b.app1(Rule::LBang, S, btA);
    S = b.app1(Rule::LBang, S, bW);
    S = b.app1(Rule::RBang, S, btB);
    NodeId psi1 = rimp(S, f_imp(btA, btB));
    // bW, !tA, !tB -> D => D  (shared with gamma)
    NodeId core = b.app2(Rule::Cut, S, apply_imp(btB, D()), btB);
    NodeId psi2 = rimp(rimp(core, f_imp(btA, D())),
                       f_imp(f_imp(btB, D()), f_imp(btA, D())));
    Formula rt = t(f_imp(Formula::bang(A), Formula::bang(B)));
    NodeId beta = rimp(rand(psi1, psi2, rt), f_imp(bW, rt));
    // gamma: !tA * (!tB -> D) -> (bW -> D)
    NodeId g = b.app1(Rule::LStar, core, f_star(btA, f_imp(btB, D())));
    g = rimp(g, f_imp(bW, D()));
    NodeId gamma = rimp(
        g, f_imp(f_star(btA, f_imp(btB, D())), f_imp(bW, D())));
    Formula alpha = f_imp(Formula::bang(f_imp(A, B)),
                          f_imp(Formula::bang(A), Formula::bang(B)));
    return rand(beta, gamma, t(alpha));
  }

  NodeId case_bang_t(Formula A) {
    Formula tA = t(A), sA = s(A);
    Formula btA = Formula::bang(tA);
    NodeId beta = rimp(b.app1(Rule::LBang, id(tA), btA), f_imp(btA, tA));
    NodeId g = b.app1(Rule::LBang, absorb(A), btA);
    g = rimp(g, f_imp(btA, D()));
    NodeId gamma = rimp(g, f_imp(sA, f_imp(btA, D())));
    return rand(beta, gamma, t(f_imp(Formula::bang(A), A)));
  }

  NodeId case_bang_4(Formula A) {
    Formula btA = Formula::bang(t(A));
    Formula bbtA = Formula::bang(btA);
    NodeId up = b.app1(Rule::RBang, id(btA), bbtA); // !tA => !!tA
    NodeId beta = rimp(up, f_imp(btA, bbtA));
    NodeId g = b.app2(Rule::LImp, b.app1(Rule::RBang, id(btA), bbtA), id(D()),
                      f_imp(bbtA, D()));
    g = rimp(g, f_imp(btA, D()));
    NodeId gamma = rimp(g, f_imp(f_imp(bbtA, D()), f_imp(btA, D())));
    Formula alpha = f_imp(Formula::bang(A), Formula::bang(Formula::bang(A)));
    return rand(beta, gamma, t(alpha));
  }

  NodeId translate_axiom_node(FregeAxiom ax, const FregeSubst& subst) {
    Formula A = subst.lookup(meta_A());
    Formula B = subst.lookup(meta_B());
    Formula C = subst.lookup(meta_C());
    NodeId out = 0;
    switch (ax) {
      case FregeAxiom::Id: out = case_id(A); break;
      case FregeAxiom::Pf: out = case_pf(A, B, C); break;
      case FregeAxiom::Per: out = case_per(A, B, C); break;
      case FregeAxiom::StarAnd: out = case_star_and(A, B); break;
      case FregeAxiom::AndTo1: out = case_and_to(A, B, true); break;
      case FregeAxiom::AndTo2: out = case_and_to(A, B, false); break;
      case FregeAxiom::ToAnd: out = case_to_and(A, B, C); break;
      case FregeAxiom::ToOr1: out = case_to_or(A, B, true); break;
      case FregeAxiom::ToOr2: out = case_to_or(A, B, false); break;
      case FregeAxiom::OrTo: out = case_or_to(A, B, C); break;
      case FregeAxiom::ToStar: out = case_to_star(A, B); break;
      case FregeAxiom::StarTo: out = case_star_to(A, B, C); break;
      case FregeAxiom::One: out = case_one(); break;
      case FregeAxiom::OneTo: out = case_one_to(A); break;
      case FregeAxiom::Top: out = case_top(A); break;
      case FregeAxiom::Bot: out = case_bot(A); break;
      case FregeAxiom::Dn: out = case_dn(A); break;
      case FregeAxiom::W: out = case_w(A, B); break;
      case FregeAxiom::BangW: out = case_bang_w(A, B); break;
      case FregeAxiom::BangC: out = case_bang_c(A, B); break;
      case FregeAxiom::BangK: out = case_bang_k(A, B); break;
      case FregeAxiom::BangT: out = case_bang_t(A); break;
      case FregeAxiom::Bang4: out = case_bang_4(A); break;
      case FregeAxiom::C:
        throw std::invalid_argument(
            "contraction axiom has no translation case (no listed system contains it)");
    }
    // internal sanity: the conclusion must be exactly (=> t of the instance)
    Formula inst = apply_subst(axiom_schema(ax), subst);
    Sequent want;
    want.succ.add(t(inst));
    if (!(b.seq(out) == want))
      throw std::logic_error("axiom translation produced wrong conclusion for " +
                             axiom_name(ax) + ": " + to_string(b.seq(out)));
    return out;
  }

  NodeId simulate_mp(NodeId ni, NodeId nj, Formula Ai, Formula Bj) {
    // ni: => t(Ai); nj: => t(Ai -> Bj)
    Formula tij = t(f_imp(Ai, Bj));
    Formula core = f_imp(t(Ai), t(Bj));
    NodeId l1 = b.app1(Rule::LAndL, id(core), tij);
    NodeId have_core = b.app2(Rule::Cut, nj, l1, tij); // => tA -> tB
    NodeId ap = apply_imp(t(Ai), t(Bj));
    NodeId partial = b.app2(Rule::Cut, ni, ap, t(Ai)); // tA->tB => tB
    return b.app2(Rule::Cut, have_core, partial, core);
  }
};

} // namespace

DualityProofs prove_duality(Formula a, const ChuParams& p, const Calculus& target) {
  if (target.name != CalcName::IGD)
    throw std::invalid_argument("prove_duality needs an iG_D target");
  CalculusRules rules = calculus_rules(target);
  if (!in_language(a, rules.lang) || !in_language(p.D, rules.lang) ||
      !in_language(p.N, rules.lang))
    throw std::invalid_argument("prove_duality: language mismatch");
  ChuEngine eng(p, target);
  DualityProofs out;
  out.absorb = eng.b.finish(eng.absorb(a));
  out.neg_t.fwd = eng.b.finish(eng.negt_fwd(a));
  out.neg_t.bwd = eng.b.finish(eng.negt_bwd(a));
  out.neg_s.fwd = eng.b.finish(eng.negs_fwd(a));
  out.neg_s.bwd = eng.b.finish(eng.negs_bwd(a));
  return out;
}

Proof translate_axiom(FregeAxiom ax, const FregeSubst& subst,
                      const ChuParams& p, FregeSystem sys) {
  auto axs = system_axioms(sys);
  if (std::find(axs.begin(), axs.end(), ax) == axs.end())
    throw std::invalid_argument("axiom '" + axiom_name(ax) +
                                "' not in system " + system_name(sys));
  ChuEngine eng(p, igd_for_system(sys, p));
  return eng.b.finish(eng.translate_axiom_node(ax, subst));
}

Proof translate_frege_proof(const FregeProof& fp, const ChuParams& p,
                            FregeSystem sys) {
  FregeCheckResult chk = check_frege_proof(sys, fp);
  if (!frege_ok(chk))
    throw std::invalid_argument("input proof does not check: " +
                                frege_check_message(chk));
  for (const FregeLine& ln : fp.lines)
    if (ln.just.kind == FregeJust::Hyp)
      throw std::invalid_argument("translation requires a hypothesis-free proof");
  ChuEngine eng(p, igd_for_system(sys, p));
  std::vector<NodeId> per_line(fp.lines.size());
  for (uint32_t i = 0; i < fp.lines.size(); ++i) {
    const FregeLine& ln = fp.lines[i];
    switch (ln.just.kind) {
      case FregeJust::Axiom:
        per_line[i] = eng.translate_axiom_node(ln.just.ax, ln.just.subst);
        break;
      case FregeJust::Mp:
        per_line[i] = eng.simulate_mp(per_line[ln.just.i], per_line[ln.just.j],
                                      fp.lines[ln.just.i].formula, ln.formula);
        break;
      case FregeJust::Adj:
        per_line[i] = eng.rand(per_line[ln.just.i], eng.b.ax_one_r(),
                               f_and(eng.t(fp.lines[ln.just.i].formula),
                                     Formula::one()));
        break;
      case FregeJust::Nec:
        per_line[i] =
            eng.b.app1(Rule::RBang, per_line[ln.just.i],
                       Formula::bang(eng.t(fp.lines[ln.just.i].formula)));
        break;
      case FregeJust::Hyp:
        break; // rejected above
    }
  }
  return eng.b.finish(per_line.back());
}

// ---- conservative grammar -----------------------------------------------------

namespace {
bool fully_cons(Formula f);
bool cons(Formula f);

bool fully_cons(Formula f) {
  switch (f.kind()) {
    case FKind::Atom: return true;
    case FKind::Const: {
      Konst k = f.const_kind();
      return k == Konst::One || k == Konst::Top;
    }
    case FKind::Bang: return false;
    case FKind::Bin:
      switch (f.op()) {
        case BinOp::And:
        case BinOp::Or:
          return fully_cons(f.left()) && fully_cons(f.right());
        case BinOp::Imp:
          return cons(f.left()) && fully_cons(f.right());
        case BinOp::Star:
          return false;
      }
  }
  return false;
}

bool cons(Formula f) {
  if (fully_cons(f)) return true;
  switch (f.kind()) {
    case FKind::Atom: return true;
    case FKind::Const: return f.const_kind() == Konst::Bot ||
                              f.const_kind() == Konst::One ||
                              f.const_kind() == Konst::Top;
    case FKind::Bang: return cons(f.sub());
    case FKind::Bin:
      switch (f.op()) {
        case BinOp::And:
        case BinOp::Or:
        case BinOp::Star:
          return cons(f.left()) && cons(f.right());
        case BinOp::Imp:
          return false;
      }
  }
  return false;
}
} // namespace

ConservativityClass classify_conservative(Formula f) {
  if (fully_cons(f)) return ConservativityClass::FullyConservative;
  if (cons(f)) return ConservativityClass::Conservative;
  return ConservativityClass::Neither;
}

std::string conservativity_name(ConservativityClass c) {
  switch (c) {
    case ConservativityClass::FullyConservative: return "fully_conservative";
    case ConservativityClass::Conservative: return "conservative";
    case ConservativityClass::Neither: return "neither";
  }
  return "?";
}

// ---- conservativity equivalences ------------------------------------------------

namespace {

struct ConsEngine {
  ChuTranslator tr;
  ProofBuilder b;

  explicit ConsEngine(Calculus c)
      : tr(ChuParams{Formula::bot(), Formula::bot()}), b(std::move(c), true) {}

  Formula t(Formula f) { return tr.t(f); }
  Formula s(Formula f) { return tr.s(f); }
  Formula bot() { return Formula::bot(); }

  struct Pair {
    NodeId fwd, bwd;
  };

  NodeId botl(Formula extra_l, Formula goal) {
    Sequent c;
    if (extra_l.valid()) c.ante.add(extra_l);
    c.ante.add(bot());
    c.succ.add(goal);
    return b.ax_bot_l(c);
  }

  // B^t <=> B for fully conservative B
  Pair fullyT(Formula f) {
    switch (f.kind()) {
      case FKind::Atom:
      case FKind::Const:
        return {b.ax_id(f), b.ax_id(f)}; // t is the identity here
      default:
        break;
    }
    Formula l = f.left(), r = f.right();
    if (f.op() == BinOp::And) {
      Pair L = fullyT(l), R = fullyT(r);
      NodeId fwd = b.app2(Rule::RAnd, b.app1(Rule::LAndL, L.fwd, t(f)),
                          b.app1(Rule::LAndR, R.fwd, t(f)), f);
      NodeId bwd = b.app2(Rule::RAnd, b.app1(Rule::LAndL, L.bwd, f),
                          b.app1(Rule::LAndR, R.bwd, f), t(f));
      return {fwd, bwd};
    }
    if (f.op() == BinOp::Or) {
      Pair L = fullyT(l), R = fullyT(r);
      NodeId fwd = b.app2(Rule::LOr, b.app1(Rule::ROrL, L.fwd, f),
                          b.app1(Rule::ROrR, R.fwd, f), t(f));
      NodeId bwd = b.app2(Rule::LOr, b.app1(Rule::ROrL, L.bwd, t(f)),
                          b.app1(Rule::ROrR, R.bwd, t(f)), f);
      return {fwd, bwd};
    }
    // C -> A
    Pair C = consT(l);
    Pair A = fullyT(r);
    NodeId As_bot = fullyS_fwd(r);
    Formula tf = t(f);
    // fwd: t(C->A) => C -> A
    NodeId fwd = b.app2(Rule::LImp, C.bwd, A.fwd, f_imp(t(l), t(r)));
    fwd = b.app1(Rule::LAndL, fwd, tf);
    fwd = b.app1(Rule::RImp, fwd, f);
    // bwd
    NodeId b1 = b.app2(Rule::LImp, C.fwd, A.bwd, f);
    b1 = b.app1(Rule::RImp, b1, f_imp(t(l), t(r)));
    NodeId b2 = b.app2(Rule::Cut, As_bot, botl(f, s(l)), bot());
    b2 = b.app1(Rule::RImp, b2, f_imp(s(r), s(l)));
    NodeId bwd = b.app2(Rule::RAnd, b1, b2, tf);
    return {fwd, bwd};
  }

  // B^s => bot for fully conservative B
  NodeId fullyS_fwd(Formula f) {
    switch (f.kind()) {
      case FKind::Atom:
      case FKind::Const:
        return b.ax_id(bot()); // s is bot for atoms, 1, top at D=N=bot
      default:
        break;
    }
    Formula l = f.left(), r = f.right();
    if (f.op() == BinOp::And)
      return b.app2(Rule::LOr, fullyS_fwd(l), fullyS_fwd(r), s(f));
    if (f.op() == BinOp::Or)
      return b.app1(Rule::LAndL, fullyS_fwd(l), s(f));
    // C -> A: s = t(C) * s(A)
    NodeId n = b.app2(Rule::Cut, fullyS_fwd(r), botl(t(l), bot()), bot());
    return b.app1(Rule::LStar, n, s(f));
  }

  NodeId fullyS_bwd(Formula f) { return botl(Formula(), s(f)); }

  // C^t <=> C for conservative C
  Pair consT(Formula f) {
    if (fully_cons(f)) return fullyT(f);
    switch (f.kind()) {
      case FKind::Atom:
        return {b.ax_id(f), b.ax_id(f)};
      case FKind::Const:
        return {b.ax_id(f), b.ax_id(f)}; // bot^t = bot
      case FKind::Bang: {
        Pair S = consT(f.sub());
        Formula tf = t(f);
        NodeId fwd = b.app1(Rule::LBang, S.fwd, tf);
        fwd = b.app1(Rule::RBang, fwd, f);
        NodeId bwd = b.app1(Rule::LBang, S.bwd, f);
        bwd = b.app1(Rule::RBang, bwd, tf);
        return {fwd, bwd};
      }
      case FKind::Bin:
        break;
    }
    Formula l = f.left(), r = f.right();
    Pair L = consT(l), R = consT(r);
    Formula tf = t(f);
    switch (f.op()) {
      case BinOp::And: {
        NodeId fwd = b.app2(Rule::RAnd, b.app1(Rule::LAndL, L.fwd, tf),
                            b.app1(Rule::LAndR, R.fwd, tf), f);
        NodeId bwd = b.app2(Rule::RAnd, b.app1(Rule::LAndL, L.bwd, f),
                            b.app1(Rule::LAndR, R.bwd, f), tf);
        return {fwd, bwd};
      }
      case BinOp::Or: {
        NodeId fwd = b.app2(Rule::LOr, b.app1(Rule::ROrL, L.fwd, f),
                            b.app1(Rule::ROrR, R.fwd, f), tf);
        NodeId bwd = b.app2(Rule::LOr, b.app1(Rule::ROrL, L.bwd, tf),
                            b.app1(Rule::ROrR, R.bwd, tf), f);
        return {fwd, bwd};
      }
      case BinOp::Star: {
        NodeId fwd = b.app2(Rule::RStar, L.fwd, R.fwd, f);
        fwd = b.app1(Rule::LStar, fwd, tf);
        NodeId bwd = b.app2(Rule::RStar, L.bwd, R.bwd, tf);
        bwd = b.app1(Rule::LStar, bwd, f);
        return {fwd, bwd};
      }
      case BinOp::Imp:
        throw std::logic_error("conservative grammar has no bare implication");
    }
    throw std::logic_error("unreachable");
  }
};

} // namespace

ConservativeEquiv prove_conservative_equiv(Formula f, ConservativityClass cls,
                                           CalcName target) {
  if (target != CalcName::IMALL && target != CalcName::ILL)
    throw std::invalid_argument("conservativity target must be IMALL or ILL");
  if (classify_conservative(f) == ConservativityClass::Neither ||
      cls == ConservativityClass::Neither)
    throw std::invalid_argument("formula is not conservative");
  if (cls == ConservativityClass::FullyConservative &&
      classify_conservative(f) != ConservativityClass::FullyConservative)
    throw std::invalid_argument("class mismatch: formula is not fully conservative");
  Lang lang = target == CalcName::ILL ? Lang::Lbang : Lang::Lb;
  if (!in_language(f, lang))
    throw std::invalid_argument("formula outside target language");
  ConsEngine eng(Calculus::plain(target));
  ConservativeEquiv out;
  if (cls == ConservativityClass::FullyConservative) {
    auto p = eng.fullyT(f);
    out.t_equiv.fwd = eng.b.finish(p.fwd);
    out.t_equiv.bwd = eng.b.finish(p.bwd);
    EquivPair sp;
    sp.fwd = eng.b.finish(eng.fullyS_fwd(f));
    sp.bwd = eng.b.finish(eng.fullyS_bwd(f));
    out.s_bot = std::move(sp);
  } else {
    auto p = eng.consT(f);
    out.t_equiv.fwd = eng.b.finish(p.fwd);
    out.t_equiv.bwd = eng.b.finish(p.bwd);
  }
  return out;
}

Proof conservativity_pipeline(const FregeProof& fp, FregeSystem sys) {
  if (sys != FregeSystem::MALL_F && sys != FregeSystem::AMALL_F &&
      sys != FregeSystem::CLL_F && sys != FregeSystem::ALL_F)
    throw std::invalid_argument(
        "pipeline systems are MALL-F, AMALL-F, CLL-F, ALL-F");
  Formula A = fp.conclusion();
  ConservativityClass cls = classify_conservative(A);
  if (cls == ConservativityClass::Neither)
    throw std::invalid_argument("conclusion is not conservative: " + to_string(A));

  ChuParams p{Formula::bot(), Formula::bot()};
  Proof sigma = translate_frege_proof(fp, p, sys);

  // discharge the p, bot => bot templates: they are (bot)-axiom instances
  CalcName base = igd_base_for_system(sys);
  Proof plain = sigma;
  plain.calculus = Calculus::plain(base);
  for (ProofNode& n : plain.nodes) {
    if (n.rule == Rule::Initial && n.tmpl == TemplateId::Dual) {
      n.rule = Rule::BotL;
      n.tmpl = TemplateId::None;
      n.principal = Formula::bot();
    }
  }

  CalcName equiv_target =
      (base == CalcName::ILL || base == CalcName::AILL) ? CalcName::ILL
                                                        : CalcName::IMALL;
  ConservativeEquiv eq = prove_conservative_equiv(A, cls, equiv_target);

  ProofBuilder out(Calculus::plain(base), /*dedup=*/false);
  NodeId left = out.graft(plain);
  NodeId right = out.graft(eq.t_equiv.fwd);
  ChuTranslator tr(p);
  NodeId root = out.app2(Rule::Cut, left, right, tr.t(A));
  return out.finish(root);
}

} // namespace prooflab
