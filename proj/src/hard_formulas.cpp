#include "prooflab/hard_formulas.hpp"

#include "prooflab/builder.hpp"

namespace prooflab {

namespace {

Formula named(const char* prefix, uint32_t a, uint32_t b) {
  return Formula::atom(std::string(prefix) + "_" + std::to_string(a) + "_" +
                       std::to_string(b));
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

} // namespace

Formula edge_atom(uint32_t i, uint32_t j) {
  if (i > j) std::swap(i, j);
  return named("p", i, j);
}

std::vector<Formula> clique_clauses(uint32_t n, uint32_t k) {
  require(k >= 1 && k <= n, "clique: need 1 <= k <= n");
  std::vector<Formula> out;
  auto r = [](uint32_t u, uint32_t i) { return named("r", u, i); };
  // someone is mapped to each slot
  for (uint32_t u = 1; u <= k; ++u) {
    FormulaMultiset dis;
    for (uint32_t i = 1; i <= n; ++i) dis.add(r(u, i));
    out.push_back(bigor(dis));
  }
  // a slot maps to at most one vertex
  for (uint32_t u = 1; u <= k; ++u)
    for (uint32_t i = 1; i <= n; ++i)
      for (uint32_t j = i + 1; j <= n; ++j)
        out.push_back(bigor(FormulaMultiset{neg(r(u, i)), neg(r(u, j))}));
  // slots map to distinct vertices
  for (uint32_t u = 1; u <= k; ++u)
    for (uint32_t v = u + 1; v <= k; ++v)
      for (uint32_t i = 1; i <= n; ++i)
        out.push_back(bigor(FormulaMultiset{neg(r(u, i)), neg(r(v, i))}));
  // selected vertices are adjacent; ordered u != v covers both matchings of
  // an unordered vertex pair
  for (uint32_t u = 1; u <= k; ++u)
    for (uint32_t v = 1; v <= k; ++v) {
      if (u == v) continue;
      for (uint32_t i = 1; i <= n; ++i)
        for (uint32_t j = i + 1; j <= n; ++j)
          out.push_back(bigor(
              FormulaMultiset{neg(r(u, i)), neg(r(v, j)), edge_atom(i, j)}));
    }
  return out;
}

std::vector<Formula> color_clauses(uint32_t n, uint32_t m) {
  require(m >= 1, "color: need m >= 1");
  std::vector<Formula> out;
  auto s = [](uint32_t i, uint32_t a) { return named("s", i, a); };
  for (uint32_t i = 1; i <= n; ++i) {
    FormulaMultiset dis;
    for (uint32_t a = 1; a <= m; ++a) dis.add(s(i, a));
    out.push_back(bigor(dis));
  }
  for (uint32_t i = 1; i <= n; ++i)
    for (uint32_t a = 1; a <= m; ++a)
      for (uint32_t b = a + 1; b <= m; ++b)
        out.push_back(bigor(FormulaMultiset{neg(s(i, a)), neg(s(i, b))}));
  for (uint32_t a = 1; a <= m; ++a)
    for (uint32_t i = 1; i <= n; ++i)
      for (uint32_t j = i + 1; j <= n; ++j)
        out.push_back(bigor(
            FormulaMultiset{neg(s(i, a)), neg(s(j, a)), neg(edge_atom(i, j))}));
  return out;
}

namespace {
Formula conj_of(const std::vector<Formula>& clauses) {
  FormulaMultiset ms;
  for (Formula c : clauses) ms.add(c);
  return bigand(ms);
}
} // namespace

Formula clique_formula(uint32_t n, uint32_t k) {
  return conj_of(clique_clauses(n, k));
}

Formula color_formula(uint32_t n, uint32_t m) {
  return conj_of(color_clauses(n, m));
}

Formula clique_color_implication(uint32_t n, uint32_t k) {
  require(k + 1 <= n, "clique-color: need k+1 <= n");
  return f_imp(clique_formula(n, k + 1), neg(color_formula(n, k)));
}

uint32_t default_k(uint32_t n) {
  uint32_t k = 0;
  while ((k + 1) * (k + 1) <= n) ++k;
  return k;
}

Formula alpha(uint32_t n, uint32_t k) {
  require(k <= n && n >= 1, "alpha: need 1 <= n, k <= n");
  FormulaMultiset disjuncts;
  for (uint32_t i = 0; i < n; ++i) {
    FormulaMultiset conj;
    for (uint32_t l = 0; l < k; ++l) conj.add(named("sp", i, l));
    disjuncts.add(bigand(conj));
  }
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j)
      for (uint32_t l = 0; l < k; ++l) {
        FormulaMultiset conj;
        conj.add(named("s", i, l));
        conj.add(named("s", j, l));
        conj.add(named("p", i, j));
        disjuncts.add(bigand(conj));
      }
  return bigor(disjuncts);
}

Formula beta(uint32_t n, uint32_t k) {
  require(n >= 1, "beta: need 1 <= n");
  FormulaMultiset disjuncts;
  for (uint32_t l = 0; l < k; ++l) {
    FormulaMultiset conj;
    for (uint32_t i = 0; i < n; ++i) conj.add(named("rp", i, l));
    disjuncts.add(bigand(conj));
  }
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j)
      for (uint32_t l = 0; l < k; ++l)
        for (uint32_t m = l + 1; m < k; ++m) {
          FormulaMultiset conj;
          conj.add(named("r", i, l));
          conj.add(named("r", j, m));
          conj.add(named("q", i, j));
          disjuncts.add(bigand(conj));
        }
  return bigor(disjuncts);
}

namespace {
// shared scaffolding of the negation-free family: guards are built per
// index pair by `guard`, combined by `combine`
template <typename Guard>
Formula fold_guards(uint32_t rows, uint32_t cols, Guard&& guard, bool fuse) {
  FormulaMultiset ms;
  for (uint32_t i = 0; i < rows; ++i)
    for (uint32_t j = 0; j < cols; ++j) ms.add(guard(i, j));
  return fuse ? bigstar(ms) : bigand(ms);
}
} // namespace

Formula theta(uint32_t n, uint32_t k) {
  require(k <= n && n >= 1, "theta: need 1 <= n, k <= n");
  Formula guard_pq = fold_guards(
      n, n, [](uint32_t i, uint32_t j) {
        return f_or(named("p", i, j), named("q", i, j));
      },
      false);
  Formula guard_s = fold_guards(
      n, k, [](uint32_t i, uint32_t l) {
        return f_or(named("s", i, l), named("sp", i, l));
      },
      false);
  Formula guard_r = fold_guards(
      n, k + 1, [](uint32_t i, uint32_t l) {
        return f_or(named("r", i, l), named("rp", i, l));
      },
      false);
  return f_imp(guard_pq, f_or(f_imp(guard_s, alpha(n, k)),
                              f_imp(guard_r, beta(n, k + 1))));
}

Formula theta_star(uint32_t n, uint32_t k) {
  require(k <= n && n >= 1, "theta_star: need 1 <= n, k <= n");
  Formula one = Formula::one();
  auto guarded = [&](Formula a, Formula b) {
    return f_or(f_and(a, one), f_and(b, one));
  };
  Formula guard_pq = fold_guards(
      n, n, [&](uint32_t i, uint32_t j) {
        return guarded(named("p", i, j), named("q", i, j));
      },
      true);
  Formula guard_s = fold_guards(
      n, k, [&](uint32_t i, uint32_t l) {
        return guarded(named("s", i, l), named("sp", i, l));
      },
      true);
  Formula guard_r = fold_guards(
      n, k + 1, [&](uint32_t i, uint32_t l) {
        return guarded(named("r", i, l), named("rp", i, l));
      },
      true);
  return f_imp(guard_pq, f_or(f_imp(guard_s, alpha(n, k)),
                              f_imp(guard_r, beta(n, k + 1))));
}

Formula theta_bot(uint32_t n) {
  require(n >= 2, "theta_bot: need n >= 2");
  uint32_t k = default_k(n);
  FormulaMultiset guard;
  for (uint32_t i = 1; i <= n; ++i)
    for (uint32_t j = i + 1; j <= n; ++j)
      guard.add(f_or(edge_atom(i, j), named("q", i, j)));
  // clique over the complemented duplicate edges
  std::vector<Formula> cl;
  {
    auto r = [](uint32_t u, uint32_t i) { return named("r", u, i); };
    uint32_t kk = k + 1;
    for (uint32_t u = 1; u <= kk; ++u) {
      FormulaMultiset dis;
      for (uint32_t i = 1; i <= n; ++i) dis.add(r(u, i));
      cl.push_back(bigor(dis));
    }
    for (uint32_t u = 1; u <= kk; ++u)
      for (uint32_t i = 1; i <= n; ++i)
        for (uint32_t j = i + 1; j <= n; ++j)
          cl.push_back(bigor(FormulaMultiset{neg(r(u, i)), neg(r(u, j))}));
    for (uint32_t u = 1; u <= kk; ++u)
      for (uint32_t v = u + 1; v <= kk; ++v)
        for (uint32_t i = 1; i <= n; ++i)
          cl.push_back(bigor(FormulaMultiset{neg(r(u, i)), neg(r(v, i))}));
    for (uint32_t u = 1; u <= kk; ++u)
      for (uint32_t v = 1; v <= kk; ++v) {
        if (u == v) continue;
        for (uint32_t i = 1; i <= n; ++i)
          for (uint32_t j = i + 1; j <= n; ++j)
            cl.push_back(bigor(FormulaMultiset{neg(r(u, i)), neg(r(v, j)),
                                               neg(named("q", i, j))}));
      }
  }
  return f_imp(bigand(guard),
               f_or(neg(color_formula(n, k)), neg(conj_of(cl))));
}

Formula colorbar_formula(uint32_t n, uint32_t m) {
  return nnf_negate(color_formula(n, m));
}

namespace {
bool monotone_rec(Formula f, const std::vector<uint32_t>& atoms, bool positive) {
  switch (f.kind()) {
    case FKind::Atom: {
      for (uint32_t a : atoms)
        if (a == f.atom_id()) return positive;
      return true;
    }
    case FKind::Const: return true;
    case FKind::Bang: return monotone_rec(f.sub(), atoms, positive);
    case FKind::Bin:
      if (f.op() == BinOp::Imp)
        return monotone_rec(f.left(), atoms, !positive) &&
               monotone_rec(f.right(), atoms, positive);
      return monotone_rec(f.left(), atoms, positive) &&
             monotone_rec(f.right(), atoms, positive);
  }
  return true;
}
} // namespace

bool monotone_in(Formula f, const std::vector<uint32_t>& atom_ids) {
  return monotone_rec(f, atom_ids, true);
}

// ---- collapse bridge ---------------------------------------------------------

namespace {

struct CollapseProver {
  ProofBuilder b{Calculus::plain(CalcName::LK_u)};

  struct Piece {
    Formula image;
    NodeId fwd; // f => g
    NodeId bwd; // g => f
  };

  Piece run(Formula f) {
    switch (f.kind()) {
      case FKind::Atom:
      case FKind::Const: {
        NodeId n = b.ax_id(f);
        return {f, n, b.ax_id(f)};
      }
      case FKind::Bang:
        throw std::invalid_argument("collapse bridge: formula not !-free");
      case FKind::Bin:
        break;
    }
    Piece L = run(f.left());
    Piece R = run(f.right());
    Formula one = Formula::one();
    switch (f.op()) {
      case BinOp::Imp: {
        Formula g = f_imp(L.image, R.image);
        // fwd: f, gA => gB by (L->) on f from [gA => A] and [B => gB]
        NodeId fi = b.app2(Rule::LImp, L.bwd, R.fwd, f);
        NodeId fwd = b.app1(Rule::RImp, fi, g);
        NodeId bi = b.app2(Rule::LImp, L.fwd, R.bwd, g);
        NodeId bwd = b.app1(Rule::RImp, bi, f);
        return {g, fwd, bwd};
      }
      case BinOp::Or: {
        Formula g = f_or(L.image, R.image);
        NodeId fwd = b.app2(Rule::LOr, b.app1(Rule::ROrL, L.fwd, g),
                            b.app1(Rule::ROrR, R.fwd, g), f);
        NodeId bwd = b.app2(Rule::LOr, b.app1(Rule::ROrL, L.bwd, f),
                            b.app1(Rule::ROrR, R.bwd, f), g);
        return {g, fwd, bwd};
      }
      case BinOp::And: {
        if (R.image.is_const(Konst::One) || L.image.is_const(Konst::One)) {
          bool right_unit = R.image.is_const(Konst::One);
          Piece& keep = right_unit ? L : R;
          Piece& drop = right_unit ? R : L;
          Formula g = keep.image;
          // fwd: A /\ B => g via the kept side
          NodeId fwd =
              b.app1(right_unit ? Rule::LAndL : Rule::LAndR, keep.fwd, f);
          // bwd: g => A /\ B; the dropped side comes from 1 by cut
          NodeId unit_to = b.app2(Rule::Cut, b.app1(Rule::Lw, b.ax_one_r(), g),
                                  drop.bwd, one);
          NodeId kept = keep.bwd;
          NodeId bwd =
              right_unit ? b.app2(Rule::RAnd, kept, unit_to, f)
                         : b.app2(Rule::RAnd, unit_to, kept, f);
          return {g, fwd, bwd};
        }
        Formula g = f_and(L.image, R.image);
        NodeId fwd = b.app2(Rule::RAnd, b.app1(Rule::LAndL, L.fwd, f),
                            b.app1(Rule::LAndR, R.fwd, f), g);
        NodeId bwd = b.app2(Rule::RAnd, b.app1(Rule::LAndL, L.bwd, g),
                            b.app1(Rule::LAndR, R.bwd, g), f);
        return {g, fwd, bwd};
      }
      case BinOp::Star: {
        bool l_unit = L.image.is_const(Konst::One);
        bool r_unit = R.image.is_const(Konst::One);
        if (l_unit || r_unit) {
          Piece& keep = r_unit ? L : R;
          Piece& drop = r_unit ? R : L;
          Formula g = keep.image;
          // fwd: A * B => g: split, weaken the dropped component away
          NodeId wk = b.app1(Rule::Lw, keep.fwd,
                             r_unit ? f.right() : f.left());
          NodeId fwd = b.app1(Rule::LStar, wk, f);
          // bwd: g => A * B with the dropped side proved from => 1
          NodeId unit_side = b.app2(Rule::Cut, b.ax_one_r(), drop.bwd, one);
          NodeId bwd = r_unit ? b.app2(Rule::RStar, keep.bwd, unit_side, f)
                              : b.app2(Rule::RStar, unit_side, keep.bwd, f);
          return {g, fwd, bwd};
        }
        Formula g = f_and(L.image, R.image);
        // fwd: A * B => gA /\ gB
        NodeId a1 = b.app1(Rule::Lw, L.fwd, f.right()); // A, B => gA
        NodeId a2 = b.app1(Rule::Lw, R.fwd, f.left());  // A, B => gB
        NodeId fwd = b.app1(Rule::LStar, b.app2(Rule::RAnd, a1, a2, g), f);
        // bwd: gA /\ gB => A * B via two projections and contraction
        NodeId st = b.app2(Rule::RStar, L.bwd, R.bwd, f); // gA, gB => A*B
        NodeId c1 = b.app1(Rule::LAndR, st, g);
        NodeId c2 = b.app1(Rule::LAndL, c1, g);
        NodeId bwd = b.app1(Rule::Lc, c2, g);
        return {g, fwd, bwd};
      }
    }
    throw std::logic_error("collapse bridge: unreachable");
  }
};

} // namespace

CollapseEquiv prove_collapse_equiv(Formula f) {
  if (!in_language(f, Lang::Lu))
    throw std::invalid_argument("collapse bridge: formula must be in the core language");
  CollapseProver cp;
  auto piece = cp.run(f);
  CollapseEquiv out;
  out.image = piece.image;
  out.proofs.fwd = cp.b.finish(piece.fwd);
  out.proofs.bwd = cp.b.finish(piece.bwd);
  return out;
}

} // namespace prooflab
