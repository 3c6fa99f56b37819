#include "prooflab/search.hpp"

#include <algorithm>
#include <unordered_map>

#include "prooflab/builder.hpp"

namespace prooflab {

namespace {

// ---- multiset split enumeration ---------------------------------------------

// Calls fn(left, right) for every split of ms into two multisets.
template <typename Fn>
void for_each_split(const FormulaMultiset& ms, Fn&& fn) {
  const auto& items = ms.items();
  std::vector<uint32_t> take(items.size(), 0);
  for (;;) {
    FormulaMultiset l, r;
    for (size_t i = 0; i < items.size(); ++i) {
      if (take[i] > 0) l.add(items[i].first, take[i]);
      if (items[i].second > take[i])
        r.add(items[i].first, items[i].second - take[i]);
    }
    fn(l, r);
    size_t i = 0;
    while (i < items.size()) {
      if (take[i] < items[i].second) {
        ++take[i];
        break;
      }
      take[i] = 0;
      ++i;
    }
    if (i == items.size()) return;
  }
}

// ---- complete search for contraction-free calculi ---------------------------

struct DecideEngine {
  Calculus calc;
  CalculusRules rules;
  ProofBuilder builder;
  std::unordered_map<Sequent, std::optional<NodeId>, SequentHash> memo;

  explicit DecideEngine(const Calculus& c)
      : calc(c), rules(calculus_rules(c)), builder(c) {}

  bool single() const { return rules.single_conclusion; }

  std::optional<NodeId> prove(const Sequent& s) {
    auto it = memo.find(s);
    if (it != memo.end()) return it->second;
    // reserve the slot to keep recursion re-entrant; sizes strictly shrink,
    // so a revisit of the same sequent cannot be on the current path
    std::optional<NodeId> result = attempt(s);
    memo[s] = result;
    return result;
  }

  std::optional<NodeId> attempt(const Sequent& s) {
    const FormulaMultiset& G = s.ante;
    const FormulaMultiset& D = s.succ;

    // axioms
    if (G.cardinality() == 1 && D.cardinality() == 1 &&
        G.items()[0].first == D.items()[0].first)
      return builder.ax_id(G.items()[0].first);
    if (G.empty() && D.cardinality() == 1 &&
        D.items()[0].first.is_const(Konst::One))
      return builder.ax_one_r();
    if (D.empty() && G.cardinality() == 1 &&
        G.items()[0].first.is_const(Konst::Zero))
      return builder.ax_zero_l();
    if (rules.has(Rule::TopR) && D.contains(Formula::top()))
      return builder.ax_top_r(s);
    if (rules.has(Rule::BotL) && G.contains(Formula::bot()))
      return builder.ax_bot_l(s);

    // left principals
    for (const auto& [f, cnt] : G.items()) {
      Sequent base = s;
      base.ante.remove(f);
      if (f.is_const(Konst::One)) {
        if (auto n = prove(base)) return builder.app1(Rule::OneW, *n);
      }
      if (f.is_bin(BinOp::And)) {
        for (Rule r : {Rule::LAndL, Rule::LAndR}) {
          Sequent prem = base;
          prem.ante.add(r == Rule::LAndL ? f.left() : f.right());
          if (auto n = prove(prem)) return builder.app1(r, *n, f);
        }
      }
      if (f.is_bin(BinOp::Or)) {
        Sequent p1 = base, p2 = base;
        p1.ante.add(f.left());
        p2.ante.add(f.right());
        auto n1 = prove(p1);
        if (n1) {
          auto n2 = prove(p2);
          if (n2) return builder.app2(Rule::LOr, *n1, *n2, f);
        }
      }
      if (f.is_bin(BinOp::Star)) {
        Sequent prem = base;
        prem.ante.add(f.left());
        prem.ante.add(f.right());
        if (auto n = prove(prem)) return builder.app1(Rule::LStar, *n, f);
      }
      if (f.is_bin(BinOp::Imp)) {
        std::optional<NodeId> done;
        for_each_split(base.ante, [&](const FormulaMultiset& g1,
                                      const FormulaMultiset& g2) {
          if (done) return;
          for_each_split(base.succ, [&](const FormulaMultiset& d1,
                                        const FormulaMultiset& d2) {
            if (done) return;
            Sequent p1;
            p1.ante = g1;
            p1.succ = d1;
            p1.succ.add(f.left());
            if (single() && p1.succ.cardinality() > 1) return;
            Sequent p2;
            p2.ante = g2;
            p2.ante.add(f.right());
            p2.succ = d2;
            auto n1 = prove(p1);
            if (!n1) return;
            auto n2 = prove(p2);
            if (!n2) return;
            done = builder.app2(Rule::LImp, *n1, *n2, f);
          });
        });
        if (done) return done;
      }
      if (rules.has(Rule::Lw)) {
        if (auto n = prove(base)) return builder.app1(Rule::Lw, *n, f);
      }
    }

    // right principals
    for (const auto& [f, cnt] : D.items()) {
      Sequent base = s;
      base.succ.remove(f);
      if (f.is_const(Konst::Zero)) {
        if (auto n = prove(base)) return builder.app1(Rule::ZeroW, *n);
      }
      if (f.is_bin(BinOp::And)) {
        Sequent p1 = base, p2 = base;
        p1.succ.add(f.left());
        p2.succ.add(f.right());
        auto n1 = prove(p1);
        if (n1) {
          auto n2 = prove(p2);
          if (n2) return builder.app2(Rule::RAnd, *n1, *n2, f);
        }
      }
      if (f.is_bin(BinOp::Or)) {
        for (Rule r : {Rule::ROrL, Rule::ROrR}) {
          Sequent prem = base;
          prem.succ.add(r == Rule::ROrL ? f.left() : f.right());
          if (auto n = prove(prem)) return builder.app1(r, *n, f);
        }
      }
      if (f.is_bin(BinOp::Star)) {
        std::optional<NodeId> done;
        for_each_split(base.ante, [&](const FormulaMultiset& g1,
                                      const FormulaMultiset& g2) {
          if (done) return;
          for_each_split(base.succ, [&](const FormulaMultiset& d1,
                                        const FormulaMultiset& d2) {
            if (done) return;
            Sequent p1;
            p1.ante = g1;
            p1.succ = d1;
            p1.succ.add(f.left());
            if (single() && p1.succ.cardinality() > 1) return;
            Sequent p2;
            p2.ante = g2;
            p2.succ = d2;
            p2.succ.add(f.right());
            if (single() && p2.succ.cardinality() > 1) return;
            auto n1 = prove(p1);
            if (!n1) return;
            auto n2 = prove(p2);
            if (!n2) return;
            done = builder.app2(Rule::RStar, *n1, *n2, f);
          });
        });
        if (done) return done;
      }
      if (f.is_bin(BinOp::Imp)) {
        Sequent prem = base;
        prem.ante.add(f.left());
        prem.succ.add(f.right());
        if (!single() || prem.succ.cardinality() <= 1)
          if (auto n = prove(prem)) return builder.app1(Rule::RImp, *n, f);
      }
      if (rules.has(Rule::Rw)) {
        if (auto n = prove(base)) return builder.app1(Rule::Rw, *n, f);
      }
    }
    return std::nullopt;
  }
};

} // namespace

DecideResult decide_contraction_free(const Calculus& c, const Sequent& s) {
  CalculusRules rules = calculus_rules(c);
  if (rules.has(Rule::Lc) || rules.has(Rule::Rc) || rules.has(Rule::CBang) ||
      rules.has(Rule::RBang) || !rules.templates.empty())
    throw std::invalid_argument(
        "decide_contraction_free: calculus not contraction-free/template-free");
  for (const auto& side : {&s.ante, &s.succ})
    for (const auto& [f, cnt] : side->items())
      if (!in_language(f, rules.lang))
        throw std::invalid_argument("sequent outside calculus language");
  if (rules.single_conclusion && s.succ.cardinality() > 1)
    throw std::invalid_argument("sequent violates single-conclusion discipline");

  Calculus cf = c;
  cf.cut_free = false; // cut never searched; verdict covers the full calculus
  DecideEngine eng(cf);
  auto n = eng.prove(s);
  DecideResult out;
  out.provable = n.has_value();
  if (n) {
    Proof p = eng.builder.finish(*n);
    p.calculus = c;
    out.proof = std::move(p);
  }
  return out;
}

// ---- bounded search ----------------------------------------------------------

namespace {

struct BoundedEngine {
  Calculus calc;
  CalculusRules rules;
  ProofBuilder builder;
  uint64_t visited = 0;
  uint64_t max_visited;
  bool truncated = false;
  bool analytic_cut;
  std::vector<Formula> cut_candidates;
  // sequent -> largest node budget that is known insufficient
  std::unordered_map<Sequent, uint64_t, SequentHash> fail;
  // sequent -> (cost, node) for found proofs
  std::unordered_map<Sequent, std::pair<uint64_t, NodeId>, SequentHash> hit;

  BoundedEngine(const Calculus& c, uint64_t maxv, bool ac)
      : calc(c), rules(calculus_rules(c)), builder(c), max_visited(maxv),
        analytic_cut(ac) {}

  bool single() const { return rules.single_conclusion; }

  // returns (cost, node) of some proof with cost <= budget
  std::optional<std::pair<uint64_t, NodeId>> prove(const Sequent& s,
                                                   uint64_t budget) {
    if (budget == 0) return std::nullopt;
    auto h = hit.find(s);
    if (h != hit.end() && h->second.first <= budget) return h->second;
    auto f = fail.find(s);
    if (f != fail.end() && f->second >= budget) return std::nullopt;
    if (++visited > max_visited) {
      truncated = true;
      return std::nullopt;
    }
    auto res = attempt(s, budget);
    if (res)
      hit[s] = *res;
    else if (!truncated) {
      auto& slot = fail[s];
      slot = std::max(slot, budget);
    }
    return res;
  }

  std::optional<std::pair<uint64_t, NodeId>> unary(Rule r, const Sequent& prem,
                                                   uint64_t budget, Formula pr) {
    auto sub = prove(prem, budget - 1);
    if (!sub) return std::nullopt;
    return std::make_pair(sub->first + 1,
                          pr.valid() ? builder.app1(r, sub->second, pr)
                                     : builder.app1(r, sub->second));
  }

  std::optional<std::pair<uint64_t, NodeId>> binary(Rule r, const Sequent& p1,
                                                    const Sequent& p2,
                                                    uint64_t budget, Formula pr) {
    if (budget < 3) return std::nullopt;
    auto s1 = prove(p1, budget - 2);
    if (!s1) return std::nullopt;
    auto s2 = prove(p2, budget - 1 - s1->first);
    if (!s2) return std::nullopt;
    return std::make_pair(s1->first + s2->first + 1,
                          builder.app2(r, s1->second, s2->second, pr));
  }

  std::optional<std::pair<uint64_t, NodeId>> attempt(const Sequent& s,
                                                     uint64_t budget) {
    const FormulaMultiset& G = s.ante;
    const FormulaMultiset& D = s.succ;

    // axioms and templates
    if (rules.has(Rule::Id) && G.cardinality() == 1 && D.cardinality() == 1 &&
        G.items()[0].first == D.items()[0].first)
      return std::make_pair(uint64_t{1}, builder.ax_id(G.items()[0].first));
    if (rules.has(Rule::OneR) && G.empty() && D.cardinality() == 1 &&
        D.items()[0].first.is_const(Konst::One))
      return std::make_pair(uint64_t{1}, builder.ax_one_r());
    if (rules.has(Rule::ZeroL) && D.empty() && G.cardinality() == 1 &&
        G.items()[0].first.is_const(Konst::Zero))
      return std::make_pair(uint64_t{1}, builder.ax_zero_l());
    if (rules.has(Rule::TopR) && D.contains(Formula::top()))
      return std::make_pair(uint64_t{1}, builder.ax_top_r(s));
    if (rules.has(Rule::BotL) && G.contains(Formula::bot()))
      return std::make_pair(uint64_t{1}, builder.ax_bot_l(s));
    for (TemplateId t : rules.templates) {
      if (auto n = match_template(t, s))
        return std::make_pair(uint64_t{1}, *n);
    }

    // left principals
    for (const auto& [f, cnt] : G.items()) {
      Sequent base = s;
      base.ante.remove(f);
      if (f.is_const(Konst::One) && rules.has(Rule::OneW))
        if (auto r = unary(Rule::OneW, base, budget, Formula())) return r;
      if (f.is_bin(BinOp::And) && rules.has(Rule::LAndL)) {
        for (Rule r : {Rule::LAndL, Rule::LAndR}) {
          Sequent prem = base;
          prem.ante.add(r == Rule::LAndL ? f.left() : f.right());
          if (auto res = unary(r, prem, budget, f)) return res;
        }
      }
      if (f.is_bin(BinOp::Or) && rules.has(Rule::LOr)) {
        Sequent p1 = base, p2 = base;
        p1.ante.add(f.left());
        p2.ante.add(f.right());
        if (auto res = binary(Rule::LOr, p1, p2, budget, f)) return res;
      }
      if (f.is_bin(BinOp::Star) && rules.has(Rule::LStar)) {
        Sequent prem = base;
        prem.ante.add(f.left());
        prem.ante.add(f.right());
        if (auto res = unary(Rule::LStar, prem, budget, f)) return res;
      }
      if (f.is_bin(BinOp::Imp) && rules.has(Rule::LImp)) {
        std::optional<std::pair<uint64_t, NodeId>> done;
        for_each_split(base.ante, [&](const FormulaMultiset& g1,
                                      const FormulaMultiset& g2) {
          if (done) return;
          for_each_split(base.succ, [&](const FormulaMultiset& d1,
                                        const FormulaMultiset& d2) {
            if (done) return;
            Sequent p1;
            p1.ante = g1;
            p1.succ = d1;
            p1.succ.add(f.left());
            if (single() && p1.succ.cardinality() > 1) return;
            Sequent p2;
            p2.ante = g2;
            p2.ante.add(f.right());
            p2.succ = d2;
            done = binary(Rule::LImp, p1, p2, budget, f);
          });
        });
        if (done) return done;
      }
      if (f.is_bang() && rules.has(Rule::LBang)) {
        Sequent prem = base;
        prem.ante.add(f.sub());
        if (auto res = unary(Rule::LBang, prem, budget, f)) return res;
      }
      if (f.is_bang() && rules.has(Rule::WBang))
        if (auto res = unary(Rule::WBang, base, budget, f)) return res;
      if (f.is_bang() && rules.has(Rule::CBang)) {
        Sequent prem = s;
        prem.ante.add(f);
        if (auto res = unary(Rule::CBang, prem, budget, f)) return res;
      }
      if (rules.has(Rule::Lw))
        if (auto res = unary(Rule::Lw, base, budget, f)) return res;
    }

    // right principals
    for (const auto& [f, cnt] : D.items()) {
      Sequent base = s;
      base.succ.remove(f);
      if (f.is_const(Konst::Zero) && rules.has(Rule::ZeroW))
        if (auto res = unary(Rule::ZeroW, base, budget, Formula())) return res;
      if (f.is_bin(BinOp::And) && rules.has(Rule::RAnd)) {
        Sequent p1 = base, p2 = base;
        p1.succ.add(f.left());
        p2.succ.add(f.right());
        if (auto res = binary(Rule::RAnd, p1, p2, budget, f)) return res;
      }
      if (f.is_bin(BinOp::Or) && rules.has(Rule::ROrL)) {
        for (Rule r : {Rule::ROrL, Rule::ROrR}) {
          Sequent prem = base;
          prem.succ.add(r == Rule::ROrL ? f.left() : f.right());
          if (auto res = unary(r, prem, budget, f)) return res;
        }
      }
      if (f.is_bin(BinOp::Star) && rules.has(Rule::RStar)) {
        std::optional<std::pair<uint64_t, NodeId>> done;
        for_each_split(base.ante, [&](const FormulaMultiset& g1,
                                      const FormulaMultiset& g2) {
          if (done) return;
          for_each_split(base.succ, [&](const FormulaMultiset& d1,
                                        const FormulaMultiset& d2) {
            if (done) return;
            Sequent p1;
            p1.ante = g1;
            p1.succ = d1;
            p1.succ.add(f.left());
            if (single() && p1.succ.cardinality() > 1) return;
            Sequent p2;
            p2.ante = g2;
            p2.succ = d2;
            p2.succ.add(f.right());
            if (single() && p2.succ.cardinality() > 1) return;
            done = binary(Rule::RStar, p1, p2, budget, f);
          });
        });
        if (done) return done;
      }
      if (f.is_bin(BinOp::Imp) && rules.has(Rule::RImp)) {
        Sequent prem = base;
        prem.ante.add(f.left());
        prem.succ.add(f.right());
        if (!single() || prem.succ.cardinality() <= 1)
          if (auto res = unary(Rule::RImp, prem, budget, f)) return res;
      }
      if (f.is_bang() && rules.has(Rule::RBang) && D.cardinality() == 1) {
        bool all_banged = true;
        for (const auto& [g, c2] : G.items())
          if (!g.is_bang()) { all_banged = false; break; }
        if (all_banged) {
          Sequent prem;
          prem.ante = G;
          prem.succ.add(f.sub());
          if (auto res = unary(Rule::RBang, prem, budget, f)) return res;
        }
      }
      if (rules.has(Rule::Rw))
        if (auto res = unary(Rule::Rw, base, budget, f)) return res;
    }

    // contraction last: it grows the sequent, so cheaper shapes go first
    if (rules.has(Rule::Lc)) {
      for (const auto& [f, cnt] : G.items()) {
        Sequent prem = s;
        prem.ante.add(f);
        if (auto res = unary(Rule::Lc, prem, budget, f)) return res;
      }
    }
    if (rules.has(Rule::Rc)) {
      for (const auto& [f, cnt] : D.items()) {
        Sequent prem = s;
        prem.succ.add(f);
        if (auto res = unary(Rule::Rc, prem, budget, f)) return res;
      }
    }

    if (analytic_cut && rules.has(Rule::Cut)) {
      for (Formula cf : cut_candidates) {
        std::optional<std::pair<uint64_t, NodeId>> done;
        for_each_split(s.ante, [&](const FormulaMultiset& g1,
                                   const FormulaMultiset& g2) {
          if (done) return;
          for_each_split(s.succ, [&](const FormulaMultiset& d1,
                                     const FormulaMultiset& d2) {
            if (done) return;
            Sequent p1;
            p1.ante = g1;
            p1.succ = d1;
            p1.succ.add(cf);
            if (single() && p1.succ.cardinality() > 1) return;
            Sequent p2;
            p2.ante = g2;
            p2.ante.add(cf);
            p2.succ = d2;
            done = binary(Rule::Cut, p1, p2, budget, cf);
          });
        });
        if (done) return done;
      }
    }
    return std::nullopt;
  }

  std::optional<NodeId> match_template(TemplateId t, const Sequent& s) {
    auto atom_of = [](Formula f) -> Formula {
      if (f.is_atom()) return f;
      return Formula();
    };
    const FormulaMultiset& G = s.ante;
    const FormulaMultiset& D = s.succ;
    switch (t) {
      case TemplateId::Em: {
        if (!G.empty() || D.cardinality() != 1) return std::nullopt;
        Formula f = D.items()[0].first;
        if (f.is_bin(BinOp::Or) && f.left().is_atom() &&
            f.right() == neg(f.left()))
          return builder.ax_initial(t, f.left());
        return std::nullopt;
      }
      case TemplateId::UnitPos:
      case TemplateId::UnitNeg: {
        if (G.cardinality() != 1 || D.cardinality() != 1) return std::nullopt;
        if (!D.items()[0].first.is_const(Konst::One)) return std::nullopt;
        Formula g = G.items()[0].first;
        if (t == TemplateId::UnitPos && g.is_atom())
          return builder.ax_initial(t, g);
        if (t == TemplateId::UnitNeg && is_neg_literal(g))
          return builder.ax_initial(t, g.left());
        return std::nullopt;
      }
      case TemplateId::ZeroPos:
      case TemplateId::ZeroNeg: {
        if (G.cardinality() != 1 || D.cardinality() != 1) return std::nullopt;
        if (!G.items()[0].first.is_const(Konst::Zero)) return std::nullopt;
        Formula d = D.items()[0].first;
        if (t == TemplateId::ZeroPos && d.is_atom())
          return builder.ax_initial(t, d);
        if (t == TemplateId::ZeroNeg && is_neg_literal(d))
          return builder.ax_initial(t, d.left());
        return std::nullopt;
      }
      case TemplateId::ZeroFuse: {
        if (G.cardinality() != 1 || D.cardinality() != 1) return std::nullopt;
        if (G.items()[0].first.is_const(Konst::Zero) &&
            D.items()[0].first ==
                f_star(Formula::zero(), Formula::zero()))
          return builder.ax_initial(t);
        return std::nullopt;
      }
      case TemplateId::Dual: {
        if (G.cardinality() != 2 || D.cardinality() != 1) return std::nullopt;
        if (D.items()[0].first != calc.D) return std::nullopt;
        for (const auto& [g, c2] : G.items()) {
          Formula a = atom_of(g);
          if (!a.valid()) continue;
          Sequent want;
          want.ante.add(a);
          want.ante.add(calc.N);
          want.succ.add(calc.D);
          if (want == s) return builder.ax_initial(t, a);
        }
        return std::nullopt;
      }
      case TemplateId::LitPos: {
        if (G.cardinality() != 1 || D.cardinality() != 1) return std::nullopt;
        Formula g = G.items()[0].first;
        if (g.is_atom() && D.items()[0].first == g)
          return builder.ax_initial(t, g);
        return std::nullopt;
      }
      case TemplateId::LitNeg: {
        if (G.cardinality() != 1 || D.cardinality() != 1) return std::nullopt;
        Formula g = G.items()[0].first;
        if (is_neg_literal(g) && D.items()[0].first == g)
          return builder.ax_initial(t, g.left());
        return std::nullopt;
      }
      case TemplateId::Clash: {
        if (!D.empty() || G.cardinality() != 2) return std::nullopt;
        for (const auto& [g, c2] : G.items()) {
          if (!g.is_atom()) continue;
          Sequent want;
          want.ante.add(g);
          want.ante.add(neg(g));
          if (want.ante == G) return builder.ax_initial(t, g);
        }
        return std::nullopt;
      }
      case TemplateId::None:
        return std::nullopt;
    }
    return std::nullopt;
  }
};

void collect_subformulas(Formula f, std::vector<Formula>& out) {
  out.push_back(f);
  switch (f.kind()) {
    case FKind::Bin:
      collect_subformulas(f.left(), out);
      collect_subformulas(f.right(), out);
      break;
    case FKind::Bang:
      collect_subformulas(f.sub(), out);
      break;
    default:
      break;
  }
}

} // namespace

BoundedResult bounded_search(const Calculus& c, const Sequent& s,
                             const SearchBudget& budget, bool analytic_cut) {
  BoundedEngine eng(c, budget.max_visited, analytic_cut);
  if (analytic_cut) {
    std::vector<Formula> subs;
    for (const auto& side : {&s.ante, &s.succ})
      for (const auto& [f, cnt] : side->items()) collect_subformulas(f, subs);
    std::sort(subs.begin(), subs.end(),
              [](Formula a, Formula b) { return a.id() < b.id(); });
    subs.erase(std::unique(subs.begin(), subs.end()), subs.end());
    eng.cut_candidates = std::move(subs);
  }
  BoundedResult out;
  out.budget = budget;
  for (uint64_t cap = 1; cap <= budget.max_nodes; ++cap) {
    auto res = eng.prove(s, cap);
    if (res) {
      out.found = true;
      out.proof = eng.builder.finish(res->second);
      break;
    }
    if (eng.truncated) break;
  }
  out.complete = !eng.truncated;
  return out;
}

// ---- Boolean validity --------------------------------------------------------

namespace {
bool eval_assign(Formula f, const std::vector<uint32_t>& atoms, uint32_t bits) {
  switch (f.kind()) {
    case FKind::Atom: {
      for (size_t i = 0; i < atoms.size(); ++i)
        if (atoms[i] == f.atom_id()) return (bits >> i) & 1;
      return false;
    }
    case FKind::Const:
      switch (f.const_kind()) {
        case Konst::Zero:
        case Konst::Bot: return false;
        default: return true;
      }
    case FKind::Bang: return eval_assign(f.sub(), atoms, bits);
    case FKind::Bin:
      switch (f.op()) {
        case BinOp::And:
        case BinOp::Star:
          return eval_assign(f.left(), atoms, bits) &&
                 eval_assign(f.right(), atoms, bits);
        case BinOp::Or:
          return eval_assign(f.left(), atoms, bits) ||
                 eval_assign(f.right(), atoms, bits);
        case BinOp::Imp:
          return !eval_assign(f.left(), atoms, bits) ||
                 eval_assign(f.right(), atoms, bits);
      }
  }
  return false;
}
} // namespace

bool boolean_valid(Formula f) {
  Formula g = forgetful(f);
  std::vector<uint32_t> atoms = var_ids(g);
  if (atoms.size() > 24)
    throw std::invalid_argument("boolean_valid: more than 24 atoms");
  uint64_t total = uint64_t{1} << atoms.size();
  for (uint64_t bits = 0; bits < total; ++bits)
    if (!eval_assign(g, atoms, static_cast<uint32_t>(bits))) return false;
  return true;
}

bool boolean_valid_sequent(const Sequent& s) {
  return boolean_valid(interpretation(s));
}

// ---- nnf decision procedure ---------------------------------------------------

namespace {

struct NnfEngine {
  ProofBuilder builder{Calculus::plain(CalcName::LK_nn)};
  std::vector<std::pair<uint32_t, bool>> countermodel;
  bool counter_found = false;

  // weaken in everything in `extra` (left) and `succ` (right) around a
  // closed leaf whose conclusion is `have`
  NodeId close(NodeId leaf, const Sequent& target) {
    NodeId n = leaf;
    FormulaMultiset missing;
    if (!target.ante.minus(builder.seq(n).ante, missing))
      throw std::logic_error("nnf close: leaf not below target");
    for (const auto& [f, cnt] : missing.items())
      for (uint32_t i = 0; i < cnt; ++i) n = builder.app1(Rule::Lw, n, f);
    if (builder.seq(n).succ.empty() && !target.succ.empty())
      n = builder.app1(Rule::Rw, n, target.succ.items()[0].first);
    return n;
  }

  // true literal under the antecedent: p in G for p, or neg p in G
  static bool lit_true(const FormulaMultiset& G, Formula lit) {
    return G.contains(lit);
  }

  std::optional<NodeId> prove(const Sequent& s) {
    const FormulaMultiset& G = s.ante;
    // 1. clash
    for (const auto& [f, cnt] : G.items())
      if (f.is_atom() && G.contains(neg(f)))
        return close(builder.ax_initial(TemplateId::Clash, f), s);
    // 2. goal literal present
    if (s.succ.cardinality() == 1) {
      Formula goal = s.succ.items()[0].first;
      if (goal.is_atom() && G.contains(goal))
        return close(builder.ax_initial(TemplateId::LitPos, goal), s);
      if (is_neg_literal(goal) && G.contains(goal))
        return close(builder.ax_initial(TemplateId::LitNeg, goal.left()), s);
    }
    // 3. decompose a compound hypothesis (conjunctions first)
    Formula pick;
    for (const auto& [f, cnt] : G.items())
      if (f.is_bin(BinOp::And)) { pick = f; break; }
    if (!pick.valid())
      for (const auto& [f, cnt] : G.items())
        if (f.is_bin(BinOp::Or)) { pick = f; break; }
    if (pick.valid()) {
      Sequent base = s;
      base.ante.remove(pick);
      if (pick.is_bin(BinOp::And)) {
        Sequent prem = base;
        prem.ante.add(pick.left());
        prem.ante.add(pick.right());
        auto sub = prove(prem);
        if (!sub) return std::nullopt;
        NodeId n = builder.app1(Rule::LAndL, *sub, pick);
        n = builder.app1(Rule::LAndR, n, pick);
        return builder.app1(Rule::Lc, n, pick);
      }
      Sequent p1 = base, p2 = base;
      p1.ante.add(pick.left());
      p2.ante.add(pick.right());
      auto s1 = prove(p1);
      if (!s1) return std::nullopt;
      auto s2 = prove(p2);
      if (!s2) return std::nullopt;
      return builder.app2(Rule::LOr, *s1, *s2, pick);
    }
    // 4. all-literal antecedent
    if (s.succ.empty()) {
      record_countermodel(G);
      return std::nullopt;
    }
    Formula goal = s.succ.items()[0].first;
    // 5. split on an unassigned goal atom
    for (uint32_t aid : var_ids(goal)) {
      Formula at = Formula::atom(atom_name_of(aid));
      if (G.contains(at) || G.contains(neg(at))) continue;
      Sequent p1 = s, p2 = s;
      p1.ante.add(at);
      p2.ante.add(neg(at));
      auto s1 = prove(p1);
      if (!s1) return std::nullopt;
      auto s2 = prove(p2);
      if (!s2) return std::nullopt;
      NodeId lor = builder.app2(Rule::LOr, *s1, *s2, f_or(at, neg(at)));
      NodeId em = builder.ax_initial(TemplateId::Em, at);
      return builder.app2(Rule::Cut, em, lor, f_or(at, neg(at)));
    }
    // 6. goal fully assigned: descend by evaluation
    return descend(s, goal);
  }

  std::optional<NodeId> descend(const Sequent& s, Formula goal) {
    const FormulaMultiset& G = s.ante;
    if (goal.is_atom() || is_neg_literal(goal)) {
      if (lit_true(G, goal)) {
        NodeId leaf = goal.is_atom()
                          ? builder.ax_initial(TemplateId::LitPos, goal)
                          : builder.ax_initial(TemplateId::LitNeg, goal.left());
        return close(leaf, s);
      }
      record_countermodel(G);
      return std::nullopt;
    }
    if (goal.is_bin(BinOp::And)) {
      Sequent p1 = s, p2 = s;
      p1.succ = FormulaMultiset{goal.left()};
      p2.succ = FormulaMultiset{goal.right()};
      auto s1 = descend(p1, goal.left());
      if (!s1) return std::nullopt;
      auto s2 = descend(p2, goal.right());
      if (!s2) return std::nullopt;
      return builder.app2(Rule::RAnd, *s1, *s2, goal);
    }
    if (goal.is_bin(BinOp::Or)) {
      for (Rule r : {Rule::ROrL, Rule::ROrR}) {
        Formula piece = r == Rule::ROrL ? goal.left() : goal.right();
        if (eval_true(G, piece)) {
          Sequent prem = s;
          prem.succ = FormulaMultiset{piece};
          auto sub = descend(prem, piece);
          if (!sub) return std::nullopt;
          return builder.app1(r, *sub, goal);
        }
      }
      record_countermodel(G);
      return std::nullopt;
    }
    throw std::logic_error("descend: goal not in nnf");
  }

  static bool eval_true(const FormulaMultiset& G, Formula f) {
    if (f.is_atom()) return G.contains(f);
    if (is_neg_literal(f)) return G.contains(f) || !G.contains(f.left());
    if (f.is_bin(BinOp::And))
      return eval_true(G, f.left()) && eval_true(G, f.right());
    if (f.is_bin(BinOp::Or))
      return eval_true(G, f.left()) || eval_true(G, f.right());
    return false;
  }

  void record_countermodel(const FormulaMultiset& G) {
    if (counter_found) return;
    counter_found = true;
    for (const auto& [f, cnt] : G.items())
      if (f.is_atom()) countermodel.emplace_back(f.atom_id(), true);
  }
};

} // namespace

NnfDecision lknn_decide(const Sequent& s) {
  if (s.succ.cardinality() > 1)
    throw std::invalid_argument("lknn_decide: sequent must be single-conclusion");
  for (const auto& side : {&s.ante, &s.succ})
    for (const auto& [f, cnt] : side->items())
      if (!in_language(f, Lang::Lnn))
        throw std::invalid_argument("lknn_decide: formula not in nnf: " +
                                    to_string(f));
  NnfEngine eng;
  NnfDecision out;
  auto n = eng.prove(s);
  if (n) {
    out.proof = eng.builder.finish(*n);
  } else {
    out.countermodel = std::move(eng.countermodel);
  }
  return out;
}

} // namespace prooflab
