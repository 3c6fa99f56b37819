#include "prooflab/builder.hpp"

#include <algorithm>

namespace prooflab {

namespace {
[[noreturn]] void misuse(const std::string& what) {
  throw std::logic_error("proof construction error: " + what);
}
} // namespace

NodeId ProofBuilder::push(ProofNode n) {
  if (dedup_) {
    uint64_t h = n.conclusion.hash();
    h = h * 31 + static_cast<uint64_t>(n.rule);
    h = h * 31 + (n.principal.valid() ? n.principal.id() : 0xffffffffu);
    h = h * 31 + static_cast<uint64_t>(n.tmpl);
    for (NodeId q : n.premises) h = h * 31 + q;
    auto& bucket = memo_[h];
    for (NodeId cand : bucket) {
      const ProofNode& c = nodes_[cand];
      if (c.rule == n.rule && c.tmpl == n.tmpl && c.principal == n.principal &&
          c.premises == n.premises && c.conclusion == n.conclusion)
        return cand;
    }
    NodeId id = static_cast<NodeId>(nodes_.size());
    nodes_.push_back(std::move(n));
    bucket.push_back(id);
    return id;
  }
  NodeId id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(std::move(n));
  return id;
}

NodeId ProofBuilder::ax_id(Formula a) {
  ProofNode n;
  n.rule = Rule::Id;
  n.principal = a;
  n.conclusion.ante.add(a);
  n.conclusion.succ.add(a);
  return push(std::move(n));
}

NodeId ProofBuilder::ax_one_r() {
  ProofNode n;
  n.rule = Rule::OneR;
  n.conclusion.succ.add(Formula::one());
  return push(std::move(n));
}

NodeId ProofBuilder::ax_zero_l() {
  ProofNode n;
  n.rule = Rule::ZeroL;
  n.conclusion.ante.add(Formula::zero());
  return push(std::move(n));
}

NodeId ProofBuilder::ax_top_r(Sequent conclusion) {
  if (!conclusion.succ.contains(Formula::top())) misuse("(top) without top");
  ProofNode n;
  n.rule = Rule::TopR;
  n.principal = Formula::top();
  n.conclusion = std::move(conclusion);
  return push(std::move(n));
}

NodeId ProofBuilder::ax_bot_l(Sequent conclusion) {
  if (!conclusion.ante.contains(Formula::bot())) misuse("(bot) without bot");
  ProofNode n;
  n.rule = Rule::BotL;
  n.principal = Formula::bot();
  n.conclusion = std::move(conclusion);
  return push(std::move(n));
}

NodeId ProofBuilder::ax_initial(TemplateId tmpl, Formula atom) {
  ProofNode n;
  n.rule = Rule::Initial;
  n.tmpl = tmpl;
  n.principal = atom;
  Formula zero = Formula::zero(), one = Formula::one();
  switch (tmpl) {
    case TemplateId::Em:
      n.conclusion.succ.add(f_or(atom, neg(atom)));
      break;
    case TemplateId::UnitPos:
      n.conclusion.ante.add(atom);
      n.conclusion.succ.add(one);
      break;
    case TemplateId::UnitNeg:
      n.conclusion.ante.add(neg(atom));
      n.conclusion.succ.add(one);
      break;
    case TemplateId::ZeroPos:
      n.conclusion.ante.add(zero);
      n.conclusion.succ.add(atom);
      break;
    case TemplateId::ZeroNeg:
      n.conclusion.ante.add(zero);
      n.conclusion.succ.add(neg(atom));
      break;
    case TemplateId::ZeroFuse:
      n.conclusion.ante.add(zero);
      n.conclusion.succ.add(f_star(zero, zero));
      break;
    case TemplateId::Dual:
      n.conclusion.ante.add(atom);
      n.conclusion.ante.add(calc_.N);
      n.conclusion.succ.add(calc_.D);
      break;
    case TemplateId::LitPos:
      n.conclusion.ante.add(atom);
      n.conclusion.succ.add(atom);
      break;
    case TemplateId::LitNeg:
      n.conclusion.ante.add(neg(atom));
      n.conclusion.succ.add(neg(atom));
      break;
    case TemplateId::Clash:
      n.conclusion.ante.add(atom);
      n.conclusion.ante.add(neg(atom));
      break;
    case TemplateId::None:
      misuse("initial without template");
  }
  return push(std::move(n));
}

NodeId ProofBuilder::ax_hypothesis(Sequent s) {
  ProofNode n;
  n.rule = Rule::Hypothesis;
  n.conclusion = std::move(s);
  return push(std::move(n));
}

Sequent ProofBuilder::conclude1(Rule r, const Sequent& p, Formula pr) const {
  Sequent c = p;
  switch (r) {
    case Rule::OneW:
      c.ante.add(Formula::one());
      return c;
    case Rule::ZeroW:
      c.succ.add(Formula::zero());
      return c;
    case Rule::LAndL:
    case Rule::LAndR: {
      if (!pr.is_bin(BinOp::And)) misuse("(L/\\) principal");
      Formula piece = r == Rule::LAndL ? pr.left() : pr.right();
      if (!c.ante.remove(piece)) misuse("(L/\\) piece not in antecedent");
      c.ante.add(pr);
      return c;
    }
    case Rule::ROrL:
    case Rule::ROrR: {
      if (!pr.is_bin(BinOp::Or)) misuse("(R\\/) principal");
      Formula piece = r == Rule::ROrL ? pr.left() : pr.right();
      if (!c.succ.remove(piece)) misuse("(R\\/) piece not in succedent");
      c.succ.add(pr);
      return c;
    }
    case Rule::LStar: {
      if (!pr.is_bin(BinOp::Star)) misuse("(L*) principal");
      if (!c.ante.remove(pr.left()) || !c.ante.remove(pr.right()))
        misuse("(L*) pieces not in antecedent");
      c.ante.add(pr);
      return c;
    }
    case Rule::RImp: {
      if (!pr.is_bin(BinOp::Imp)) misuse("(R->) principal");
      if (!c.ante.remove(pr.left()) || !c.succ.remove(pr.right()))
        misuse("(R->) pieces not in premise");
      c.succ.add(pr);
      return c;
    }
    case Rule::Lw:
      c.ante.add(pr);
      return c;
    case Rule::Rw:
      c.succ.add(pr);
      return c;
    case Rule::Lc:
      if (c.ante.count(pr) < 2) misuse("(Lc) needs two occurrences");
      c.ante.remove(pr);
      return c;
    case Rule::Rc:
      if (c.succ.count(pr) < 2) misuse("(Rc) needs two occurrences");
      c.succ.remove(pr);
      return c;
    case Rule::RBang: {
      if (!pr.is_bang()) misuse("(R!) principal");
      for (const auto& [f, cnt] : c.ante.items())
        if (!f.is_bang()) misuse("(R!) context not !-prefixed");
      if (!c.succ.remove(pr.sub())) misuse("(R!) body not in succedent");
      if (!c.succ.empty()) misuse("(R!) succedent not a singleton");
      c.succ.add(pr);
      return c;
    }
    case Rule::LBang: {
      if (!pr.is_bang()) misuse("(L!) principal");
      if (!c.ante.remove(pr.sub())) misuse("(L!) body not in antecedent");
      c.ante.add(pr);
      return c;
    }
    case Rule::WBang:
      if (!pr.is_bang()) misuse("(W!) principal");
      c.ante.add(pr);
      return c;
    case Rule::CBang:
      if (!pr.is_bang()) misuse("(C!) principal");
      if (c.ante.count(pr) < 2) misuse("(C!) needs two occurrences");
      c.ante.remove(pr);
      return c;
    default:
      misuse("not a unary rule: " + rule_name(r));
  }
}

Sequent ProofBuilder::conclude2(Rule r, const Sequent& p1, const Sequent& p2,
                                Formula pr) const {
  switch (r) {
    case Rule::RAnd: {
      if (!pr.is_bin(BinOp::And)) misuse("(R/\\) principal");
      Sequent a = p1, b = p2;
      if (!a.succ.remove(pr.left()) || !b.succ.remove(pr.right()))
        misuse("(R/\\) components not in premises");
      if (a != b) misuse("(R/\\) contexts differ");
      a.succ.add(pr);
      return a;
    }
    case Rule::LOr: {
      if (!pr.is_bin(BinOp::Or)) misuse("(L\\/) principal");
      Sequent a = p1, b = p2;
      if (!a.ante.remove(pr.left()) || !b.ante.remove(pr.right()))
        misuse("(L\\/) components not in premises");
      if (a != b) misuse("(L\\/) contexts differ");
      a.ante.add(pr);
      return a;
    }
    case Rule::RStar: {
      if (!pr.is_bin(BinOp::Star)) misuse("(R*) principal");
      Sequent a = p1, b = p2;
      if (!a.succ.remove(pr.left()) || !b.succ.remove(pr.right()))
        misuse("(R*) components not in premises");
      Sequent c;
      c.ante = a.ante.plus(b.ante);
      c.succ = a.succ.plus(b.succ);
      c.succ.add(pr);
      return c;
    }
    case Rule::LImp: {
      if (!pr.is_bin(BinOp::Imp)) misuse("(L->) principal");
      Sequent a = p1, b = p2;
      if (!a.succ.remove(pr.left())) misuse("(L->) left part not in first premise");
      if (!b.ante.remove(pr.right())) misuse("(L->) right part not in second premise");
      Sequent c;
      c.ante = a.ante.plus(b.ante);
      c.ante.add(pr);
      c.succ = a.succ.plus(b.succ);
      return c;
    }
    case Rule::Cut: {
      Sequent a = p1, b = p2;
      if (!a.succ.remove(pr)) misuse("cut formula not in first premise succedent");
      if (!b.ante.remove(pr)) misuse("cut formula not in second premise antecedent");
      Sequent c;
      c.ante = a.ante.plus(b.ante);
      c.succ = a.succ.plus(b.succ);
      return c;
    }
    default:
      misuse("not a binary rule: " + rule_name(r));
  }
}

NodeId ProofBuilder::app1(Rule r, NodeId prem, Formula principal) {
  ProofNode n;
  n.rule = r;
  n.premises = {prem};
  n.principal = principal;
  n.conclusion = conclude1(r, nodes_[prem].conclusion, principal);
  return push(std::move(n));
}

NodeId ProofBuilder::app2(Rule r, NodeId p1, NodeId p2, Formula principal) {
  ProofNode n;
  n.rule = r;
  n.premises = {p1, p2};
  n.principal = principal;
  n.conclusion = conclude2(r, nodes_[p1].conclusion, nodes_[p2].conclusion, principal);
  return push(std::move(n));
}

NodeId ProofBuilder::graft(const Proof& p) {
  std::vector<NodeId> remap(p.nodes.size());
  // p's premises may point anywhere; process in topological order
  std::vector<uint32_t> indeg(p.nodes.size(), 0);
  std::vector<uint8_t> done(p.nodes.size(), 0);
  std::vector<NodeId> order;
  order.reserve(p.nodes.size());
  // Kahn over the premise DAG (premises must come first)
  std::vector<std::vector<NodeId>> users(p.nodes.size());
  for (NodeId i = 0; i < p.nodes.size(); ++i) {
    indeg[i] = static_cast<uint32_t>(p.nodes[i].premises.size());
    for (NodeId q : p.nodes[i].premises) users[q].push_back(i);
  }
  std::vector<NodeId> ready;
  for (NodeId i = 0; i < p.nodes.size(); ++i)
    if (indeg[i] == 0) ready.push_back(i);
  while (!ready.empty()) {
    NodeId i = ready.back();
    ready.pop_back();
    order.push_back(i);
    done[i] = 1;
    for (NodeId u : users[i])
      if (--indeg[u] == 0) ready.push_back(u);
  }
  if (order.size() != p.nodes.size()) misuse("graft of cyclic proof");
  for (NodeId i : order) {
    ProofNode n = p.nodes[i];
    for (NodeId& q : n.premises) q = remap[q];
    remap[i] = push(std::move(n));
  }
  return remap[p.root];
}

Proof ProofBuilder::finish(NodeId root) const {
  // keep reachable nodes only, in premise-first order
  std::vector<int64_t> remap(nodes_.size(), -1);
  Proof out;
  out.calculus = calc_;
  std::vector<std::pair<NodeId, size_t>> stack{{root, 0}};
  while (!stack.empty()) {
    auto& [n, k] = stack.back();
    if (remap[n] >= 0) {
      stack.pop_back();
      continue;
    }
    const auto& prem = nodes_[n].premises;
    if (k < prem.size()) {
      NodeId q = prem[k++];
      if (remap[q] < 0) stack.emplace_back(q, 0);
      continue;
    }
    ProofNode copy = nodes_[n];
    for (NodeId& q : copy.premises) q = static_cast<NodeId>(remap[q]);
    remap[n] = static_cast<int64_t>(out.nodes.size());
    out.nodes.push_back(std::move(copy));
    stack.pop_back();
  }
  out.root = static_cast<NodeId>(remap[root]);
  return out;
}

// ---- derivation helpers ----------------------------------------------------

NodeId derive_spread_to_star(ProofBuilder& b, const FormulaMultiset& ms) {
  std::vector<Formula> elems = ms.canonical_elements();
  if (elems.empty()) return b.ax_one_r();
  NodeId acc = b.ax_id(elems[0]);
  Formula accf = elems[0];
  for (size_t i = 1; i < elems.size(); ++i) {
    Formula next = f_star(accf, elems[i]);
    acc = b.app2(Rule::RStar, acc, b.ax_id(elems[i]), next);
    accf = next;
  }
  return acc;
}

NodeId derive_fold_ante_star(ProofBuilder& b, NodeId n, const FormulaMultiset& ms) {
  std::vector<Formula> elems = ms.canonical_elements();
  if (elems.empty()) return b.app1(Rule::OneW, n);
  Formula accf = elems[0];
  NodeId acc = n;
  for (size_t i = 1; i < elems.size(); ++i) {
    Formula next = f_star(accf, elems[i]);
    acc = b.app1(Rule::LStar, acc, next);
    accf = next;
  }
  return acc;
}

FormulaMultiset star_leaves(Formula t) {
  FormulaMultiset ms;
  std::vector<Formula> stack{t};
  while (!stack.empty()) {
    Formula f = stack.back();
    stack.pop_back();
    if (f.is_bin(BinOp::Star)) {
      stack.push_back(f.left());
      stack.push_back(f.right());
    } else {
      ms.add(f);
    }
  }
  return ms;
}

NodeId derive_star_tree(ProofBuilder& b, Formula t) {
  if (!t.is_bin(BinOp::Star)) return b.ax_id(t);
  NodeId l = derive_star_tree(b, t.left());
  NodeId r = derive_star_tree(b, t.right());
  return b.app2(Rule::RStar, l, r, t);
}

NodeId derive_imp_trans(ProofBuilder& b, Formula x, Formula y, Formula z) {
  NodeId inner = b.app2(Rule::LImp, b.ax_id(y), b.ax_id(z), f_imp(y, z));
  NodeId outer = b.app2(Rule::LImp, b.ax_id(x), inner, f_imp(x, y));
  return b.app1(Rule::RImp, outer, f_imp(x, z));
}

NodeId derive_imp_apply(ProofBuilder& b, Formula x, Formula y) {
  return b.app2(Rule::LImp, b.ax_id(x), b.ax_id(y), f_imp(x, y));
}

NodeId derive_fold_ante_and(ProofBuilder& b, NodeId n, Formula conj,
                            const std::vector<bool>& path_is_left) {
  // rebuild inner-to-outer: path[k] selects the branch at depth k
  std::vector<Formula> spine;
  Formula cur = conj;
  for (bool left : path_is_left) {
    spine.push_back(cur);
    cur = left ? cur.left() : cur.right();
  }
  NodeId acc = n;
  for (size_t k = spine.size(); k-- > 0;) {
    acc = b.app1(path_is_left[k] ? Rule::LAndL : Rule::LAndR, acc, spine[k]);
  }
  return acc;
}

namespace {
bool find_and_path(Formula conj, Formula member, std::vector<bool>& path) {
  if (conj == member) return true;
  if (!conj.is_bin(BinOp::And)) return false;
  path.push_back(true);
  if (find_and_path(conj.left(), member, path)) return true;
  path.back() = false;
  if (find_and_path(conj.right(), member, path)) return true;
  path.pop_back();
  return false;
}
} // namespace

NodeId derive_and_project(ProofBuilder& b, Formula conj, Formula member) {
  std::vector<bool> path;
  if (!find_and_path(conj, member, path))
    throw std::logic_error("derive_and_project: member not found");
  return derive_fold_ante_and(b, b.ax_id(member), conj, path);
}

} // namespace prooflab
