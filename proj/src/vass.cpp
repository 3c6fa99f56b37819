#include "prooflab/vass.hpp"

#include <queue>
#include <sstream>
#include <unordered_map>

#include "prooflab/builder.hpp"

namespace prooflab {

uint32_t Vass::add_state(const std::string& name) {
  if (auto existing = state_id(name)) return *existing;
  states.push_back(name);
  return static_cast<uint32_t>(states.size() - 1);
}

std::optional<uint32_t> Vass::state_id(const std::string& name) const {
  for (uint32_t i = 0; i < states.size(); ++i)
    if (states[i] == name) return i;
  return std::nullopt;
}

void Vass::add_rule(uint32_t src, std::vector<int64_t> delta, uint32_t dst) {
  if (delta.size() != dim) throw std::invalid_argument("rule arity mismatch");
  if (src >= states.size() || dst >= states.size())
    throw std::invalid_argument("rule references unknown state");
  rules.push_back({src, std::move(delta), dst});
}

bool Vass::is_ordinary() const {
  for (const VassRule& r : rules) {
    int nonzero = 0;
    bool unit = true;
    for (int64_t x : r.delta) {
      if (x != 0) {
        ++nonzero;
        if (x != 1 && x != -1) unit = false;
      }
    }
    if (nonzero != 1 || !unit) return false;
  }
  return true;
}

bool Config::covers(const Config& o) const {
  if (state != o.state || vec.size() != o.vec.size()) return false;
  for (size_t i = 0; i < vec.size(); ++i)
    if (vec[i] < o.vec[i]) return false;
  return true;
}

Config apply_rule(const Vass& v, const Config& c, uint32_t rule_index) {
  if (rule_index >= v.rules.size())
    throw std::invalid_argument("no such rule");
  const VassRule& r = v.rules[rule_index];
  if (r.src != c.state) throw std::invalid_argument("rule source state mismatch");
  Config out = c;
  out.state = r.dst;
  for (uint32_t i = 0; i < v.dim; ++i) {
    int64_t next = static_cast<int64_t>(c.vec[i]) + r.delta[i];
    if (next < 0) throw std::invalid_argument("rule would drive a counter negative");
    out.vec[i] = static_cast<uint64_t>(next);
  }
  return out;
}

Config apply_contract(const Config& c, uint32_t component) {
  if (component >= c.vec.size()) throw std::invalid_argument("no such component");
  if (c.vec[component] < 2)
    throw std::invalid_argument("contraction needs the component at least 2");
  Config out = c;
  --out.vec[component];
  return out;
}

Config apply_expand(const Config& c, uint32_t component) {
  if (component >= c.vec.size()) throw std::invalid_argument("no such component");
  if (c.vec[component] < 1)
    throw std::invalid_argument("expansion needs the component at least 1");
  Config out = c;
  ++out.vec[component];
  return out;
}

std::variant<Config, std::string> replay_run(const Vass& v, const Run& run,
                                             StepMode mode) {
  Config cur = run.start;
  if (cur.vec.size() != v.dim) return std::string("start dimension mismatch");
  try {
    for (const RunStep& st : run.steps) {
      switch (st.kind) {
        case RunStep::Rule:
          cur = apply_rule(v, cur, st.index);
          break;
        case RunStep::Contract:
          if (mode != StepMode::Contractive)
            return std::string("contraction step outside contractive mode");
          cur = apply_contract(cur, st.index);
          break;
        case RunStep::Expand:
          if (mode != StepMode::Expansion)
            return std::string("expansion step outside expansion mode");
          cur = apply_expand(cur, st.index);
          break;
      }
    }
  } catch (const std::exception& e) {
    return std::string(e.what());
  }
  return cur;
}

// ---- bounded search -----------------------------------------------------------

namespace {

struct ConfigHash {
  size_t operator()(const Config& c) const {
    uint64_t h = c.state * 0x9e3779b97f4a7c15ull;
    for (uint64_t x : c.vec) h = (h ^ x) * 0x100000001b3ull;
    return static_cast<size_t>(h);
  }
};

struct Parent {
  Config from;
  RunStep step;
  bool root = false;
};

template <typename Goal>
ReachResult bfs_impl(const Vass& v, const Config& from, StepMode mode,
                     const ReachBounds& bounds, Goal&& is_goal) {
  ReachResult out;
  if (from.vec.size() != v.dim)
    throw std::invalid_argument("start dimension mismatch");
  std::unordered_map<Config, Parent, ConfigHash> parent;
  std::queue<Config> queue;
  parent[from] = Parent{from, {}, true};
  queue.push(from);
  bool truncated = false;
  auto in_cap = [&](const Config& c) {
    for (uint64_t x : c.vec)
      if (x > bounds.component_cap) return false;
    return true;
  };
  std::optional<Config> goal;
  while (!queue.empty()) {
    Config cur = queue.front();
    queue.pop();
    ++out.visited;
    if (is_goal(cur)) {
      goal = cur;
      break;
    }
    auto push = [&](const Config& next, RunStep step) {
      if (!in_cap(next)) return;
      if (parent.count(next)) return;
      if (parent.size() >= bounds.max_configs) {
        truncated = true;
        return;
      }
      parent[next] = Parent{cur, step, false};
      queue.push(next);
    };
    for (uint32_t ri = 0; ri < v.rules.size(); ++ri) {
      if (v.rules[ri].src != cur.state) continue;
      try {
        push(apply_rule(v, cur, ri), RunStep{RunStep::Rule, ri});
      } catch (const std::exception&) {
      }
    }
    if (mode == StepMode::Contractive) {
      for (uint32_t i = 0; i < v.dim; ++i)
        if (cur.vec[i] >= 2)
          push(apply_contract(cur, i), RunStep{RunStep::Contract, i});
    } else if (mode == StepMode::Expansion) {
      for (uint32_t i = 0; i < v.dim; ++i)
        if (cur.vec[i] >= 1)
          push(apply_expand(cur, i), RunStep{RunStep::Expand, i});
    }
  }
  out.complete = !truncated;
  if (goal) {
    out.found = true;
    Run run;
    std::vector<RunStep> rev;
    Config cur = *goal;
    while (true) {
      const Parent& p = parent.at(cur);
      if (p.root) break;
      rev.push_back(p.step);
      cur = p.from;
    }
    run.start = from;
    run.steps.assign(rev.rbegin(), rev.rend());
    out.run = std::move(run);
  }
  return out;
}

} // namespace

ReachResult reach_bfs(const Vass& v, const Config& from, const Config& to,
                      StepMode mode, const ReachBounds& bounds) {
  return bfs_impl(v, from, mode, bounds,
                  [&](const Config& c) { return c == to; });
}

ReachResult cover_bfs(const Vass& v, const Config& from, uint32_t state,
                      const std::vector<uint64_t>& target,
                      const ReachBounds& bounds) {
  Config want;
  want.state = state;
  want.vec = target.empty() ? std::vector<uint64_t>(v.dim, 0) : target;
  return bfs_impl(v, from, StepMode::Plain, bounds,
                  [&](const Config& c) { return c.covers(want); });
}

Vass cover_reduce(const Vass& v, uint32_t r) {
  if (v.dim > 16)
    throw std::invalid_argument("cover_reduce: dimension above the 2^d cap");
  if (r >= v.states.size()) throw std::invalid_argument("no such state");
  Vass out = v;
  std::string qn = "q_new";
  while (out.state_id(qn)) qn += "_";
  uint32_t qnew = out.add_state(qn);
  for (uint64_t mask = 0; mask < (uint64_t{1} << v.dim); ++mask) {
    std::vector<int64_t> delta(v.dim, 0);
    for (uint32_t i = 0; i < v.dim; ++i)
      if ((mask >> i) & 1) delta[i] = -1;
    out.add_rule(r, std::move(delta), qnew);
  }
  return out;
}

Run decontract_run(const Vass& v, const Run& run) {
  // validate in contractive mode first
  auto res = replay_run(v, run, StepMode::Contractive);
  if (std::holds_alternative<std::string>(res))
    throw std::invalid_argument("decontract: input run invalid: " +
                                std::get<std::string>(res));
  Run out;
  out.start = run.start;
  for (const RunStep& st : run.steps) {
    if (st.kind == RunStep::Rule) out.steps.push_back(st);
    else if (st.kind == RunStep::Expand)
      throw std::invalid_argument("decontract: expansion steps unsupported");
    // Contract steps drop; the slack rides along
  }
  auto plain = replay_run(v, out, StepMode::Plain);
  if (std::holds_alternative<std::string>(plain))
    throw std::logic_error("decontract: plain replay failed: " +
                           std::get<std::string>(plain));
  return out;
}

// ---- logic encoding -------------------------------------------------------------

namespace {

Formula state_atom(const Vass& v, uint32_t s) {
  const std::string& name = v.states[s];
  Formula f = parse_formula(name);
  if (!f.is_atom())
    throw std::invalid_argument("state name is not an atom: " + name);
  return f;
}

Formula counter_atom(uint32_t i) {
  return Formula::atom("p" + std::to_string(i + 1));
}

void check_encodable(const Vass& v) {
  if (!v.is_ordinary())
    throw std::invalid_argument("encoding needs an ordinary machine");
  for (uint32_t i = 0; i < v.dim; ++i) {
    std::string cname = "p" + std::to_string(i + 1);
    if (v.state_id(cname))
      throw std::invalid_argument("state name collides with counter atom " +
                                  cname);
  }
}

Formula theory_conj(const Vass& v) {
  FormulaMultiset ms;
  for (Formula f : theory_formulas(v)) ms.add(f);
  return bigand(ms);
}

} // namespace

FormulaMultiset theta_encode(const Vass& v, const Config& c) {
  check_encodable(v);
  FormulaMultiset out;
  out.add(state_atom(v, c.state));
  for (uint32_t i = 0; i < v.dim; ++i)
    if (c.vec[i] > 0) out.add(counter_atom(i), static_cast<uint32_t>(c.vec[i]));
  return out;
}

std::vector<Formula> theory_formulas(const Vass& v) {
  check_encodable(v);
  std::vector<Formula> out;
  for (const VassRule& r : v.rules) {
    uint32_t comp = 0;
    int64_t sign = 0;
    for (uint32_t i = 0; i < v.dim; ++i)
      if (r.delta[i] != 0) {
        comp = i;
        sign = r.delta[i];
      }
    Formula q = state_atom(v, r.src), dst = state_atom(v, r.dst);
    Formula p = counter_atom(comp);
    out.push_back(sign > 0 ? f_imp(q, f_star(dst, p))
                           : f_imp(f_star(q, p), dst));
  }
  return out;
}

Sequent encode_sequent(const Vass& v, uint32_t q, uint32_t r) {
  Sequent s;
  s.ante.add(f_and(theory_conj(v), Formula::one()));
  s.ante.add(state_atom(v, q));
  s.succ.add(state_atom(v, r));
  return s;
}

Proof run_to_proof(const Vass& v, const Run& run_in) {
  check_encodable(v);
  // contractive runs go through the decontraction first
  bool has_contract = false;
  for (const RunStep& st : run_in.steps)
    if (st.kind == RunStep::Contract) has_contract = true;
  Run run = has_contract ? decontract_run(v, run_in) : run_in;

  StepMode mode = StepMode::Expansion; // rule + expand steps replay here
  auto rep = replay_run(v, run, mode);
  if (std::holds_alternative<std::string>(rep))
    throw std::invalid_argument("run does not replay: " +
                                std::get<std::string>(rep));

  Formula thc = theory_conj(v);
  Formula T = f_and(thc, Formula::one());
  std::vector<Formula> th = theory_formulas(v);

  ProofBuilder b(Calculus::plain(CalcName::FL_ec), /*dedup=*/true);

  // configuration trace
  std::vector<Config> cs = {run.start};
  for (const RunStep& st : run.steps) {
    const Config& c = cs.back();
    switch (st.kind) {
      case RunStep::Rule: cs.push_back(apply_rule(v, c, st.index)); break;
      case RunStep::Expand: cs.push_back(apply_expand(c, st.index)); break;
      case RunStep::Contract:
        throw std::logic_error("contract step survived decontraction");
    }
  }

  FormulaMultiset start_ms = theta_encode(v, run.start);

  // claim(i): T, theta(c_0) spread => bigstar theta(c_i)
  NodeId claim;
  {
    NodeId n = derive_spread_to_star(b, start_ms);
    n = b.app1(Rule::OneW, n);
    claim = b.app1(Rule::LAndR, n, T);
  }
  for (size_t i = 0; i < run.steps.size(); ++i) {
    const RunStep& st = run.steps[i];
    FormulaMultiset cur = theta_encode(v, cs[i]);
    FormulaMultiset next = theta_encode(v, cs[i + 1]);
    Formula cur_star = bigstar(cur);
    if (st.kind == RunStep::Expand) {
      // lemma: cur_star => next_star via (Lc) on the duplicated atom
      NodeId lem = derive_spread_to_star(b, next);
      lem = b.app1(Rule::Lc, lem, counter_atom(st.index));
      lem = derive_fold_ante_star(b, lem, cur);
      claim = b.app2(Rule::Cut, claim, lem, cur_star);
      continue;
    }
    // rule step: lemma: cur_star, F => next_star
    Formula F = th[st.index];
    const VassRule& vr = v.rules[st.index];
    Formula q = state_atom(v, vr.src), r = state_atom(v, vr.dst);
    uint32_t comp = 0;
    int64_t sign = 0;
    for (uint32_t k = 0; k < v.dim; ++k)
      if (vr.delta[k] != 0) {
        comp = k;
        sign = vr.delta[k];
      }
    Formula p = counter_atom(comp);
    NodeId lem;
    if (sign > 0) {
      // F = q -> r * p : premise2 rebuilds next from (rest, r*p)
      FormulaMultiset rest = cur;
      rest.remove(q);
      NodeId prem2 = derive_spread_to_star(b, next);
      prem2 = b.app1(Rule::LStar, prem2, f_star(r, p));
      NodeId ap = b.app2(Rule::LImp, b.ax_id(q), prem2, F);
      lem = derive_fold_ante_star(b, ap, cur);
    } else {
      // F = q * p -> r
      NodeId prem1 = b.app2(Rule::RStar, b.ax_id(q), b.ax_id(p), f_star(q, p));
      NodeId prem2 = derive_spread_to_star(b, next);
      NodeId ap = b.app2(Rule::LImp, prem1, prem2, F);
      lem = derive_fold_ante_star(b, ap, cur);
    }
    // claim, lemma --cut--> T, theta0, F => next_star
    NodeId stepn = b.app2(Rule::Cut, claim, lem, cur_star);
    // extract F from a second copy of T, then contract T
    NodeId extract = derive_and_project(b, thc, F);
    extract = b.app1(Rule::LAndL, extract, T);
    stepn = b.app2(Rule::Cut, extract, stepn, F);
    claim = b.app1(Rule::Lc, stepn, T);
  }
  // fold the start multiset into its fusion
  claim = derive_fold_ante_star(b, claim, start_ms);
  return b.finish(claim);
}

// ---- text format -----------------------------------------------------------------

std::string vass_to_text(const Vass& v) {
  std::ostringstream out;
  out << "vass d=" << v.dim << "\n";
  for (const std::string& s : v.states) out << "state " << s << "\n";
  for (const VassRule& r : v.rules) {
    out << "rule " << v.states[r.src];
    for (int64_t x : r.delta) out << " " << x;
    out << " " << v.states[r.dst] << "\n";
  }
  return out.str();
}

Vass vass_from_text(std::string_view text) {
  Vass v;
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_header = false;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word[0] == '#') continue;
    if (word == "vass") {
      std::string rest;
      ls >> rest;
      if (rest.rfind("d=", 0) != 0)
        throw ParseError("expected `vass d=<d>`", lineno);
      v.dim = static_cast<uint32_t>(std::stoul(rest.substr(2)));
      if (v.dim < 1) throw ParseError("dimension must be positive", lineno);
      have_header = true;
    } else if (word == "state") {
      std::string name;
      if (!(ls >> name)) throw ParseError("state needs a name", lineno);
      v.add_state(name);
    } else if (word == "rule") {
      if (!have_header) throw ParseError("rule before header", lineno);
      std::string src, dst;
      if (!(ls >> src)) throw ParseError("rule needs a source", lineno);
      std::vector<int64_t> delta(v.dim);
      for (uint32_t i = 0; i < v.dim; ++i)
        if (!(ls >> delta[i])) throw ParseError("rule vector too short", lineno);
      if (!(ls >> dst)) throw ParseError("rule needs a target", lineno);
      auto si = v.state_id(src), di = v.state_id(dst);
      if (!si || !di) throw ParseError("rule references unknown state", lineno);
      v.add_rule(*si, std::move(delta), *di);
    } else {
      throw ParseError("unknown directive '" + word + "'", lineno);
    }
  }
  if (!have_header) throw ParseError("missing `vass d=<d>` header", 0);
  return v;
}

} // namespace prooflab
