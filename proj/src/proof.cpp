#include "prooflab/proof.hpp"

#include <json.hpp>

namespace prooflab {

namespace {
// Reachability from the root plus reference counts, shared by metrics and
// tree-likeness.
void reach_info(const Proof& p, std::vector<uint8_t>& reach,
                std::vector<uint32_t>& refs) {
  reach.assign(p.nodes.size(), 0);
  refs.assign(p.nodes.size(), 0);
  if (p.nodes.empty()) return;
  std::vector<NodeId> stack = {p.root};
  reach[p.root] = 1;
  while (!stack.empty()) {
    NodeId n = stack.back();
    stack.pop_back();
    for (NodeId q : p.nodes[n].premises) {
      if (q >= p.nodes.size()) continue;
      ++refs[q];
      if (!reach[q]) {
        reach[q] = 1;
        stack.push_back(q);
      }
    }
  }
}
} // namespace

ProofMetrics proof_metrics(const Proof& p) {
  ProofMetrics m;
  std::vector<uint8_t> reach;
  std::vector<uint32_t> refs;
  reach_info(p, reach, refs);
  m.tree_like = true;
  for (NodeId i = 0; i < p.nodes.size(); ++i) {
    if (!reach[i]) continue;
    ++m.node_count;
    m.size += p.nodes[i].conclusion.symbol_size();
    m.lines += p.nodes[i].conclusion.line_weight();
    if (i != p.root && refs[i] != 1) m.tree_like = false;
  }
  if (refs[p.root] != 0) m.tree_like = false;
  return m;
}

std::string check_message(const CheckResult& r) {
  if (check_ok(r)) return "ok";
  const Violation& v = check_violation(r);
  return "violation at node " + std::to_string(v.node) + " (" +
         rule_name(v.rule) + "): " + v.message;
}

Proof subcalculus_embed(const Proof& p, const Calculus& to) {
  std::vector<std::string> gap = rule_set_gap(p.calculus, to);
  if (!gap.empty()) {
    std::string msg = "subcalculus_embed: rules not available in target:";
    for (const auto& g : gap) msg += " " + g;
    throw std::runtime_error(msg);
  }
  Proof q = p;
  q.calculus = to;
  CheckResult r = check_proof(q);
  if (!check_ok(r))
    throw std::runtime_error("subcalculus_embed: re-check failed: " +
                             check_message(r));
  return q;
}

// ---- JSON ------------------------------------------------------------------

namespace {
nlohmann::json multiset_to_json(const FormulaMultiset& ms) {
  nlohmann::json arr = nlohmann::json::array();
  for (Formula f : ms.canonical_elements()) arr.push_back(to_string(f));
  return arr;
}
FormulaMultiset multiset_from_json(const nlohmann::json& arr) {
  FormulaMultiset ms;
  for (const auto& s : arr) ms.add(parse_formula(s.get<std::string>()));
  return ms;
}
} // namespace

std::string proof_to_json(const Proof& p) {
  nlohmann::json j;
  j["calculus"] = calculus_to_string(p.calculus);
  j["root"] = p.root;
  nlohmann::json nodes = nlohmann::json::array();
  for (NodeId i = 0; i < p.nodes.size(); ++i) {
    const ProofNode& n = p.nodes[i];
    nlohmann::json jn;
    jn["id"] = i;
    jn["rule"] = n.rule == Rule::Initial
                     ? "initial:" + template_name(n.tmpl)
                     : rule_name(n.rule);
    jn["conclusion"] =
        nlohmann::json{{"ante", multiset_to_json(n.conclusion.ante)},
                       {"succ", multiset_to_json(n.conclusion.succ)}};
    jn["premises"] = n.premises;
    if (n.principal.valid()) jn["principal"] = to_string(n.principal);
    nodes.push_back(std::move(jn));
  }
  j["nodes"] = std::move(nodes);
  return j.dump(1);
}

Proof proof_from_json(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, true);
  Proof p;
  p.calculus = calculus_from_string(j.at("calculus").get<std::string>());
  p.root = j.at("root").get<NodeId>();
  const auto& nodes = j.at("nodes");
  p.nodes.resize(nodes.size());
  for (const auto& jn : nodes) {
    NodeId id = jn.at("id").get<NodeId>();
    if (id >= p.nodes.size()) throw ParseError("node id out of range", 0);
    ProofNode n;
    std::string rname = jn.at("rule").get<std::string>();
    if (rname.rfind("initial:", 0) == 0) {
      n.rule = Rule::Initial;
      auto t = template_from_name(rname.substr(8));
      if (!t) throw ParseError("unknown template '" + rname + "'", 0);
      n.tmpl = *t;
    } else {
      auto r = rule_from_name(rname);
      if (!r) throw ParseError("unknown rule '" + rname + "'", 0);
      n.rule = *r;
    }
    n.conclusion.ante = multiset_from_json(jn.at("conclusion").at("ante"));
    n.conclusion.succ = multiset_from_json(jn.at("conclusion").at("succ"));
    n.premises = jn.at("premises").get<std::vector<NodeId>>();
    if (jn.contains("principal"))
      n.principal = parse_formula(jn.at("principal").get<std::string>());
    p.nodes[id] = std::move(n);
  }
  return p;
}

} // namespace prooflab
