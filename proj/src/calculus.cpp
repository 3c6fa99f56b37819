#include "prooflab/calculus.hpp"

#include <algorithm>
#include <map>

namespace prooflab {

namespace {

const std::vector<Rule> kCore = {
    Rule::Id,    Rule::OneR,  Rule::ZeroL, Rule::OneW, Rule::ZeroW,
    Rule::LAndL, Rule::LAndR, Rule::RAnd,  Rule::LOr,  Rule::ROrL,
    Rule::ROrR,  Rule::LStar, Rule::RStar, Rule::LImp, Rule::RImp,
    Rule::Cut};

void append(std::vector<Rule>& v, std::initializer_list<Rule> rs) {
  v.insert(v.end(), rs);
}

struct Shape {
  std::vector<Rule> rules;
  std::vector<TemplateId> templates;
  Lang lang;
  bool single;
};

Shape shape_of(CalcName n) {
  Shape s;
  s.lang = Lang::Lu;
  s.single = false;
  switch (n) {
    case CalcName::FL_e: case CalcName::FL_ew: case CalcName::FL_ec:
    case CalcName::LJ_u:
      s.single = true;
      [[fallthrough]];
    case CalcName::CFL_e: case CalcName::CFL_ew: case CalcName::CFL_ec:
    case CalcName::LK_u:
      s.rules = kCore;
      s.lang = Lang::Lu;
      break;
    case CalcName::IMALL: case CalcName::AIMALL: case CalcName::RIMALL:
    case CalcName::LJ_b:
      s.single = true;
      [[fallthrough]];
    case CalcName::MALL: case CalcName::AMALL: case CalcName::RMALL:
    case CalcName::LK_b:
      s.rules = kCore;
      append(s.rules, {Rule::TopR, Rule::BotL});
      s.lang = Lang::Lb;
      break;
    case CalcName::ILL: case CalcName::AILL: case CalcName::RILL:
    case CalcName::LJ_bang:
      s.single = true;
      [[fallthrough]];
    case CalcName::CLL: case CalcName::ALL: case CalcName::RLL:
    case CalcName::LK_bang:
      s.rules = kCore;
      append(s.rules, {Rule::TopR, Rule::BotL, Rule::RBang, Rule::LBang,
                       Rule::WBang, Rule::CBang});
      s.lang = Lang::Lbang;
      break;
    case CalcName::LJ:
      s.single = true;
      [[fallthrough]];
    case CalcName::LK:
      s.rules = {Rule::Id,   Rule::TopR, Rule::BotL, Rule::Lw,   Rule::Rw,
                 Rule::Lc,   Rule::Rc,   Rule::LAndL, Rule::LAndR, Rule::RAnd,
                 Rule::LOr,  Rule::ROrL, Rule::ROrR, Rule::LImp, Rule::RImp,
                 Rule::Cut};
      s.lang = Lang::Lp;
      break;
    case CalcName::LK_nn:
      s.rules = {Rule::Lw,   Rule::Rw,   Rule::Lc,   Rule::Rc,
                 Rule::LAndL, Rule::LAndR, Rule::RAnd, Rule::LOr,
                 Rule::ROrL, Rule::ROrR, Rule::Cut};
      s.templates = {TemplateId::LitPos, TemplateId::LitNeg, TemplateId::Clash,
                     TemplateId::Em};
      s.lang = Lang::Lnn;
      s.single = true;
      break;
    case CalcName::G:
      s.rules = kCore;
      s.templates = {TemplateId::Em,      TemplateId::UnitPos,
                     TemplateId::UnitNeg, TemplateId::ZeroPos,
                     TemplateId::ZeroNeg, TemplateId::ZeroFuse};
      s.lang = Lang::Lu;
      s.single = true;
      break;
    case CalcName::IGD:
      throw std::logic_error("shape_of: IGD handled by caller");
  }
  // structural extensions
  switch (n) {
    case CalcName::FL_ew: case CalcName::CFL_ew:
    case CalcName::AIMALL: case CalcName::AMALL:
    case CalcName::AILL: case CalcName::ALL:
      append(s.rules, {Rule::Lw, Rule::Rw});
      break;
    case CalcName::FL_ec: case CalcName::CFL_ec:
    case CalcName::RIMALL: case CalcName::RMALL:
    case CalcName::RILL: case CalcName::RLL:
      append(s.rules, {Rule::Lc, Rule::Rc});
      break;
    case CalcName::LJ_u: case CalcName::LK_u:
    case CalcName::LJ_b: case CalcName::LK_b:
    case CalcName::LJ_bang: case CalcName::LK_bang:
      append(s.rules, {Rule::Lw, Rule::Rw, Rule::Lc, Rule::Rc});
      break;
    default:
      break;
  }
  return s;
}

const std::map<std::string, CalcName>& name_table() {
  static const std::map<std::string, CalcName> t = {
      {"FL_e", CalcName::FL_e},     {"FL_ew", CalcName::FL_ew},
      {"FL_ec", CalcName::FL_ec},   {"LJ_u", CalcName::LJ_u},
      {"CFL_e", CalcName::CFL_e},   {"CFL_ew", CalcName::CFL_ew},
      {"CFL_ec", CalcName::CFL_ec}, {"LK_u", CalcName::LK_u},
      {"IMALL", CalcName::IMALL},   {"AIMALL", CalcName::AIMALL},
      {"RIMALL", CalcName::RIMALL}, {"LJ_b", CalcName::LJ_b},
      {"MALL", CalcName::MALL},     {"AMALL", CalcName::AMALL},
      {"RMALL", CalcName::RMALL},   {"LK_b", CalcName::LK_b},
      {"ILL", CalcName::ILL},       {"AILL", CalcName::AILL},
      {"RILL", CalcName::RILL},     {"LJ_!", CalcName::LJ_bang},
      {"CLL", CalcName::CLL},       {"ALL", CalcName::ALL},
      {"RLL", CalcName::RLL},       {"LK_!", CalcName::LK_bang},
      {"LK", CalcName::LK},         {"LJ", CalcName::LJ},
      {"LK_nn", CalcName::LK_nn},   {"G", CalcName::G},
  };
  return t;
}

} // namespace

bool CalculusRules::has(Rule r) const {
  return std::find(rules.begin(), rules.end(), r) != rules.end();
}
bool CalculusRules::has_template(TemplateId t) const {
  return std::find(templates.begin(), templates.end(), t) != templates.end();
}

CalculusRules calculus_rules(const Calculus& c) {
  Shape s = c.name == CalcName::IGD ? shape_of(c.igd_base) : shape_of(c.name);
  if (c.name == CalcName::IGD) {
    if (!s.single)
      throw std::logic_error("iG_D base must be single-conclusion");
    s.templates.push_back(TemplateId::Dual);
  }
  if (c.cut_free)
    s.rules.erase(std::remove(s.rules.begin(), s.rules.end(), Rule::Cut),
                  s.rules.end());
  CalculusRules out;
  out.rules = std::move(s.rules);
  out.templates = std::move(s.templates);
  out.lang = s.lang;
  out.single_conclusion = s.single;
  return out;
}

std::vector<std::string> rule_set_gap(const Calculus& from, const Calculus& to) {
  CalculusRules rf = calculus_rules(from);
  CalculusRules rt = calculus_rules(to);
  std::vector<std::string> missing;
  for (Rule r : rf.rules)
    if (!rt.has(r)) missing.push_back(rule_name(r));
  for (TemplateId t : rf.templates)
    if (!rt.has_template(t)) missing.push_back("initial:" + template_name(t));
  return missing;
}

std::string rule_name(Rule r) {
  switch (r) {
    case Rule::Id: return "id";
    case Rule::OneR: return "oneR";
    case Rule::ZeroL: return "zeroL";
    case Rule::OneW: return "oneW";
    case Rule::ZeroW: return "zeroW";
    case Rule::LAndL: return "LandL";
    case Rule::LAndR: return "LandR";
    case Rule::RAnd: return "Rand";
    case Rule::LOr: return "Lor";
    case Rule::ROrL: return "RorL";
    case Rule::ROrR: return "RorR";
    case Rule::LStar: return "Lstar";
    case Rule::RStar: return "Rstar";
    case Rule::LImp: return "Limp";
    case Rule::RImp: return "Rimp";
    case Rule::Cut: return "cut";
    case Rule::TopR: return "topR";
    case Rule::BotL: return "botL";
    case Rule::Lw: return "Lw";
    case Rule::Rw: return "Rw";
    case Rule::Lc: return "Lc";
    case Rule::Rc: return "Rc";
    case Rule::RBang: return "Rbang";
    case Rule::LBang: return "Lbang";
    case Rule::WBang: return "Wbang";
    case Rule::CBang: return "Cbang";
    case Rule::Initial: return "initial";
    case Rule::Hypothesis: return "hyp";
  }
  return "?";
}

std::string template_name(TemplateId t) {
  switch (t) {
    case TemplateId::None: return "none";
    case TemplateId::Em: return "em";
    case TemplateId::UnitPos: return "unit_pos";
    case TemplateId::UnitNeg: return "unit_neg";
    case TemplateId::ZeroPos: return "zero_pos";
    case TemplateId::ZeroNeg: return "zero_neg";
    case TemplateId::ZeroFuse: return "zero_fuse";
    case TemplateId::Dual: return "dual";
    case TemplateId::LitPos: return "lit_pos";
    case TemplateId::LitNeg: return "lit_neg";
    case TemplateId::Clash: return "clash";
  }
  return "?";
}

std::optional<Rule> rule_from_name(std::string_view name) {
  static const std::vector<Rule> all = {
      Rule::Id,    Rule::OneR,  Rule::ZeroL, Rule::OneW,  Rule::ZeroW,
      Rule::LAndL, Rule::LAndR, Rule::RAnd,  Rule::LOr,   Rule::ROrL,
      Rule::ROrR,  Rule::LStar, Rule::RStar, Rule::LImp,  Rule::RImp,
      Rule::Cut,   Rule::TopR,  Rule::BotL,  Rule::Lw,    Rule::Rw,
      Rule::Lc,    Rule::Rc,    Rule::RBang, Rule::LBang, Rule::WBang,
      Rule::CBang, Rule::Initial, Rule::Hypothesis};
  for (Rule r : all)
    if (rule_name(r) == name) return r;
  return std::nullopt;
}

std::optional<TemplateId> template_from_name(std::string_view name) {
  static const std::vector<TemplateId> all = {
      TemplateId::Em,      TemplateId::UnitPos, TemplateId::UnitNeg,
      TemplateId::ZeroPos, TemplateId::ZeroNeg, TemplateId::ZeroFuse,
      TemplateId::Dual,    TemplateId::LitPos,  TemplateId::LitNeg,
      TemplateId::Clash};
  for (TemplateId t : all)
    if (template_name(t) == name) return t;
  return std::nullopt;
}

std::string calculus_to_string(const Calculus& c) {
  std::string base;
  if (c.name == CalcName::IGD) {
    std::string inner;
    for (const auto& [k, v] : name_table())
      if (v == c.igd_base) inner = k;
    base = "iG_D(" + inner + "," + to_string(c.D) + "," + to_string(c.N) + ")";
  } else {
    for (const auto& [k, v] : name_table())
      if (v == c.name) base = k;
  }
  if (c.cut_free) base += "^-";
  return base;
}

Calculus calculus_from_string(std::string_view text) {
  std::string s(text);
  bool cut_free = false;
  if (s.size() >= 2 && s.substr(s.size() - 2) == "^-") {
    cut_free = true;
    s = s.substr(0, s.size() - 2);
  }
  if (s.rfind("iG_D(", 0) == 0 && s.back() == ')') {
    std::string inner = s.substr(5, s.size() - 6);
    size_t c1 = inner.find(',');
    size_t c2 = inner.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw ParseError("iG_D needs (base,D,N)", 0);
    auto it = name_table().find(inner.substr(0, c1));
    if (it == name_table().end()) throw ParseError("unknown iG_D base", 0);
    Calculus c = Calculus::igd(it->second,
                               parse_formula(inner.substr(c1 + 1, c2 - c1 - 1)),
                               parse_formula(inner.substr(c2 + 1)));
    c.cut_free = cut_free;
    return c;
  }
  auto it = name_table().find(s);
  if (it == name_table().end())
    throw ParseError("unknown calculus '" + s + "'", 0);
  return Calculus::plain(it->second, cut_free);
}

} // namespace prooflab
