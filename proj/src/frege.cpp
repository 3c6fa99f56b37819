#include "prooflab/frege.hpp"

#include <cctype>
#include <sstream>

namespace prooflab {

Formula meta_A() { return Formula::atom("A"); }
Formula meta_B() { return Formula::atom("B"); }
Formula meta_C() { return Formula::atom("C"); }

Formula axiom_schema(FregeAxiom ax) {
  Formula A = meta_A(), B = meta_B(), C = meta_C();
  Formula one = Formula::one();
  switch (ax) {
    case FregeAxiom::Id: return f_imp(A, A);
    case FregeAxiom::Pf:
      return f_imp(f_imp(A, B), f_imp(f_imp(C, A), f_imp(C, B)));
    case FregeAxiom::Per:
      return f_imp(f_imp(A, f_imp(B, C)), f_imp(B, f_imp(A, C)));
    case FregeAxiom::StarAnd:
      return f_imp(f_star(f_and(A, one), f_and(B, one)), f_and(A, B));
    case FregeAxiom::AndTo1: return f_imp(f_and(A, B), A);
    case FregeAxiom::AndTo2: return f_imp(f_and(A, B), B);
    case FregeAxiom::ToAnd:
      return f_imp(f_and(f_imp(A, B), f_imp(A, C)), f_imp(A, f_and(B, C)));
    case FregeAxiom::ToOr1: return f_imp(A, f_or(A, B));
    case FregeAxiom::ToOr2: return f_imp(B, f_or(A, B));
    case FregeAxiom::OrTo:
      return f_imp(f_and(f_imp(A, C), f_imp(B, C)), f_imp(f_or(A, B), C));
    case FregeAxiom::ToStar: return f_imp(B, f_imp(A, f_star(A, B)));
    case FregeAxiom::StarTo:
      return f_imp(f_imp(B, f_imp(A, C)), f_imp(f_star(A, B), C));
    case FregeAxiom::One: return one;
    case FregeAxiom::OneTo: return f_imp(one, f_imp(A, A));
    case FregeAxiom::Top: return f_imp(A, Formula::top());
    case FregeAxiom::Bot: return f_imp(Formula::bot(), A);
    case FregeAxiom::Dn: return f_imp(neg(neg(A)), A);
    case FregeAxiom::W: return f_imp(A, f_imp(B, A));
    case FregeAxiom::C:
      return f_imp(f_imp(A, f_imp(A, B)), f_imp(A, B));
    case FregeAxiom::BangW: return f_imp(A, f_imp(Formula::bang(B), A));
    case FregeAxiom::BangC: {
      Formula bA = Formula::bang(A);
      return f_imp(f_imp(bA, f_imp(bA, B)), f_imp(bA, B));
    }
    case FregeAxiom::BangK:
      return f_imp(Formula::bang(f_imp(A, B)),
                   f_imp(Formula::bang(A), Formula::bang(B)));
    case FregeAxiom::BangT: return f_imp(Formula::bang(A), A);
    case FregeAxiom::Bang4:
      return f_imp(Formula::bang(A), Formula::bang(Formula::bang(A)));
  }
  throw std::logic_error("unknown axiom");
}

std::string axiom_name(FregeAxiom ax) {
  switch (ax) {
    case FregeAxiom::Id: return "id";
    case FregeAxiom::Pf: return "pf";
    case FregeAxiom::Per: return "per";
    case FregeAxiom::StarAnd: return "star_and";
    case FregeAxiom::AndTo1: return "and_to_1";
    case FregeAxiom::AndTo2: return "and_to_2";
    case FregeAxiom::ToAnd: return "to_and";
    case FregeAxiom::ToOr1: return "to_or_1";
    case FregeAxiom::ToOr2: return "to_or_2";
    case FregeAxiom::OrTo: return "or_to";
    case FregeAxiom::ToStar: return "to_star";
    case FregeAxiom::StarTo: return "star_to";
    case FregeAxiom::One: return "one";
    case FregeAxiom::OneTo: return "one_to";
    case FregeAxiom::Top: return "top";
    case FregeAxiom::Bot: return "bot";
    case FregeAxiom::Dn: return "dn";
    case FregeAxiom::W: return "w";
    case FregeAxiom::C: return "c";
    case FregeAxiom::BangW: return "bang_w";
    case FregeAxiom::BangC: return "bang_c";
    case FregeAxiom::BangK: return "bang_K";
    case FregeAxiom::BangT: return "bang_T";
    case FregeAxiom::Bang4: return "bang_4";
  }
  return "?";
}

namespace {
const std::vector<FregeAxiom>& all_axioms() {
  static const std::vector<FregeAxiom> v = {
      FregeAxiom::Id,     FregeAxiom::Pf,     FregeAxiom::Per,
      FregeAxiom::StarAnd, FregeAxiom::AndTo1, FregeAxiom::AndTo2,
      FregeAxiom::ToAnd,  FregeAxiom::ToOr1,  FregeAxiom::ToOr2,
      FregeAxiom::OrTo,   FregeAxiom::ToStar, FregeAxiom::StarTo,
      FregeAxiom::One,    FregeAxiom::OneTo,  FregeAxiom::Top,
      FregeAxiom::Bot,    FregeAxiom::Dn,     FregeAxiom::W,
      FregeAxiom::C,      FregeAxiom::BangW,  FregeAxiom::BangC,
      FregeAxiom::BangK,  FregeAxiom::BangT,  FregeAxiom::Bang4};
  return v;
}
} // namespace

std::optional<FregeAxiom> axiom_from_name(std::string_view name) {
  for (FregeAxiom ax : all_axioms())
    if (axiom_name(ax) == name) return ax;
  return std::nullopt;
}

std::vector<FregeAxiom> system_axioms(FregeSystem sys) {
  std::vector<FregeAxiom> v(all_axioms().begin(), all_axioms().begin() + 14);
  auto add = [&](std::initializer_list<FregeAxiom> xs) {
    v.insert(v.end(), xs);
  };
  switch (sys) {
    case FregeSystem::FLe_F: break;
    case FregeSystem::CFLe_F: add({FregeAxiom::Dn}); break;
    case FregeSystem::CFLew_F: add({FregeAxiom::Dn, FregeAxiom::W}); break;
    case FregeSystem::MALL_F:
      add({FregeAxiom::Dn, FregeAxiom::Top, FregeAxiom::Bot});
      break;
    case FregeSystem::AMALL_F:
      add({FregeAxiom::Dn, FregeAxiom::Top, FregeAxiom::Bot, FregeAxiom::W});
      break;
    case FregeSystem::CLL_F:
      add({FregeAxiom::Dn, FregeAxiom::Top, FregeAxiom::Bot, FregeAxiom::BangW,
           FregeAxiom::BangC, FregeAxiom::BangK, FregeAxiom::BangT,
           FregeAxiom::Bang4});
      break;
    case FregeSystem::ALL_F:
      add({FregeAxiom::Dn, FregeAxiom::Top, FregeAxiom::Bot, FregeAxiom::BangW,
           FregeAxiom::BangC, FregeAxiom::BangK, FregeAxiom::BangT,
           FregeAxiom::Bang4, FregeAxiom::W});
      break;
  }
  return v;
}

bool system_has_nec(FregeSystem sys) {
  return sys == FregeSystem::CLL_F || sys == FregeSystem::ALL_F;
}

Lang system_lang(FregeSystem sys) {
  switch (sys) {
    case FregeSystem::FLe_F:
    case FregeSystem::CFLe_F:
    case FregeSystem::CFLew_F:
      return Lang::Lu;
    case FregeSystem::MALL_F:
    case FregeSystem::AMALL_F:
      return Lang::Lb;
    case FregeSystem::CLL_F:
    case FregeSystem::ALL_F:
      return Lang::Lbang;
  }
  return Lang::Lu;
}

std::string system_name(FregeSystem sys) {
  switch (sys) {
    case FregeSystem::FLe_F: return "FLe-F";
    case FregeSystem::CFLe_F: return "CFLe-F";
    case FregeSystem::CFLew_F: return "CFLew-F";
    case FregeSystem::MALL_F: return "MALL-F";
    case FregeSystem::AMALL_F: return "AMALL-F";
    case FregeSystem::CLL_F: return "CLL-F";
    case FregeSystem::ALL_F: return "ALL-F";
  }
  return "?";
}

std::optional<FregeSystem> system_from_name(std::string_view name) {
  static const std::vector<FregeSystem> all = {
      FregeSystem::FLe_F,  FregeSystem::CFLe_F, FregeSystem::CFLew_F,
      FregeSystem::MALL_F, FregeSystem::AMALL_F, FregeSystem::CLL_F,
      FregeSystem::ALL_F};
  for (FregeSystem s : all)
    if (system_name(s) == name) return s;
  return std::nullopt;
}

Formula FregeSubst::lookup(Formula metavar) const {
  for (const auto& [m, f] : map)
    if (m == metavar) return f;
  return Formula();
}

void FregeSubst::bind(Formula metavar, Formula f) {
  map.emplace_back(metavar, f);
}

namespace {
bool is_metavar(Formula f) {
  if (!f.is_atom()) return false;
  auto n = f.atom_name();
  return n == "A" || n == "B" || n == "C";
}
} // namespace

Formula apply_subst(Formula schema, const FregeSubst& s) {
  if (is_metavar(schema)) {
    Formula f = s.lookup(schema);
    if (!f.valid())
      throw std::runtime_error("substitution missing metavariable " +
                               std::string(schema.atom_name()));
    return f;
  }
  switch (schema.kind()) {
    case FKind::Atom:
    case FKind::Const:
      return schema;
    case FKind::Bang:
      return Formula::bang(apply_subst(schema.sub(), s));
    case FKind::Bin:
      return Formula::bin(schema.op(), apply_subst(schema.left(), s),
                          apply_subst(schema.right(), s));
  }
  return schema;
}

namespace {
bool match_rec(Formula schema, Formula f, FregeSubst& s) {
  if (is_metavar(schema)) {
    Formula bound = s.lookup(schema);
    if (bound.valid()) return bound == f;
    s.bind(schema, f);
    return true;
  }
  if (schema.kind() != f.kind()) return false;
  switch (schema.kind()) {
    case FKind::Atom:
    case FKind::Const:
      return schema == f;
    case FKind::Bang:
      return match_rec(schema.sub(), f.sub(), s);
    case FKind::Bin:
      return schema.op() == f.op() && match_rec(schema.left(), f.left(), s) &&
             match_rec(schema.right(), f.right(), s);
  }
  return false;
}
} // namespace

std::optional<FregeSubst> match_axiom(FregeAxiom ax, Formula f) {
  FregeSubst s;
  if (match_rec(axiom_schema(ax), f, s)) return s;
  return std::nullopt;
}

std::string frege_check_message(const FregeCheckResult& r) {
  if (frege_ok(r)) return "ok";
  const auto& v = std::get<FregeViolation>(r);
  return "violation at line " + std::to_string(v.line + 1) + ": " + v.message;
}

FregeCheckResult check_frege_proof(FregeSystem sys, const FregeProof& proof,
                                   const std::vector<Formula>& hypotheses) {
  if (proof.lines.empty()) return FregeViolation{0, "empty proof"};
  Lang lang = system_lang(sys);
  std::vector<FregeAxiom> axioms = system_axioms(sys);
  for (uint32_t i = 0; i < proof.lines.size(); ++i) {
    const FregeLine& ln = proof.lines[i];
    if (!in_language(ln.formula, lang))
      return FregeViolation{i, "formula outside system language"};
    const FregeJust& j = ln.just;
    switch (j.kind) {
      case FregeJust::Axiom: {
        bool in_sys = false;
        for (FregeAxiom a : axioms)
          if (a == j.ax) { in_sys = true; break; }
        if (!in_sys)
          return FregeViolation{i, "axiom '" + axiom_name(j.ax) +
                                       "' not in system " + system_name(sys)};
        Formula inst;
        try {
          inst = apply_subst(axiom_schema(j.ax), j.subst);
        } catch (const std::exception& e) {
          return FregeViolation{i, e.what()};
        }
        if (inst != ln.formula)
          return FregeViolation{i, "axiom instance does not match formula"};
        break;
      }
      case FregeJust::Mp: {
        if (j.i >= i || j.j >= i)
          return FregeViolation{i, "mp references a later or current line"};
        if (proof.lines[j.j].formula !=
            f_imp(proof.lines[j.i].formula, ln.formula))
          return FregeViolation{i, "mp premises do not fit"};
        break;
      }
      case FregeJust::Adj: {
        if (j.i >= i) return FregeViolation{i, "adj references a later line"};
        if (ln.formula != f_and(proof.lines[j.i].formula, Formula::one()))
          return FregeViolation{i, "adj conclusion must be (premise /\\ 1)"};
        break;
      }
      case FregeJust::Nec: {
        if (!system_has_nec(sys))
          return FregeViolation{i, "nec not available in " + system_name(sys)};
        if (j.i >= i) return FregeViolation{i, "nec references a later line"};
        if (ln.formula != Formula::bang(proof.lines[j.i].formula))
          return FregeViolation{i, "nec conclusion must be !premise"};
        break;
      }
      case FregeJust::Hyp: {
        bool found = false;
        for (Formula h : hypotheses)
          if (h == ln.formula) { found = true; break; }
        if (!found) return FregeViolation{i, "hypothesis not supplied"};
        break;
      }
    }
  }
  FregeMetrics m;
  m.lines = proof.lines.size();
  for (const FregeLine& ln : proof.lines) m.size += ln.formula.size();
  return m;
}

// ---- text format ------------------------------------------------------------

std::string frege_to_text(const FregeProof& p) {
  std::ostringstream out;
  for (uint32_t i = 0; i < p.lines.size(); ++i) {
    const FregeLine& ln = p.lines[i];
    out << (i + 1) << ". " << to_string(ln.formula) << " ; ";
    switch (ln.just.kind) {
      case FregeJust::Axiom: {
        out << "ax " << axiom_name(ln.just.ax);
        if (!ln.just.subst.map.empty()) {
          out << " [";
          bool first = true;
          for (const auto& [m, f] : ln.just.subst.map) {
            if (!first) out << ", ";
            out << m.atom_name() << " := " << to_string(f);
            first = false;
          }
          out << "]";
        }
        break;
      }
      case FregeJust::Mp:
        out << "mp " << (ln.just.i + 1) << " " << (ln.just.j + 1);
        break;
      case FregeJust::Adj: out << "adj " << (ln.just.i + 1); break;
      case FregeJust::Nec: out << "nec " << (ln.just.i + 1); break;
      case FregeJust::Hyp: out << "hyp"; break;
    }
    out << "\n";
  }
  return out.str();
}

FregeProof frege_from_text(std::string_view text) {
  FregeProof p;
  std::istringstream in{std::string(text)};
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos || line[a] == '#') continue;
    size_t dot = line.find('.');
    size_t semi = line.rfind(';');
    if (dot == std::string::npos || semi == std::string::npos || semi < dot)
      throw ParseError("frege line " + std::to_string(lineno) +
                           ": expected `index. formula ; justification`",
                       0);
    FregeLine ln;
    ln.formula = parse_formula(line.substr(dot + 1, semi - dot - 1));
    std::istringstream js(line.substr(semi + 1));
    std::string kind;
    js >> kind;
    if (kind == "ax") {
      std::string name;
      js >> name;
      auto ax = axiom_from_name(name);
      if (!ax) throw ParseError("unknown axiom '" + name + "'", 0);
      ln.just.kind = FregeJust::Axiom;
      ln.just.ax = *ax;
      std::string rest;
      std::getline(js, rest);
      size_t lb = rest.find('[');
      if (lb != std::string::npos) {
        size_t rb = rest.rfind(']');
        if (rb == std::string::npos) throw ParseError("missing ]", 0);
        std::string body = rest.substr(lb + 1, rb - lb - 1);
        size_t pos = 0;
        while (pos < body.size()) {
          size_t as = body.find(":=", pos);
          if (as == std::string::npos) break;
          std::string var = body.substr(pos, as - pos);
          var.erase(0, var.find_first_not_of(" \t,"));
          var.erase(var.find_last_not_of(" \t") + 1);
          // find the end of this binding: next top-level comma
          size_t end = as + 2;
          int depth = 0;
          while (end < body.size() && (depth > 0 || body[end] != ',')) {
            if (body[end] == '(') ++depth;
            if (body[end] == ')') --depth;
            ++end;
          }
          ln.just.subst.bind(Formula::atom(var),
                             parse_formula(body.substr(as + 2, end - as - 2)));
          pos = end + 1;
        }
      }
    } else if (kind == "mp") {
      ln.just.kind = FregeJust::Mp;
      uint32_t i = 0, j = 0;
      js >> i >> j;
      if (i == 0 || j == 0) throw ParseError("mp indices are 1-based", 0);
      ln.just.i = i - 1;
      ln.just.j = j - 1;
    } else if (kind == "adj" || kind == "nec") {
      ln.just.kind = kind == "adj" ? FregeJust::Adj : FregeJust::Nec;
      uint32_t i = 0;
      js >> i;
      if (i == 0) throw ParseError("index is 1-based", 0);
      ln.just.i = i - 1;
    } else if (kind == "hyp") {
      ln.just.kind = FregeJust::Hyp;
    } else {
      throw ParseError("unknown justification '" + kind + "'", 0);
    }
    p.lines.push_back(std::move(ln));
  }
  return p;
}

FregeLine frege_ax(FregeAxiom ax, const FregeSubst& s) {
  FregeLine ln;
  ln.formula = apply_subst(axiom_schema(ax), s);
  ln.just.kind = FregeJust::Axiom;
  ln.just.ax = ax;
  ln.just.subst = s;
  return ln;
}
FregeLine frege_mp(Formula f, uint32_t i, uint32_t j) {
  FregeLine ln;
  ln.formula = f;
  ln.just.kind = FregeJust::Mp;
  ln.just.i = i;
  ln.just.j = j;
  return ln;
}
FregeLine frege_adj(uint32_t i, Formula of) {
  FregeLine ln;
  ln.formula = f_and(of, Formula::one());
  ln.just.kind = FregeJust::Adj;
  ln.just.i = i;
  return ln;
}
FregeLine frege_nec(uint32_t i, Formula of) {
  FregeLine ln;
  ln.formula = Formula::bang(of);
  ln.just.kind = FregeJust::Nec;
  ln.just.i = i;
  return ln;
}
FregeLine frege_hyp(Formula f) {
  FregeLine ln;
  ln.formula = f;
  ln.just.kind = FregeJust::Hyp;
  return ln;
}

} // namespace prooflab
