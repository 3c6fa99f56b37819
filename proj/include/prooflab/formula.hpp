// Formulas of the substructural/linear languages, hash-consed into a global
// arena.  A Formula is a 32-bit handle; structural equality is pointer
// equality, which keeps multiset bookkeeping and rule matching cheap.

#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace prooflab {

enum class Konst : uint8_t { Zero, One, Top, Bot };
enum class BinOp : uint8_t { And, Or, Star, Imp };
enum class FKind : uint8_t { Const, Atom, Bang, Bin };

// Languages.  Lu = {0,1,/\,\/,*,->}, Lb adds top/bot, Lbang adds !,
// Lp = {top,bot,/\,\/,->}, Lnn / Lstarnn are the negation-normal-form
// grammars (negation only as `atom -> 0`).
enum class Lang : uint8_t { Lu, Lb, Lbang, Lp, Lnn, Lstarnn };

class Formula {
public:
  static constexpr uint32_t kInvalid = 0xffffffffu;

  Formula() = default;

  static Formula atom(std::string_view name);
  static Formula konst(Konst k);
  static Formula bang(Formula f);
  static Formula bin(BinOp op, Formula l, Formula r);

  static Formula zero() { return konst(Konst::Zero); }
  static Formula one() { return konst(Konst::One); }
  static Formula top() { return konst(Konst::Top); }
  static Formula bot() { return konst(Konst::Bot); }

  bool valid() const { return id_ != kInvalid; }
  uint32_t id() const { return id_; }

  FKind kind() const;
  Konst const_kind() const;
  std::string_view atom_name() const;
  uint32_t atom_id() const;
  BinOp op() const;
  Formula left() const;
  Formula right() const;
  Formula sub() const; // bang argument

  bool is_atom() const { return valid() && kind() == FKind::Atom; }
  bool is_const(Konst k) const {
    return valid() && kind() == FKind::Const && const_kind() == k;
  }
  bool is_bin(BinOp o) const {
    return valid() && kind() == FKind::Bin && op() == o;
  }
  bool is_bang() const { return valid() && kind() == FKind::Bang; }

  // Number of AST nodes (the size measure used everywhere).
  uint64_t size() const;

  bool operator==(const Formula& o) const { return id_ == o.id_; }
  bool operator!=(const Formula& o) const { return id_ != o.id_; }

  static Formula from_id(uint32_t id) {
    Formula f;
    f.id_ = id;
    return f;
  }

private:
  uint32_t id_ = kInvalid;
};

// Convenience constructors.
inline Formula f_and(Formula a, Formula b) { return Formula::bin(BinOp::And, a, b); }
inline Formula f_or(Formula a, Formula b) { return Formula::bin(BinOp::Or, a, b); }
inline Formula f_star(Formula a, Formula b) { return Formula::bin(BinOp::Star, a, b); }
inline Formula f_imp(Formula a, Formula b) { return Formula::bin(BinOp::Imp, a, b); }

// Derived connectives, macro-expanded (no new node kinds).
Formula neg(Formula f);          // A -> 0
Formula quest(Formula f);        // (!(A -> 0)) -> 0
Formula par(Formula a, Formula b); // ((A->0)*(B->0)) -> 0

// Is f of the literal shape `p -> 0` with p an atom?
bool is_neg_literal(Formula f);

// Canonical total order: structural, then lexicographic on atom names.
// Independent of interning order, so deterministic across runs.
int struct_compare(Formula a, Formula b);
struct StructLess {
  bool operator()(Formula a, Formula b) const { return struct_compare(a, b) < 0; }
};

// The set of variables of a formula, as atom ids (sorted).
std::vector<uint32_t> var_ids(Formula f);
std::set<std::string> vars(Formula f);
bool is_single_variable(Formula f); // |vars(f)| <= 1

std::string_view atom_name_of(uint32_t atom_id);

bool in_language(Formula f, Lang lang);

// The forgetful collapse onto the propositional language:
// 0 -> bot, 1 -> top, * -> /\, ! dropped, homomorphic elsewhere.
Formula forgetful(Formula f);

// The !-free collapse used by the weakening/contraction bridge:
// * -> /\ and (X /\ 1) guards dropped; the result stays in Lu.
Formula collapse_star_to_and(Formula f);

// De Morgan dual of an Lnn formula, literals flipped.  Throws on non-nnf.
Formula nnf_negate(Formula f);

// Boolean evaluation of a propositional-read formula: * as /\, 1 as top,
// 0 as bot, ! transparent.  `assignment` maps atom id -> value; atoms not
// present default to false.
bool eval_boolean(Formula f, const std::vector<std::pair<uint32_t, bool>>& assignment);

// ---- parsing / printing -------------------------------------------------

struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(const std::string& msg, size_t p)
      : std::runtime_error(msg + " at position " + std::to_string(p)), pos(p) {}
};

// Grammar (ASCII): atoms [a-z][a-zA-Z0-9_]*, constants 0 1 top bot,
// operators ! * /\ \/ -> with precedence ! > * > /\ = \/ > ->,
// -> right-associative, /\ and \/ left-associative at equal precedence.
Formula parse_formula(std::string_view text);

std::string to_string(Formula f);

} // namespace prooflab
