#include "prooflab/formula.hpp"

#include <cctype>
#include <deque>
#include <mutex>
#include <unordered_map>

namespace prooflab {

namespace {

struct Node {
  FKind kind;
  Konst k = Konst::Zero;
  BinOp op = BinOp::And;
  uint32_t atom = 0;
  uint32_t a = Formula::kInvalid;
  uint32_t b = Formula::kInvalid;
  uint64_t tree_size = 1;
};

struct NodeKey {
  FKind kind;
  uint32_t x, y, z;
  bool operator==(const NodeKey& o) const {
    return kind == o.kind && x == o.x && y == o.y && z == o.z;
  }
};

struct NodeKeyHash {
  size_t operator()(const NodeKey& k) const {
    uint64_t h = static_cast<uint64_t>(k.kind);
    h = h * 1000003u ^ k.x;
    h = h * 1000003u ^ k.y;
    h = h * 1000003u ^ k.z;
    return static_cast<size_t>(h * 0x9e3779b97f4a7c15ull >> 16);
  }
};

class Interner {
public:
  static Interner& instance() {
    static Interner it;
    return it;
  }

  uint32_t atom(std::string_view name) {
    std::lock_guard<std::mutex> g(mu_);
    uint32_t aid;
    auto found = atom_ids_.find(std::string(name));
    if (found != atom_ids_.end()) {
      aid = found->second;
    } else {
      aid = static_cast<uint32_t>(atom_names_.size());
      atom_names_.emplace_back(name);
      atom_ids_.emplace(atom_names_.back(), aid);
    }
    NodeKey key{FKind::Atom, aid, 0, 0};
    Node n;
    n.kind = FKind::Atom;
    n.atom = aid;
    return intern_locked(key, n);
  }

  uint32_t konst(Konst k) {
    std::lock_guard<std::mutex> g(mu_);
    NodeKey key{FKind::Const, static_cast<uint32_t>(k), 0, 0};
    Node n;
    n.kind = FKind::Const;
    n.k = k;
    return intern_locked(key, n);
  }

  uint32_t bang(uint32_t sub) {
    std::lock_guard<std::mutex> g(mu_);
    NodeKey key{FKind::Bang, sub, 0, 0};
    Node n;
    n.kind = FKind::Bang;
    n.a = sub;
    n.tree_size = 1 + nodes_[sub].tree_size;
    return intern_locked(key, n);
  }

  uint32_t bin(BinOp op, uint32_t l, uint32_t r) {
    std::lock_guard<std::mutex> g(mu_);
    NodeKey key{FKind::Bin, static_cast<uint32_t>(op), l, r};
    Node n;
    n.kind = FKind::Bin;
    n.op = op;
    n.a = l;
    n.b = r;
    n.tree_size = 1 + nodes_[l].tree_size + nodes_[r].tree_size;
    return intern_locked(key, n);
  }

  const Node& node(uint32_t id) const { return nodes_[id]; }
  std::string_view atom_name(uint32_t aid) const { return atom_names_[aid]; }

private:
  uint32_t intern_locked(const NodeKey& key, const Node& n) {
    auto found = map_.find(key);
    if (found != map_.end()) return found->second;
    uint32_t id = static_cast<uint32_t>(nodes_.size());
    nodes_.push_back(n);
    map_.emplace(key, id);
    return id;
  }

  std::mutex mu_;
  std::deque<Node> nodes_;
  std::unordered_map<NodeKey, uint32_t, NodeKeyHash> map_;
  std::deque<std::string> atom_names_;
  std::unordered_map<std::string, uint32_t> atom_ids_;
};

const Node& node_of(const Formula& f) {
  return Interner::instance().node(f.id());
}

} // namespace

Formula Formula::atom(std::string_view name) {
  return from_id(Interner::instance().atom(name));
}
Formula Formula::konst(Konst k) {
  return from_id(Interner::instance().konst(k));
}
Formula Formula::bang(Formula f) {
  if (!f.valid()) throw std::logic_error("bang of invalid formula");
  return from_id(Interner::instance().bang(f.id()));
}
Formula Formula::bin(BinOp op, Formula l, Formula r) {
  if (!l.valid() || !r.valid()) throw std::logic_error("bin of invalid formula");
  return from_id(Interner::instance().bin(op, l.id(), r.id()));
}

FKind Formula::kind() const { return node_of(*this).kind; }
Konst Formula::const_kind() const { return node_of(*this).k; }
std::string_view Formula::atom_name() const {
  return Interner::instance().atom_name(node_of(*this).atom);
}
uint32_t Formula::atom_id() const { return node_of(*this).atom; }
BinOp Formula::op() const { return node_of(*this).op; }
Formula Formula::left() const { return from_id(node_of(*this).a); }
Formula Formula::right() const { return from_id(node_of(*this).b); }
Formula Formula::sub() const { return from_id(node_of(*this).a); }
uint64_t Formula::size() const { return node_of(*this).tree_size; }

Formula neg(Formula f) { return f_imp(f, Formula::zero()); }
Formula quest(Formula f) { return neg(Formula::bang(neg(f))); }
Formula par(Formula a, Formula b) { return neg(f_star(neg(a), neg(b))); }

bool is_neg_literal(Formula f) {
  return f.is_bin(BinOp::Imp) && f.left().is_atom() && f.right().is_const(Konst::Zero);
}

int struct_compare(Formula a, Formula b) {
  if (a == b) return 0;
  auto rank = [](const Formula& f) -> int {
    switch (f.kind()) {
      case FKind::Const: return 0;
      case FKind::Atom: return 1;
      case FKind::Bang: return 2;
      case FKind::Bin: return 3;
    }
    return 4;
  };
  int ra = rank(a), rb = rank(b);
  if (ra != rb) return ra < rb ? -1 : 1;
  switch (a.kind()) {
    case FKind::Const: {
      auto ka = static_cast<int>(a.const_kind()), kb = static_cast<int>(b.const_kind());
      return ka < kb ? -1 : 1; // equal impossible (interned)
    }
    case FKind::Atom: {
      int c = a.atom_name().compare(b.atom_name());
      return c < 0 ? -1 : 1;
    }
    case FKind::Bang:
      return struct_compare(a.sub(), b.sub());
    case FKind::Bin: {
      auto oa = static_cast<int>(a.op()), ob = static_cast<int>(b.op());
      if (oa != ob) return oa < ob ? -1 : 1;
      int c = struct_compare(a.left(), b.left());
      if (c != 0) return c;
      return struct_compare(a.right(), b.right());
    }
  }
  return 0;
}

namespace {
void collect_vars(Formula f, std::vector<uint32_t>& out) {
  switch (f.kind()) {
    case FKind::Const: return;
    case FKind::Atom: out.push_back(f.atom_id()); return;
    case FKind::Bang: collect_vars(f.sub(), out); return;
    case FKind::Bin:
      collect_vars(f.left(), out);
      collect_vars(f.right(), out);
      return;
  }
}
} // namespace

std::vector<uint32_t> var_ids(Formula f) {
  std::vector<uint32_t> v;
  collect_vars(f, v);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::set<std::string> vars(Formula f) {
  std::set<std::string> out;
  for (uint32_t aid : var_ids(f)) out.emplace(atom_name_of(aid));
  return out;
}

bool is_single_variable(Formula f) { return var_ids(f).size() <= 1; }

std::string_view atom_name_of(uint32_t atom_id) {
  return Interner::instance().atom_name(atom_id);
}

bool in_language(Formula f, Lang lang) {
  switch (lang) {
    case Lang::Lu:
    case Lang::Lb:
    case Lang::Lbang: {
      switch (f.kind()) {
        case FKind::Atom: return true;
        case FKind::Const: {
          Konst k = f.const_kind();
          if (k == Konst::Zero || k == Konst::One) return true;
          return lang != Lang::Lu;
        }
        case FKind::Bang:
          return lang == Lang::Lbang && in_language(f.sub(), lang);
        case FKind::Bin:
          return in_language(f.left(), lang) && in_language(f.right(), lang);
      }
      return false;
    }
    case Lang::Lp: {
      switch (f.kind()) {
        case FKind::Atom: return true;
        case FKind::Const: {
          Konst k = f.const_kind();
          return k == Konst::Top || k == Konst::Bot;
        }
        case FKind::Bang: return false;
        case FKind::Bin:
          if (f.op() == BinOp::Star) return false;
          return in_language(f.left(), Lang::Lp) && in_language(f.right(), Lang::Lp);
      }
      return false;
    }
    case Lang::Lnn:
    case Lang::Lstarnn: {
      if (f.is_atom()) return true;
      if (is_neg_literal(f)) return true;
      if (f.kind() == FKind::Bin) {
        BinOp o = f.op();
        bool ok = o == BinOp::And || o == BinOp::Or ||
                  (lang == Lang::Lstarnn && o == BinOp::Star);
        return ok && in_language(f.left(), lang) && in_language(f.right(), lang);
      }
      return false;
    }
  }
  return false;
}

Formula forgetful(Formula f) {
  switch (f.kind()) {
    case FKind::Atom: return f;
    case FKind::Const:
      switch (f.const_kind()) {
        case Konst::Zero: return Formula::bot();
        case Konst::One: return Formula::top();
        default: return f;
      }
    case FKind::Bang: return forgetful(f.sub());
    case FKind::Bin: {
      BinOp o = f.op() == BinOp::Star ? BinOp::And : f.op();
      return Formula::bin(o, forgetful(f.left()), forgetful(f.right()));
    }
  }
  return f;
}

Formula collapse_star_to_and(Formula f) {
  switch (f.kind()) {
    case FKind::Atom:
    case FKind::Const: return f;
    case FKind::Bang:
      throw std::runtime_error("collapse: formula not !-free");
    case FKind::Bin: {
      Formula l = collapse_star_to_and(f.left());
      Formula r = collapse_star_to_and(f.right());
      BinOp o = f.op() == BinOp::Star ? BinOp::And : f.op();
      if (o == BinOp::And) {
        if (r.is_const(Konst::One)) return l;
        if (l.is_const(Konst::One)) return r;
      }
      return Formula::bin(o, l, r);
    }
  }
  return f;
}

Formula nnf_negate(Formula f) {
  if (f.is_atom()) return neg(f);
  if (is_neg_literal(f)) return f.left();
  if (f.is_bin(BinOp::And))
    return f_or(nnf_negate(f.left()), nnf_negate(f.right()));
  if (f.is_bin(BinOp::Or))
    return f_and(nnf_negate(f.left()), nnf_negate(f.right()));
  throw std::runtime_error("nnf_negate: formula not in negation normal form: " + to_string(f));
}

bool eval_boolean(Formula f, const std::vector<std::pair<uint32_t, bool>>& assignment) {
  switch (f.kind()) {
    case FKind::Atom: {
      for (const auto& [aid, v] : assignment)
        if (aid == f.atom_id()) return v;
      return false;
    }
    case FKind::Const:
      switch (f.const_kind()) {
        case Konst::Zero:
        case Konst::Bot: return false;
        default: return true;
      }
    case FKind::Bang: return eval_boolean(f.sub(), assignment);
    case FKind::Bin: {
      switch (f.op()) {
        case BinOp::And:
        case BinOp::Star:
          return eval_boolean(f.left(), assignment) && eval_boolean(f.right(), assignment);
        case BinOp::Or:
          return eval_boolean(f.left(), assignment) || eval_boolean(f.right(), assignment);
        case BinOp::Imp:
          return !eval_boolean(f.left(), assignment) || eval_boolean(f.right(), assignment);
      }
    }
  }
  return false;
}

// ---- parser --------------------------------------------------------------

namespace {

struct Parser {
  std::string_view s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool eat(std::string_view tok) {
    skip_ws();
    if (s.substr(i, tok.size()) == tok) {
      i += tok.size();
      return true;
    }
    return false;
  }

  bool peek(std::string_view tok) {
    skip_ws();
    return s.substr(i, tok.size()) == tok;
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, i); }

  Formula parse_imp() {
    Formula lhs = parse_lattice();
    skip_ws();
    if (eat("->")) {
      Formula rhs = parse_imp(); // right-associative
      return f_imp(lhs, rhs);
    }
    return lhs;
  }

  Formula parse_lattice() {
    Formula acc = parse_star();
    for (;;) {
      skip_ws();
      if (eat("/\\")) {
        acc = f_and(acc, parse_star());
      } else if (eat("\\/")) {
        acc = f_or(acc, parse_star());
      } else {
        return acc;
      }
    }
  }

  Formula parse_star() {
    Formula acc = parse_unary();
    for (;;) {
      skip_ws();
      if (peek("*")) {
        ++i;
        acc = f_star(acc, parse_unary());
      } else {
        return acc;
      }
    }
  }

  Formula parse_unary() {
    skip_ws();
    if (eat("!")) return Formula::bang(parse_unary());
    return parse_primary();
  }

  Formula parse_primary() {
    skip_ws();
    if (i >= s.size()) fail("unexpected end of input");
    char c = s[i];
    if (c == '(') {
      ++i;
      Formula f = parse_imp();
      skip_ws();
      if (i >= s.size() || s[i] != ')') fail("expected ')'");
      ++i;
      return f;
    }
    if (c == '0') {
      ++i;
      return Formula::zero();
    }
    if (c == '1') {
      ++i;
      return Formula::one();
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      size_t start = i;
      ++i;
      while (i < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
        ++i;
      std::string_view name = s.substr(start, i - start);
      if (name == "top") return Formula::top();
      if (name == "bot") return Formula::bot();
      return Formula::atom(name);
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

// precedence levels for printing: imp=0, lattice=1, star=2, unary=3
int prec_of(Formula f) {
  switch (f.kind()) {
    case FKind::Bin:
      switch (f.op()) {
        case BinOp::Imp: return 0;
        case BinOp::And:
        case BinOp::Or: return 1;
        case BinOp::Star: return 2;
      }
      return 3;
    default: return 4;
  }
}

void print_rec(Formula f, int min_prec, std::string& out) {
  int p = prec_of(f);
  bool parens = p < min_prec;
  if (parens) out += '(';
  switch (f.kind()) {
    case FKind::Atom: out += f.atom_name(); break;
    case FKind::Const:
      switch (f.const_kind()) {
        case Konst::Zero: out += '0'; break;
        case Konst::One: out += '1'; break;
        case Konst::Top: out += "top"; break;
        case Konst::Bot: out += "bot"; break;
      }
      break;
    case FKind::Bang:
      out += '!';
      print_rec(f.sub(), 3, out);
      break;
    case FKind::Bin: {
      switch (f.op()) {
        case BinOp::Imp:
          // right-associative: left child needs higher precedence
          print_rec(f.left(), 1, out);
          out += " -> ";
          print_rec(f.right(), 0, out);
          break;
        case BinOp::And:
        case BinOp::Or:
          // left-associative at shared precedence
          print_rec(f.left(), 1, out);
          out += f.op() == BinOp::And ? " /\\ " : " \\/ ";
          print_rec(f.right(), 2, out);
          break;
        case BinOp::Star:
          print_rec(f.left(), 2, out);
          out += " * ";
          print_rec(f.right(), 3, out);
          break;
      }
      break;
    }
  }
  if (parens) out += ')';
}

} // namespace

Formula parse_formula(std::string_view text) {
  Parser p{text};
  Formula f = p.parse_imp();
  p.skip_ws();
  if (p.i != text.size()) p.fail("trailing input");
  return f;
}

std::string to_string(Formula f) {
  std::string out;
  print_rec(f, 0, out);
  return out;
}

} // namespace prooflab
