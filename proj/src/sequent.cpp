#include "prooflab/sequent.hpp"

#include <algorithm>

namespace prooflab {

namespace {
auto find_item(std::vector<std::pair<Formula, uint32_t>>& items, Formula f) {
  return std::lower_bound(
      items.begin(), items.end(), f.id(),
      [](const auto& it, uint32_t id) { return it.first.id() < id; });
}
auto find_item_const(const std::vector<std::pair<Formula, uint32_t>>& items, Formula f) {
  return std::lower_bound(
      items.begin(), items.end(), f.id(),
      [](const auto& it, uint32_t id) { return it.first.id() < id; });
}
} // namespace

void FormulaMultiset::add(Formula f, uint32_t count) {
  if (count == 0) return;
  auto it = find_item(items_, f);
  if (it != items_.end() && it->first == f)
    it->second += count;
  else
    items_.insert(it, {f, count});
}

bool FormulaMultiset::remove(Formula f, uint32_t count) {
  auto it = find_item(items_, f);
  if (it == items_.end() || it->first != f || it->second < count) return false;
  it->second -= count;
  if (it->second == 0) items_.erase(it);
  return true;
}

uint32_t FormulaMultiset::count(Formula f) const {
  auto it = find_item_const(items_, f);
  if (it == items_.end() || it->first != f) return 0;
  return it->second;
}

FormulaMultiset FormulaMultiset::plus(const FormulaMultiset& o) const {
  FormulaMultiset out = *this;
  for (const auto& [f, c] : o.items_) out.add(f, c);
  return out;
}

bool FormulaMultiset::minus(const FormulaMultiset& o, FormulaMultiset& out) const {
  out = *this;
  for (const auto& [f, c] : o.items_)
    if (!out.remove(f, c)) return false;
  return true;
}

bool FormulaMultiset::submultiset_of(const FormulaMultiset& o) const {
  for (const auto& [f, c] : items_)
    if (o.count(f) < c) return false;
  return true;
}

uint64_t FormulaMultiset::cardinality() const {
  uint64_t n = 0;
  for (const auto& [f, c] : items_) n += c;
  return n;
}

uint64_t FormulaMultiset::total_formula_size() const {
  uint64_t n = 0;
  for (const auto& [f, c] : items_) n += f.size() * c;
  return n;
}

std::vector<Formula> FormulaMultiset::canonical_elements() const {
  std::vector<Formula> out;
  for (const auto& [f, c] : items_)
    for (uint32_t i = 0; i < c; ++i) out.push_back(f);
  std::sort(out.begin(), out.end(), StructLess{});
  return out;
}

size_t FormulaMultiset::hash() const {
  uint64_t h = 0xcbf29ce484222325ull;
  for (const auto& [f, c] : items_) {
    h = (h ^ f.id()) * 0x100000001b3ull;
    h = (h ^ c) * 0x100000001b3ull;
  }
  return static_cast<size_t>(h);
}

namespace {
Formula fold_left(const std::vector<Formula>& elems, BinOp op, Formula empty_case) {
  if (elems.empty()) return empty_case;
  Formula acc = elems[0];
  for (size_t i = 1; i < elems.size(); ++i) acc = Formula::bin(op, acc, elems[i]);
  return acc;
}
} // namespace

Formula bigstar(const FormulaMultiset& ms) {
  return fold_left(ms.canonical_elements(), BinOp::Star, Formula::one());
}
Formula bigplus(const FormulaMultiset& ms) {
  std::vector<Formula> elems = ms.canonical_elements();
  if (elems.empty()) return Formula::zero();
  Formula acc = elems[0];
  for (size_t i = 1; i < elems.size(); ++i) acc = par(acc, elems[i]);
  return acc;
}
Formula bigand(const FormulaMultiset& ms) {
  return fold_left(ms.canonical_elements(), BinOp::And, Formula::one());
}
Formula bigor(const FormulaMultiset& ms) {
  return fold_left(ms.canonical_elements(), BinOp::Or, Formula::zero());
}

size_t Sequent::hash() const {
  return ante.hash() * 0x9e3779b97f4a7c15ull + succ.hash();
}

Formula interpretation(const Sequent& s) {
  return f_imp(bigstar(s.ante), bigplus(s.succ));
}

std::string to_string(const Sequent& s) {
  std::string out;
  bool first = true;
  for (Formula f : s.ante.canonical_elements()) {
    if (!first) out += ", ";
    out += to_string(f);
    first = false;
  }
  out += out.empty() ? "=>" : " =>";
  first = true;
  for (Formula f : s.succ.canonical_elements()) {
    out += first ? " " : ", ";
    out += to_string(f);
    first = false;
  }
  return out;
}

namespace {
void parse_side(std::string_view text, FormulaMultiset& out) {
  size_t start = 0;
  int depth = 0;
  auto flush = [&](size_t end) {
    std::string_view piece = text.substr(start, end - start);
    size_t a = piece.find_first_not_of(" \t");
    if (a == std::string_view::npos) return;
    size_t b = piece.find_last_not_of(" \t");
    out.add(parse_formula(piece.substr(a, b - a + 1)));
  };
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      flush(i);
      start = i + 1;
    }
  }
  flush(text.size());
}
} // namespace

Sequent parse_sequent(std::string_view text) {
  size_t arrow = text.find("=>");
  if (arrow == std::string_view::npos)
    throw ParseError("sequent missing '=>'", 0);
  Sequent s;
  parse_side(text.substr(0, arrow), s.ante);
  parse_side(text.substr(arrow + 2), s.succ);
  return s;
}

} // namespace prooflab
