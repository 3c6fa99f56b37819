// Finite multisets of formulas and sequents over them.  Multisets are kept
// as id-sorted (formula, count) vectors; exchange is therefore built in.

#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "prooflab/formula.hpp"

namespace prooflab {

class FormulaMultiset {
public:
  FormulaMultiset() = default;
  FormulaMultiset(std::initializer_list<Formula> fs) {
    for (Formula f : fs) add(f);
  }

  void add(Formula f, uint32_t count = 1);
  // Removes `count` occurrences; returns false (unchanged) if not present.
  bool remove(Formula f, uint32_t count = 1);
  uint32_t count(Formula f) const;
  bool contains(Formula f) const { return count(f) > 0; }

  FormulaMultiset plus(const FormulaMultiset& o) const;
  // Multiset difference; returns false if o is not a sub-multiset.
  bool minus(const FormulaMultiset& o, FormulaMultiset& out) const;
  bool submultiset_of(const FormulaMultiset& o) const;

  uint64_t cardinality() const; // with multiplicity
  bool empty() const { return items_.empty(); }
  uint64_t total_formula_size() const;

  // (formula, count) pairs in id order — deterministic within a process.
  const std::vector<std::pair<Formula, uint32_t>>& items() const { return items_; }

  // Elements with multiplicity, sorted by the canonical structural order.
  std::vector<Formula> canonical_elements() const;

  bool operator==(const FormulaMultiset& o) const { return items_ == o.items_; }
  bool operator!=(const FormulaMultiset& o) const { return !(*this == o); }

  size_t hash() const;

private:
  std::vector<std::pair<Formula, uint32_t>> items_; // sorted by formula id
};

// Canonical-order left-associated folds; empty cases per convention.
Formula bigstar(const FormulaMultiset& ms); // empty -> 1
Formula bigplus(const FormulaMultiset& ms); // empty -> 0
Formula bigand(const FormulaMultiset& ms);  // empty -> 1 (used by generators)
Formula bigor(const FormulaMultiset& ms);   // empty -> 0

struct Sequent {
  FormulaMultiset ante;
  FormulaMultiset succ;

  bool operator==(const Sequent& o) const {
    return ante == o.ante && succ == o.succ;
  }
  bool operator!=(const Sequent& o) const { return !(*this == o); }

  size_t hash() const;
  // Total formula count, |ante| + |succ|.
  uint64_t line_weight() const { return ante.cardinality() + succ.cardinality(); }
  uint64_t symbol_size() const {
    return ante.total_formula_size() + succ.total_formula_size() + 1;
  }
};

struct SequentHash {
  size_t operator()(const Sequent& s) const { return s.hash(); }
};

// I(S) = bigstar(ante) -> bigplus(succ).
Formula interpretation(const Sequent& s);

std::string to_string(const Sequent& s);

// "A, B => C"; formulas use the standard grammar.  Commas separate multiset
// members; an empty side prints nothing.
Sequent parse_sequent(std::string_view text);

} // namespace prooflab
