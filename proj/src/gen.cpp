#include "prooflab/gen.hpp"

namespace prooflab {

namespace {
Formula pool_atom(uint32_t i) {
  return Formula::atom("p" + std::to_string(i));
}

uint32_t pick(Rng& rng, uint32_t n) {
  return static_cast<uint32_t>(rng() % n);
}
} // namespace

Formula random_formula(Lang lang, uint32_t target_size, Rng& rng, uint32_t atoms) {
  if (target_size <= 1) {
    uint32_t r = pick(rng, 8);
    if (lang == Lang::Lnn || lang == Lang::Lstarnn) {
      Formula a = pool_atom(pick(rng, atoms));
      return r % 2 == 0 ? a : neg(a);
    }
    if (r < 5) return pool_atom(pick(rng, atoms));
    switch (lang) {
      case Lang::Lu:
        return r % 2 == 0 ? Formula::zero() : Formula::one();
      case Lang::Lb:
      case Lang::Lbang: {
        Formula cs[4] = {Formula::zero(), Formula::one(), Formula::top(),
                         Formula::bot()};
        return cs[r % 4];
      }
      case Lang::Lp:
        return r % 2 == 0 ? Formula::top() : Formula::bot();
      default:
        return pool_atom(pick(rng, atoms));
    }
  }
  if (lang == Lang::Lnn || lang == Lang::Lstarnn) {
    // nnf leaf costs 1 or 3 nodes; split the budget between children
    uint32_t n_ops = lang == Lang::Lstarnn ? 3 : 2;
    BinOp ops[3] = {BinOp::And, BinOp::Or, BinOp::Star};
    BinOp op = ops[pick(rng, n_ops)];
    uint32_t left = 1 + pick(rng, std::max<uint32_t>(1, target_size - 2));
    return Formula::bin(op, random_formula(lang, left, rng, atoms),
                        random_formula(lang, target_size - 1 - left, rng, atoms));
  }
  if (lang == Lang::Lbang && target_size >= 2 && pick(rng, 6) == 0)
    return Formula::bang(random_formula(lang, target_size - 1, rng, atoms));
  BinOp op;
  if (lang == Lang::Lp) {
    BinOp ops[3] = {BinOp::And, BinOp::Or, BinOp::Imp};
    op = ops[pick(rng, 3)];
  } else {
    BinOp ops[4] = {BinOp::And, BinOp::Or, BinOp::Star, BinOp::Imp};
    op = ops[pick(rng, 4)];
  }
  uint32_t left = 1 + pick(rng, std::max<uint32_t>(1, target_size - 2));
  return Formula::bin(op, random_formula(lang, left, rng, atoms),
                      random_formula(lang, target_size - 1 - left, rng, atoms));
}

Formula random_fully_conservative(uint32_t target_size, Rng& rng,
                                  uint32_t atoms, bool allow_bang) {
  if (target_size <= 1) {
    uint32_t r = pick(rng, 6);
    if (r < 4) return pool_atom(pick(rng, atoms));
    return r == 4 ? Formula::one() : Formula::top();
  }
  uint32_t r = pick(rng, 3);
  uint32_t left = 1 + pick(rng, std::max<uint32_t>(1, target_size - 2));
  uint32_t right = target_size - 1 - left;
  switch (r) {
    case 0:
      return f_and(random_fully_conservative(left, rng, atoms, allow_bang),
                   random_fully_conservative(right, rng, atoms, allow_bang));
    case 1:
      return f_or(random_fully_conservative(left, rng, atoms, allow_bang),
                  random_fully_conservative(right, rng, atoms, allow_bang));
    default:
      return f_imp(random_conservative(left, rng, atoms, allow_bang),
                   random_fully_conservative(right, rng, atoms, allow_bang));
  }
}

Formula random_conservative(uint32_t target_size, Rng& rng, uint32_t atoms,
                            bool allow_bang) {
  uint32_t r = pick(rng, 8);
  if (target_size <= 1) {
    if (r < 2) return Formula::bot();
    return random_fully_conservative(target_size, rng, atoms, allow_bang);
  }
  if (allow_bang && r == 7)
    return Formula::bang(
        random_conservative(target_size - 1, rng, atoms, allow_bang));
  if (r >= 5)
    return random_fully_conservative(target_size, rng, atoms, allow_bang);
  BinOp ops[3] = {BinOp::And, BinOp::Or, BinOp::Star};
  BinOp op = ops[pick(rng, 3)];
  uint32_t left = 1 + pick(rng, std::max<uint32_t>(1, target_size - 2));
  return Formula::bin(op, random_conservative(left, rng, atoms, allow_bang),
                      random_conservative(target_size - 1 - left, rng, atoms,
                                          allow_bang));
}

Sequent random_horn_sequent(uint32_t target_size, uint32_t atoms, Rng& rng,
                            bool biased_valid) {
  auto atom = [&](uint32_t i) { return Formula::atom("q" + std::to_string(i)); };
  Sequent s;
  uint32_t budget = target_size;
  // a few facts
  uint32_t facts = 1 + pick(rng, 3);
  std::vector<uint32_t> known;
  for (uint32_t i = 0; i < facts && budget > 0; ++i) {
    uint32_t a = pick(rng, atoms);
    known.push_back(a);
    s.ante.add(atom(a));
    --budget;
  }
  while (budget > 4) {
    uint32_t kind = pick(rng, 10);
    if (kind == 0) {
      s.ante.add(Formula::one());
      --budget;
      continue;
    }
    uint32_t body_n = 1 + pick(rng, 3);
    FormulaMultiset body;
    for (uint32_t i = 0; i < body_n; ++i) {
      // bias bodies toward derivable atoms so chains actually fire
      uint32_t a = (biased_valid && !known.empty() && pick(rng, 3) != 0)
                       ? known[pick(rng, static_cast<uint32_t>(known.size()))]
                       : pick(rng, atoms);
      body.add(atom(a));
    }
    uint32_t head = pick(rng, atoms);
    Formula rule;
    if (kind == 1) {
      // p -> (fusion of atoms); read as head implying every body atom
      rule = f_imp(atom(head), bigstar(body));
    } else {
      rule = f_imp(bigstar(body), atom(head));
      if (biased_valid) known.push_back(head);
    }
    if (kind >= 8) {
      // fold a conjunction pair occasionally
      uint32_t other = pick(rng, atoms);
      rule = f_and(rule, atom(other));
      if (biased_valid) known.push_back(other);
    }
    uint64_t sz = rule.size();
    if (sz > budget) break;
    s.ante.add(rule);
    budget -= static_cast<uint32_t>(sz);
  }
  uint32_t goal = (biased_valid && !known.empty() && pick(rng, 4) != 0)
                      ? known[pick(rng, static_cast<uint32_t>(known.size()))]
                      : pick(rng, atoms);
  s.succ.add(atom(goal));
  return s;
}

} // namespace prooflab
