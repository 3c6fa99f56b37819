// Seeded random instance generators shared by the test suites and the
// benchmark harness.  mt19937_64 keeps runs reproducible bit for bit.

#pragma once

#include <random>

#include "prooflab/formula.hpp"
#include "prooflab/sequent.hpp"

namespace prooflab {

using Rng = std::mt19937_64;

// Random formula of the given language with roughly `target_size` nodes,
// drawing atoms from a small pool p0..p{atoms-1}.
Formula random_formula(Lang lang, uint32_t target_size, Rng& rng,
                       uint32_t atoms = 4);

// Random member of the fully-conservative (B) or conservative (C) grammar.
Formula random_fully_conservative(uint32_t target_size, Rng& rng,
                                  uint32_t atoms = 4, bool allow_bang = false);
Formula random_conservative(uint32_t target_size, Rng& rng,
                            uint32_t atoms = 4, bool allow_bang = false);

// Random implicational Horn sequent with ~target_size symbols over at most
// `atoms` distinct atoms; biased toward valid instances when `biased_valid`.
Sequent random_horn_sequent(uint32_t target_size, uint32_t atoms, Rng& rng,
                            bool biased_valid);

} // namespace prooflab
