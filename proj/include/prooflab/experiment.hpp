// The benchmark harness behind `bench`: seeded instance generators feeding
// the proof constructions, one CSV row per instance.  Identical spec and
// seed produce byte-identical CSV (timings are opt-in, since they cannot
// be deterministic).

#pragma once

#include <string>
#include <vector>

#include "prooflab/gen.hpp"

namespace prooflab {

struct ExperimentSpec {
  std::string name;      // one of experiment_names()
  uint64_t seed = 1;
  uint32_t samples = 0;  // 0 = the experiment's default
  bool timings = false;
};

std::vector<std::string> experiment_names();

// Returns the CSV report; throws std::invalid_argument for unknown names.
std::string run_experiment(const ExperimentSpec& spec);

std::string csv_quote(const std::string& field);

} // namespace prooflab
