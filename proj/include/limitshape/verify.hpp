#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "limitshape/stats.hpp"

namespace limitshape {

enum class Tier { kSmall, kFull };

struct VerifyConfig {
  Tier tier = Tier::kSmall;
  std::uint64_t seed = 0;
  int jobs = 1;
};

// Runs fn(i) for i in [0, count) on up to `jobs` threads; results are
// stored by index so the merge order never depends on scheduling.
template <class T>
std::vector<T> run_trials(int count, int jobs, const std::function<T(int)>& fn);

// One report per acceptance criterion (ids "c1".."c14"). Criteria whose large
// instance only runs in the full tier say so in the report note.
TrialReport check_criterion(int id, const VerifyConfig& config);

// Criterion ids grouped by suite: "exact", "variational", "montecarlo", "all".
std::vector<int> suite_criteria(const std::string& suite);
bool is_known_suite(const std::string& suite);

}  // namespace limitshape

#include "limitshape/parallel_impl.hpp"
