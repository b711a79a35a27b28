// Runs every verification criterion at its frozen parameters and prints one
// PASS/FAIL line per criterion. Criteria 1 and 2 are additionally checked
// against brute-force oracles that do not use the library.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <thread>

#include "limitshape/diagrams.hpp"
#include "limitshape/sampler.hpp"
#include "limitshape/verify.hpp"
#include "oracles.hpp"

using namespace limitshape;

namespace {

std::string oracle_c1() {
  const long long expected[2] = {2, 42};
  for (int n = 2; n <= 3; ++n) {
    const long long brute = static_cast<long long>(oracle::all_fillings(std::vector<int>(n, n)).size());
    if (brute != expected[n - 2] || BigCount(brute) != dimension(Partition::square(n)))
      return "oracle mismatch at n=" + std::to_string(n);
  }
  return "";
}

std::string oracle_c2() {
  for (int k = 1; k <= 8; ++k) {
    for (const auto& shape : oracle::partitions(k)) {
      const auto counts = oracle::max_entry_counts(shape);
      long long total = 0;
      for (const auto& [cell, c] : counts) total += c;
      const auto measure = cotransition_measure(Partition(shape));
      if (measure.size() != counts.size()) return "oracle corner count mismatch";
      for (const auto& [cell, c] : counts) {
        const auto it = measure.find(Cell{cell.first, cell.second});
        if (it == measure.end() || it->second != Rational(c, total))
          return "oracle mismatch at " + Partition(shape).to_string();
      }
    }
  }
  return "";
}

}  // namespace

int main() {
  VerifyConfig config;
  config.tier = Tier::kFull;
  config.seed = 0;
  config.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  int failures = 0;
  for (int id = 1; id <= 14; ++id) {
    TrialReport r;
    std::string extra;
    try {
      r = check_criterion(id, config);
      if (id == 1) extra = oracle_c1();
      if (id == 2) extra = oracle_c2();
    } catch (const std::exception& e) {
      r.pass = false;
      r.note = std::string("exception: ") + e.what();
    }
    const bool pass = r.pass && extra.empty();
    if (!pass) ++failures;
    std::printf("%s criterion %d: %s | statistic=%.6g threshold=%.6g | %.2fs | %s%s%s\n",
                pass ? "PASS" : "FAIL", id, r.description.c_str(), r.statistic, r.threshold,
                r.runtime_seconds, r.note.c_str(), extra.empty() ? "" : " | ", extra.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/14 criteria passed\n", 14 - failures);
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
