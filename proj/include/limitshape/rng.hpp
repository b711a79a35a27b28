#pragma once

#include <cstdint>
#include <random>

namespace limitshape {

std::uint64_t splitmix64(std::uint64_t x);

// Seedable generator with cheap, reproducible substreams. Trial i of a run
// with seed s always draws from Rng(s).split(i), whatever the thread count.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed = 0, std::uint64_t stream = 0);

  Rng split(std::uint64_t stream) const;

  result_type operator()() { return engine_(); }
  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }

  // Uniform integer in [lo, hi].
  long long uniform_int(long long lo, long long hi);
  double uniform01();

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

}  // namespace limitshape
