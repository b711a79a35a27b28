#include "limitshape/rng.hpp"

namespace limitshape {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), engine_(splitmix64(splitmix64(seed) ^ splitmix64(~stream))) {}

Rng Rng::split(std::uint64_t stream) const {
  // Substreams of substreams stay distinct from first-level ones.
  return Rng(splitmix64(seed_ ^ (stream_ * 0x2545f4914f6cdd1dULL + 1)), stream);
}

long long Rng::uniform_int(long long lo, long long hi) {
  std::uniform_int_distribution<long long> dist(lo, hi);
  return dist(engine_);
}

double Rng::uniform01() {
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  return dist(engine_);
}

}  // namespace limitshape
