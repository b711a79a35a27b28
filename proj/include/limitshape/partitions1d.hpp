#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "limitshape/bigint.hpp"
#include "limitshape/diagrams.hpp"
#include "limitshape/rng.hpp"
#include "limitshape/sampler.hpp"

namespace limitshape {

// Parts in decreasing order.
struct LinearPartition {
  std::vector<long long> parts;
  long long sum() const;
  bool is_strict() const;
  bool operator==(const LinearPartition&) const = default;
  bool operator<(const LinearPartition& o) const { return parts < o.parts; }
};

inline constexpr long long kPartitionBudgetM = 1'000'000;
inline constexpr int kPartitionBudgetK = 64;
// Exact tables are used for sampling when m·k stays under this.
inline constexpr long long kExactTableCells = 1'000'000;

// Partitions of m into exactly k parts (distinct parts when requested).
BigCount count_partitions(long long m, int k, bool distinct);
double count_partitions_ratio_distinct(long long m, int k);

// Table of p(j, i), partitions of j into exactly i parts, for j ≤ m, i ≤ k.
// Strict partitions use q(m,k) = p(m − k(k−1)/2, k).
class DistinctPartitionSampler {
 public:
  DistinctPartitionSampler(long long m, int k);

  long long m() const { return m_; }
  int k() const { return k_; }
  bool exact() const { return exact_; }
  BigCount count() const;

  // Strict partitions are ranked by their smallest part first, then
  // recursively on the remaining parts (shifted down). Exact mode only.
  LinearPartition unrank(const BigCount& index) const;
  LinearPartition sample(Rng& rng) const;

 private:
  long long weak_m_;  // m − k(k−1)/2
  long long m_;
  int k_;
  bool exact_;
  std::vector<BigCount> big_;    // (weak_m_+1) × (k_+1), row-major by j
  std::vector<long double> fl_;  // same layout

  std::size_t idx(long long j, int i) const { return static_cast<std::size_t>(j) * (k_ + 1) + i; }
  long double weight(long long j, int i) const;
};

LinearPartition sample_distinct_partition(long long m, int k, Rng& rng);

class PlanePartition {
 public:
  PlanePartition() = default;
  explicit PlanePartition(std::vector<std::vector<long long>> rows);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<long long>>& rows() const { return rows_; }
  long long at(Cell c) const { return rows_[c.row - 1][c.col - 1]; }
  long long sum() const { return sum_; }
  bool has_distinct_parts() const;
  bool operator==(const PlanePartition& o) const { return rows_ == o.rows_; }
  bool operator<(const PlanePartition& o) const { return rows_ < o.rows_; }

 private:
  std::vector<std::vector<long long>> rows_;
  Partition shape_;
  long long sum_ = 0;
};

// p_{i,j} = μ(t_{i,j}); μ must be strict.
PlanePartition assemble_plane_partition(const Tableau& t, const LinearPartition& mu);
// Weak mode: any decreasing μ is accepted (the injection's image).
PlanePartition assemble_plane_partition_weak(const Tableau& t, const LinearPartition& mu);
// Cells ordered by decreasing part, ties by row then column.
std::pair<Tableau, LinearPartition> decompose_plane_partition(const PlanePartition& pi);

// Uniform over distinct-part plane partitions of m with square shape n×n.
PlanePartition sample_plane_partition(int n, long long m, Rng& rng);

class RescaledSurface {
 public:
  RescaledSurface(const PlanePartition& pi, long long m, int n);
  double operator()(double x, double y) const;

 private:
  PlanePartition pi_;
  long long m_;
  int n_;
};

BigCount count_plane_partitions_small(const Partition& lambda, long long m, bool distinct);

}  // namespace limitshape
