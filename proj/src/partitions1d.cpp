#include "limitshape/partitions1d.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "limitshape/errors.hpp"

namespace limitshape {

long long LinearPartition::sum() const {
  return std::accumulate(parts.begin(), parts.end(), 0LL);
}

bool LinearPartition::is_strict() const {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) return false;
    if (i > 0 && parts[i] >= parts[i - 1]) return false;
  }
  return true;
}

namespace {

void check_budget(long long m, int k) {
  if (m < 0 || k < 0) throw ValidationError("m and k must be nonnegative");
  if (m > kPartitionBudgetM || k > kPartitionBudgetK)
    throw BudgetError("partition table budget exceeded (m <= 1e6, k <= 64)");
}

long long staircase(int k) { return static_cast<long long>(k) * (k - 1) / 2; }

// p(m, k) over all k' ≤ k for the last row only, by rows of parts count.
template <class T>
T count_weak(long long m, int k) {
  if (k == 0) return m == 0 ? T(1) : T(0);
  if (m < k) return T(0);
  std::vector<T> prev(m + 1, T(0)), cur(m + 1, T(0));
  prev[0] = 1;
  for (int i = 1; i <= k; ++i) {
    std::fill(cur.begin(), cur.end(), T(0));
    for (long long j = i; j <= m; ++j) cur[j] = prev[j - 1] + cur[j - i];
    std::swap(prev, cur);
  }
  return prev[m];
}

}  // namespace

BigCount count_partitions(long long m, int k, bool distinct) {
  check_budget(m, k);
  if (distinct) {
    const long long w = m - staircase(k);
    if (w < 0) return 0;
    return count_weak<BigCount>(w, k);
  }
  return count_weak<BigCount>(m, k);
}

double count_partitions_ratio_distinct(long long m, int k) {
  BigCount p = count_partitions(m, k, false);
  if (p == 0) return 0.0;
  return static_cast<double>(Rational(count_partitions(m, k, true), p));
}

DistinctPartitionSampler::DistinctPartitionSampler(long long m, int k) : m_(m), k_(k) {
  check_budget(m, k);
  weak_m_ = m - staircase(k);
  if (weak_m_ < k || (k == 0 && m != 0)) throw ValidationError("no strict partition of m into k parts");
  const long long cells = (weak_m_ + 1) * (k + 1);
  exact_ = cells <= kExactTableCells;
  if (exact_) big_.assign(cells, BigCount(0));
  else fl_.assign(cells, 0.0L);
  auto fill = [&](auto& tab) {
    tab[idx(0, 0)] = 1;
    for (long long j = 1; j <= weak_m_; ++j)
      for (int i = 1; i <= std::min<long long>(k, j); ++i)
        tab[idx(j, i)] = tab[idx(j - 1, i - 1)] + tab[idx(j - i, i)];
  };
  if (exact_) fill(big_);
  else fill(fl_);
}

BigCount DistinctPartitionSampler::count() const {
  if (exact_) return big_[idx(weak_m_, k_)];
  return count_weak<BigCount>(weak_m_, k_);
}

long double DistinctPartitionSampler::weight(long long j, int i) const {
  if (j < 0 || i < 0) return 0.0L;
  return exact_ ? static_cast<long double>(big_[idx(j, i)]) : fl_[idx(j, i)];
}

namespace {

// Weak parts come out in increasing order; restore the staircase and sort.
LinearPartition finish(std::vector<long long> weak, int k) {
  std::sort(weak.begin(), weak.end(), std::greater<>());
  LinearPartition out;
  for (int l = 0; l < k; ++l) out.parts.push_back(weak[l] + (k - 1 - l));
  return out;
}

}  // namespace

LinearPartition DistinctPartitionSampler::unrank(const BigCount& index) const {
  if (!exact_) throw BudgetError("unranking needs an exact table");
  if (index < 0 || index >= big_[idx(weak_m_, k_)]) throw ValidationError("rank out of range");
  BigCount r = index;
  long long j = weak_m_;
  int i = k_;
  long long shift = 0;
  std::vector<long long> weak;
  // A partition either has a part equal to 1 (ranked first) or all parts ≥ 2.
  while (i > 0) {
    const BigCount& ones = big_[idx(j - 1, i - 1)];
    if (r < ones) {
      weak.push_back(1 + shift);
      --j;
      --i;
    } else {
      r -= ones;
      ++shift;
      j -= i;
    }
  }
  return finish(std::move(weak), k_);
}

namespace {

BigCount uniform_below(const BigCount& bound, Rng& rng) {
  const unsigned bits = boost::multiprecision::msb(bound) + 1;
  for (;;) {
    BigCount x = 0;
    unsigned have = 0;
    while (have < bits) {
      x <<= 64;
      x += rng();
      have += 64;
    }
    x >>= (have - bits);
    if (x < bound) return x;
  }
}

}  // namespace

LinearPartition DistinctPartitionSampler::sample(Rng& rng) const {
  if (exact_) return unrank(uniform_below(big_[idx(weak_m_, k_)], rng));
  long long j = weak_m_;
  int i = k_;
  long long shift = 0;
  std::vector<long long> weak;
  while (i > 0) {
    const long double total = fl_[idx(j, i)];
    const long double ones = fl_[idx(j - 1, i - 1)];
    if (static_cast<long double>(rng.uniform01()) * total < ones) {
      weak.push_back(1 + shift);
      --j;
      --i;
    } else {
      ++shift;
      j -= i;
    }
  }
  return finish(std::move(weak), k_);
}

LinearPartition sample_distinct_partition(long long m, int k, Rng& rng) {
  return DistinctPartitionSampler(m, k).sample(rng);
}

PlanePartition::PlanePartition(std::vector<std::vector<long long>> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  std::vector<int> parts;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto& r = rows_[i];
    if (r.empty() || (i > 0 && r.size() > rows_[i - 1].size()))
      throw ValidationError("plane partition rows do not form a partition");
    parts.push_back(static_cast<int>(r.size()));
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (r[j] < 1) throw ValidationError("plane partition entries must be positive");
      if (j > 0 && r[j] > r[j - 1]) throw ValidationError("rows must weakly decrease");
      if (i > 0 && r[j] > rows_[i - 1][j]) throw ValidationError("columns must weakly decrease");
      sum_ += r[j];
    }
  }
  shape_ = Partition(parts);
}

bool PlanePartition::has_distinct_parts() const {
  std::set<long long> seen;
  for (const auto& r : rows_)
    for (long long v : r)
      if (!seen.insert(v).second) return false;
  return true;
}

PlanePartition assemble_plane_partition_weak(const Tableau& t, const LinearPartition& mu) {
  if (static_cast<int>(mu.parts.size()) != t.size())
    throw ValidationError("tableau size and number of parts differ");
  for (std::size_t l = 1; l < mu.parts.size(); ++l)
    if (mu.parts[l] > mu.parts[l - 1]) throw ValidationError("parts must be decreasing");
  std::vector<std::vector<long long>> rows;
  for (const auto& r : t.rows()) {
    std::vector<long long> out;
    for (int e : r) out.push_back(mu.parts[e - 1]);
    rows.push_back(std::move(out));
  }
  return PlanePartition(std::move(rows));
}

PlanePartition assemble_plane_partition(const Tableau& t, const LinearPartition& mu) {
  if (!mu.is_strict()) throw ValidationError("parts must be strictly decreasing");
  return assemble_plane_partition_weak(t, mu);
}

std::pair<Tableau, LinearPartition> decompose_plane_partition(const PlanePartition& pi) {
  std::vector<std::pair<long long, Cell>> cells;
  for (int i = 1; i <= pi.shape().num_rows(); ++i)
    for (int j = 1; j <= pi.shape().row(i); ++j) cells.push_back({pi.at({i, j}), {i, j}});
  std::stable_sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  std::vector<std::vector<int>> rows;
  for (int len : pi.shape().parts()) rows.emplace_back(len, 0);
  LinearPartition mu;
  for (std::size_t l = 0; l < cells.size(); ++l) {
    const Cell c = cells[l].second;
    rows[c.row - 1][c.col - 1] = static_cast<int>(l) + 1;
    mu.parts.push_back(cells[l].first);
  }
  return {Tableau(std::move(rows)), std::move(mu)};
}

PlanePartition sample_plane_partition(int n, long long m, Rng& rng) {
  if (n < 1) throw ValidationError("n must be positive");
  DistinctPartitionSampler parts(m, n * n);
  Tableau t = sample_square_tableau(n, rng);
  return assemble_plane_partition(t, parts.sample(rng));
}

RescaledSurface::RescaledSurface(const PlanePartition& pi, long long m, int n) : pi_(pi), m_(m), n_(n) {
  if (!(pi.shape() == Partition::square(n))) throw ValidationError("plane partition must be n x n");
  if (m <= 0) throw ValidationError("m must be positive");
}

double RescaledSurface::operator()(double x, double y) const {
  if (!(x >= 0 && x < 1 && y >= 0 && y < 1)) throw ValidationError("query outside [0,1)^2");
  const int i = static_cast<int>(n_ * x) + 1, j = static_cast<int>(n_ * y) + 1;
  return static_cast<double>(n_) * n_ / static_cast<double>(m_) * static_cast<double>(pi_.at({i, j}));
}

namespace {

struct PlaneCounter {
  const Partition& shape;
  std::vector<Cell> order;
  std::vector<std::vector<long long>> vals;
  std::set<long long> used;
  bool distinct;
  BigCount count = 0;

  void run(std::size_t pos, long long remaining) {
    const long long left_cells = static_cast<long long>(order.size() - pos);
    if (pos == order.size()) {
      if (remaining == 0) ++count;
      return;
    }
    if (remaining < left_cells) return;
    const Cell c = order[pos];
    long long hi = remaining - (left_cells - 1);
    if (c.col > 1) hi = std::min(hi, vals[c.row - 1][c.col - 2]);
    if (c.row > 1) hi = std::min(hi, vals[c.row - 2][c.col - 1]);
    for (long long v = hi; v >= 1; --v) {
      if (distinct && used.count(v)) continue;
      vals[c.row - 1][c.col - 1] = v;
      if (distinct) used.insert(v);
      run(pos + 1, remaining - v);
      if (distinct) used.erase(v);
    }
  }
};

}  // namespace

BigCount count_plane_partitions_small(const Partition& lambda, long long m, bool distinct) {
  if (lambda.size() > 12 || m > 200) throw BudgetError("brute-force count limited to 12 cells, m <= 200");
  if (m < 0) return 0;
  PlaneCounter pc{lambda, {}, {}, {}, distinct};
  for (int i = 1; i <= lambda.num_rows(); ++i) {
    pc.vals.emplace_back(lambda.row(i), 0);
    for (int j = 1; j <= lambda.row(i); ++j) pc.order.push_back({i, j});
  }
  pc.run(0, m);
  return pc.count;
}

}  // namespace limitshape
