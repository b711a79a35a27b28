#include "limitshape/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "limitshape/errors.hpp"

namespace limitshape {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  std::vector<int> parts;
  for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i] == 0 || (i > 0 && parts[i] > parts[i - 1]))
      throw ValidationError("tableau rows do not form a partition");
  shape_ = Partition(parts);
  const int k = shape_.size();
  positions_.assign(k, Cell{0, 0});
  for (int i = 0; i < shape_.num_rows(); ++i) {
    for (int j = 0; j < parts[i]; ++j) {
      int e = rows_[i][j];
      if (e < 1 || e > k || positions_[e - 1].row != 0)
        throw ValidationError("tableau entries must be 1..k, each once");
      positions_[e - 1] = {i + 1, j + 1};
      if (j > 0 && rows_[i][j - 1] >= e) throw ValidationError("tableau rows must increase");
      if (i > 0 && rows_[i - 1][j] >= e) throw ValidationError("tableau columns must increase");
    }
  }
}

Partition Tableau::sub_shape(int k) const {
  std::vector<int> parts;
  for (const auto& r : rows_) {
    int len = static_cast<int>(std::upper_bound(r.begin(), r.end(), k) - r.begin());
    if (len == 0) break;
    parts.push_back(len);
  }
  return Partition(std::move(parts));
}

bool is_permutation(const Permutation& perm) {
  std::vector<char> seen(perm.size() + 1, 0);
  for (int v : perm) {
    if (v < 1 || v > static_cast<int>(perm.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

std::map<Cell, Rational> cotransition_measure(const Partition& lambda) {
  std::vector<Cell> cs = corners(lambda);
  BigCount total = dimension(lambda);
  std::map<Cell, Rational> out;
  for (Cell c : cs) out[c] = Rational(dimension(remove_cell(lambda, c)), total);
  return out;
}

std::map<Cell, double> cotransition_measure_float(const Partition& lambda) {
  std::vector<Cell> cs = corners(lambda);
  double total = log_dimension(lambda);
  std::map<Cell, double> out;
  for (Cell c : cs) out[c] = std::exp(log_dimension(remove_cell(lambda, c)) - total);
  return out;
}

namespace {

// Row and column lengths that shrink as corners are removed.
struct ShapeState {
  std::vector<int> rows;
  std::vector<int> cols;
  int size = 0;

  explicit ShapeState(const Partition& lambda) : rows(lambda.parts()) {
    cols = conjugate(lambda).parts();
    size = lambda.size();
  }

  Cell walk(Rng& rng) const {
    long long r = rng.uniform_int(0, size - 1);
    int i = 0;
    while (r >= rows[i]) r -= rows[i++];
    int j = static_cast<int>(r);
    // 0-based (i, j) from here on.
    for (;;) {
      int arm = rows[i] - j - 1;
      int leg = cols[j] - i - 1;
      if (arm + leg == 0) return {i + 1, j + 1};
      long long s = rng.uniform_int(1, arm + leg);
      if (s <= arm) j += static_cast<int>(s);
      else i += static_cast<int>(s - arm);
    }
  }

  void remove(Cell c) {
    --rows[c.row - 1];
    --cols[c.col - 1];
    --size;
  }
};

}  // namespace

Cell hook_walk(const Partition& lambda, Rng& rng) {
  if (lambda.empty()) throw ValidationError("hook walk on empty diagram");
  return ShapeState(lambda).walk(rng);
}

Tableau sample_uniform_tableau(const Partition& lambda, Rng& rng) {
  std::vector<std::vector<int>> rows;
  for (int len : lambda.parts()) rows.emplace_back(len, 0);
  ShapeState state(lambda);
  for (int e = lambda.size(); e >= 1; --e) {
    Cell c = state.walk(rng);
    rows[c.row - 1][c.col - 1] = e;
    state.remove(c);
  }
  return Tableau(std::move(rows));
}

Tableau sample_square_tableau(int n, Rng& rng) {
  return sample_uniform_tableau(Partition::square(n), rng);
}

Tableau sample_rect_tableau(int rows, int cols, Rng& rng) {
  return sample_uniform_tableau(Partition::rectangle(rows, cols), rng);
}

GrowthPath growth_path(const Tableau& t) {
  GrowthPath path;
  path.reserve(t.size() + 1);
  for (int k = 0; k <= t.size(); ++k) path.push_back(t.sub_shape(k));
  return path;
}

Tableau path_to_tableau(const GrowthPath& path) {
  if (path.empty() || !path.front().empty())
    throw ValidationError("growth path must start at the empty diagram");
  const Partition& last = path.back();
  std::vector<std::vector<int>> rows;
  for (int len : last.parts()) rows.emplace_back(len, 0);
  for (std::size_t k = 1; k < path.size(); ++k) {
    const Partition& a = path[k - 1];
    const Partition& b = path[k];
    if (b.size() != a.size() + 1) throw ValidationError("growth path step must add one cell");
    int changed = 0;
    for (int i = 1; i <= b.num_rows(); ++i) {
      if (b.row(i) == a.row(i)) continue;
      if (b.row(i) != a.row(i) + 1 || !last.contains({i, b.row(i)}))
        throw ValidationError("growth path step is not a single cell");
      rows[i - 1][b.row(i) - 1] = static_cast<int>(k);
      ++changed;
    }
    if (changed != 1) throw ValidationError("growth path step is not a single cell");
  }
  return Tableau(std::move(rows));
}

std::pair<Tableau, Tableau> rsk(const Permutation& perm) {
  if (!is_permutation(perm)) throw ValidationError("rsk input is not a permutation");
  std::vector<std::vector<int>> p, q;
  for (std::size_t idx = 0; idx < perm.size(); ++idx) {
    int x = perm[idx];
    std::size_t r = 0;
    for (;; ++r) {
      if (r == p.size()) {
        p.push_back({x});
        q.push_back({static_cast<int>(idx) + 1});
        break;
      }
      auto it = std::upper_bound(p[r].begin(), p[r].end(), x);
      if (it == p[r].end()) {
        p[r].push_back(x);
        q[r].push_back(static_cast<int>(idx) + 1);
        break;
      }
      std::swap(x, *it);
    }
  }
  return {Tableau(std::move(p)), Tableau(std::move(q))};
}

Permutation inverse_rsk(const Tableau& p_tab, const Tableau& q_tab) {
  if (!(p_tab.shape() == q_tab.shape())) throw ValidationError("rsk shape mismatch");
  std::vector<std::vector<int>> p = p_tab.rows();
  const int n = p_tab.size();
  Permutation perm(n);
  for (int e = n; e >= 1; --e) {
    Cell c = q_tab.position(e);
    int r = c.row - 1;
    int x = p[r].back();
    p[r].pop_back();
    for (int rr = r - 1; rr >= 0; --rr) {
      auto it = std::lower_bound(p[rr].begin(), p[rr].end(), x);
      --it;
      std::swap(x, *it);
    }
    perm[e - 1] = x;
  }
  return perm;
}

Permutation random_permutation(int size, Rng& rng) {
  Permutation perm(size);
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

Tableau sample_plancherel_tableau(int k, Rng& rng) {
  if (k < 1) throw ValidationError("plancherel size must be positive");
  return rsk(random_permutation(k, rng)).second;
}

Rational nu_ratio(const Partition& lambda, int n) {
  if (!lambda.fits_in(n, n)) throw ValidationError("shape exceeds square");
  Partition conj = conjugate(lambda);
  BigCount num = 1;
  // Row i contributes (n + λ(i) − i) falling λ(i) = Π_j (n + j − i),
  // column j contributes (n + λ'(j) − j) falling λ'(j) = Π_i (n + i − j).
  for (int i = 1; i <= lambda.num_rows(); ++i)
    for (int j = 1; j <= lambda.row(i); ++j) num *= n + j - i;
  for (int j = 1; j <= conj.num_rows(); ++j)
    for (int i = 1; i <= conj.row(j); ++i) num *= n + i - j;
  BigCount den = 1;
  for (int t = 0; t < lambda.size(); ++t) den *= static_cast<long long>(n) * n - t;
  return Rational(num, den);
}

Rational nu_ratio_direct(const Partition& lambda, int n) {
  if (!lambda.fits_in(n, n)) throw ValidationError("shape exceeds square");
  const int limit = std::max(kExactDimensionLimit, n * n);
  BigCount kfact = 1;
  for (int i = 2; i <= lambda.size(); ++i) kfact *= i;
  BigCount num = dimension(complement_in_rectangle(lambda, n, n), limit) * kfact;
  BigCount den = dimension(Partition::square(n), limit) * dimension(lambda, limit);
  return Rational(num, den);
}

}  // namespace limitshape
