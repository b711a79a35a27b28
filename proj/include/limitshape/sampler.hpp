#pragma once

#include <map>
#include <utility>
#include <vector>

#include "limitshape/bigint.hpp"
#include "limitshape/diagrams.hpp"
#include "limitshape/rng.hpp"

namespace limitshape {

class Tableau {
 public:
  Tableau() = default;
  // Row-major entries; must be a standard filling of 1..k.
  explicit Tableau(std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const { return shape_.size(); }
  int at(Cell c) const { return rows_[c.row - 1][c.col - 1]; }
  Cell position(int entry) const { return positions_[entry - 1]; }
  // Shape of the cells holding entries ≤ k.
  Partition sub_shape(int k) const;

  bool operator==(const Tableau& other) const { return rows_ == other.rows_; }
  bool operator<(const Tableau& other) const { return rows_ < other.rows_; }

 private:
  std::vector<std::vector<int>> rows_;
  Partition shape_;
  std::vector<Cell> positions_;
};

using GrowthPath = std::vector<Partition>;
// Values 1..N, stored 0-based: perm[i] = π(i+1).
using Permutation = std::vector<int>;

bool is_permutation(const Permutation& perm);

// Law of the cell holding the largest entry of a uniform tableau of shape λ.
std::map<Cell, Rational> cotransition_measure(const Partition& lambda);
// Floating version through log-dimensions, usable for large shapes.
std::map<Cell, double> cotransition_measure_float(const Partition& lambda);

Cell hook_walk(const Partition& lambda, Rng& rng);
Tableau sample_uniform_tableau(const Partition& lambda, Rng& rng);
Tableau sample_square_tableau(int n, Rng& rng);
Tableau sample_rect_tableau(int rows, int cols, Rng& rng);

GrowthPath growth_path(const Tableau& t);
Tableau path_to_tableau(const GrowthPath& path);

std::pair<Tableau, Tableau> rsk(const Permutation& perm);
Permutation inverse_rsk(const Tableau& p, const Tableau& q);
Permutation random_permutation(int size, Rng& rng);
Tableau sample_plancherel_tableau(int k, Rng& rng);

// ν_{n,k}(λ) / μ_k(λ) through the falling-power product over rows and columns.
Rational nu_ratio(const Partition& lambda, int n);
// The same ratio from the four dimensions directly.
Rational nu_ratio_direct(const Partition& lambda, int n);

}  // namespace limitshape
