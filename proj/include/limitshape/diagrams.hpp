#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "limitshape/bigint.hpp"

namespace limitshape {

// 1-based (row, col), English convention.
struct Cell {
  int row = 1;
  int col = 1;
  auto operator<=>(const Cell&) const = default;
};

class Partition {
 public:
  Partition() = default;
  // Trailing zeros are dropped; negative or increasing parts throw ValidationError.
  explicit Partition(std::vector<int> parts);

  static Partition rectangle(int rows, int cols);
  static Partition square(int n) { return rectangle(n, n); }

  const std::vector<int>& parts() const { return parts_; }
  int num_rows() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }
  // Row length λ(i), 0 past the last row.
  int row(int i) const;
  int first_row() const { return parts_.empty() ? 0 : parts_.front(); }
  bool contains(Cell c) const;
  bool fits_in(int rows, int cols) const;

  std::string to_string() const;

  auto operator<=>(const Partition& other) const { return parts_ <=> other.parts_; }
  bool operator==(const Partition& other) const { return parts_ == other.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Exact dimensions are computed up to this many cells; larger shapes throw.
inline constexpr int kExactDimensionLimit = 400;

Partition conjugate(const Partition& lambda);
int hook_length(const Partition& lambda, Cell c);
BigCount dimension(const Partition& lambda, int exact_limit = kExactDimensionLimit);
double log_dimension(const Partition& lambda);

std::vector<Cell> corners(const Partition& lambda);
// Addable cells that stay inside a rows × cols box.
std::vector<Cell> exterior_corners(const Partition& lambda, int rows, int cols);
Partition complement_in_rectangle(const Partition& lambda, int rows, int cols);

Partition remove_cell(const Partition& lambda, Cell c);
Partition add_cell(const Partition& lambda, Cell c);

// All partitions of k, in reverse lexicographic order ((k) first).
std::vector<Partition> partitions_of(int k);
// All partitions fitting in a rows × cols box.
std::vector<Partition> partitions_in_box(int rows, int cols);

}  // namespace limitshape
