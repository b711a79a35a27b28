#include "limitshape/diagrams.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "limitshape/errors.hpp"

namespace limitshape {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw ValidationError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw ValidationError("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::rectangle(int rows, int cols) {
  if (rows < 0 || cols < 0) throw ValidationError("negative rectangle");
  if (cols == 0) return Partition();
  return Partition(std::vector<int>(rows, cols));
}

int Partition::row(int i) const {
  if (i < 1 || i > num_rows()) return 0;
  return parts_[i - 1];
}

bool Partition::contains(Cell c) const {
  return c.row >= 1 && c.col >= 1 && c.col <= row(c.row);
}

bool Partition::fits_in(int rows, int cols) const {
  return num_rows() <= rows && first_row() <= cols;
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) out << (i ? "," : "") << parts_[i];
  out << ')';
  return out.str();
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> cols(lambda.first_row(), 0);
  for (int len : lambda.parts())
    for (int j = 0; j < len; ++j) ++cols[j];
  return Partition(std::move(cols));
}

namespace {

int hook_with(const Partition& lambda, const Partition& conj, Cell c) {
  return lambda.row(c.row) - c.col + conj.row(c.col) - c.row + 1;
}

}  // namespace

int hook_length(const Partition& lambda, Cell c) {
  if (!lambda.contains(c)) throw ValidationError("cell outside diagram");
  return hook_with(lambda, conjugate(lambda), c);
}

BigCount dimension(const Partition& lambda, int exact_limit) {
  if (lambda.size() > exact_limit)
    throw BudgetError("exact dimension limited to " + std::to_string(exact_limit) + " cells");
  Partition conj = conjugate(lambda);
  BigCount num = 1;
  for (int i = 2; i <= lambda.size(); ++i) num *= i;
  BigCount den = 1;
  for (int i = 1; i <= lambda.num_rows(); ++i)
    for (int j = 1; j <= lambda.row(i); ++j) den *= hook_with(lambda, conj, {i, j});
  return num / den;
}

double log_dimension(const Partition& lambda) {
  Partition conj = conjugate(lambda);
  double s = std::lgamma(lambda.size() + 1.0);
  for (int i = 1; i <= lambda.num_rows(); ++i)
    for (int j = 1; j <= lambda.row(i); ++j) s -= std::log(hook_with(lambda, conj, {i, j}));
  return s;
}

std::vector<Cell> corners(const Partition& lambda) {
  if (lambda.empty()) throw ValidationError("empty diagram has no corners");
  std::vector<Cell> out;
  for (int i = 1; i <= lambda.num_rows(); ++i)
    if (lambda.row(i) > lambda.row(i + 1)) out.push_back({i, lambda.row(i)});
  return out;
}

std::vector<Cell> exterior_corners(const Partition& lambda, int rows, int cols) {
  std::vector<Cell> out;
  for (int i = 1; i <= std::min(lambda.num_rows() + 1, rows); ++i) {
    int j = lambda.row(i) + 1;
    if (j > cols) continue;
    if (i == 1 || lambda.row(i - 1) >= j) out.push_back({i, j});
  }
  return out;
}

Partition complement_in_rectangle(const Partition& lambda, int rows, int cols) {
  if (!lambda.fits_in(rows, cols)) throw ValidationError("shape exceeds rectangle");
  std::vector<int> parts(rows);
  for (int i = 1; i <= rows; ++i) parts[i - 1] = cols - lambda.row(rows + 1 - i);
  return Partition(std::move(parts));
}

Partition remove_cell(const Partition& lambda, Cell c) {
  if (!lambda.contains(c) || lambda.row(c.row) != c.col || lambda.row(c.row + 1) >= c.col)
    throw ValidationError("cell is not a corner");
  std::vector<int> parts = lambda.parts();
  --parts[c.row - 1];
  return Partition(std::move(parts));
}

Partition add_cell(const Partition& lambda, Cell c) {
  if (lambda.row(c.row) != c.col - 1 || (c.row > 1 && lambda.row(c.row - 1) < c.col))
    throw ValidationError("cell is not addable");
  std::vector<int> parts = lambda.parts();
  if (c.row > lambda.num_rows()) parts.push_back(1);
  else ++parts[c.row - 1];
  return Partition(std::move(parts));
}

namespace {

void partitions_rec(int remaining, int max_part, int max_rows, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (max_rows == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, max_rows - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int k) {
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(k, k, k, cur, out);
  return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> cur;
  for (int k = 0; k <= rows * cols; ++k) partitions_rec(k, cols, rows, cur, out);
  return out;
}

}  // namespace limitshape
