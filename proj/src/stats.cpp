#include "limitshape/stats.hpp"

#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <limits>

#include "limitshape/errors.hpp"
#include "limitshape/surfaces.hpp"

namespace limitshape {

std::vector<double> rotated_boundary_rect(const Partition& lambda, int rows, int cols) {
  if (!lambda.fits_in(rows, cols)) throw ValidationError("shape exceeds rectangle");
  std::vector<double> v(rows + cols + 1);
  int r = 0, c = cols;
  const double scale = 1.0 / (rows * kSqrt2);
  v[r - c + cols] = (r + c) * scale;
  while (r < rows || c > 0) {
    if (r < rows && c == lambda.row(r + 1)) ++r;
    else --c;
    v[r - c + cols] = (r + c) * scale;
  }
  return v;
}

std::vector<double> rotated_boundary(const Partition& lambda, int n) {
  return rotated_boundary_rect(lambda, n, n);
}

namespace {

int square_side(const Tableau& t) {
  const int n = t.shape().num_rows();
  if (!(t.shape() == Partition::square(n))) throw ValidationError("tableau must be square");
  return n;
}

}  // namespace

double supnorm_level_gap(const Tableau& t, int k) {
  const int n = square_side(t);
  if (k < 0 || k > n * n) throw ValidationError("k out of range");
  const std::vector<double> g = rotated_boundary(t.sub_shape(k), n);
  const double alpha = static_cast<double>(k) / (static_cast<double>(n) * n);
  double gap = 0;
  for (int m = -n; m <= n; ++m) {
    const double u = m / (n * kSqrt2);
    gap = std::max(gap, std::fabs(g[m + n] - g_alpha(alpha, u)));
  }
  return gap;
}

namespace {

SurfaceGap gap_on_grid(const Tableau& t, int rows, int cols, double margin_exponent,
                       double (*surface)(double, double, double), double theta) {
  SurfaceGap out;
  const double threshold =
      std::pow(static_cast<double>(rows) * cols, (1.5 + margin_exponent) / 2);
  const double total = static_cast<double>(rows) * cols;
  out.grid.assign(rows, std::vector<double>(cols, std::numeric_limits<double>::quiet_NaN()));
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1; j <= cols; ++j) {
      const double inner = std::min(static_cast<double>(i) * j, static_cast<double>(rows - i) * (cols - j));
      if (!(inner > threshold)) continue;
      const double d = std::fabs(t.at({i, j}) / total - surface(theta, static_cast<double>(i) / rows,
                                                               static_cast<double>(j) / rows));
      out.grid[i - 1][j - 1] = d;
      out.gap = std::max(out.gap, d);
      ++out.cells;
    }
  }
  return out;
}

double square_surface(double, double x, double y) { return limit_surface_L(x, y); }

}  // namespace

SurfaceGap surface_gap(const Tableau& t, double margin_exponent) {
  const int n = square_side(t);
  return gap_on_grid(t, n, n, margin_exponent, square_surface, 1.0);
}

SurfaceGap rect_surface_gap(const Tableau& t, double margin_exponent) {
  const int rows = t.shape().num_rows();
  const int cols = t.shape().first_row();
  if (!(t.shape() == Partition::rectangle(rows, cols)) || cols > rows)
    throw ValidationError("tableau must be a rectangle with at least as many rows as columns");
  return gap_on_grid(t, rows, cols, margin_exponent, rect_surface_L,
                     static_cast<double>(cols) / rows);
}

double entry_location_u(const Tableau& t, int k) {
  const int n = square_side(t);
  const Cell c = t.position(k);
  return (static_cast<double>(c.row) / n - static_cast<double>(c.col) / n) / kSqrt2;
}

double entry_location_v(const Tableau& t, int k) {
  const int n = square_side(t);
  const Cell c = t.position(k);
  return (static_cast<double>(c.row) / n + static_cast<double>(c.col) / n) / kSqrt2;
}

std::vector<int> lis_prefix_lengths(const Tableau& t) {
  std::vector<int> out(t.size());
  const std::vector<int> first = t.rows().empty() ? std::vector<int>{} : t.rows().front();
  std::size_t len = 0;
  for (int k = 1; k <= t.size(); ++k) {
    while (len < first.size() && first[len] <= k) ++len;
    out[k - 1] = static_cast<int>(len);
  }
  return out;
}

int longest_increasing_subsequence(const Permutation& perm, int prefix) {
  std::vector<int> tails;
  for (int i = 0; i < prefix; ++i) {
    auto it = std::lower_bound(tails.begin(), tails.end(), perm[i]);
    if (it == tails.end()) tails.push_back(perm[i]);
    else *it = perm[i];
  }
  return static_cast<int>(tails.size());
}

Rational tv_distance_nu_mu(int n, int k) {
  if (k > 20) throw BudgetError("total variation enumeration limited to k <= 20");
  if (n < 1 || k < 0 || k > n * n) throw ValidationError("need 0 <= k <= n^2");
  BigCount kfact = 1;
  for (int i = 2; i <= k; ++i) kfact *= i;
  Rational tv = 0;
  for (const Partition& lambda : partitions_of(k)) {
    const BigCount d = dimension(lambda);
    const Rational mu(d * d, kfact);
    const Rational nu = lambda.fits_in(n, n) ? mu * nu_ratio(lambda, n) : Rational(0);
    tv += abs(nu - mu);
  }
  return tv;
}

AmusingCheck verify_amusing_identity(const Partition& lambda, int n) {
  if (!lambda.fits_in(n, n)) throw ValidationError("shape exceeds square");
  AmusingCheck out;
  const long long nn = static_cast<long long>(n) * n;
  const long long j = lambda.size() + 1;
  out.rhs = Rational(nn - static_cast<long long>(lambda.first_row()) * lambda.first_row(),
                     j * (nn - j + 1));
  if (lambda.first_row() >= n) {
    out.degenerate = true;
    return out;
  }
  std::vector<int> parts = lambda.parts();
  if (parts.empty()) parts.push_back(1);
  else ++parts[0];
  const Partition next(parts);
  const int limit = std::max<int>(kExactDimensionLimit, static_cast<int>(nn));
  const BigCount d_l = dimension(lambda, limit);
  const BigCount d_next = dimension(next, limit);
  const BigCount c_l = dimension(complement_in_rectangle(lambda, n, n), limit);
  const BigCount c_next = dimension(complement_in_rectangle(next, n, n), limit);
  out.lhs = Rational(d_l * c_next, d_next * c_l);
  return out;
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw ValidationError("KS statistic needs samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  return d;
}

ChiSquare chi_square(const std::vector<double>& observed, const std::vector<double>& expected) {
  if (observed.size() != expected.size()) throw ValidationError("bin counts differ");
  if (observed.size() < 2) throw ValidationError("chi-square needs at least two bins");
  ChiSquare out;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    if (!(expected[i] > 0)) throw ValidationError("expected counts must be positive");
    const double diff = observed[i] - expected[i];
    out.statistic += diff * diff / expected[i];
  }
  out.dof = static_cast<int>(observed.size()) - 1;
  out.pvalue = boost::math::gamma_q(out.dof / 2.0, out.statistic / 2.0);
  return out;
}

}  // namespace limitshape
