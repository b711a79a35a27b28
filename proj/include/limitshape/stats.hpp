#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "limitshape/bigint.hpp"
#include "limitshape/diagrams.hpp"
#include "limitshape/sampler.hpp"

namespace limitshape {

struct TrialReport {
  std::string id;
  std::string description;
  std::map<std::string, double> params;
  std::uint64_t seed = 0;
  double statistic = 0;
  double threshold = 0;
  bool pass = false;
  double runtime_seconds = 0;
  std::string note;
};

// Rotated boundary of λ ⊆ □_n (rows along x, columns along y), scaled by 1/n,
// at the 2n+1 lattice nodes u_m = m/(n√2), m = −n..n. Entry m+n is g(u_m).
std::vector<double> rotated_boundary(const Partition& lambda, int n);
// Same for λ inside a rows × cols box, scaled by 1/rows: nodes m = −cols..rows.
std::vector<double> rotated_boundary_rect(const Partition& lambda, int rows, int cols);

double supnorm_level_gap(const Tableau& t, int k);

struct SurfaceGap {
  double gap = 0;
  int cells = 0;
  // |t/n² − L| per cell, row-major; NaN outside the interior window.
  std::vector<std::vector<double>> grid;
};
SurfaceGap surface_gap(const Tableau& t, double margin_exponent);
// Rectangle with n rows and m = θn columns, against L_θ; the window uses
// min(ij, (n−i)(m−j)) > (nm)^{(3/2+ε)/2}, which reduces to the square case at θ = 1.
SurfaceGap rect_surface_gap(const Tableau& t, double margin_exponent);

// (X − Y)/√2 for the cell holding entry k, with X = i/n, Y = j/n.
double entry_location_u(const Tableau& t, int k);
double entry_location_v(const Tableau& t, int k);

// λ_T^k(1) for k = 1..|T| (index k−1).
std::vector<int> lis_prefix_lengths(const Tableau& t);
// Longest increasing subsequence by patience sorting.
int longest_increasing_subsequence(const Permutation& perm, int prefix);

Rational tv_distance_nu_mu(int n, int k);

struct AmusingCheck {
  bool degenerate = false;
  Rational lhs;
  Rational rhs;
  bool holds() const { return !degenerate && lhs == rhs; }
};
AmusingCheck verify_amusing_identity(const Partition& lambda, int n);

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

struct ChiSquare {
  double statistic = 0;
  int dof = 0;
  double pvalue = 1;
};
ChiSquare chi_square(const std::vector<double>& observed, const std::vector<double>& expected);

}  // namespace limitshape
