#pragma once

#include <functional>
#include <vector>

namespace limitshape {

// Piecewise-linear function on N equal cells of [a, b].
class GridFunction {
 public:
  GridFunction() = default;
  GridFunction(double a, double b, std::vector<double> values);

  static GridFunction sample(double a, double b, int cells,
                             const std::function<double(double)>& f);

  double a() const { return a_; }
  double b() const { return b_; }
  int cells() const { return static_cast<int>(values_.size()) - 1; }
  double step() const { return (b_ - a_) / cells(); }
  double node(int i) const { return a_ + (b_ - a_) * i / cells(); }
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }
  double slope(int cell) const { return (values_[cell + 1] - values_[cell]) / step(); }
  std::vector<double> slopes() const;
  double operator()(double u) const;

  // ∫ (g − |u|) du, exact for the interpolant.
  double area_above_abs() const;
  bool is_lipschitz(double tol = 1e-12) const;

 private:
  double a_ = 0;
  double b_ = 1;
  std::vector<double> values_;
};

// −½ ∬ g'(s) g'(t) log|s−t| ds dt, exact for piecewise-linear g.
double functional_K(const GridFunction& g);
// Same for a piecewise-linear function with arbitrary increasing nodes.
double functional_K(const std::vector<double>& nodes, const std::vector<double>& values);

// Monotone lattice-like path from (0,1) to (1,0): x nondecreasing, y nonincreasing.
struct MonotonePath {
  std::vector<double> x;
  std::vector<double> y;
};

// Path through (0,1), the graph of f on a uniform grid of [0,1], and (1,0).
MonotonePath path_from_decreasing(const std::vector<double>& f_values);
// Path traced by a rotated boundary g (assumed to end on the square's corners).
MonotonePath path_from_rotated(const std::vector<double>& u, const std::vector<double>& v);

// ∬ log|f(x) − y + f⁻¹(y) − x| over the unit square.
double functional_I(const MonotonePath& path);

// (1/π) PV ∫ f(t)/(t−s) dt of the interpolant.
double hilbert_pv(const GridFunction& f, double s);

// Solution of (1/π) PV ∫ g(y)/(y−x) dy = f(x) on [−1, 1] that equals
// (1/(π√(1−x²))) PV ∫ √(1−y²) f(y)/(x−y) dy + c/√(1−x²), sampled at the
// nodes of an N-cell grid. f only has to be finite on the open interval.
// Endpoint values are extrapolated from the two nearest nodes assuming
// A + B√(1∓x) behaviour, which holds for the bounded solution.
GridFunction airfoil_solve(const std::function<double(double)>& f, int N, double c = 0.0);
// Right-hand side of the differentiated optimality condition, rescaled to [−1, 1].
double airfoil_rhs_square(double alpha, double x);

// −∫ g'(t) log|s−t| dt − λ s for the interpolant g.
double optimality_residual(const GridFunction& g, double lambda, double s);

struct MinimizerOptions {
  int max_iterations = 5000;
  double tolerance = 1e-12;
};

struct MinimizerResult {
  GridFunction g;
  double K = 0;
  int iterations = 0;
  bool converged = false;
};

// Projected gradient descent for K over α-admissible grid functions on
// [−θ√2/2, √2/2].
MinimizerResult minimize_K(double alpha, double theta, int N, MinimizerOptions options = {});

// Euclidean projection of cell slopes on [a, a + N h] onto the set with
// |d| ≤ 1, g(a) = start, g(b) = end and ∫ g du = integral.
std::vector<double> project_slopes(const std::vector<double>& slopes, double a, double h,
                                   double start, double end, double integral);

// Density of the rescaled cotransition law of a continual diagram with
// slope g' on [K, K'] and area A. Throws ValidationError at the support edge.
double continual_cotransition_density(const GridFunction& slope, double area, double x);

}  // namespace limitshape
