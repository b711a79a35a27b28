#include "limitshape/variational.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <limits>

#include "limitshape/errors.hpp"
#include "limitshape/surfaces.hpp"

namespace limitshape {

namespace {

// F'' = log|z|, F(0) = 0.
double second_antiderivative(double z) {
  if (z == 0) return 0.0;
  return 0.5 * z * z * std::log(std::fabs(z)) - 0.75 * z * z;
}

// G' = log|z|, G(0) = 0.
double first_antiderivative(double z) {
  if (z == 0) return 0.0;
  return z * std::log(std::fabs(z)) - z;
}

// ∫_a^b ∫_c^d log|s − t| dt ds.
double log_rectangle(double a, double b, double c, double d) {
  return -(second_antiderivative(b - d) - second_antiderivative(b - c) -
           second_antiderivative(a - d) + second_antiderivative(a - c));
}

// Kernel entries for a uniform grid: W[k] = ∬ log|s−t| over two cells k apart.
std::vector<double> uniform_kernel(int cells, double h) {
  std::vector<double> w(cells);
  const double logh = std::log(h);
  for (int k = 0; k < cells; ++k) {
    // Second difference of F at integers, in units of h.
    double f = second_antiderivative(k + 1.0) - 2 * second_antiderivative(k) +
               second_antiderivative(std::fabs(k - 1.0));
    w[k] = h * h * (f + logh);
  }
  return w;
}

std::vector<double> toeplitz_apply(const std::vector<double>& w, const std::vector<double>& d) {
  const int n = static_cast<int>(d.size());
  std::vector<double> out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double s = 0;
    for (int j = 0; j < n; ++j) s += w[std::abs(i - j)] * d[j];
    out[i] = s;
  }
  return out;
}

}  // namespace

GridFunction::GridFunction(double a, double b, std::vector<double> values)
    : a_(a), b_(b), values_(std::move(values)) {
  if (!(a < b)) throw ValidationError("grid domain must satisfy a < b");
  if (values_.size() < 2) throw ValidationError("grid needs at least one cell");
}

GridFunction GridFunction::sample(double a, double b, int cells,
                                  const std::function<double(double)>& f) {
  if (cells < 1) throw ValidationError("grid needs at least one cell");
  std::vector<double> v(cells + 1);
  for (int i = 0; i <= cells; ++i) v[i] = f(i == cells ? b : a + (b - a) * i / cells);
  return GridFunction(a, b, std::move(v));
}

std::vector<double> GridFunction::slopes() const {
  std::vector<double> d(cells());
  for (int c = 0; c < cells(); ++c) d[c] = slope(c);
  return d;
}

double GridFunction::operator()(double u) const {
  if (u <= a_) return values_.front();
  if (u >= b_) return values_.back();
  const double t = (u - a_) / step();
  int c = std::min(static_cast<int>(t), cells() - 1);
  const double frac = t - c;
  return values_[c] + frac * (values_[c + 1] - values_[c]);
}

double GridFunction::area_above_abs() const {
  double s = 0;
  for (int c = 0; c < cells(); ++c) s += 0.5 * (values_[c] + values_[c + 1]);
  s *= step();
  auto abs_primitive = [](double u) { return 0.5 * u * std::fabs(u); };
  return s - (abs_primitive(b_) - abs_primitive(a_));
}

bool GridFunction::is_lipschitz(double tol) const {
  for (int c = 0; c < cells(); ++c)
    if (std::fabs(slope(c)) > 1 + tol) return false;
  return true;
}

double functional_K(const GridFunction& g) {
  const std::vector<double> d = g.slopes();
  const std::vector<double> w = uniform_kernel(g.cells(), g.step());
  const std::vector<double> wd = toeplitz_apply(w, d);
  double s = 0;
  for (std::size_t i = 0; i < d.size(); ++i) s += d[i] * wd[i];
  return -0.5 * s;
}

double functional_K(const std::vector<double>& nodes, const std::vector<double>& values) {
  if (nodes.size() != values.size() || nodes.size() < 2)
    throw ValidationError("nodes and values must match");
  std::vector<double> lo, hi, d;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const double len = nodes[i + 1] - nodes[i];
    if (len < 0) throw ValidationError("nodes must be nondecreasing");
    if (len == 0) continue;
    lo.push_back(nodes[i]);
    hi.push_back(nodes[i + 1]);
    d.push_back((values[i + 1] - values[i]) / len);
  }
  double s = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    for (std::size_t j = 0; j < d.size(); ++j)
      if (d[j] != 0) s += d[i] * d[j] * log_rectangle(lo[i], hi[i], lo[j], hi[j]);
  }
  return -0.5 * s;
}

MonotonePath path_from_decreasing(const std::vector<double>& f_values) {
  if (f_values.size() < 2) throw ValidationError("need at least two samples");
  MonotonePath p;
  const int m = static_cast<int>(f_values.size()) - 1;
  p.x.push_back(0.0);
  p.y.push_back(1.0);
  for (int i = 0; i <= m; ++i) {
    const double v = f_values[i];
    if (v < 0 || v > 1) throw ValidationError("function values must lie in [0,1]");
    if (i > 0 && v > f_values[i - 1]) throw ValidationError("function must be nonincreasing");
    p.x.push_back(static_cast<double>(i) / m);
    p.y.push_back(v);
  }
  p.x.push_back(1.0);
  p.y.push_back(0.0);
  return p;
}

MonotonePath path_from_rotated(const std::vector<double>& u, const std::vector<double>& v) {
  if (u.size() != v.size() || u.size() < 2) throw ValidationError("u and v must match");
  MonotonePath p;
  for (std::size_t i = 0; i < u.size(); ++i) {
    double x, y;
    from_rotated({u[i], v[i]}, x, y);
    x = std::clamp(x, 0.0, 1.0);
    y = std::clamp(y, 0.0, 1.0);
    if (i > 0) {
      // Rounding in the rotation can break monotonicity by an ulp or so.
      x = std::max(x, p.x.back());
      y = std::min(y, p.y.back());
    }
    p.x.push_back(x);
    p.y.push_back(y);
  }
  return p;
}

double functional_I(const MonotonePath& path) {
  const std::size_t n = path.x.size();
  if (n < 2 || path.y.size() != n) throw ValidationError("path needs matching coordinates");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (path.x[i + 1] < path.x[i] || path.y[i + 1] > path.y[i])
      throw ValidationError("path must be monotone");

  // f⁻¹ on y-pieces: x = p + q y for y in [ylo, yhi].
  struct Piece {
    double lo, hi, p, q;
  };
  std::vector<Piece> inverse;
  std::vector<Piece> forward;  // f on x-pieces: y = p + q x
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double x0 = path.x[i], x1 = path.x[i + 1], y0 = path.y[i], y1 = path.y[i + 1];
    if (y0 > y1) {
      const double q = (x1 - x0) / (y1 - y0);
      inverse.push_back({y1, y0, x0 - q * y0, q});
    }
    if (x1 > x0) {
      const double q = (y1 - y0) / (x1 - x0);
      forward.push_back({x0, x1, y0 - q * x0, q});
    }
  }

  auto inner = [&](double x, double fx) {
    double s = 0;
    for (const Piece& pc : inverse) {
      // hook = fx − y + p + q y − x = A + B y with B = q − 1 ≤ −1.
      const double A = fx - x + pc.p;
      const double B = pc.q - 1;
      s += (first_antiderivative(A + B * pc.hi) - first_antiderivative(A + B * pc.lo)) / B;
    }
    return s;
  };

  double total = 0;
  for (const Piece& pc : forward) {
    total += boost::math::quadrature::gauss<double, 7>::integrate(
        [&](double x) { return inner(x, pc.p + pc.q * x); }, pc.lo, pc.hi);
  }
  return total;
}

double hilbert_pv(const GridFunction& f, double s) {
  if (!(s > f.a() && s < f.b())) throw ValidationError("evaluation point must be interior");
  const int n = f.cells();
  const double h = f.step();
  double sum = 0;
  for (int i = 0; i < n; ++i) {
    const double t0 = f.node(i), t1 = (i + 1 == n) ? f.b() : f.node(i + 1);
    const double d = f.slope(i);
    const double ell = f.values()[i] + d * (s - t0);
    sum += d * h;
    // At a node the two log|0| terms from neighbouring cells cancel.
    const double r1 = std::fabs(t1 - s), r0 = std::fabs(t0 - s);
    if (r1 > 0) sum += ell * std::log(r1);
    if (r0 > 0) sum -= ell * std::log(r0);
  }
  return sum / kPi;
}

GridFunction airfoil_solve(const std::function<double(double)>& f, int N, double c) {
  if (N < 2) throw ValidationError("airfoil grid needs at least two cells");
  // y = −cos φ with a midpoint rule in φ; the weight √(1−y²) dy becomes sin²φ dφ.
  const int M = 2 * N;
  std::vector<double> ys(M), fy(M), wt(M);
  for (int j = 0; j < M; ++j) {
    const double phi = kPi * (j + 0.5) / M;
    ys[j] = -std::cos(phi);
    fy[j] = f(ys[j]);
    wt[j] = std::sin(phi) * std::sin(phi) * kPi / M;
  }
  std::vector<double> g(N + 1, 0.0);
  for (int i = 1; i < N; ++i) {
    const double x = -1.0 + 2.0 * i / N;
    const double fx = f(x);
    double regular = 0;
    for (int j = 0; j < M; ++j) {
      const double gap = x - ys[j];
      if (std::fabs(gap) < 1e-12) {
        const double e = 1e-6;
        regular -= wt[j] * (f(x + e) - f(x - e)) / (2 * e);
      } else {
        regular += wt[j] * (fy[j] - fx) / gap;
      }
    }
    // PV ∫ √(1−y²)/(x−y) dy = π x.
    const double pv = regular + fx * kPi * x;
    const double root = std::sqrt(1 - x * x);
    g[i] = pv / (kPi * root) + c / root;
  }
  // Bounded solutions behave like A + B√(1∓x) at the ends.
  const double r2 = std::sqrt(2.0);
  g[0] = (r2 * g[1] - g[2]) / (r2 - 1);
  g[N] = (r2 * g[N - 1] - g[N - 2]) / (r2 - 1);
  return GridFunction(-1.0, 1.0, std::move(g));
}

double airfoil_rhs_square(double alpha, double x) {
  LevelCurveParams p = LevelCurveParams::make(alpha);
  const double b2 = p.beta * p.beta;
  return (p.lambda + std::log(b2 * (1 - x * x) / (0.5 - b2 * x * x))) / kPi;
}

double optimality_residual(const GridFunction& g, double lambda, double s) {
  double acc = 0;
  for (int c = 0; c < g.cells(); ++c) {
    const double t0 = g.node(c), t1 = g.node(c + 1);
    acc += g.slope(c) * (first_antiderivative(t1 - s) - first_antiderivative(t0 - s));
  }
  return -acc - lambda * s;
}

std::vector<double> project_slopes(const std::vector<double>& slopes, double a, double h,
                                   double start, double end, double integral) {
  const int n = static_cast<int>(slopes.size());
  const double b = a + n * h;
  const double center = 0.5 * (a + b);
  // ∫ g = (b−a) start + Σ d h (b − m_c) and Σ d h = rise; with centred
  // weights z_c = center − m_c the second constraint is Σ d h z_c = moment.
  const double rise = end - start;
  const double moment = integral - (b - a) * start - rise * (b - a) / 2;
  if (std::fabs(rise) > (b - a) + 1e-12) throw ValidationError("endpoint values not reachable");
  std::vector<double> z(n);
  for (int c = 0; c < n; ++c) z[c] = center - (a + (c + 0.5) * h);

  std::vector<double> d(n);
  auto fill = [&](double m1, double m2) {
    for (int c = 0; c < n; ++c) d[c] = std::clamp(slopes[c] + m1 + m2 * z[c], -1.0, 1.0);
  };
  auto solve_shift = [&](double m2) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (int c = 0; c < n; ++c) {
      lo = std::min(lo, -1.0 - (slopes[c] + m2 * z[c]));
      hi = std::max(hi, 1.0 - (slopes[c] + m2 * z[c]));
    }
    for (int it = 0; it < 200 && hi - lo > 1e-16 * (1 + std::fabs(lo)); ++it) {
      const double mid = 0.5 * (lo + hi);
      fill(mid, m2);
      double s = 0;
      for (double v : d) s += v;
      if (s * h < rise) lo = mid;
      else hi = mid;
    }
    fill(0.5 * (lo + hi), m2);
    double s = 0;
    for (int c = 0; c < n; ++c) s += d[c] * h * z[c];
    return s - moment;
  };

  double lo = -1, hi = 1;
  while (solve_shift(lo) > 0) {
    lo *= 2;
    if (lo < -1e12) throw ValidationError("area constraint not reachable");
  }
  while (solve_shift(hi) < 0) {
    hi *= 2;
    if (hi > 1e12) throw ValidationError("area constraint not reachable");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15 * (1 + std::fabs(lo)); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (solve_shift(mid) < 0) lo = mid;
    else hi = mid;
  }
  solve_shift(0.5 * (lo + hi));
  return d;
}

MinimizerResult minimize_K(double alpha, double theta, int N, MinimizerOptions options) {
  if (!(alpha > 0 && alpha < 1)) throw ValidationError("alpha must lie in (0,1)");
  if (!(theta > 0 && theta <= 1)) throw ValidationError("theta must lie in (0,1]");
  if (N < 2) throw ValidationError("grid needs at least two cells");
  const double a = -theta * kSqrt2 / 2, b = kSqrt2 / 2;
  const double h = (b - a) / N;
  const double start = theta * kSqrt2 / 2, end = kSqrt2 / 2;
  const double integral = alpha * theta + 0.5 * (a * a + b * b);

  const std::vector<double> w = uniform_kernel(N, h);
  // K(d) = −½ dᵀ W d, gradient −W d. Spectral radius of W by power iteration.
  std::vector<double> v(N);
  for (int c = 0; c < N; ++c) v[c] = 1.0 + 0.1 * std::sin(c + 1.0);
  double rho = 0;
  for (int it = 0; it < 200; ++it) {
    std::vector<double> wv = toeplitz_apply(w, v);
    double norm = 0;
    for (double x : wv) norm += x * x;
    norm = std::sqrt(norm);
    if (norm == 0) break;
    for (int c = 0; c < N; ++c) v[c] = wv[c] / norm;
    if (std::fabs(norm - rho) < 1e-12 * norm) {
      rho = norm;
      break;
    }
    rho = norm;
  }
  const double step = 0.5 / rho;

  auto K_of = [&](const std::vector<double>& d) {
    std::vector<double> wd = toeplitz_apply(w, d);
    double s = 0;
    for (int c = 0; c < N; ++c) s += d[c] * wd[c];
    return -0.5 * s;
  };

  std::vector<double> d = project_slopes(std::vector<double>(N, 0.0), a, h, start, end, integral);
  MinimizerResult res;
  std::vector<double> best = d;
  double best_K = K_of(d);
  int it = 0;
  for (; it < options.max_iterations; ++it) {
    std::vector<double> wd = toeplitz_apply(w, d);
    std::vector<double> trial(N);
    for (int c = 0; c < N; ++c) trial[c] = d[c] + step * wd[c];
    std::vector<double> next = project_slopes(trial, a, h, start, end, integral);
    double change = 0;
    for (int c = 0; c < N; ++c) change = std::max(change, std::fabs(next[c] - d[c]));
    d = std::move(next);
    const double k = K_of(d);
    if (k <= best_K) {
      best_K = k;
      best = d;
    }
    if (change < options.tolerance) {
      res.converged = true;
      ++it;
      break;
    }
  }
  std::vector<double> vals(N + 1);
  vals[0] = start;
  for (int c = 0; c < N; ++c) vals[c + 1] = vals[c] + best[c] * h;
  vals[N] = end;
  res.g = GridFunction(a, b, std::move(vals));
  res.K = best_K;
  res.iterations = it;
  return res;
}

double continual_cotransition_density(const GridFunction& slope, double area, double x) {
  const double lo = slope.a(), hi = slope.b();
  if (!(x > lo && x < hi)) throw ValidationError("x must lie strictly inside the support");
  if (!(area > 0)) throw ValidationError("area must be positive");
  // PV ∫ g'(u)/(x−u) du = −π · hilbert_pv(g', x).
  const double pv = -kPi * hilbert_pv(slope, x);
  return (2 / (kPi * area)) * std::cos(kPi * slope(x) / 2) * std::sqrt((x - lo) * (hi - x)) *
         std::exp(0.5 * pv);
}

}  // namespace limitshape
