#include "limitshape/surfaces.hpp"

#include <algorithm>
#include <cmath>

#include "limitshape/errors.hpp"

namespace limitshape {

namespace {

constexpr int kBisectionSteps = 80;
constexpr double kDomainSlack = 1e-12;

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ValidationError("alpha must lie in [0,1]");
}

void check_theta(double theta) {
  if (!(theta > 0.0 && theta <= 1.0)) throw ValidationError("theta must lie in (0,1]");
}

template <class F>
auto curve_at(F curve, double u) {
  return [curve, u](double a) { return curve(a, u); };
}

// Smallest α with curve(α) ≥ v (upper = false) or largest α with
// curve(α) ≤ v (upper = true), for a curve nondecreasing in α.
template <class F>
double bisect_alpha(F curve, double v, bool largest) {
  // Edges through the origin are hit exactly (v = |u|); the opposite edges
  // carry rounding from √2 − |u|.
  const double tol = largest ? 0.0 : 1e-15;
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < kBisectionSteps; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double c = curve(mid);
    if (largest ? c <= v + tol : c < v - tol) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

// On the boundary the level equation holds on a whole α-interval; the value
// continuous from the interior is its top end on the edges through the
// origin and its bottom end on the opposite edges. At the corners (0, ymax)
// and (1, 0) every α solves it and the surface jumps; 1/2 is the mean of the
// corner entry by the transpose and complement symmetries.
template <class F>
double solve_level(F curve, double x, double y, double ymax) {
  const RotatedPoint p = to_rotated(x, y);
  const bool low_edge = x <= 0 || y <= 0;
  const bool high_edge = x >= 1 || y >= ymax;
  if (x <= 0 && y <= 0) return 0.0;
  if (x >= 1 && y >= ymax) return 1.0;
  if (low_edge && high_edge) return 0.5;
  if (low_edge) return bisect_alpha(curve_at(curve, p.u), p.v, true);
  const double first = bisect_alpha(curve_at(curve, p.u), p.v, false);
  if (high_edge) return first;
  return 0.5 * (first + bisect_alpha(curve_at(curve, p.u), p.v, true));
}

}  // namespace

RotatedPoint to_rotated(double x, double y) { return {(x - y) / kSqrt2, (x + y) / kSqrt2}; }

void from_rotated(RotatedPoint p, double& x, double& y) {
  x = (p.v + p.u) / kSqrt2;
  y = (p.v - p.u) / kSqrt2;
}

LevelCurveParams LevelCurveParams::make(double alpha, double theta) {
  check_alpha(alpha);
  check_theta(theta);
  LevelCurveParams p;
  p.alpha = alpha;
  p.theta = theta;
  const double q = alpha * (1 - alpha);
  p.beta = std::sqrt(2 * q);
  p.beta_bar = std::sqrt(2 * theta * q);
  const double b = alpha * (1 - theta) * kSqrt2 / 2;
  p.beta1 = p.beta_bar - b;
  p.beta2 = p.beta_bar + b;
  const double root = 2 * std::sqrt(theta * q);
  if (root > 0) {
    p.gamma1 = (alpha + theta * (1 - alpha)) / root;
    p.gamma2 = (theta * alpha + 1 - alpha) / root;
  } else {
    p.gamma1 = p.gamma2 = HUGE_VAL;
  }
  p.alpha_star = theta / (1 + theta);
  p.lambda = std::log((1 - alpha) / alpha);
  return p;
}

double entropy(double alpha) {
  auto xlogx = [](double t) { return t > 0 ? t * std::log(t) : 0.0; };
  return -xlogx(alpha) - xlogx(1 - alpha);
}

double g_alpha(double alpha, double u) {
  check_alpha(alpha);
  const double c = 1 - 2 * alpha;
  const double r2 = 2 * alpha * (1 - alpha) - u * u;
  if (r2 <= 0) return alpha <= 0.5 ? std::fabs(u) : kSqrt2 - std::fabs(u);
  const double r = std::sqrt(r2);
  // atan2 in the second term covers α > 1/2 with the same expression.
  return (2 / kPi) * u * std::atan2(c * u, r) + (kSqrt2 / kPi) * std::atan2(kSqrt2 * r, c);
}

double g_alpha_slope(double alpha, double u) {
  check_alpha(alpha);
  const double r2 = 2 * alpha * (1 - alpha) - u * u;
  if (r2 <= 0) {
    double s = u > 0 ? 1.0 : (u < 0 ? -1.0 : 0.0);
    return alpha <= 0.5 ? s : -s;
  }
  return (2 / kPi) * std::atan2((1 - 2 * alpha) * u, std::sqrt(r2));
}

double dg_dalpha(double alpha, double u) {
  if (alpha <= 0 || alpha >= 1) return 0.0;
  const double r2 = 2 * alpha * (1 - alpha) - u * u;
  if (r2 <= 0) return 0.0;
  return std::sqrt(r2) / (kPi * alpha * (1 - alpha));
}

double limit_surface_L(double x, double y) {
  x = std::clamp(x, 0.0, 1.0);
  y = std::clamp(y, 0.0, 1.0);
  // On the edges the level curve leaves |u| (or √2 − |u|) where its support
  // edge √(2α(1−α)) reaches |u|; bisection only resolves that flat root to ~1e-11.
  if (x <= 0 || y <= 0) {
    const double t = std::max(x, y);
    return (1 - std::sqrt(1 - t * t)) / 2;
  }
  if (x >= 1 || y >= 1) {
    const double t = std::min(x, y);
    return (1 + std::sqrt(2 * t - t * t)) / 2;
  }
  return solve_level([](double a, double u) { return g_alpha(a, u); }, x, y, 1.0);
}

double square_surface_M(double x, double y) {
  double l = limit_surface_L(x, y);
  return l > 0 ? std::min(-std::log(l), kSurfaceCap) : kSurfaceCap;
}

double semicircle_density(double alpha, double u) { return dg_dalpha(alpha, u); }

double semicircle_cdf(double alpha, double u) {
  const double b2 = 2 * alpha * (1 - alpha);
  const double b = std::sqrt(b2);
  if (u <= -b) return 0.0;
  if (u >= b) return 1.0;
  return 0.5 + (u * std::sqrt(b2 - u * u) + b2 * std::asin(u / b)) / (kPi * b2);
}

namespace {

struct RectPieces {
  double xi, t1, t2, s1, s2, arc, g1m;
};

RectPieces rect_pieces(const LevelCurveParams& p, double u) {
  const double a = p.alpha, th = p.theta;
  const double b = a * (1 - th) * kSqrt2 / 2;
  RectPieces r;
  r.xi = std::clamp((u - b) / p.beta_bar, -1.0, 1.0);
  // γ ∓ 1 in factored form; the plain differences lose every digit near γ = 1.
  const double q = kSqrt2 * p.beta_bar;
  const double sa = std::sqrt(a), sb = std::sqrt(th * (1 - a));
  const double sc = std::sqrt(1 - a), sd = std::sqrt(th * a);
  const double d1 = (a - th * (1 - a)) / (sa + sb);
  const double d2 = ((1 - a) - th * a) / (sc + sd);
  const double g1m = d1 * d1 / q, g1p = (sa + sb) * (sa + sb) / q;
  const double g2m = d2 * d2 / q, g2p = (sc + sd) * (sc + sd) / q;
  r.g1m = g1m;
  r.t1 = std::atan2(std::sqrt((1 - r.xi) * g1m), std::sqrt((1 + r.xi) * g1p));
  r.t2 = std::atan2(std::sqrt((1 + r.xi) * g2m), std::sqrt((1 - r.xi) * g2p));
  r.s1 = std::fabs(a - th * (1 - a)) / q;
  r.s2 = std::fabs(th * a - (1 - a)) / q;
  r.arc = std::asin(r.xi) + kPi / 2;
  return r;
}

// Closed forms for 0 < α ≤ 1/2 on [−β₁, β₂].
double rect_closed_low(const LevelCurveParams& p, double u) {
  RectPieces r = rect_pieces(p, u);
  const double g1 = p.gamma1, g2 = p.gamma2;
  const double scale = 2 * p.beta_bar / kPi;
  if (p.alpha <= p.alpha_star) {
    return p.beta1 + scale * (-(r.xi + g1) * r.t1 + (r.xi - g2) * r.t2 +
                              0.5 * r.arc * (r.s2 - r.s1) + (kPi / 2) * r.g1m);
  }
  return p.theta * kSqrt2 - p.beta1 +
         scale * ((r.xi + g1) * r.t1 + (r.xi - g2) * r.t2 + 0.5 * r.arc * (r.s1 + r.s2) +
                  (kPi / 2) * -r.g1m);
}

double rect_extended_low(double theta, double alpha, double u) {
  if (alpha <= 0) return std::fabs(u);
  LevelCurveParams p = LevelCurveParams::make(alpha, theta);
  if (u < -p.beta1) return alpha <= p.alpha_star ? -u : theta * kSqrt2 + u;
  if (u > p.beta2) return u;
  return rect_closed_low(p, u);
}

}  // namespace

double rect_level_curve(double theta, double alpha, double u) {
  check_theta(theta);
  if (!(alpha > 0 && alpha < 1)) throw ValidationError("alpha must lie in (0,1)");
  if (alpha > 0.5) {
    const double up = (1 - theta) * kSqrt2 / 2 - u;
    return (1 + theta) * kSqrt2 / 2 - rect_level_curve(theta, 1 - alpha, up);
  }
  LevelCurveParams p = LevelCurveParams::make(alpha, theta);
  if (u < -p.beta1 - kDomainSlack || u > p.beta2 + kDomainSlack)
    throw ValidationError("u outside the closed-form interval [-beta1, beta2]");
  return rect_closed_low(p, u);
}

double rect_level_curve_extended(double theta, double alpha, double u) {
  check_theta(theta);
  check_alpha(alpha);
  if (alpha > 0.5) {
    const double up = (1 - theta) * kSqrt2 / 2 - u;
    return (1 + theta) * kSqrt2 / 2 - rect_extended_low(theta, 1 - alpha, up);
  }
  return rect_extended_low(theta, alpha, u);
}

double rect_level_curve_signed(double theta, double alpha, double u) {
  LevelCurveParams p = LevelCurveParams::make(alpha, theta);
  if (!(alpha > 0 && alpha <= 0.5)) throw ValidationError("signed form needs alpha in (0,1/2]");
  if (u < -p.beta1 - kDomainSlack || u > p.beta2 + kDomainSlack)
    throw ValidationError("u outside the closed-form interval [-beta1, beta2]");
  RectPieces r = rect_pieces(p, u);
  const double sg = alpha <= p.alpha_star ? 1.0 : -1.0;
  const double half = theta * kSqrt2 / 2;
  return half + sg * (p.beta1 - half) +
         (2 * p.beta_bar / kPi) *
             (sg * (-r.xi - p.gamma1) * r.t1 + (r.xi - p.gamma2) * r.t2 +
              0.5 * r.arc * (1 - theta) / (kSqrt2 * p.beta_bar) + sg * (kPi / 2) * r.g1m);
}

double rect_level_curve_slope(double theta, double alpha, double u) {
  LevelCurveParams p = LevelCurveParams::make(alpha, theta);
  if (u <= -p.beta1) return -1.0;
  if (u >= p.beta2) return 1.0;
  const double b = alpha * (1 - theta) * kSqrt2 / 2;
  const double xi = (u - b) / p.beta_bar;
  const double num = (1 - theta) * std::sqrt(alpha * (1 - alpha)) + xi * std::sqrt(theta) * (1 - 2 * alpha);
  return (2 / kPi) * std::atan2(num, std::sqrt(theta * (1 - xi * xi)));
}

double rect_surface_L(double theta, double x, double y) {
  check_theta(theta);
  x = std::clamp(x, 0.0, 1.0);
  y = std::clamp(y, 0.0, theta);
  return solve_level([&](double a, double u) { return rect_level_curve_extended(theta, a, u); },
                     x, y, theta);
}

double plane_partition_surface(double theta, double x, double y) {
  double l = rect_surface_L(theta, x, y);
  return l > 0 ? std::min(-std::log(l), kSurfaceCap) : kSurfaceCap;
}

double plancherel_omega(double u) {
  const double a = std::fabs(u);
  if (a >= kSqrt2) return a;
  return (2 / kPi) * (u * std::asin(u / kSqrt2) + std::sqrt(2 - u * u));
}

}  // namespace limitshape
