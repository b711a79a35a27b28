#pragma once

namespace limitshape {

inline constexpr double kSqrt2 = 1.41421356237309504880;
inline constexpr double kPi = 3.14159265358979323846;
// log of the largest double; M is clamped here where L vanishes.
inline constexpr double kSurfaceCap = 745.0;

struct RotatedPoint {
  double u = 0;
  double v = 0;
};

RotatedPoint to_rotated(double x, double y);
void from_rotated(RotatedPoint p, double& x, double& y);

struct LevelCurveParams {
  double alpha = 0;
  double theta = 1;
  double beta = 0;
  double beta_bar = 0;
  double beta1 = 0;
  double beta2 = 0;
  double gamma1 = 1;
  double gamma2 = 1;
  double alpha_star = 0.5;
  double lambda = 0;

  static LevelCurveParams make(double alpha, double theta = 1.0);
};

// −α log α − (1−α) log(1−α)
double entropy(double alpha);

// Square level curve, extended by |u| (α ≤ 1/2) or √2−|u| (α > 1/2) outside [−β, β].
double g_alpha(double alpha, double u);
// Slope of g_alpha in u.
double g_alpha_slope(double alpha, double u);
double dg_dalpha(double alpha, double u);

double limit_surface_L(double x, double y);
double square_surface_M(double x, double y);

double semicircle_density(double alpha, double u);
double semicircle_cdf(double alpha, double u);

// Closed form on [−β₁, β₂] for α ≤ 1/2, and through the 180° reflection for
// α > 1/2. Throws ValidationError outside that interval.
double rect_level_curve(double theta, double alpha, double u);
// The same curve on the whole [−θ√2/2, √2/2], following the rectangle
// boundary outside the closed-form interval.
double rect_level_curve_extended(double theta, double alpha, double u);
// Single signed display with the ± switch at α*, α ≤ 1/2 only. Kept for
// comparison against the two-branch closed forms.
double rect_level_curve_signed(double theta, double alpha, double u);
// Slope of the closed form for α ≤ α*.
double rect_level_curve_slope(double theta, double alpha, double u);

double rect_surface_L(double theta, double x, double y);
double plane_partition_surface(double theta, double x, double y);

double plancherel_omega(double u);

}  // namespace limitshape
