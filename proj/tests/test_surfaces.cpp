#include <gtest/gtest.h>

#include <cmath>

#include "limitshape/errors.hpp"
#include "limitshape/surfaces.hpp"
#include "oracles.hpp"

using namespace limitshape;

namespace {

// ∫ f over [−β, β] through u = β sin φ, which removes the square-root edges.
double integrate_arc(const std::function<double(double)>& f, double beta) {
  return oracle::integrate([&](double p) { return f(beta * std::sin(p)) * beta * std::cos(p); },
                           -kPi / 2, kPi / 2, 400);
}

}  // namespace

TEST(Rotation, RoundTrip) {
  for (double x = 0; x <= 1.0; x += 0.125) {
    for (double y = 0; y <= 1.0; y += 0.125) {
      double x2, y2;
      from_rotated(to_rotated(x, y), x2, y2);
      EXPECT_NEAR(x2, x, 1e-14);
      EXPECT_NEAR(y2, y, 1e-14);
    }
  }
  EXPECT_NEAR(to_rotated(1, 0).u, kSqrt2 / 2, 1e-15);
  EXPECT_NEAR(to_rotated(1, 1).v, kSqrt2, 1e-15);
}

TEST(LevelCurveParams, Invariants) {
  for (double theta : {0.25, 0.5, 0.8, 1.0}) {
    for (double alpha = 0.05; alpha <= 0.5; alpha += 0.05) {
      const auto p = LevelCurveParams::make(alpha, theta);
      EXPECT_GE(p.beta, 0);
      EXPECT_LE(p.beta, kSqrt2 / 2 + 1e-15);
      EXPECT_GE(p.gamma1, 1 - 1e-12);
      EXPECT_GE(p.gamma2, 1 - 1e-12);
      EXPECT_GE(p.gamma2, p.gamma1 - 1e-12);
      if (theta == 1.0) {
        EXPECT_NEAR(p.beta1, p.beta, 1e-15);
        EXPECT_NEAR(p.beta2, p.beta, 1e-15);
        EXPECT_NEAR(p.gamma1, p.gamma2, 1e-15);
      }
    }
    const auto star = LevelCurveParams::make(theta / (1 + theta), theta);
    EXPECT_NEAR(star.gamma1, 1.0, 1e-12);
    EXPECT_NEAR(star.alpha_star, theta / (1 + theta), 1e-15);
  }
  EXPECT_THROW(LevelCurveParams::make(1.5, 1.0), ValidationError);
  EXPECT_THROW(LevelCurveParams::make(0.3, 0.0), ValidationError);
}

TEST(Entropy, Values) {
  EXPECT_NEAR(entropy(0.5), std::log(2.0), 1e-15);
  EXPECT_EQ(entropy(0.0), 0.0);
  for (double a = 0.05; a < 0.5; a += 0.05) EXPECT_NEAR(entropy(a), entropy(1 - a), 1e-15);
}

TEST(LevelCurve, Examples) {
  for (double u = -0.7; u <= 0.7; u += 0.1) EXPECT_NEAR(g_alpha(0.5, u), kSqrt2 / 2, 1e-15);
  const double beta = std::sqrt(0.42);
  EXPECT_NEAR(g_alpha(0.3, beta), beta, 1e-12);
  EXPECT_NEAR(g_alpha(0.3, -beta), beta, 1e-12);
  EXPECT_NEAR(g_alpha(0.2, 0.0), kSqrt2 * std::acos(1 - 2 * 0.2) / kPi, 1e-14);
  EXPECT_NEAR(g_alpha(0.3, 0.65), 0.65, 1e-15);
  EXPECT_NEAR(g_alpha(0.8, 0.7), kSqrt2 - 0.7, 1e-15);
  EXPECT_NEAR(g_alpha(0.0, 0.3), 0.3, 1e-15);
  EXPECT_NEAR(g_alpha(1.0, 0.3), kSqrt2 - 0.3, 1e-15);
  EXPECT_THROW(g_alpha(-0.1, 0.0), ValidationError);
  EXPECT_THROW(g_alpha(1.1, 0.0), ValidationError);
}

TEST(LevelCurve, ReflectionAboveOneHalf) {
  for (double a = 0.05; a < 0.5; a += 0.05)
    for (double u = -0.7; u <= 0.7; u += 0.05)
      EXPECT_NEAR(g_alpha(1 - a, u), kSqrt2 - g_alpha(a, -u), 1e-14);
}

TEST(LevelCurve, Nesting) {
  for (double u = -0.7; u <= 0.7; u += 0.02) {
    double prev = -1;
    for (double a = 0.0; a <= 1.0; a += 0.02) {
      const double g = g_alpha(a, u);
      EXPECT_GE(g, prev - 1e-15);
      if (std::fabs(u) < std::sqrt(2 * a * (1 - a)) && a > 0.02 &&
          std::fabs(u) < std::sqrt(2 * (a - 0.02) * (1 - a + 0.02)))
        EXPECT_GT(g, prev);
      prev = g;
    }
  }
}

TEST(LevelCurve, AreaIsAlpha) {
  for (int i = 1; i <= 9; ++i) {
    const double a = i / 10.0;
    const double area = oracle::integrate([&](double u) { return g_alpha(a, u) - std::fabs(u); },
                                          -kSqrt2 / 2, kSqrt2 / 2, 20000);
    EXPECT_NEAR(area, a, 1e-8) << "alpha=" << a;
  }
}

TEST(LevelCurve, SlopeMatchesFiniteDifference) {
  for (double a : {0.1, 0.3, 0.7}) {
    for (double u = -0.6; u <= 0.6; u += 0.1) {
      const double h = 1e-6;
      EXPECT_NEAR(g_alpha_slope(a, u), (g_alpha(a, u + h) - g_alpha(a, u - h)) / (2 * h), 1e-6);
    }
  }
}

TEST(AlphaDerivative, Examples) {
  EXPECT_EQ(dg_dalpha(0.3, 0.7), 0.0);
  EXPECT_NEAR(dg_dalpha(0.5, 0.0), 4 / (kPi * kSqrt2), 1e-14);
  EXPECT_NEAR(dg_dalpha(0.5, 0.0), 0.9003, 1e-4);
  const double beta = std::sqrt(0.42);
  EXPECT_NEAR(integrate_arc([](double u) { return dg_dalpha(0.3, u); }, beta), 1.0, 1e-8);
}

TEST(AlphaDerivative, IntegratesToTheIncrement) {
  for (double u : {0.0, 0.3, -0.2}) {
    const double a1 = 0.2, a2 = 0.4;
    const double integral = oracle::integrate([&](double a) { return dg_dalpha(a, u); }, a1, a2, 200);
    EXPECT_NEAR(g_alpha(a2, u) - g_alpha(a1, u), integral, 1e-7);
  }
}

TEST(Semicircle, CdfAndDensity) {
  for (double a : {0.1, 0.3, 0.5}) {
    const double b = std::sqrt(2 * a * (1 - a));
    EXPECT_EQ(semicircle_cdf(a, -b), 0.0);
    EXPECT_EQ(semicircle_cdf(a, b), 1.0);
    EXPECT_NEAR(semicircle_cdf(a, 0.0), 0.5, 1e-15);
    for (double u = -0.9 * b; u <= 0.9 * b; u += 0.1 * b) {
      const double h = 1e-5;
      const double fd = (semicircle_cdf(a, u + h) - semicircle_cdf(a, u - h)) / (2 * h);
      EXPECT_NEAR(fd, semicircle_density(a, u), 1e-6);
      EXPECT_DOUBLE_EQ(semicircle_density(a, u), dg_dalpha(a, u));
    }
  }
  EXPECT_NEAR(semicircle_density(0.5, 0.0), std::sqrt(0.5) / (kPi * 0.25), 1e-14);
}

TEST(LimitSurface, SpecialValues) {
  EXPECT_NEAR(limit_surface_L(0.6, 0.0), 0.1, 1e-15);
  EXPECT_NEAR(limit_surface_L(0.0, 0.6), 0.1, 1e-15);
  EXPECT_NEAR(limit_surface_L(0.5, 0.5), 0.5, 1e-12);
  EXPECT_NEAR(limit_surface_L(1.0, 1.0), 1.0, 1e-15);
  EXPECT_NEAR(limit_surface_L(0.0, 0.0), 0.0, 1e-15);
  for (double t = 0.05; t < 1; t += 0.05) {
    EXPECT_NEAR(limit_surface_L(t, t), (1 - std::cos(kPi * t)) / 2, 1e-10);
    EXPECT_NEAR(limit_surface_L(t, 0.0), (1 - std::sqrt(1 - t * t)) / 2, 1e-12);
    EXPECT_NEAR(limit_surface_L(1.0, t), (1 + std::sqrt(2 * t - t * t)) / 2, 1e-12);
  }
}

TEST(LimitSurface, InteriorEdgesAreContinuous) {
  // Approaching an edge the surface moves like the square root of the distance.
  for (double t = 0.1; t < 0.95; t += 0.1) {
    for (double d : {1e-6, 1e-8, 1e-10}) {
      EXPECT_LE(std::fabs(limit_surface_L(t, d) - limit_surface_L(t, 0.0)), 2 * std::sqrt(d)) << t << " " << d;
      EXPECT_LE(std::fabs(limit_surface_L(1 - d, t) - limit_surface_L(1.0, t)), 2 * std::sqrt(d)) << t << " " << d;
    }
  }
}

TEST(LimitSurface, SolvesTheLevelEquation) {
  for (double x = 0.05; x < 1; x += 0.1) {
    for (double y = 0.05; y < 1; y += 0.1) {
      const double a = limit_surface_L(x, y);
      const RotatedPoint p = to_rotated(x, y);
      EXPECT_NEAR(g_alpha(a, p.u), p.v, 1e-10);
    }
  }
}

TEST(LimitSurface, Reflection) {
  for (double x = 0; x <= 1.0001; x += 0.05)
    for (double y = 0; y <= 1.0001; y += 0.05) {
      const double xx = std::min(x, 1.0), yy = std::min(y, 1.0);
      EXPECT_NEAR(limit_surface_L(xx, yy) + limit_surface_L(1 - xx, 1 - yy), 1.0, 1e-10);
    }
}

TEST(LimitSurface, M) {
  EXPECT_NEAR(square_surface_M(0.5, 0.5), std::log(2.0), 1e-12);
  EXPECT_EQ(square_surface_M(0.0, 0.0), kSurfaceCap);
  EXPECT_GT(square_surface_M(1e-4, 1e-4), 15.0);
  EXPECT_NEAR(square_surface_M(1.0, 1.0), 0.0, 1e-15);
}

TEST(RectCurve, SquareSpecialization) {
  EXPECT_NEAR(rect_level_curve(1.0, 0.3, 0.1), g_alpha(0.3, 0.1), 1e-10);
  for (double a = 0.05; a < 1; a += 0.05)
    for (double u = -0.7; u <= 0.7; u += 0.05)
      EXPECT_NEAR(rect_level_curve_extended(1.0, a, u), g_alpha(a, u), 1e-12);
}

TEST(RectCurve, ReachesCornerAtAlphaStar) {
  const double theta = 0.5, a = 1.0 / 3;
  const auto p = LevelCurveParams::make(a, theta);
  EXPECT_NEAR(p.beta1, theta * kSqrt2 / 2, 1e-14);
  EXPECT_NEAR(rect_level_curve(theta, a, -p.beta1), theta * kSqrt2 / 2, 1e-12);
}

TEST(RectCurve, ContinuousAcrossOneHalf) {
  const double theta = 0.5;
  for (double u = -0.3; u <= 0.7; u += 0.05) {
    const double mid = rect_level_curve_extended(theta, 0.5, u);
    EXPECT_NEAR(rect_level_curve_extended(theta, 0.5 - 1e-10, u), mid, 1e-8);
    EXPECT_NEAR(rect_level_curve_extended(theta, 0.5 + 1e-10, u), mid, 1e-8);
  }
}

TEST(RectCurve, SignedDisplayAgreesWithBranches) {
  for (double theta : {0.3, 0.5, 0.8}) {
    for (double a = 0.05; a <= 0.5; a += 0.05) {
      const auto p = LevelCurveParams::make(a, theta);
      for (int i = 1; i < 50; ++i) {
        const double u = -p.beta1 + (p.beta1 + p.beta2) * i / 50;
        EXPECT_NEAR(rect_level_curve_signed(theta, a, u), rect_level_curve(theta, a, u), 1e-12);
      }
    }
  }
}

TEST(RectCurve, AreaIsAlphaTheta) {
  for (double theta : {0.5, 0.8}) {
    for (double a : {0.1, 0.2, 1.0 / 3, 0.45, 0.6, 0.8}) {
      const double area = oracle::integrate(
          [&](double u) { return rect_level_curve_extended(theta, a, u) - std::fabs(u); },
          -theta * kSqrt2 / 2, kSqrt2 / 2, 20000);
      EXPECT_NEAR(area, a * theta, 1e-7) << "theta=" << theta << " alpha=" << a;
    }
  }
}

TEST(RectCurve, LipschitzAndEndpoints) {
  for (double theta : {0.5, 0.8}) {
    for (double a = 0.05; a < 1; a += 0.05) {
      const double lo = -theta * kSqrt2 / 2, hi = kSqrt2 / 2;
      EXPECT_NEAR(rect_level_curve_extended(theta, a, lo), theta * kSqrt2 / 2, 1e-12);
      EXPECT_NEAR(rect_level_curve_extended(theta, a, hi), kSqrt2 / 2, 1e-12);
      double prev = rect_level_curve_extended(theta, a, lo);
      const int steps = 400;
      for (int i = 1; i <= steps; ++i) {
        const double u = lo + (hi - lo) * i / steps;
        const double g = rect_level_curve_extended(theta, a, u);
        EXPECT_LE(std::fabs(g - prev), (hi - lo) / steps * (1 + 1e-9));
        prev = g;
      }
    }
  }
  EXPECT_THROW(rect_level_curve(0.5, 0.3, 0.7), ValidationError);
}

TEST(RectCurve, SlopeMatchesFiniteDifference) {
  const double theta = 0.5;
  for (double a : {0.1, 0.25}) {
    const auto p = LevelCurveParams::make(a, theta);
    for (int i = 1; i < 20; ++i) {
      const double u = -p.beta1 + (p.beta1 + p.beta2) * i / 20;
      const double h = 1e-6;
      EXPECT_NEAR(rect_level_curve_slope(theta, a, u),
                  (rect_level_curve(theta, a, u + h) - rect_level_curve(theta, a, u - h)) / (2 * h), 1e-6);
    }
  }
}

TEST(RectSurface, MatchesSquareAtThetaOne) {
  for (int i = 0; i <= 20; ++i)
    for (int j = 0; j <= 20; ++j)
      EXPECT_NEAR(rect_surface_L(1.0, i / 20.0, j / 20.0), limit_surface_L(i / 20.0, j / 20.0), 1e-9);
}

TEST(RectSurface, LevelEquationAndM) {
  const double theta = 0.5;
  for (double x = 0.05; x < 1; x += 0.1) {
    for (double y = 0.025; y < theta; y += 0.05) {
      const double a = rect_surface_L(theta, x, y);
      const RotatedPoint p = to_rotated(x, y);
      EXPECT_NEAR(rect_level_curve_extended(theta, a, p.u), p.v, 1e-10);
      EXPECT_NEAR(plane_partition_surface(theta, x, y), -std::log(a), 1e-12);
    }
  }
  EXPECT_NEAR(plane_partition_surface(1.0, 0.5, 0.5), std::log(2.0), 1e-12);
  EXPECT_EQ(plane_partition_surface(theta, 0.0, 0.0), kSurfaceCap);
}

TEST(Omega, Values) {
  EXPECT_NEAR(plancherel_omega(kSqrt2), kSqrt2, 1e-15);
  EXPECT_NEAR(plancherel_omega(-kSqrt2), kSqrt2, 1e-15);
  EXPECT_NEAR(plancherel_omega(0.0), 2 * kSqrt2 / kPi, 1e-15);
  EXPECT_EQ(plancherel_omega(3.0), 3.0);
  for (double u = -2; u <= 2; u += 0.01) EXPECT_GE(plancherel_omega(u) - std::fabs(u), -1e-15);
}
