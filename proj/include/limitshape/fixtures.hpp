#pragma once

#include <array>
#include <cstdint>

// Frozen parameters and thresholds of the verification criteria. Values here
// are engineering targets fixed before any run and are never tuned to pass.
namespace limitshape::fixtures {

inline constexpr std::uint64_t kDefaultSeed = 0;

// c1
inline constexpr std::array<long long, 3> kSquareDimensions = {2, 42, 24024};

// c2
inline constexpr int kCotransitionMaxSize = 8;

// c3
inline constexpr int kHookWalks = 100000;
inline constexpr double kHookWalkMinPvalue = 1e-3;

// c4
inline constexpr int kAmusingBox = 8;
inline constexpr int kAmusingSamples = 1000;

// c5
inline constexpr std::array<double, 4> kValueAlphas = {0.1, 0.25, 0.4, 0.5};
inline constexpr int kValueGrid = 2000;
inline constexpr double kValueTolerance = 1e-4;

// c6
inline constexpr double kMinimizerAlpha = 0.3;
inline constexpr int kMinimizerGrid = 200;
inline constexpr double kMinimizerSupTolerance = 0.02;
inline constexpr double kMinimizerValueTolerance = 2e-3;
inline constexpr int kPerturbations = 100;
inline constexpr double kPerturbationSlack = -1e-6;

// c7
inline constexpr std::array<double, 3> kAirfoilAlphas = {0.2, 0.3, 0.45};
inline constexpr int kAirfoilGrid = 2000;
inline constexpr double kAirfoilTolerance = 5e-3;

// c8
inline constexpr int kSurfaceN = 60;
inline constexpr int kSurfaceTrials = 20;
inline constexpr double kSurfaceMargin = 0.1;
inline constexpr double kSurfaceGapThreshold = 0.05;
inline constexpr std::array<int, 3> kTrendSizes = {30, 60, 120};
// The window min(ij,(n−i)(n−j)) > n^{1.6} is empty at n = 30.
inline constexpr double kTrendMargin = 0.05;

// c9
inline constexpr int kEntryN = 80;
inline constexpr double kEntryAlpha = 0.3;
inline constexpr int kEntryTrials = 500;
inline constexpr double kEntryKsThreshold = 0.08;

// c10
inline constexpr int kRowN = 80;
inline constexpr int kRowTrials = 50;
inline constexpr std::array<double, 3> kRowAlphas = {0.1, 0.25, 0.5};
inline constexpr double kRowMeanTolerance = 0.05;
inline constexpr double kRowLowerSlack = 0.1;

// c11
inline constexpr int kPlaneN = 5;
inline constexpr long long kPlaneM = 156250;
inline constexpr int kPlaneSamples = 50;
inline constexpr std::array<double, 3> kPlaneGrid = {0.25, 0.5, 0.75};
inline constexpr double kPlaneTolerance = 0.15;

// c12
inline constexpr double kRectTheta = 0.5;
inline constexpr int kRectN = 60;
inline constexpr int kRectTrials = 20;
inline constexpr double kRectMargin = 0.1;
inline constexpr double kRectGapThreshold = 0.07;
inline constexpr double kRectSquareTolerance = 1e-9;

// c13
inline constexpr long long kRatioM = 50000;
inline constexpr int kRatioK = 10;
inline constexpr double kRatioThreshold = 0.95;
inline constexpr int kTvK = 8;
inline constexpr std::array<int, 3> kTvSizes = {20, 50, 100};
inline constexpr int kNuSamples = 1000;
inline constexpr int kNuMaxSize = 20;
inline constexpr int kNuMaxN = 12;

// c14
inline constexpr double kDensityAlpha = 0.3;
inline constexpr int kDensitySlopeGrid = 2000;
inline constexpr int kDensityPoints = 400;
inline constexpr double kDensityTolerance = 1e-2;

}  // namespace limitshape::fixtures
