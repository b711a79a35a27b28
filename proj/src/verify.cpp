#include "limitshape/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numeric>
#include <string>

#include "limitshape/diagrams.hpp"
#include "limitshape/errors.hpp"
#include "limitshape/fixtures.hpp"
#include "limitshape/partitions1d.hpp"
#include "limitshape/sampler.hpp"
#include "limitshape/surfaces.hpp"
#include "limitshape/variational.hpp"

namespace limitshape {

namespace fx = fixtures;

namespace {

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

double mean(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

BigCount factorial(int k) {
  BigCount f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Grows λ one addable cell at a time and calls visit(last cell) at every
// completed filling, so each standard tableau is visited exactly once.
template <class Visit>
void enumerate_fillings(const Partition& lambda, std::vector<int>& rows, int placed, Cell last,
                        Visit& visit) {
  if (placed == lambda.size()) {
    visit(last);
    return;
  }
  for (int i = 0; i < lambda.num_rows(); ++i) {
    const int len = rows[i];
    if (len >= lambda.parts()[i]) continue;
    if (i > 0 && rows[i - 1] <= len) continue;
    ++rows[i];
    enumerate_fillings(lambda, rows, placed + 1, Cell{i + 1, len + 1}, visit);
    --rows[i];
  }
}

BigCount count_by_enumeration(const Partition& lambda) {
  BigCount count = 0;
  std::vector<int> rows(lambda.num_rows(), 0);
  auto visit = [&](Cell) { ++count; };
  enumerate_fillings(lambda, rows, 0, Cell{}, visit);
  return count;
}

// (n²)! / (Π_{i<n} (i(2n−i))^i · n^n)
BigCount square_product_formula(int n) {
  BigCount den = 1;
  for (int i = 1; i < n; ++i) {
    for (int r = 0; r < i; ++r) den *= BigCount(i) * (2 * n - i);
  }
  for (int r = 0; r < n; ++r) den *= n;
  return factorial(n * n) / den;
}

TrialReport c1_dimensions() {
  TrialReport r;
  r.description = "exact dimensions of the 2x2, 3x3 and 4x4 squares";
  int mismatches = 0;
  std::string note;
  for (int n = 2; n <= 4; ++n) {
    const BigCount expected = fx::kSquareDimensions[n - 2];
    const BigCount hook = dimension(Partition::square(n));
    const BigCount product = square_product_formula(n);
    if (hook != expected || product != expected) ++mismatches;
    note += "d(" + std::to_string(n) + "x" + std::to_string(n) + ")=" + hook.str();
    if (n <= 3) {
      const BigCount dfs = count_by_enumeration(Partition::square(n));
      if (dfs != expected) ++mismatches;
      note += " dfs=" + dfs.str();
    }
    note += " product=" + product.str() + "; ";
  }
  r.statistic = mismatches;
  r.threshold = 0;
  r.pass = mismatches == 0;
  r.note = note + "statistic counts mismatches";
  return r;
}

TrialReport c2_cotransition() {
  TrialReport r;
  r.description = "cotransition measure equals enumeration frequencies for |lambda| <= 8";
  r.params["max_size"] = fx::kCotransitionMaxSize;
  int mismatches = 0, shapes = 0;
  for (int k = 1; k <= fx::kCotransitionMaxSize; ++k) {
    for (const Partition& lambda : partitions_of(k)) {
      ++shapes;
      std::map<Cell, BigCount> tally;
      BigCount total = 0;
      std::vector<int> rows(lambda.num_rows(), 0);
      auto visit = [&](Cell c) {
        ++tally[c];
        ++total;
      };
      enumerate_fillings(lambda, rows, 0, Cell{}, visit);
      const auto measure = cotransition_measure(lambda);
      Rational sum = 0;
      bool ok = measure.size() == tally.size();
      for (const auto& [cell, p] : measure) {
        sum += p;
        const auto it = tally.find(cell);
        if (it == tally.end() || Rational(it->second, total) != p) ok = false;
      }
      if (sum != 1) ok = false;
      if (!ok) ++mismatches;
    }
  }
  r.statistic = mismatches;
  r.threshold = 0;
  r.pass = mismatches == 0;
  r.note = std::to_string(shapes) + " shapes checked; statistic counts mismatching shapes";
  return r;
}

TrialReport c3_hook_walk(const VerifyConfig& config) {
  TrialReport r;
  r.description = "hook walk law against the cotransition measure (chi-square)";
  r.params["walks"] = fx::kHookWalks;
  const std::vector<Partition> panel = {
      Partition({2, 1}),          Partition({3, 1}),
      Partition({2, 2, 1}),       Partition({3, 2, 1}),
      Partition({4, 2, 1}),       Partition({4, 4, 2, 1}),
      Partition({5, 3, 3, 1}),    Partition({7, 4, 2, 1, 1}),
      Partition({8, 6, 5, 3, 2, 2, 1}), Partition({10, 9, 7, 7, 4, 2, 1})};
  const Rng base(config.seed, 3);
  const std::function<ChiSquare(int)> run = [&](int s) {
    const Partition& lambda = panel[s];
    Rng rng = base.split(s);
    const auto measure = cotransition_measure_float(lambda);
    std::map<Cell, double> hits;
    for (int w = 0; w < fx::kHookWalks; ++w) hits[hook_walk(lambda, rng)] += 1;
    std::vector<double> obs, exp;
    for (const auto& [cell, p] : measure) {
      obs.push_back(hits[cell]);
      exp.push_back(p * fx::kHookWalks);
    }
    return chi_square(obs, exp);
  };
  const auto results = run_trials<ChiSquare>(static_cast<int>(panel.size()), config.jobs, run);
  double min_p = 1;
  std::string note;
  for (std::size_t s = 0; s < panel.size(); ++s) {
    min_p = std::min(min_p, results[s].pvalue);
    note += panel[s].to_string() + ":p=" + num(results[s].pvalue) + " ";
  }
  r.statistic = min_p;
  r.threshold = fx::kHookWalkMinPvalue;
  r.pass = min_p > fx::kHookWalkMinPvalue;
  r.note = note + "(statistic is the smallest p-value)";
  return r;
}

TrialReport c4_amusing(const VerifyConfig& config) {
  TrialReport r;
  r.description = "adding a first-row box: exact dimension-ratio identity in the 8x8 square";
  const int n = fx::kAmusingBox;
  r.params["n"] = n;
  r.params["samples"] = fx::kAmusingSamples;
  Rng rng(config.seed, 4);
  int failures = 0;
  for (int s = 0; s < fx::kAmusingSamples; ++s) {
    // Rows below n keep the next shape inside the square.
    std::vector<int> parts(n);
    for (int& p : parts) p = static_cast<int>(rng.uniform_int(0, n - 1));
    std::sort(parts.rbegin(), parts.rend());
    const AmusingCheck check = verify_amusing_identity(Partition(parts), n);
    if (!check.holds()) ++failures;
  }
  r.statistic = failures;
  r.threshold = 0;
  r.pass = failures == 0;
  r.note = "shapes drawn with first row < n; statistic counts failures";
  return r;
}

TrialReport c5_value() {
  TrialReport r;
  r.description = "K of the level curve equals log 2 - H(alpha)";
  r.params["N"] = fx::kValueGrid;
  double worst = 0;
  std::string note;
  for (double alpha : fx::kValueAlphas) {
    const GridFunction g = GridFunction::sample(-kSqrt2 / 2, kSqrt2 / 2, fx::kValueGrid,
                                                [&](double u) { return g_alpha(alpha, u); });
    const double err = std::fabs(functional_K(g) - (std::log(2.0) - entropy(alpha)));
    worst = std::max(worst, err);
    note += "alpha=" + num(alpha) + ":err=" + num(err) + " ";
  }
  r.statistic = worst;
  r.threshold = fx::kValueTolerance;
  r.pass = worst <= fx::kValueTolerance;
  r.note = note;
  return r;
}

double trapezoid(const GridFunction& g) {
  const auto& v = g.values();
  double s = 0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) s += v[i] + v[i + 1];
  return s * g.step() / 2;
}

TrialReport c6_minimizer(const VerifyConfig& config) {
  TrialReport r;
  r.description = "projected gradient recovers the minimizer; strong convexity around it";
  const double alpha = fx::kMinimizerAlpha;
  const int N = fx::kMinimizerGrid;
  r.params["alpha"] = alpha;
  r.params["N"] = N;
  const MinimizerResult res = minimize_K(alpha, 1.0, N);
  double sup = 0;
  for (int i = 0; i <= N; ++i)
    sup = std::max(sup, std::fabs(res.g.values()[i] - g_alpha(alpha, res.g.node(i))));
  const double closed = std::log(2.0) - entropy(alpha);
  const double kerr = std::fabs(res.K - closed);

  const double a = -kSqrt2 / 2, b = kSqrt2 / 2;
  const GridFunction target = GridFunction::sample(a, b, N, [&](double u) { return g_alpha(alpha, u); });
  const double k_target = functional_K(target);
  const double integral = trapezoid(target);
  const std::vector<double> base_slopes = target.slopes();
  const Rng base(config.seed, 6);
  const std::function<double(int)> perturb = [&](int p) {
    Rng rng = base.split(p);
    std::normal_distribution<double> normal;
    const double sigma = 0.02 + 0.98 * rng.uniform01();
    const int modes = static_cast<int>(rng.uniform_int(1, 6));
    std::vector<double> amp(modes), phase(modes);
    for (int m = 0; m < modes; ++m) {
      amp[m] = normal(rng);
      phase[m] = 2 * kPi * rng.uniform01();
    }
    std::vector<double> d = base_slopes;
    for (int c = 0; c < N; ++c) {
      const double t = (c + 0.5) / N;
      double wave = 0;
      for (int m = 0; m < modes; ++m) wave += amp[m] * std::sin(kPi * (m + 1) * t + phase[m]);
      d[c] += sigma * (0.5 * normal(rng) + wave);
    }
    d = project_slopes(d, a, target.step(), target.values().front(), target.values().back(), integral);
    std::vector<double> v(N + 1), diff(N + 1);
    v[0] = target.values().front();
    for (int c = 0; c < N; ++c) v[c + 1] = v[c] + d[c] * target.step();
    for (int i = 0; i <= N; ++i) diff[i] = v[i] - target.values()[i];
    const GridFunction g(a, b, v), delta(a, b, diff);
    return functional_K(g) - k_target - functional_K(delta);
  };
  const auto gaps = run_trials<double>(fx::kPerturbations, config.jobs, perturb);
  const double worst_gap = *std::min_element(gaps.begin(), gaps.end());

  r.statistic = sup;
  r.threshold = fx::kMinimizerSupTolerance;
  r.pass = sup < fx::kMinimizerSupTolerance && kerr < fx::kMinimizerValueTolerance &&
           worst_gap >= fx::kPerturbationSlack;
  r.note = "sup=" + num(sup) + " K=" + num(res.K) + " closed=" + num(closed) + " |dK|=" + num(kerr) +
           " (tol " + num(fx::kMinimizerValueTolerance) + ") iterations=" +
           std::to_string(res.iterations) + " min K(g)-K(g*)-K(g-g*)=" + num(worst_gap) +
           " over " + std::to_string(fx::kPerturbations) + " perturbations (tol " +
           num(fx::kPerturbationSlack) + ")";
  return r;
}

TrialReport c7_airfoil() {
  TrialReport r;
  r.description = "airfoil inversion reproduces the level-curve slope";
  r.params["N"] = fx::kAirfoilGrid;
  double worst = 0;
  std::string note;
  for (double alpha : fx::kAirfoilAlphas) {
    const GridFunction g =
        airfoil_solve([&](double x) { return airfoil_rhs_square(alpha, x); }, fx::kAirfoilGrid);
    const double beta = std::sqrt(2 * alpha * (1 - alpha));
    double err = 0;
    for (int i = 1; i < fx::kAirfoilGrid; ++i) {
      const double x = g.node(i);
      err = std::max(err, std::fabs(g.values()[i] - g_alpha_slope(alpha, beta * x)));
    }
    worst = std::max(worst, err);
    note += "alpha=" + num(alpha) + ":sup=" + num(err) + " ";
  }
  r.statistic = worst;
  r.threshold = fx::kAirfoilTolerance;
  r.pass = worst < fx::kAirfoilTolerance;
  r.note = note + "(interior nodes)";
  return r;
}

double mean_square_gap(int n, double margin, int trials, const Rng& base, int jobs) {
  const std::function<double(int)> run = [&](int t) {
    Rng rng = base.split(static_cast<std::uint64_t>(n) * 100000 + t);
    return surface_gap(sample_square_tableau(n, rng), margin).gap;
  };
  return mean(run_trials<double>(trials, jobs, run));
}

TrialReport c8_surface(const VerifyConfig& config) {
  TrialReport r;
  r.description = "random square tableau against the limit surface (interior window)";
  r.params["n"] = fx::kSurfaceN;
  r.params["trials"] = fx::kSurfaceTrials;
  r.params["margin"] = fx::kSurfaceMargin;
  const Rng base(config.seed, 8);
  const double gap = mean_square_gap(fx::kSurfaceN, fx::kSurfaceMargin, fx::kSurfaceTrials, base, config.jobs);
  r.statistic = gap;
  r.threshold = fx::kSurfaceGapThreshold;
  r.pass = gap < fx::kSurfaceGapThreshold;
  r.note = "mean gap at n=" + std::to_string(fx::kSurfaceN) + ": " + num(gap);
  if (config.tier == Tier::kFull) {
    std::vector<double> trend;
    for (int n : fx::kTrendSizes)
      trend.push_back(mean_square_gap(n, fx::kTrendMargin, fx::kSurfaceTrials, base, config.jobs));
    const bool decreasing = trend[0] > trend[1] && trend[1] > trend[2];
    r.pass = r.pass && decreasing;
    r.note += "; trend (margin " + num(fx::kTrendMargin) + ") n=30,60,120: " + num(trend[0]) + ", " +
              num(trend[1]) + ", " + num(trend[2]) + (decreasing ? " decreasing" : " NOT decreasing");
  } else {
    r.note += "; the n=30,60,120 trend runs in the full tier";
  }
  return r;
}

TrialReport c9_entry(const VerifyConfig& config) {
  TrialReport r;
  const int n = fx::kEntryN;
  const int k = static_cast<int>(std::floor(fx::kEntryAlpha * n * n));
  const double alpha = static_cast<double>(k) / (static_cast<double>(n) * n);
  r.description = "location of entry k is semicircle distributed along the level curve";
  r.params["n"] = n;
  r.params["k"] = k;
  r.params["trials"] = fx::kEntryTrials;
  const Rng base(config.seed, 9);
  struct Sample {
    double u = 0;
    double v = 0;
  };
  const std::function<Sample(int)> run = [&](int t) {
    Rng rng = base.split(t);
    const Tableau tab = sample_square_tableau(n, rng);
    return Sample{entry_location_u(tab, k), entry_location_v(tab, k)};
  };
  const auto samples = run_trials<Sample>(fx::kEntryTrials, config.jobs, run);
  std::vector<double> us;
  double worst_v = 0;
  for (const Sample& s : samples) {
    us.push_back(s.u);
    worst_v = std::max(worst_v, std::fabs(s.v - g_alpha(alpha, s.u)));
  }
  const double ks = ks_statistic(us, [&](double u) { return semicircle_cdf(alpha, u); });
  r.statistic = ks;
  r.threshold = fx::kEntryKsThreshold;
  r.pass = ks < fx::kEntryKsThreshold && worst_v <= 2.0 / n;
  r.note = "KS=" + num(ks) + "; max |v - g(u)|=" + num(worst_v) + " (bound " + num(2.0 / n) + ")";
  return r;
}

TrialReport c10_first_row(const VerifyConfig& config) {
  TrialReport r;
  const int n = fx::kRowN;
  r.description = "first row of the shape of entries <= alpha n^2";
  r.params["n"] = n;
  r.params["trials"] = fx::kRowTrials;
  const Rng base(config.seed, 10);
  const std::function<std::vector<int>(int)> run = [&](int t) {
    Rng rng = base.split(t);
    return lis_prefix_lengths(sample_square_tableau(n, rng));
  };
  const auto rows = run_trials<std::vector<int>>(fx::kRowTrials, config.jobs, run);
  double worst_mean = 0, worst_lower = 0;
  std::string note;
  for (double alpha : fx::kRowAlphas) {
    const int k = static_cast<int>(std::floor(alpha * n * n));
    const double limit = 2 * std::sqrt(alpha * (1 - alpha));
    std::vector<double> ratios;
    double lower = std::numeric_limits<double>::infinity();
    for (const auto& row : rows) {
      const double x = static_cast<double>(row[k - 1]) / n;
      ratios.push_back(x);
      lower = std::min(lower, x - limit);
    }
    const double err = std::fabs(mean(ratios) - limit);
    worst_mean = std::max(worst_mean, err);
    worst_lower = std::min(worst_lower, lower);
    note += "alpha=" + num(alpha) + ":mean=" + num(mean(ratios)) + " limit=" + num(limit) +
            " min excess=" + num(lower) + " ";
  }
  r.statistic = worst_mean;
  r.threshold = fx::kRowMeanTolerance;
  r.pass = worst_mean < fx::kRowMeanTolerance && worst_lower >= -fx::kRowLowerSlack;
  r.note = note;
  return r;
}

TrialReport c11_plane(const VerifyConfig& config) {
  TrialReport r;
  const int n = fx::kPlaneN;
  const long long m = fx::kPlaneM;
  r.description = "rescaled distinct-part plane partitions against M";
  r.params["n"] = n;
  r.params["m"] = static_cast<double>(m);
  r.params["samples"] = fx::kPlaneSamples;
  const DistinctPartitionSampler sampler(m, n * n);
  const Rng base(config.seed, 11);
  const std::function<std::vector<double>(int)> run = [&](int s) {
    Rng rng = base.split(s);
    const Tableau t = sample_square_tableau(n, rng);
    const RescaledSurface surface(assemble_plane_partition(t, sampler.sample(rng)), m, n);
    std::vector<double> values;
    for (double x : fx::kPlaneGrid)
      for (double y : fx::kPlaneGrid) values.push_back(surface(x, y));
    return values;
  };
  const auto samples = run_trials<std::vector<double>>(fx::kPlaneSamples, config.jobs, run);
  double worst = 0;
  std::string note;
  int idx = 0;
  for (double x : fx::kPlaneGrid) {
    for (double y : fx::kPlaneGrid) {
      double s = 0;
      for (const auto& v : samples) s += v[idx];
      s /= samples.size();
      const double err = std::fabs(s - square_surface_M(x, y));
      worst = std::max(worst, err);
      note += "(" + num(x) + "," + num(y) + "):" + num(s) + " vs " + num(square_surface_M(x, y)) + " ";
      ++idx;
    }
  }
  const Rational ratio(count_partitions(m, n * n, true), count_partitions(m, n * n, false));
  r.params["distinct_ratio"] = static_cast<double>(ratio);
  r.statistic = worst;
  r.threshold = fx::kPlaneTolerance;
  r.pass = worst < fx::kPlaneTolerance;
  r.note = note + "; exact distinct/all ratio q/p=" + num(static_cast<double>(ratio)) +
           "; sampler table " + (sampler.exact() ? "exact" : "long double");
  return r;
}

TrialReport c12_rectangle(const VerifyConfig& config) {
  TrialReport r;
  const int n = fx::kRectN;
  const int cols = static_cast<int>(std::lround(fx::kRectTheta * n));
  r.description = "random rectangular tableau against L_theta; theta=1 matches the square";
  r.params["theta"] = fx::kRectTheta;
  r.params["n"] = n;
  r.params["trials"] = fx::kRectTrials;
  const Rng base(config.seed, 12);
  std::vector<int> cells(fx::kRectTrials);
  const std::function<double(int)> run = [&](int t) {
    Rng rng = base.split(t);
    const SurfaceGap g = rect_surface_gap(sample_rect_tableau(n, cols, rng), fx::kRectMargin);
    cells[t] = g.cells;
    return g.gap;
  };
  const double gap = mean(run_trials<double>(fx::kRectTrials, config.jobs, run));

  double agree = 0;
  for (int a = 1; a <= 9; ++a) {
    const double alpha = a / 10.0;
    for (int i = 0; i <= 40; ++i) {
      const double u = -kSqrt2 / 2 + kSqrt2 * i / 40;
      agree = std::max(agree, std::fabs(rect_level_curve_extended(1.0, alpha, u) - g_alpha(alpha, u)));
    }
  }
  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; j <= 20; ++j) {
      const double x = i / 20.0, y = j / 20.0;
      agree = std::max(agree, std::fabs(rect_surface_L(1.0, x, y) - limit_surface_L(x, y)));
    }
  }
  const bool window = cells[0] > 0;
  r.statistic = gap;
  r.threshold = fx::kRectGapThreshold;
  r.pass = gap < fx::kRectGapThreshold && agree <= fx::kRectSquareTolerance && window;
  r.note = "mean gap=" + num(gap) + " over " + std::to_string(cells[0]) +
           " interior cells; theta=1 vs square max diff=" + num(agree) + " (tol " +
           num(fx::kRectSquareTolerance) + ")";
  return r;
}

Partition random_shape_in_square(int n, int size, Rng& rng) {
  Partition lambda;
  for (int s = 0; s < size; ++s) {
    const auto ext = exterior_corners(lambda, n, n);
    lambda = add_cell(lambda, ext[rng.uniform_int(0, static_cast<long long>(ext.size()) - 1)]);
  }
  return lambda;
}

TrialReport c13_partition_dp(const VerifyConfig& config) {
  TrialReport r;
  r.description = "distinct-parts ratio, nu/mu distance and falling-power formula";
  const Rational ratio(count_partitions(fx::kRatioM, fx::kRatioK, true),
                       count_partitions(fx::kRatioM, fx::kRatioK, false));
  const double q_over_p = static_cast<double>(ratio);
  std::vector<Rational> tv;
  for (int n : fx::kTvSizes) tv.push_back(tv_distance_nu_mu(n, fx::kTvK));
  const bool decreasing = tv[0] > tv[1] && tv[1] > tv[2];

  Rng rng(config.seed, 13);
  int mismatches = 0;
  for (int s = 0; s < fx::kNuSamples; ++s) {
    const int n = static_cast<int>(rng.uniform_int(1, fx::kNuMaxN));
    const int size = static_cast<int>(rng.uniform_int(0, std::min(fx::kNuMaxSize, n * n)));
    const Partition lambda = random_shape_in_square(n, size, rng);
    if (nu_ratio(lambda, n) != nu_ratio_direct(lambda, n)) ++mismatches;
  }
  r.params["m"] = static_cast<double>(fx::kRatioM);
  r.params["k"] = fx::kRatioK;
  r.statistic = q_over_p;
  r.threshold = fx::kRatioThreshold;
  r.pass = q_over_p > fx::kRatioThreshold && decreasing && mismatches == 0;
  r.note = "q/p=" + num(q_over_p) + "; TV at n=20,50,100: " + num(static_cast<double>(tv[0])) + ", " +
           num(static_cast<double>(tv[1])) + ", " + num(static_cast<double>(tv[2])) +
           (decreasing ? " (strictly decreasing)" : " (NOT decreasing)") +
           "; falling-power mismatches: " + std::to_string(mismatches) + "/" +
           std::to_string(fx::kNuSamples);
  return r;
}

TrialReport c14_density() {
  TrialReport r;
  r.description = "continual cotransition density of the level curve and of Omega";
  const double alpha = fx::kDensityAlpha;
  const int N = fx::kDensitySlopeGrid;
  const int P = fx::kDensityPoints;
  const double b = std::sqrt(2 * alpha * (1 - alpha));
  const GridFunction level = GridFunction::sample(-b, b, N, [&](double u) { return g_alpha_slope(alpha, u); });
  double err_level = 0;
  for (int i = 1; i < P; ++i) {
    const double x = -b + 2 * b * i / P;
    err_level = std::max(err_level, std::fabs(continual_cotransition_density(level, alpha, x) -
                                              semicircle_density(alpha, x)));
  }
  const GridFunction omega = GridFunction::sample(-kSqrt2, kSqrt2, N, [](double u) {
    return (2 / kPi) * std::asin(std::clamp(u / kSqrt2, -1.0, 1.0));
  });
  double err_omega = 0;
  for (int i = 1; i < P; ++i) {
    const double x = -kSqrt2 + 2 * kSqrt2 * i / P;
    err_omega = std::max(err_omega, std::fabs(continual_cotransition_density(omega, 1.0, x) -
                                              std::sqrt(2 - x * x) / kPi));
  }
  r.params["alpha"] = alpha;
  r.params["N"] = N;
  r.statistic = std::max(err_level, err_omega);
  r.threshold = fx::kDensityTolerance;
  r.pass = r.statistic <= fx::kDensityTolerance;
  r.note = "level curve sup=" + num(err_level) + "; Omega sup=" + num(err_omega);
  return r;
}

}  // namespace

TrialReport check_criterion(int id, const VerifyConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  TrialReport r;
  switch (id) {
    case 1: r = c1_dimensions(); break;
    case 2: r = c2_cotransition(); break;
    case 3: r = c3_hook_walk(config); break;
    case 4: r = c4_amusing(config); break;
    case 5: r = c5_value(); break;
    case 6: r = c6_minimizer(config); break;
    case 7: r = c7_airfoil(); break;
    case 8: r = c8_surface(config); break;
    case 9: r = c9_entry(config); break;
    case 10: r = c10_first_row(config); break;
    case 11: r = c11_plane(config); break;
    case 12: r = c12_rectangle(config); break;
    case 13: r = c13_partition_dp(config); break;
    case 14: r = c14_density(); break;
    default: throw ValidationError("unknown criterion " + std::to_string(id));
  }
  r.id = "c" + std::to_string(id);
  r.seed = config.seed;
  r.params["tier"] = config.tier == Tier::kFull ? 1 : 0;
  r.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<int> suite_criteria(const std::string& suite) {
  if (suite == "exact") return {1, 2, 4, 13};
  if (suite == "variational") return {5, 6, 7, 14};
  if (suite == "montecarlo") return {3, 8, 9, 10, 11, 12};
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14};
  throw ValidationError("unknown suite '" + suite + "'");
}

bool is_known_suite(const std::string& suite) {
  return suite == "exact" || suite == "variational" || suite == "montecarlo" || suite == "all";
}

}  // namespace limitshape
