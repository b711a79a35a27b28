#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>
#include <string>

#include "limitshape/diagrams.hpp"
#include "limitshape/errors.hpp"
#include "limitshape/fixtures.hpp"
#include "limitshape/io.hpp"
#include "limitshape/partitions1d.hpp"
#include "limitshape/sampler.hpp"
#include "limitshape/surfaces.hpp"
#include "limitshape/variational.hpp"
#include "limitshape/verify.hpp"

using namespace limitshape;
using nlohmann::json;

namespace {

struct RunConfig {
  std::string command;
  int n = 0;
  long long m = 0;
  double theta = 1.0;
  double alpha = 0.0;
  double x = 0.0;
  double y = 0.0;
  int trials = 1;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int grid = 100;
  std::string out;
  std::string format = "json";
  std::string tier = "small";
  std::string suite = "all";
  std::string square_or_shape;
  int jobs = 1;
  bool no_timestamp = false;
  bool quiet = false;
};

json config_json(const RunConfig& c) {
  return json{{"command", c.command}, {"n", c.n},         {"m", c.m},           {"theta", c.theta},
              {"alpha", c.alpha},     {"x", c.x},         {"y", c.y},           {"trials", c.trials},
              {"seed", c.seed},       {"grid_N", c.grid}, {"output", c.out},    {"format", c.format},
              {"tier", c.tier},       {"suite", c.suite}, {"jobs", c.jobs}};
}

std::string timestamp() {
  const std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

// Seed precedence: --seed, then LIMITSHAPE_SEED, then the given default
// (a fresh random value when none is supplied).
void resolve_seed(RunConfig& c, bool has_default, std::uint64_t fallback) {
  if (c.seed_given) return;
  if (const char* env = std::getenv("LIMITSHAPE_SEED")) {
    try {
      std::size_t used = 0;
      c.seed = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
      return;
    } catch (const std::exception&) {
      throw ValidationError(std::string("LIMITSHAPE_SEED is not an unsigned integer: ") + env);
    }
  }
  if (has_default) {
    c.seed = fallback;
  } else {
    std::random_device rd;
    c.seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }
}

void log_config(const RunConfig& c) {
  if (!c.quiet) std::cerr << "config " << config_json(c).dump() << "\n";
}

class Output {
 public:
  explicit Output(const RunConfig& c) : config_(c) {
    if (!c.out.empty()) {
      file_.open(c.out);
      if (!file_) throw ValidationError("cannot open output file " + c.out);
    }
  }
  std::ostream& stream() { return config_.out.empty() ? std::cout : file_; }

  void header(bool csv) {
    if (config_.no_timestamp) return;
    if (csv) stream() << "# limitshape " << config_.command << " generated " << timestamp() << "\n";
    else stream() << json{{"generated", timestamp()}, {"command", config_.command}}.dump() << "\n";
  }

 private:
  const RunConfig& config_;
  std::ofstream file_;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string short_fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Partition parse_shape(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError("shape must be comma-separated integers, got '" + text + "'");
    }
  }
  return Partition(parts);
}

int cmd_dim(RunConfig& c, int square) {
  const Partition lambda = square > 0 ? Partition::square(square) : parse_shape(c.square_or_shape);
  log_config(c);
  const BigCount d = dimension(lambda);
  std::cout << d.str() << "\n";
  return 0;
}

int cmd_sample_tableau(RunConfig& c) {
  resolve_seed(c, false, 0);
  log_config(c);
  const int cols = static_cast<int>(std::lround(c.theta * c.n));
  if (cols < 1) throw ValidationError("theta * n must round to at least one column");
  Rng rng(c.seed);
  const Tableau t = c.theta == 1.0 ? sample_square_tableau(c.n, rng) : sample_rect_tableau(c.n, cols, rng);
  Output out(c);
  if (c.format == "csv") {
    out.header(true);
    out.stream() << "row,col,entry\n";
    for (int i = 1; i <= t.shape().num_rows(); ++i)
      for (int j = 1; j <= t.shape().row(i); ++j) out.stream() << i << "," << j << "," << t.at({i, j}) << "\n";
  } else {
    out.header(false);
    out.stream() << to_json(t).dump() << "\n";
  }
  if (!c.quiet) std::cerr << "tableau shape " << t.shape().to_string() << " seed " << c.seed << "\n";
  return 0;
}

int cmd_sample_pp(RunConfig& c) {
  resolve_seed(c, false, 0);
  log_config(c);
  Rng rng(c.seed);
  const PlanePartition pi = sample_plane_partition(c.n, c.m, rng);
  const double ratio = count_partitions_ratio_distinct(c.m, c.n * c.n);
  Output out(c);
  if (c.format == "csv") {
    out.header(true);
    out.stream() << "row,col,part\n";
    for (int i = 1; i <= c.n; ++i)
      for (int j = 1; j <= c.n; ++j) out.stream() << i << "," << j << "," << pi.at({i, j}) << "\n";
  } else {
    out.header(false);
    json j = to_json(pi);
    j["distinct_ratio"] = ratio;
    out.stream() << j.dump() << "\n";
  }
  if (!c.quiet)
    std::cerr << "plane partition " << c.n << "x" << c.n << " sum " << pi.sum() << " seed " << c.seed
              << " q/p " << short_fmt(ratio) << "\n";
  return 0;
}

int cmd_surface(RunConfig& c, const std::string& which) {
  log_config(c);
  double value = 0;
  if (which == "L") value = c.theta == 1.0 ? limit_surface_L(c.x, c.y) : rect_surface_L(c.theta, c.x, c.y);
  else value = c.theta == 1.0 ? square_surface_M(c.x, c.y) : plane_partition_surface(c.theta, c.x, c.y);
  std::cout << short_fmt(value) << "\n";
  return 0;
}

int cmd_level_curve(RunConfig& c) {
  log_config(c);
  const double a = -c.theta * kSqrt2 / 2, b = kSqrt2 / 2;
  const GridFunction g = GridFunction::sample(a, b, c.grid, [&](double u) {
    return c.theta == 1.0 ? g_alpha(c.alpha, u) : rect_level_curve_extended(c.theta, c.alpha, u);
  });
  Output out(c);
  if (c.format == "json") {
    out.header(false);
    out.stream() << json{{"type", "level_curve"}, {"alpha", c.alpha}, {"theta", c.theta},
                         {"a", a}, {"b", b}, {"values", g.values()}}.dump()
                 << "\n";
  } else {
    out.header(true);
    out.stream() << grid_function_csv(g);
  }
  return 0;
}

int cmd_contour_data(RunConfig& c) {
  resolve_seed(c, false, 0);
  log_config(c);
  const int cols = static_cast<int>(std::lround(c.theta * c.n));
  if (cols < 1) throw ValidationError("theta * n must round to at least one column");
  const Rng base(c.seed);
  const std::function<std::vector<std::vector<int>>(int)> run = [&](int t) {
    Rng rng = base.split(t);
    return sample_rect_tableau(c.n, cols, rng).rows();
  };
  const auto tabs = run_trials<std::vector<std::vector<int>>>(c.trials, c.jobs, run);
  const double total = static_cast<double>(c.n) * cols;
  Output out(c);
  out.header(true);
  out.stream() << "x,y,t_scaled,L\n";
  for (int i = 1; i <= c.n; ++i) {
    for (int j = 1; j <= cols; ++j) {
      double s = 0;
      for (const auto& rows : tabs) s += rows[i - 1][j - 1];
      const double x = static_cast<double>(i) / c.n, y = static_cast<double>(j) / c.n;
      const double l = c.theta == 1.0 ? limit_surface_L(x, y) : rect_surface_L(c.theta, x, y);
      out.stream() << fmt(x) << "," << fmt(y) << "," << fmt(s / c.trials / total) << "," << fmt(l) << "\n";
    }
  }
  return 0;
}

int cmd_verify(RunConfig& c) {
  if (!is_known_suite(c.suite)) throw ValidationError("unknown suite '" + c.suite + "'");
  resolve_seed(c, true, fixtures::kDefaultSeed);
  log_config(c);
  VerifyConfig vc;
  vc.tier = c.tier == "full" ? Tier::kFull : Tier::kSmall;
  vc.seed = c.seed;
  vc.jobs = c.jobs;
  std::vector<TrialReport> passed, failed;
  for (int id : suite_criteria(c.suite)) {
    TrialReport r = check_criterion(id, vc);
    if (!c.quiet) std::cerr << (r.pass ? "PASS " : "FAIL ") << r.id << " " << r.description << "\n";
    (r.pass ? passed : failed).push_back(std::move(r));
  }
  Output out(c);
  out.header(false);
  auto emit = [&](const TrialReport& r) {
    json j = to_json(r);
    if (c.no_timestamp) j.erase("runtime_seconds");
    out.stream() << j.dump() << "\n";
  };
  for (const auto& r : passed) emit(r);
  for (const auto& r : failed) emit(r);
  return failed.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Limit shapes of random Young tableaux and plane partitions"};
  app.require_subcommand(1);
  RunConfig c;
  int square = 0;
  std::string which = "L";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out,-o", c.out, "Output file (default: stdout)");
    sub->add_flag("--no-timestamp", c.no_timestamp, "Omit the timestamp header line");
    sub->add_flag("--quiet,-q", c.quiet, "Do not log the run configuration to stderr");
  };
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option_function<std::uint64_t>(
        "--seed", [&](const std::uint64_t& s) { c.seed = s; c.seed_given = true; },
        "Random seed (default: LIMITSHAPE_SEED or a logged random value)");
  };

  auto* dim = app.add_subcommand("dim", "Exact number of standard tableaux of a shape");
  auto* dim_square = dim->add_option("--square", square, "Side of a square shape")->check(CLI::Range(1, 100000));
  auto* dim_shape = dim->add_option("shape", c.square_or_shape, "Comma-separated row lengths, e.g. 4,2,1");
  dim_square->excludes(dim_shape);
  dim->add_flag("--quiet,-q", c.quiet, "Do not log the run configuration to stderr");

  auto* st = app.add_subcommand("sample-tableau", "Uniform random standard tableau of an n x (theta n) rectangle");
  st->add_option("--n", c.n, "Number of rows")->required()->check(CLI::Range(1, 2000));
  st->add_option("--theta", c.theta, "Columns per row, in (0, 1]")->check(CLI::Range(1e-9, 1.0));
  st->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  add_seed(st);
  add_common(st);

  auto* pp = app.add_subcommand("sample-pp", "Random n x n plane partition of m with distinct parts");
  pp->add_option("--n", c.n, "Side of the square shape")->required()->check(CLI::Range(1, 8));
  pp->add_option("--m", c.m, "Sum of the parts")->required()->check(CLI::Range(1LL, kPartitionBudgetM));
  pp->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  add_seed(pp);
  add_common(pp);

  auto* surf = app.add_subcommand("surface", "Evaluate the limit surface L (or M = -log L)");
  surf->add_option("--x", c.x, "Row coordinate in [0, 1]")->required()->check(CLI::Range(0.0, 1.0));
  surf->add_option("--y", c.y, "Column coordinate in [0, theta]")->required()->check(CLI::Range(0.0, 1.0));
  surf->add_option("--theta", c.theta, "Aspect ratio in (0, 1]")->check(CLI::Range(1e-9, 1.0));
  surf->add_option("--surface", which, "L or M")->check(CLI::IsMember({"L", "M"}));
  surf->add_flag("--quiet,-q", c.quiet, "Do not log the run configuration to stderr");

  auto* lc = app.add_subcommand("level-curve", "Sample the level curve on an N-cell grid");
  lc->add_option("--alpha", c.alpha, "Level in [0, 1]")->required()->check(CLI::Range(0.0, 1.0));
  lc->add_option("--theta", c.theta, "Aspect ratio in (0, 1]")->check(CLI::Range(1e-9, 1.0));
  lc->add_option("--N", c.grid, "Number of grid cells")->check(CLI::Range(1, 10000000));
  lc->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"json", "csv"}));
  add_common(lc);

  auto* cd = app.add_subcommand("contour-data", "Mean rescaled entries of random tableaux next to L");
  cd->add_option("--n", c.n, "Number of rows")->required()->check(CLI::Range(1, 1000));
  cd->add_option("--theta", c.theta, "Aspect ratio in (0, 1]")->check(CLI::Range(1e-9, 1.0));
  cd->add_option("--trials", c.trials, "Number of tableaux averaged")->check(CLI::Range(1, 100000));
  cd->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::Range(1, 1024));
  add_seed(cd);
  add_common(cd);

  auto* ver = app.add_subcommand("verify", "Run verification criteria and emit JSONL reports");
  ver->add_option("--suite", c.suite, "exact, variational, montecarlo or all");
  ver->add_option("--tier", c.tier, "small or full")->check(CLI::IsMember({"small", "full"}));
  ver->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::Range(1, 1024));
  add_seed(ver);
  add_common(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (dim->parsed()) {
      c.command = "dim";
      if (square == 0 && c.square_or_shape.empty()) throw ValidationError("give --square n or a shape");
      return cmd_dim(c, square);
    }
    if (st->parsed()) {
      c.command = "sample-tableau";
      return cmd_sample_tableau(c);
    }
    if (pp->parsed()) {
      c.command = "sample-pp";
      return cmd_sample_pp(c);
    }
    if (surf->parsed()) {
      c.command = "surface";
      if (c.y > c.theta) throw ValidationError("y must lie in [0, theta]");
      return cmd_surface(c, which);
    }
    if (lc->parsed()) {
      c.command = "level-curve";
      if (!lc->count("--format")) c.format = "csv";
      return cmd_level_curve(c);
    }
    if (cd->parsed()) {
      c.command = "contour-data";
      c.format = "csv";
      return cmd_contour_data(c);
    }
    if (ver->parsed()) {
      c.command = "verify";
      return cmd_verify(c);
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
