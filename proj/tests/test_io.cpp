#include <gtest/gtest.h>

#include <sstream>

#include "limitshape/errors.hpp"
#include "limitshape/io.hpp"

using namespace limitshape;
using nlohmann::json;

TEST(Json, PartitionRoundTrip) {
  const Partition p({4, 2, 2, 1});
  const json j = to_json(p);
  EXPECT_EQ(j.at("type"), "partition");
  EXPECT_EQ(partition_from_json(json::parse(j.dump())), p);
  EXPECT_EQ(partition_from_json(to_json(Partition())), Partition());
  EXPECT_THROW(partition_from_json(json{{"type", "partition"}, {"parts", {1, 2}}}), ValidationError);
  EXPECT_THROW(partition_from_json(json{{"type", "tableau"}, {"parts", {1}}}), ValidationError);
  EXPECT_THROW(partition_from_json(json::array({1, 2})), ValidationError);
}

TEST(Json, TableauRoundTrip) {
  Rng rng(1);
  for (int n = 1; n <= 6; ++n) {
    const Tableau t = sample_square_tableau(n, rng);
    const json j = to_json(t);
    EXPECT_EQ(j.at("shape"), json(t.shape().parts()));
    EXPECT_EQ(tableau_from_json(json::parse(j.dump())), t);
  }
  json bad = to_json(Tableau({{1, 2}, {3}}));
  bad["shape"] = {3};
  EXPECT_THROW(tableau_from_json(bad), ValidationError);
  EXPECT_THROW(tableau_from_json(json{{"type", "tableau"}, {"rows", {{2, 1}}}}), ValidationError);
}

TEST(Json, PermutationRoundTrip) {
  Rng rng(2);
  const Permutation p = random_permutation(30, rng);
  EXPECT_EQ(permutation_from_json(json::parse(permutation_to_json(p).dump())), p);
  EXPECT_THROW(permutation_from_json(json{{"type", "permutation"}, {"values", {1, 1}}}), ValidationError);
  EXPECT_THROW(permutation_from_json(to_json(Partition({1}))), ValidationError);
}

TEST(Json, PlanePartitionRoundTrip) {
  Rng rng(3);
  const PlanePartition pi = sample_plane_partition(3, 100, rng);
  const json j = to_json(pi);
  EXPECT_EQ(j.at("sum"), 100);
  EXPECT_EQ(plane_partition_from_json(json::parse(j.dump())), pi);
  json bad = j;
  bad["sum"] = 99;
  EXPECT_THROW(plane_partition_from_json(bad), ValidationError);
}

TEST(Json, TrialReportFields) {
  TrialReport r;
  r.id = "c5";
  r.description = "functional";
  r.params = {{"n", 4.0}, {"alpha", 0.5}};
  r.seed = 42;
  r.statistic = 1e-7;
  r.threshold = 1e-6;
  r.pass = true;
  r.note = "ok";
  const json j = json::parse(to_json(r).dump());
  EXPECT_EQ(j.at("id"), "c5");
  EXPECT_EQ(j.at("params").at("alpha"), 0.5);
  EXPECT_EQ(j.at("seed"), 42);
  EXPECT_EQ(j.at("pass"), true);
  EXPECT_DOUBLE_EQ(j.at("statistic").get<double>(), 1e-7);
  for (const char* key : {"description", "threshold", "runtime_seconds", "note"}) EXPECT_TRUE(j.contains(key));
}

TEST(Csv, GridFunction) {
  const GridFunction g(-1.0, 1.0, {1.0, 0.25, 1.0});
  const std::string csv = grid_function_csv(g);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "u,g");
  std::vector<std::pair<double, double>> rows;
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    rows.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
  }
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[1], std::make_pair(0.0, 0.25));
  EXPECT_EQ(rows[2], std::make_pair(1.0, 1.0));
  // Full precision survives the text round trip.
  const GridFunction h(0.0, 1.0, {0.1, 1.0 / 3.0});
  std::istringstream in2(grid_function_csv(h));
  std::getline(in2, line);
  std::getline(in2, line);
  std::getline(in2, line);
  EXPECT_EQ(std::stod(line.substr(line.find(',') + 1)), 1.0 / 3.0);
}
