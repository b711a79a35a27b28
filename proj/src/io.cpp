#include "limitshape/io.hpp"

#include <cstdio>

#include "limitshape/errors.hpp"

namespace limitshape {

using nlohmann::json;

namespace {

void expect_type(const json& j, const char* type) {
  if (!j.is_object() || !j.contains("type") || j.at("type") != type)
    throw ValidationError(std::string("expected a JSON object of type '") + type + "'");
}

}  // namespace

json to_json(const Partition& lambda) {
  return json{{"type", "partition"}, {"parts", lambda.parts()}};
}

Partition partition_from_json(const json& j) {
  expect_type(j, "partition");
  return Partition(j.at("parts").get<std::vector<int>>());
}

json to_json(const Tableau& t) {
  return json{{"type", "tableau"}, {"shape", t.shape().parts()}, {"rows", t.rows()}};
}

Tableau tableau_from_json(const json& j) {
  expect_type(j, "tableau");
  Tableau t(j.at("rows").get<std::vector<std::vector<int>>>());
  if (j.contains("shape") && j.at("shape").get<std::vector<int>>() != t.shape().parts())
    throw ValidationError("tableau shape does not match its rows");
  return t;
}

json permutation_to_json(const Permutation& perm) {
  return json{{"type", "permutation"}, {"values", perm}};
}

Permutation permutation_from_json(const json& j) {
  expect_type(j, "permutation");
  Permutation perm = j.at("values").get<std::vector<int>>();
  if (!is_permutation(perm)) throw ValidationError("values are not a permutation of 1..N");
  return perm;
}

json to_json(const PlanePartition& pi) {
  return json{{"type", "plane_partition"},
              {"shape", pi.shape().parts()},
              {"sum", pi.sum()},
              {"rows", pi.rows()}};
}

PlanePartition plane_partition_from_json(const json& j) {
  expect_type(j, "plane_partition");
  PlanePartition pi(j.at("rows").get<std::vector<std::vector<long long>>>());
  if (j.contains("sum") && j.at("sum").get<long long>() != pi.sum())
    throw ValidationError("plane partition sum does not match its rows");
  return pi;
}

json to_json(const TrialReport& r) {
  json params = json::object();
  for (const auto& [key, value] : r.params) params[key] = value;
  return json{{"id", r.id},
              {"description", r.description},
              {"params", params},
              {"seed", r.seed},
              {"statistic", r.statistic},
              {"threshold", r.threshold},
              {"pass", r.pass},
              {"runtime_seconds", r.runtime_seconds},
              {"note", r.note}};
}

std::string grid_function_csv(const GridFunction& g) {
  std::string out = "u,g\n";
  char buf[96];
  for (int i = 0; i <= g.cells(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", g.node(i), g.values()[i]);
    out += buf;
  }
  return out;
}

}  // namespace limitshape
