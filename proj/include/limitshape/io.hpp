#pragma once

#include <string>

#include <json.hpp>
#include "limitshape/diagrams.hpp"
#include "limitshape/partitions1d.hpp"
#include "limitshape/sampler.hpp"
#include "limitshape/stats.hpp"
#include "limitshape/variational.hpp"

namespace limitshape {

nlohmann::json to_json(const Partition& lambda);
Partition partition_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Tableau& t);
Tableau tableau_from_json(const nlohmann::json& j);
nlohmann::json permutation_to_json(const Permutation& perm);
Permutation permutation_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PlanePartition& pi);
PlanePartition plane_partition_from_json(const nlohmann::json& j);
nlohmann::json to_json(const TrialReport& r);
std::string grid_function_csv(const GridFunction& g);

}  // namespace limitshape
