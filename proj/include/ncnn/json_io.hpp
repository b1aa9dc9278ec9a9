#pragma once

#include <string>
#include <utility>

#include <json.hpp>

#include "ncnn/family.hpp"
#include "ncnn/partition.hpp"
#include "ncnn/roots.hpp"
#include "ncnn/signed_perm.hpp"
#include "ncnn/statistics.hpp"

namespace ncnn {

using nlohmann::json;

// {"family":"C","rank":8,"roots":[[i,j],...]} with root_endpoints pairs.
json antichain_to_json(const GroupFamily& g, const Antichain& a);
std::pair<GroupFamily, Antichain> antichain_from_json(const json& j);

// {"family":"D","rank":4,"images":[-1,3,-2,4]}
json perm_to_json(const GroupFamily& g, const SignedPermutation& w);
std::pair<GroupFamily, SignedPermutation> perm_from_json(const json& j);

// {"family":"B","rank":8,"blocks":[[1,2],[3,-7,-8],[5]],"zero":[4,6,-4,-6]}
// with one representative per +- pair; the reader reconstructs mirrors.
json partition_to_json(const GroupFamily& g, const ClassicalPartition& p);
std::pair<GroupFamily, ClassicalPartition> partition_from_json(const json& j);

// {"a":[3],"mu":[2],"nu":[1,1,2,3],"c":["+","-"],"xi":[2,3]}
json bundle_to_json(const StatisticBundle& s);
StatisticBundle bundle_from_json(const json& j);

GroupFamily group_from_json(const json& j);
json parse_json_line(const std::string& line);

}  // namespace ncnn
