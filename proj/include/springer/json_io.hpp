#pragma once

#include <map>
#include <vector>

#include <json.hpp>

#include "springer/component.hpp"
#include "springer/exceptional.hpp"
#include "springer/f2.hpp"
#include "springer/lusztig.hpp"
#include "springer/ncp.hpp"
#include "springer/tableau.hpp"

namespace springer {

using json = nlohmann::ordered_json;

// {"ambient_rank": 3, "basis": ["110", "001"]}, leftmost character = t1.
json subgroup_to_json(const F2Subgroup& s);
F2Subgroup subgroup_from_json(const json& j);

// {"shape": [3,3], "grid": [[1,2,3],[1,2,3]]}
json tableau_to_json(const DominoTableau& t);
DominoTableau tableau_from_json(const json& j);

// {"clusters": {"1":[1,5],...}, "b_map": {"0":1,...}, "open": [1,4,6]}
struct ClusterSummary {
  std::map<int, std::vector<int>> clusters;
  std::map<int, int> b_map;
  std::vector<int> open;

  friend bool operator==(const ClusterSummary&, const ClusterSummary&) = default;
};
json clusters_to_json(const ClusterDecomposition& d);
json clusters_to_json(const ClusterSummary& s);
ClusterSummary clusters_from_json(const json& j);

// {"tableau": {...}, "signs": {"1":"+","4":"-"}}
json signed_class_to_json(const SignedClass& c);
SignedClass signed_class_from_json(const json& j);

// {"base": [0,16,38,100], "blocks": [[0,16],[38,100]]}
json ncp_to_json(const NoncrossingPartition& ncp);
NoncrossingPartition ncp_from_json(const json& j);

// {"z": [1,4,5,6,7], "singleton": 1, "pairs": [[4,5],[6,7]]}
json tl_to_json(const TLPattern& p);
TLPattern tl_from_json(const json& j);

// {"partition": [2,2], "orbits": [{"size":2,"stabilizer":{...}}, ...]}
struct OrbitReportSummary {
  std::vector<int> partition;
  std::vector<std::pair<long long, F2Subgroup>> orbits;

  friend bool operator==(const OrbitReportSummary&,
                         const OrbitReportSummary&) = default;
};
json orbit_report_to_json(const OrbitReport& r);
json orbit_report_to_json(const OrbitReportSummary& r);
OrbitReportSummary orbit_report_from_json(const json& j);

json evidence_to_json(const EvidenceReport& r);

// {"family": "S3", "chi": [9,3,0]} -> {"multiplicities": {"S3/1": 0, ...}}
json solve_result_to_json(const StabilizerFamily& family,
                          const std::vector<long long>& multiplicities);

json char_table_to_json(const CharTable& table);

}  // namespace springer
