#include "springer/json_io.hpp"

#include <algorithm>

#include "springer/error.hpp"

namespace springer {

namespace {

int int_key(const std::string& key) {
  try {
    return std::stoi(key);
  } catch (const std::exception&) {
    fail(Errc::invalid_argument, "expected an integer key, got '" + key + "'");
  }
}

}  // namespace

json subgroup_to_json(const F2Subgroup& s) {
  json j;
  j["ambient_rank"] = s.ambient_rank;
  json basis = json::array();
  for (std::uint64_t row : s.basis) {
    std::string bits(s.ambient_rank, '0');
    for (int i = 0; i < s.ambient_rank; ++i)
      if (row & (std::uint64_t{1} << i)) bits[i] = '1';
    basis.push_back(bits);
  }
  j["basis"] = std::move(basis);
  return j;
}

F2Subgroup subgroup_from_json(const json& j) {
  const int rank = j.at("ambient_rank").get<int>();
  std::vector<std::uint64_t> gens;
  for (const auto& item : j.at("basis")) {
    const std::string bits = item.get<std::string>();
    if (static_cast<int>(bits.size()) != rank)
      fail(Errc::dimension_mismatch, "bit string length differs from the rank");
    std::uint64_t v = 0;
    for (int i = 0; i < rank; ++i) {
      if (bits[i] == '1')
        v |= std::uint64_t{1} << i;
      else if (bits[i] != '0')
        fail(Errc::invalid_argument, "bit strings may contain only 0 and 1");
    }
    gens.push_back(v);
  }
  return subgroup_span(rank, gens);
}

json tableau_to_json(const DominoTableau& t) {
  json j;
  j["shape"] = t.shape;
  j["grid"] = t.grid;
  return j;
}

DominoTableau tableau_from_json(const json& j) {
  return make_tableau(j.at("shape").get<std::vector<int>>(),
                      j.at("grid").get<std::vector<std::vector<int>>>());
}

json clusters_to_json(const ClusterSummary& s) {
  json j;
  json cl = json::object();
  for (const auto& [id, labels] : s.clusters) cl[std::to_string(id)] = labels;
  j["clusters"] = std::move(cl);
  json b = json::object();
  for (const auto& [v, id] : s.b_map) b[std::to_string(v)] = id;
  j["b_map"] = std::move(b);
  j["open"] = s.open;
  return j;
}

json clusters_to_json(const ClusterDecomposition& d) {
  ClusterSummary s;
  s.clusters = d.members;
  s.b_map = d.b_map;
  s.open = d.open;
  return clusters_to_json(s);
}

ClusterSummary clusters_from_json(const json& j) {
  ClusterSummary s;
  for (const auto& [key, value] : j.at("clusters").items())
    s.clusters[int_key(key)] = value.get<std::vector<int>>();
  for (const auto& [key, value] : j.at("b_map").items())
    s.b_map[int_key(key)] = value.get<int>();
  s.open = j.at("open").get<std::vector<int>>();
  return s;
}

json signed_class_to_json(const SignedClass& c) {
  json j;
  j["tableau"] = tableau_to_json(c.dec.tableau);
  json signs = json::object();
  for (const auto& [id, plus] : c.sign)
    signs[std::to_string(id)] = plus ? "+" : "-";
  j["signs"] = std::move(signs);
  return j;
}

SignedClass signed_class_from_json(const json& j) {
  SignedClass c;
  c.dec = clusters(tableau_from_json(j.at("tableau")));
  for (int id : c.dec.cluster_ids()) c.sign[id] = true;
  for (const auto& [key, value] : j.at("signs").items()) {
    const int id = int_key(key);
    const std::string s = value.get<std::string>();
    if (!c.sign.count(id))
      fail(Errc::invalid_argument, "sign for an unknown cluster");
    if (s != "+" && s != "-")
      fail(Errc::invalid_argument, "signs must be '+' or '-'");
    c.sign[id] = (s == "+");
  }
  if (!c.sign.at(c.dec.b_map.at(0)))
    fail(Errc::invalid_argument, "the cluster of 0 is pinned to '+'");
  return c;
}

json ncp_to_json(const NoncrossingPartition& ncp) {
  json j;
  j["base"] = ncp.base;
  j["blocks"] = ncp.blocks;
  return j;
}

NoncrossingPartition ncp_from_json(const json& j) {
  auto base = j.at("base").get<std::vector<int>>();
  auto blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
  if (!is_noncrossing(blocks, base))
    fail(Errc::invalid_argument, "blocks cross");
  return make_ncp(std::move(base), std::move(blocks));
}

json tl_to_json(const TLPattern& p) {
  json j;
  j["z"] = p.z;
  j["singleton"] = p.singleton;
  j["pairs"] = p.pairs;
  return j;
}

TLPattern tl_from_json(const json& j) {
  TLPattern p;
  p.z = j.at("z").get<std::vector<int>>();
  p.singleton = j.at("singleton").get<int>();
  for (const auto& item : j.at("pairs")) {
    auto pair = item.get<std::vector<int>>();
    if (pair.size() != 2) fail(Errc::invalid_argument, "pairs have two points");
    p.pairs.push_back({std::min(pair[0], pair[1]), std::max(pair[0], pair[1])});
  }
  std::sort(p.pairs.begin(), p.pairs.end());
  return p;
}

json orbit_report_to_json(const OrbitReportSummary& r) {
  json j;
  j["partition"] = r.partition;
  json orbits = json::array();
  for (const auto& [size, stab] : r.orbits) {
    json o;
    o["size"] = size;
    o["stabilizer"] = subgroup_to_json(stab);
    orbits.push_back(std::move(o));
  }
  j["orbits"] = std::move(orbits);
  return j;
}

json orbit_report_to_json(const OrbitReport& r) {
  OrbitReportSummary s;
  s.partition = r.datum.partition.parts;
  for (const auto& o : r.orbits) s.orbits.emplace_back(o.size, o.stab);
  return orbit_report_to_json(s);
}

OrbitReportSummary orbit_report_from_json(const json& j) {
  OrbitReportSummary s;
  s.partition = j.at("partition").get<std::vector<int>>();
  for (const auto& o : j.at("orbits"))
    s.orbits.emplace_back(o.at("size").get<long long>(),
                          subgroup_from_json(o.at("stabilizer")));
  return s;
}

json evidence_to_json(const EvidenceReport& r) {
  json j;
  j["partition"] = r.datum.partition.parts;
  json ncp_side = json::array();
  for (const auto& [ncp, image] : r.ncp_images) {
    json item;
    item["ncp"] = ncp_to_json(ncp);
    item["image"] = subgroup_to_json(image);
    ncp_side.push_back(std::move(item));
  }
  j["ncp_side"] = std::move(ncp_side);
  json tl_side = json::array();
  for (const auto& [pattern, h] : r.tl_subgroups) {
    json item;
    item["pattern"] = tl_to_json(pattern);
    item["subgroup"] = subgroup_to_json(h);
    tl_side.push_back(std::move(item));
  }
  j["tl_side"] = std::move(tl_side);
  j["verdict"] = r.pass ? "pass" : "fail";
  return j;
}

json solve_result_to_json(const StabilizerFamily& family,
                          const std::vector<long long>& multiplicities) {
  json j;
  json mults = json::object();
  const auto labels = family.orbit_labels();
  for (std::size_t i = 0; i < labels.size(); ++i)
    mults[labels[i]] = multiplicities.at(i);
  j["multiplicities"] = std::move(mults);
  return j;
}

json char_table_to_json(const CharTable& table) {
  json j;
  j["family"] = table.family.name;
  j["classes"] = sym_group(table.family.degree).class_names;
  json rows = json::object();
  const auto labels = table.family.orbit_labels();
  for (std::size_t i = 0; i < labels.size(); ++i) rows[labels[i]] = table.rows[i];
  j["rows"] = std::move(rows);
  return j;
}

}  // namespace springer
