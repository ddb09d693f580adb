#include "springer/cluster.hpp"

#include <algorithm>
#include <set>

#include "springer/error.hpp"

namespace springer {

std::vector<int> ClusterDecomposition::cluster_ids() const {
  std::vector<int> ids;
  ids.reserve(members.size());
  for (const auto& [id, _] : members) ids.push_back(id);
  return ids;
}

std::vector<int> ClusterDecomposition::closed() const {
  std::vector<int> out;
  for (const auto& [id, _] : members)
    if (!std::binary_search(open.begin(), open.end(), id)) out.push_back(id);
  return out;
}

ClusterDecomposition clusters(const DominoTableau& t) {
  if (t.zero_box())
    fail(Errc::not_admissible, "clusters are defined for even totals (type C)");
  if (!is_admissible(t, LieType::C))
    fail(Errc::not_admissible, "tableau is not admissible of type C");

  const int n = t.domino_count();
  // Cluster 0 is the empty cluster attached to 0 before any domino joins it.
  int next_id = 1;
  std::map<int, std::vector<int>> members{{0, {}}};
  std::map<int, std::vector<int>> iplus{{0, {}}};
  std::map<int, int> b{{0, 0}};
  std::vector<int> rows(t.shape.size(), 0);

  for (int k = 1; k <= n; ++k) {
    const Domino& d = t.domino(k);
    const DominoKind kind = domino_kind(t, k, LieType::C);

    std::set<int> merge;
    switch (kind) {
      case DominoKind::N: {
        const int i = (d.col + 1) / 2;
        merge.insert(b.at(2 * i - 2));
        if (auto it = b.find(2 * i); it != b.end()) merge.insert(it->second);
        break;
      }
      case DominoKind::IPlus: {
        const int i = d.col / 2;
        if (auto it = b.find(2 * i); it != b.end()) merge.insert(it->second);
        break;
      }
      case DominoKind::IMinus: {
        const int i = (d.col - 1) / 2;
        merge.insert(b.at(2 * i));
        break;
      }
    }

    const int c = next_id++;
    std::vector<int> mem{k}, ip;
    if (kind == DominoKind::IPlus) ip.push_back(k);
    for (int m : merge) {
      mem.insert(mem.end(), members.at(m).begin(), members.at(m).end());
      ip.insert(ip.end(), iplus.at(m).begin(), iplus.at(m).end());
      members.erase(m);
      iplus.erase(m);
    }
    std::sort(mem.begin(), mem.end());
    std::sort(ip.begin(), ip.end());
    members[c] = std::move(mem);
    iplus[c] = std::move(ip);

    if (d.horizontal) {
      rows[d.row - 1] += 2;
    } else {
      rows[d.row - 1] += 1;
      rows[d.row] += 1;
    }

    // Reattach B of the current shape.
    std::set<int> b_now{0};
    for (int len : rows)
      if (len > 0 && len % 2 == 0) b_now.insert(len);
    std::map<int, int> nb;
    for (int v : b_now) {
      auto it = b.find(v);
      nb[v] = (it != b.end() && !merge.count(it->second)) ? it->second : c;
    }
    b = std::move(nb);
  }

  // Relabel clusters by their minimal domino label.
  std::map<int, int> relabel;
  for (const auto& [id, mem] : members) {
    if (mem.empty())
      fail(Errc::not_admissible, "internal: empty cluster survived");
    relabel[id] = mem.front();
  }

  ClusterDecomposition out;
  out.tableau = t;
  for (const auto& [id, mem] : members) {
    out.members[relabel.at(id)] = mem;
    for (int label : mem) out.cluster_of[label] = relabel.at(id);
  }
  for (const auto& [id, ip] : iplus) out.iplus[relabel.at(id)] = ip;
  std::set<int> open_set;
  for (const auto& [v, id] : b) {
    out.b_map[v] = relabel.at(id);
    open_set.insert(relabel.at(id));
  }
  out.open.assign(open_set.begin(), open_set.end());
  return out;
}

std::vector<std::vector<int>> open_partition(const ClusterDecomposition& d) {
  std::map<int, std::vector<int>> pre;
  for (const auto& [v, id] : d.b_map) pre[id].push_back(v);
  std::vector<std::vector<int>> blocks;
  blocks.push_back(pre.at(d.b_map.at(0)));  // the block of 0 comes first
  for (auto& [id, block] : pre) {
    if (id == d.b_map.at(0)) continue;
    std::sort(block.begin(), block.end());
    blocks.push_back(block);
  }
  std::sort(blocks.begin() + 1, blocks.end());
  return blocks;
}

}  // namespace springer
