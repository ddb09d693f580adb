#pragma once

#include <map>
#include <vector>

#include "springer/tableau.hpp"

namespace springer {

/// Van Leeuwen's cluster decomposition of an admissible type-C tableau.
///
/// Clusters partition the dominoes; b_map sends each element of B_lambda
/// (0 and the distinct even parts of the shape) to an open cluster.  Cluster
/// ids are the minimal domino label in the cluster.
struct ClusterDecomposition {
  DominoTableau tableau;
  std::map<int, int> cluster_of;               // label -> cluster id
  std::map<int, std::vector<int>> members;     // cluster id -> labels
  std::map<int, std::vector<int>> iplus;       // cluster id -> (I+) labels
  std::map<int, int> b_map;                    // B_lambda value -> cluster id
  std::vector<int> open;                       // image of b_map, sorted

  std::vector<int> cluster_ids() const;
  std::vector<int> closed() const;

  friend bool operator==(const ClusterDecomposition& a,
                         const ClusterDecomposition& b) {
    return a.tableau == b.tableau && a.members == b.members &&
           a.b_map == b.b_map;
  }
};

/// Runs the inductive construction domino by domino in label order:
///   (N) in columns 2i-1,2i  merges b(2i-2), the domino and b(2i);
///   (I+) in column 2i       merges the domino with b(2i), or starts a
///                           fresh cluster when 2i is absent;
///   (I-) in column 2i+1     merges the domino with b(2i).
/// After each step b_map is rebuilt on B of the current shape: values whose
/// cluster was merged, and values new to B, point at the merged cluster;
/// values that left B are dropped.
ClusterDecomposition clusters(const DominoTableau& t);

/// The partition of B_lambda into preimages of the open clusters; the block
/// containing 0 comes first, the rest are ordered by minimum.
std::vector<std::vector<int>> open_partition(const ClusterDecomposition& d);

}  // namespace springer
