#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "springer/f2.hpp"
#include "springer/partition.hpp"

namespace springer {

/// A noncrossing partition of B_lambda.  Blocks are stored ascending, the
/// block containing 0 first and the rest ordered by minimum.
struct NoncrossingPartition {
  std::vector<int> base;
  std::vector<std::vector<int>> blocks;

  friend bool operator==(const NoncrossingPartition&,
                         const NoncrossingPartition&) = default;
  friend auto operator<=>(const NoncrossingPartition&,
                          const NoncrossingPartition&) = default;
};

/// True iff for every pair of blocks, every interval spanned inside one block
/// is disjoint from or nested with every interval of the other.  Throws
/// not_a_partition when `blocks` is not a partition of `base`.
bool is_noncrossing(const std::vector<std::vector<int>>& blocks,
                    const std::vector<int>& base);

NoncrossingPartition make_ncp(std::vector<int> base,
                              std::vector<std::vector<int>> blocks);

/// All noncrossing partitions of B_lambda with 0 in the base block and even
/// multiplicity sum r(L_i) in every other block.
std::vector<NoncrossingPartition> enumerate_even_ncp(const OrbitDatum& datum);

/// All noncrossing partitions of an arbitrary base set with no parity filter;
/// deterministic order.  (Counting tool: a chain of m points gives Catalan(m).)
std::vector<NoncrossingPartition> enumerate_ncp(const std::vector<int>& base);

/// The subgroup A_L attached to an NCP: pair generators t_i t_j inside each
/// non-base block, and from the base block either singletons t_i (type C and
/// isogeny O) or pairs t_i t_j (isogeny SO).
F2Subgroup ncp_group(const NoncrossingPartition& ncp, const OrbitDatum& datum);

/// { A_L : L even NCP of B_lambda } as a set of canonical subgroups.
std::set<F2Subgroup> s_set(const OrbitDatum& datum);

/// Reconstruction from the end points: block i is the set of base values in
/// [min_i, max_i] not covered by a strictly nested interval; the base block
/// is the complement.
NoncrossingPartition ncp_from_intervals(
    const std::vector<int>& base,
    const std::vector<std::array<int, 2>>& intervals);

/// The [min, max] intervals of the non-base blocks, in block order.
std::vector<std::array<int, 2>> ncp_intervals(const NoncrossingPartition& ncp);

/// ASCII arc diagram above a number line.
std::string render_ncp_diagram(const NoncrossingPartition& ncp);

}  // namespace springer
