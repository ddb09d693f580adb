#include "springer/ncp.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "springer/error.hpp"

namespace springer {

namespace {

void check_partition_of(const std::vector<std::vector<int>>& blocks,
                        const std::vector<int>& base) {
  std::multiset<int> seen;
  for (const auto& b : blocks) {
    if (b.empty()) fail(Errc::not_a_partition, "empty block");
    seen.insert(b.begin(), b.end());
  }
  std::multiset<int> want(base.begin(), base.end());
  if (seen != want)
    fail(Errc::not_a_partition, "blocks do not partition the base set");
}

bool intervals_compatible(int a, int b, int c, int d) {
  // [a,b] and [c,d]: disjoint or one contains the other
  if (b < c || d < a) return true;
  if (a <= c && d <= b) return true;
  if (c <= a && b <= d) return true;
  return false;
}

}  // namespace

bool is_noncrossing(const std::vector<std::vector<int>>& blocks,
                    const std::vector<int>& base) {
  check_partition_of(blocks, base);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      for (int a : blocks[i])
        for (int b : blocks[i]) {
          if (a > b) continue;
          for (int c : blocks[j])
            for (int d : blocks[j]) {
              if (c > d) continue;
              if (!intervals_compatible(a, b, c, d)) return false;
            }
        }
  return true;
}

NoncrossingPartition make_ncp(std::vector<int> base,
                              std::vector<std::vector<int>> blocks) {
  std::sort(base.begin(), base.end());
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  check_partition_of(blocks, base);
  // block of 0 first, the rest by minimum; 0 is the least base element here
  std::sort(blocks.begin(), blocks.end());
  return NoncrossingPartition{std::move(base), std::move(blocks)};
}

namespace {

void set_partitions_rec(const std::vector<int>& base, std::size_t pos,
                        std::vector<std::vector<int>>& blocks,
                        std::vector<std::vector<std::vector<int>>>& out) {
  if (pos == base.size()) {
    out.push_back(blocks);
    return;
  }
  // index loop: the recursion below grows and shrinks `blocks`
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    blocks[i].push_back(base[pos]);
    set_partitions_rec(base, pos + 1, blocks, out);
    blocks[i].pop_back();
  }
  blocks.push_back({base[pos]});
  set_partitions_rec(base, pos + 1, blocks, out);
  blocks.pop_back();
}

std::vector<std::vector<std::vector<int>>> all_set_partitions(
    const std::vector<int>& base) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> blocks;
  set_partitions_rec(base, 0, blocks, out);
  return out;
}

}  // namespace

std::vector<NoncrossingPartition> enumerate_ncp(const std::vector<int>& base) {
  std::vector<int> sorted = base;
  std::sort(sorted.begin(), sorted.end());
  std::vector<NoncrossingPartition> out;
  for (const auto& blocks : all_set_partitions(sorted))
    if (is_noncrossing(blocks, sorted))
      out.push_back(make_ncp(sorted, blocks));
  return out;
}

std::vector<NoncrossingPartition> enumerate_even_ncp(const OrbitDatum& datum) {
  std::vector<NoncrossingPartition> out;
  for (auto& ncp : enumerate_ncp(datum.b_lambda())) {
    bool even = true;
    for (const auto& block : ncp.blocks) {
      if (std::find(block.begin(), block.end(), 0) != block.end()) continue;
      int r = 0;
      for (int v : block) r += datum.mult[datum.marked_index(v) - 1];
      if (r % 2 != 0) {
        even = false;
        break;
      }
    }
    if (even) out.push_back(std::move(ncp));
  }
  return out;
}

F2Subgroup ncp_group(const NoncrossingPartition& ncp, const OrbitDatum& datum) {
  if (ncp.base != datum.b_lambda())
    fail(Errc::invalid_argument, "partition base does not match B_lambda");
  const bool pairs_in_base_block =
      datum.partition.type != LieType::C && datum.isogeny == Isogeny::SO;
  std::vector<std::uint64_t> gens;
  for (const auto& block : ncp.blocks) {
    const bool base_block =
        std::find(block.begin(), block.end(), 0) != block.end();
    std::vector<int> idx;
    for (int v : block)
      if (v != 0) idx.push_back(datum.marked_index(v) - 1);
    if (base_block && !pairs_in_base_block) {
      for (int i : idx) gens.push_back(std::uint64_t{1} << i);
    } else {
      for (std::size_t k = 1; k < idx.size(); ++k)
        gens.push_back((std::uint64_t{1} << idx[k - 1]) |
                       (std::uint64_t{1} << idx[k]));
    }
  }
  return subgroup_span(datum.ell(), gens);
}

std::set<F2Subgroup> s_set(const OrbitDatum& datum) {
  std::set<F2Subgroup> out;
  for (const auto& ncp : enumerate_even_ncp(datum))
    out.insert(ncp_group(ncp, datum));
  return out;
}

std::vector<std::array<int, 2>> ncp_intervals(const NoncrossingPartition& ncp) {
  std::vector<std::array<int, 2>> out;
  for (const auto& block : ncp.blocks) {
    if (std::find(block.begin(), block.end(), 0) != block.end()) continue;
    out.push_back({block.front(), block.back()});
  }
  return out;
}

NoncrossingPartition ncp_from_intervals(
    const std::vector<int>& base,
    const std::vector<std::array<int, 2>>& intervals) {
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    if (intervals[i][0] > intervals[i][1])
      fail(Errc::invalid_argument, "bad interval");
    for (std::size_t j = i + 1; j < intervals.size(); ++j)
      if (!intervals_compatible(intervals[i][0], intervals[i][1],
                                intervals[j][0], intervals[j][1]))
        fail(Errc::invalid_argument, "intervals cross");
  }
  std::vector<std::vector<int>> blocks;
  std::set<int> used;
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    std::vector<int> block;
    for (int v : base) {
      if (v < intervals[i][0] || v > intervals[i][1]) continue;
      bool nested = false;
      for (std::size_t j = 0; j < intervals.size(); ++j) {
        if (j == i) continue;
        // strictly contained interval
        if (intervals[j][0] >= intervals[i][0] &&
            intervals[j][1] <= intervals[i][1] &&
            (intervals[j][0] > intervals[i][0] ||
             intervals[j][1] < intervals[i][1]) &&
            v >= intervals[j][0] && v <= intervals[j][1]) {
          nested = true;
          break;
        }
      }
      if (!nested) {
        block.push_back(v);
        used.insert(v);
      }
    }
    if (block.empty()) fail(Errc::invalid_argument, "interval captures no base point");
    blocks.push_back(std::move(block));
  }
  std::vector<int> rest;
  for (int v : base)
    if (!used.count(v)) rest.push_back(v);
  if (rest.empty() || rest.front() != *std::min_element(base.begin(), base.end()))
    fail(Errc::invalid_argument, "0 must stay outside the intervals' blocks");
  blocks.push_back(std::move(rest));
  return make_ncp(base, std::move(blocks));
}

std::string render_ncp_diagram(const NoncrossingPartition& ncp) {
  if (ncp.base.empty()) return "";
  // column of each base value
  std::map<int, int> col;
  std::string labels;
  for (int v : ncp.base) {
    std::string s = std::to_string(v);
    if (!labels.empty()) labels += "  ";
    col[v] = static_cast<int>(labels.size() + s.size() / 2);
    labels += s;
  }
  // arcs join consecutive members of a block
  struct Arc { int a, b, height; };
  std::vector<Arc> arcs;
  for (const auto& block : ncp.blocks)
    for (std::size_t i = 1; i < block.size(); ++i)
      arcs.push_back({col.at(block[i - 1]), col.at(block[i]), 1});
  for (auto& arc : arcs)
    for (const auto& other : arcs)
      if (other.a >= arc.a && other.b <= arc.b &&
          (other.a > arc.a || other.b < arc.b))
        arc.height = std::max(arc.height, other.height + 1);
  int max_h = 0;
  for (const auto& arc : arcs) max_h = std::max(max_h, arc.height);

  std::vector<std::string> canvas(max_h, std::string(labels.size(), ' '));
  auto row_of = [&](int h) { return max_h - h; };  // height 1 sits just above labels
  for (const auto& arc : arcs) {
    std::string& top = canvas[row_of(arc.height)];
    top[arc.a] = '.';
    top[arc.b] = '.';
    for (int x = arc.a + 1; x < arc.b; ++x)
      if (top[x] == ' ') top[x] = '-';
    for (int h = 1; h < arc.height; ++h) {
      canvas[row_of(h)][arc.a] = '|';
      canvas[row_of(h)][arc.b] = '|';
    }
  }
  std::string out;
  for (const auto& line : canvas) out += line + "\n";
  out += labels + "\n";
  return out;
}

}  // namespace springer
