#include "springer/lusztig.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "springer/error.hpp"

namespace springer {

namespace {

void require_type_c(const OrbitDatum& datum) {
  if (datum.partition.type != LieType::C)
    fail(Errc::scope_error, "the canonical-quotient machinery is for type C");
}

std::vector<int> prefix_sums(const OrbitDatum& datum) {
  std::vector<int> p(datum.ell() + 1, 0);
  for (int m = 1; m <= datum.ell(); ++m) p[m] = p[m - 1] + datum.mult[m - 1];
  return p;
}

}  // namespace

F2Subgroup ke_subgroup(const OrbitDatum& datum) {
  require_type_c(datum);
  const auto prefix = prefix_sums(datum);
  std::vector<std::uint64_t> gens;
  for (int m = 1; m <= datum.ell(); ++m) {
    if (prefix[m] % 2 == 0) continue;
    std::uint64_t g = std::uint64_t{1} << (m - 1);
    if (m < datum.ell()) g |= std::uint64_t{1} << m;  // t_{ell+1} = 1
    gens.push_back(g);
  }
  return subgroup_span(datum.ell(), gens);
}

F2Quotient canonical_quotient(const OrbitDatum& datum) {
  require_type_c(datum);
  const auto prefix = prefix_sums(datum);
  F2Quotient q;
  q.ambient_rank = datum.ell();
  q.kernel = ke_subgroup(datum);
  std::map<int, int> pos;  // ambient index -> quotient coordinate
  for (int m = 1; m <= datum.ell(); ++m)
    if (prefix[m] % 2 == 0) {
      pos[m] = static_cast<int>(q.basis_indexes.size());
      q.basis_indexes.push_back(m);
    }
  q.projection.assign(datum.ell(), 0);
  for (int i = 1; i <= datum.ell(); ++i) {
    // t_i ~ t_{i+1} while the prefix sum at i is odd
    int j = i;
    while (j <= datum.ell() && prefix[j] % 2 == 1) ++j;
    if (j <= datum.ell())
      q.projection[i - 1] = std::uint64_t{1} << pos.at(j);
  }
  return q;
}

namespace {

// Noncrossing perfect matchings of `points`: the first point pairs with a
// point at odd distance, splitting the rest into inside and outside.
void matchings_rec(const std::vector<int>& points, std::size_t lo,
                   std::size_t hi, std::vector<std::array<int, 2>>& cur,
                   std::vector<std::vector<std::array<int, 2>>>& out);

void matchings_split(const std::vector<int>& points, std::size_t lo,
                     std::size_t mid_hi, std::size_t hi,
                     std::vector<std::array<int, 2>>& cur,
                     std::vector<std::vector<std::array<int, 2>>>& out) {
  // match (lo, mid_hi]'s interior first, then the tail
  std::vector<std::array<int, 2>> saved = cur;
  std::vector<std::vector<std::array<int, 2>>> inner;
  std::vector<std::array<int, 2>> icur;
  matchings_rec(points, lo + 1, mid_hi, icur, inner);
  for (const auto& in : inner) {
    cur = saved;
    cur.insert(cur.end(), in.begin(), in.end());
    matchings_rec(points, mid_hi + 1, hi, cur, out);
  }
  cur = saved;
}

void matchings_rec(const std::vector<int>& points, std::size_t lo,
                   std::size_t hi, std::vector<std::array<int, 2>>& cur,
                   std::vector<std::vector<std::array<int, 2>>>& out) {
  if (lo >= hi) {
    out.push_back(cur);
    return;
  }
  for (std::size_t j = lo + 1; j < hi; j += 2) {
    cur.push_back({points[lo], points[j]});
    matchings_split(points, lo, j, hi, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::array<int, 2>>> noncrossing_matchings(
    const std::vector<int>& points) {
  std::vector<std::vector<std::array<int, 2>>> out;
  std::vector<std::array<int, 2>> cur;
  matchings_rec(points, 0, points.size(), cur, out);
  return out;
}

std::vector<int> z_set(const F2Quotient& q) {
  std::vector<int> z{1};
  for (int m : q.basis_indexes) {
    z.push_back(2 * m);
    z.push_back(2 * m + 1);
  }
  std::sort(z.begin(), z.end());
  return z;
}

TLPattern assemble(const std::vector<int>& z, int singleton,
                   std::vector<std::array<int, 2>> pairs) {
  for (auto& p : pairs)
    if (p[0] > p[1]) std::swap(p[0], p[1]);
  std::sort(pairs.begin(), pairs.end());
  return TLPattern{z, singleton, std::move(pairs)};
}

}  // namespace

std::vector<TLPattern> enumerate_tl(const OrbitDatum& datum) {
  const auto q = canonical_quotient(datum);
  const auto z = z_set(q);
  std::vector<TLPattern> out;
  for (int d : z) {
    if (d % 2 == 0) continue;
    std::vector<int> left, right;
    for (int v : z) {
      if (v < d) left.push_back(v);
      if (v > d) right.push_back(v);
    }
    for (const auto& lm : noncrossing_matchings(left))
      for (const auto& rm : noncrossing_matchings(right)) {
        std::vector<std::array<int, 2>> pairs = lm;
        pairs.insert(pairs.end(), rm.begin(), rm.end());
        out.push_back(assemble(z, d, std::move(pairs)));
      }
  }
  return out;
}

F2Subgroup h_sigma(const TLPattern& pattern, const OrbitDatum& datum) {
  const auto q = canonical_quotient(datum);
  if (pattern.z != z_set(q))
    fail(Errc::pattern_mismatch, "pattern is over a different Z set");
  const auto& m = q.basis_indexes;
  const int e = q.rank();
  std::vector<std::uint64_t> gens;
  for (const auto& p : pattern.pairs) {
    for (int i1 = 1; i1 <= e; ++i1)
      for (int i2 = i1 + 1; i2 <= e; ++i2) {
        std::array<int, 2> want{2 * m[i1 - 1], 2 * m[i2 - 2] + 1};
        std::sort(want.begin(), want.end());
        if (p == want)
          gens.push_back((std::uint64_t{1} << (i1 - 1)) |
                         (std::uint64_t{1} << (i2 - 1)));
      }
    for (int j = 1; j <= e; ++j) {
      std::array<int, 2> want{2 * m[j - 1], 2 * m[e - 1] + 1};
      std::sort(want.begin(), want.end());
      if (p == want) gens.push_back(std::uint64_t{1} << (j - 1));
    }
  }
  return subgroup_span(e, gens);
}

namespace {

void require_all_even(const OrbitDatum& datum) {
  for (int r : datum.mult)
    if (r % 2 != 0)
      fail(Errc::scope_error,
           "the explicit bijection needs all multiplicities even");
}

}  // namespace

TLPattern ncp_to_tl(const NoncrossingPartition& ncp, const OrbitDatum& datum) {
  require_type_c(datum);
  require_all_even(datum);
  if (ncp.base != datum.b_lambda())
    fail(Errc::invalid_argument, "partition base does not match B_lambda");
  const int ell = datum.ell();
  std::vector<int> z;
  for (int v = 1; v <= 2 * ell + 1; ++v) z.push_back(v);

  // a non-base block with marked indexes spanning [a+1, b] gives {2a+1, 2b}
  std::vector<std::array<int, 2>> pairs;
  std::set<int> used;
  for (const auto& block : ncp.blocks) {
    if (std::find(block.begin(), block.end(), 0) != block.end()) continue;
    const int a1 = datum.marked_index(block.back());   // least index
    const int b = datum.marked_index(block.front());   // greatest index
    pairs.push_back({2 * (a1 - 1) + 1, 2 * b});
    used.insert(2 * (a1 - 1) + 1);
    used.insert(2 * b);
  }

  // The rest matches parenthesis-style: each odd point closes the most
  // recent open even point; the odd point left over is the singleton.
  std::vector<int> stack;
  int singleton = -1;
  for (int v : z) {
    if (used.count(v)) continue;
    if (v % 2 == 0) {
      stack.push_back(v);
    } else if (!stack.empty()) {
      pairs.push_back({stack.back(), v});
      stack.pop_back();
    } else {
      if (singleton != -1)
        fail(Errc::invalid_argument, "partition does not yield a pattern");
      singleton = v;
    }
  }
  if (singleton == -1 || !stack.empty())
    fail(Errc::invalid_argument, "partition does not yield a pattern");
  return assemble(z, singleton, std::move(pairs));
}

NoncrossingPartition tl_to_ncp(const TLPattern& pattern,
                               const OrbitDatum& datum) {
  require_type_c(datum);
  require_all_even(datum);
  const auto q = canonical_quotient(datum);
  if (pattern.z != z_set(q))
    fail(Errc::pattern_mismatch, "pattern is over a different Z set");

  // index intervals [a+1, b] from the pairs {2a+1 < 2b}
  std::vector<std::array<int, 2>> idx_intervals;
  for (const auto& p : pattern.pairs)
    if (p[0] % 2 == 1 && p[1] % 2 == 0)
      idx_intervals.push_back({(p[0] - 1) / 2 + 1, p[1] / 2});

  // translate index intervals to value intervals on B_lambda
  std::vector<std::array<int, 2>> value_intervals;
  for (const auto& iv : idx_intervals)
    value_intervals.push_back(
        {datum.marked[iv[1] - 1], datum.marked[iv[0] - 1]});
  return ncp_from_intervals(datum.b_lambda(), value_intervals);
}

EvidenceReport verify_evidence(const OrbitDatum& datum) {
  require_type_c(datum);
  EvidenceReport report;
  report.datum = datum;
  const auto q = canonical_quotient(datum);
  for (const auto& ncp : enumerate_even_ncp(datum)) {
    F2Subgroup image = subgroup_image(ncp_group(ncp, datum), q);
    report.image_set.insert(image);
    report.ncp_images.emplace_back(ncp, std::move(image));
  }
  for (const auto& pattern : enumerate_tl(datum)) {
    F2Subgroup h = h_sigma(pattern, datum);
    report.h_set.insert(h);
    report.tl_subgroups.emplace_back(pattern, std::move(h));
  }
  report.pass = report.image_set == report.h_set;
  return report;
}

}  // namespace springer
