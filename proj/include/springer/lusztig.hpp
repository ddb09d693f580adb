#pragma once

#include <array>
#include <set>
#include <utility>
#include <vector>

#include "springer/f2.hpp"
#include "springer/ncp.hpp"
#include "springer/partition.hpp"

namespace springer {

/// Kernel of Lusztig's canonical quotient for a type-C orbit: generated by
/// t_m t_{m+1} over the indexes m with r_1+...+r_m odd, where t_{ell+1} = 1.
F2Subgroup ke_subgroup(const OrbitDatum& datum);

/// The quotient by ke_subgroup with basis the classes of t_m over the
/// indexes m with even prefix sum.
F2Quotient canonical_quotient(const OrbitDatum& datum);

/// A Temperley-Lieb pattern on Z = {1} u {2m_i, 2m_i+1}: one odd singleton
/// and e noncrossing pairs, each pair on one side of the singleton and made
/// of one odd and one even point.
struct TLPattern {
  std::vector<int> z;
  int singleton = 0;
  std::vector<std::array<int, 2>> pairs;  // each ascending, sorted by front

  friend bool operator==(const TLPattern&, const TLPattern&) = default;
  friend auto operator<=>(const TLPattern&, const TLPattern&) = default;
};

/// All TL patterns of the orbit's Z set; Catalan(e+1) of them.
std::vector<TLPattern> enumerate_tl(const OrbitDatum& datum);

/// The left-cell subgroup H attached to a pattern, in quotient coordinates:
/// t_{m_i1} t_{m_i2} for each pair {2m_i1, 2m_{i2-1}+1} with i1 < i2 <= e,
/// and t_{m_j} for a pair {2m_j, 2m_e+1}.
F2Subgroup h_sigma(const TLPattern& pattern, const OrbitDatum& datum);

/// The explicit bijection between even NCPs and TL patterns, defined when all
/// multiplicities r_i are even (so the quotient is the identity).  A non-base
/// block whose marked-part indexes span [a+1, b] corresponds to the pair
/// {2a+1, 2b}; the remaining points of Z are matched parenthesis-style and
/// the leftover odd point is the singleton.
TLPattern ncp_to_tl(const NoncrossingPartition& ncp, const OrbitDatum& datum);
NoncrossingPartition tl_to_ncp(const TLPattern& pattern,
                               const OrbitDatum& datum);

struct EvidenceReport {
  OrbitDatum datum;
  std::vector<std::pair<NoncrossingPartition, F2Subgroup>> ncp_images;
  std::vector<std::pair<TLPattern, F2Subgroup>> tl_subgroups;
  std::set<F2Subgroup> image_set;
  std::set<F2Subgroup> h_set;
  bool pass = false;
};

/// Compares { p(A_L) : L even NCP } with { H : TL pattern } as subgroup sets
/// of the canonical quotient.
EvidenceReport verify_evidence(const OrbitDatum& datum);

}  // namespace springer
