#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace springer {

/// A subgroup of (Z/2Z)^ambient_rank held as a reduced row-echelon basis.
///
/// Bit i-1 of a mask is the generator t_i; the pivot of a row is its lowest
/// set bit.  The basis is fully reduced and sorted by pivot, so two subgroups
/// are equal as sets of elements exactly when they compare equal field-wise.
struct F2Subgroup {
  int ambient_rank = 0;
  std::vector<std::uint64_t> basis;

  int rank() const { return static_cast<int>(basis.size()); }
  std::uint64_t order() const { return std::uint64_t{1} << basis.size(); }
  bool trivial() const { return basis.empty(); }

  friend auto operator<=>(const F2Subgroup&, const F2Subgroup&) = default;
};

/// Canonicalize the span of `generators` inside (Z/2Z)^ambient_rank.
F2Subgroup subgroup_span(int ambient_rank,
                         const std::vector<std::uint64_t>& generators);

bool subgroup_contains(const F2Subgroup& s, std::uint64_t v);

/// All 2^rank elements, in Gray-code-free plain order (XOR combinations by
/// increasing basis-subset mask).  Intended for small groups.
std::vector<std::uint64_t> subgroup_elements(const F2Subgroup& s);

F2Subgroup subgroup_intersection(const F2Subgroup& a, const F2Subgroup& b);

/// A quotient of (Z/2Z)^ambient_rank by `kernel`, together with a chosen
/// basis of the quotient: the classes of the ambient generators t_m for
/// m in basis_indexes (1-based).  projection[i] is the class of t_{i+1}
/// written in quotient coordinates; it kills exactly the kernel.
struct F2Quotient {
  int ambient_rank = 0;
  F2Subgroup kernel;
  std::vector<int> basis_indexes;
  std::vector<std::uint64_t> projection;

  int rank() const { return static_cast<int>(basis_indexes.size()); }
};

std::uint64_t project_element(const F2Quotient& q, std::uint64_t v);

/// Image of a subgroup under the quotient map, canonicalized in quotient
/// coordinates.
F2Subgroup subgroup_image(const F2Subgroup& s, const F2Quotient& q);

/// "t1t3" style rendering of one group element.
std::string format_mask(std::uint64_t v);

/// "<t1t2, t3>" rendering; the trivial subgroup prints as "1".
std::string format_subgroup(const F2Subgroup& s);

}  // namespace springer
