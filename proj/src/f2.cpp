#include "springer/f2.hpp"

#include <algorithm>
#include <bit>

#include "springer/error.hpp"

namespace springer {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::not_classical_type: return "NotClassicalType";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::not_admissible: return "NotAdmissible";
    case Errc::unclassifiable_domino: return "UnclassifiableDomino";
    case Errc::not_a_partition: return "NotAPartition";
    case Errc::infeasible: return "Infeasible";
    case Errc::scope_error: return "ScopeError";
    case Errc::pattern_mismatch: return "PatternMismatch";
    case Errc::singular_table: return "SingularTable";
    case Errc::inconsistent_character: return "InconsistentCharacter";
    case Errc::non_integral_solution: return "NonIntegralSolution";
    case Errc::negative_multiplicity: return "NegativeMultiplicity";
  }
  return "Error";
}

namespace {

std::uint64_t ambient_mask(int rank) {
  return rank >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rank) - 1;
}

std::uint64_t pivot_bit(std::uint64_t v) { return v & (~v + 1); }

// Inserts v into an RREF basis, keeping it fully reduced.
void rref_insert(std::vector<std::uint64_t>& rows, std::uint64_t v) {
  for (std::uint64_t r : rows)
    if (v & pivot_bit(r)) v ^= r;
  if (v == 0) return;
  for (std::uint64_t& r : rows)
    if (r & pivot_bit(v)) r ^= v;
  rows.push_back(v);
  std::sort(rows.begin(), rows.end(),
            [](std::uint64_t a, std::uint64_t b) {
              return pivot_bit(a) < pivot_bit(b);
            });
}

}  // namespace

F2Subgroup subgroup_span(int ambient_rank,
                         const std::vector<std::uint64_t>& generators) {
  if (ambient_rank < 0 || ambient_rank > 64)
    fail(Errc::invalid_argument, "ambient rank out of range");
  const std::uint64_t mask = ambient_mask(ambient_rank);
  F2Subgroup s;
  s.ambient_rank = ambient_rank;
  for (std::uint64_t v : generators) {
    if ((v & ~mask) != 0)
      fail(Errc::dimension_mismatch, "generator does not fit the ambient rank");
    rref_insert(s.basis, v);
  }
  return s;
}

bool subgroup_contains(const F2Subgroup& s, std::uint64_t v) {
  for (std::uint64_t r : s.basis)
    if (v & pivot_bit(r)) v ^= r;
  return v == 0;
}

std::vector<std::uint64_t> subgroup_elements(const F2Subgroup& s) {
  std::vector<std::uint64_t> out;
  out.reserve(std::size_t{1} << s.basis.size());
  for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << s.basis.size());
       ++sel) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < s.basis.size(); ++i)
      if (sel & (std::uint64_t{1} << i)) v ^= s.basis[i];
    out.push_back(v);
  }
  return out;
}

F2Subgroup subgroup_intersection(const F2Subgroup& a, const F2Subgroup& b) {
  if (a.ambient_rank != b.ambient_rank)
    fail(Errc::dimension_mismatch, "intersection needs a common ambient group");
  // Zassenhaus on paired vectors (v, v): rows of a as (v, v), rows of b as
  // (w, 0); the kernel-side of the echelon form spans the intersection.
  struct Pair { std::uint64_t top, bottom; };
  std::vector<Pair> rows;
  auto insert = [&rows](Pair p) {
    for (const Pair& r : rows) {
      std::uint64_t pb = r.top ? pivot_bit(r.top) : 0;
      if (pb && (p.top & pb)) { p.top ^= r.top; p.bottom ^= r.bottom; }
    }
    rows.push_back(p);
  };
  for (std::uint64_t v : a.basis) insert({v, v});
  for (std::uint64_t w : b.basis) insert({w, 0});
  std::vector<std::uint64_t> gens;
  for (const Pair& r : rows)
    if (r.top == 0) gens.push_back(r.bottom);
  return subgroup_span(a.ambient_rank, gens);
}

std::uint64_t project_element(const F2Quotient& q, std::uint64_t v) {
  std::uint64_t img = 0;
  for (int i = 0; i < q.ambient_rank; ++i)
    if (v & (std::uint64_t{1} << i)) img ^= q.projection[i];
  return img;
}

F2Subgroup subgroup_image(const F2Subgroup& s, const F2Quotient& q) {
  if (s.ambient_rank != q.ambient_rank)
    fail(Errc::dimension_mismatch, "subgroup does not live in the quotient's ambient group");
  std::vector<std::uint64_t> imgs;
  imgs.reserve(s.basis.size());
  for (std::uint64_t v : s.basis) imgs.push_back(project_element(q, v));
  return subgroup_span(q.rank(), imgs);
}

std::string format_mask(std::uint64_t v) {
  if (v == 0) return "e";
  std::string out;
  for (int i = 0; i < 64; ++i)
    if (v & (std::uint64_t{1} << i)) out += "t" + std::to_string(i + 1);
  return out;
}

std::string format_subgroup(const F2Subgroup& s) {
  if (s.trivial()) return "1";
  std::string out = "<";
  for (std::size_t i = 0; i < s.basis.size(); ++i) {
    if (i) out += ", ";
    out += format_mask(s.basis[i]);
  }
  return out + ">";
}

}  // namespace springer
