#pragma once

#include <string>
#include <vector>

namespace springer {

/// A permutation of {0,...,n-1}; img[i] is the image of i.
struct Perm {
  std::vector<int> img;

  static Perm identity(int n);
  int degree() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img.at(i); }

  friend Perm operator*(const Perm& a, const Perm& b);  // (a*b)(i) = a(b(i))
  Perm inverse() const;
  std::vector<int> cycle_type() const;  // descending, fixed points included

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;
};

/// Build a permutation of degree n from 1-based cycles, e.g. {{1,2},{3,4}}.
Perm perm_from_cycles(int n, const std::vector<std::vector<int>>& cycles);

/// The symmetric group S_n (n <= 5 in practice) with its conjugacy classes
/// in the fixed order (), (12), (123), (12)(34), (1234), (12)(345), (12345)
/// truncated to the classes that exist in degree n.
struct SymGroup {
  int degree = 0;
  std::vector<Perm> elements;
  std::vector<Perm> class_reps;
  std::vector<std::string> class_names;
  std::vector<long long> class_sizes;
};

const SymGroup& sym_group(int degree);

std::vector<Perm> subgroup_closure(int degree, const std::vector<Perm>& gens);

/// Permutation character of S_n acting on the cosets of <gens>: for each
/// conjugacy class representative x, the number of cosets gA with xgA = gA.
std::vector<long long> perm_character(int degree,
                                      const std::vector<Perm>& gens);

struct CandidateSubgroup {
  std::string name;  // "D4", "S2xS2", "1", ...
  std::vector<Perm> generators;
};

struct StabilizerFamily {
  std::string name;          // "S2", "S3", "G2(a1)", "E8(b6)", "S4", "S5"
  int degree = 0;            // ambient symmetric group degree
  std::vector<CandidateSubgroup> candidates;

  std::vector<std::string> orbit_labels() const;  // "S4/D4" style
};

struct CharTable {
  StabilizerFamily family;
  std::vector<std::vector<long long>> rows;  // rows follow the candidates
};

/// Stacks perm_character rows for the family's candidates.
CharTable build_table(const StabilizerFamily& family);

/// True iff the rows are linearly independent (unique multiplicities exist
/// for every consistent character vector).
bool table_solvable(const CharTable& table);

/// Exact solve of transpose(table) * a = chi over the rationals.  Throws
/// singular_table when the rows are dependent, inconsistent_character when no
/// exact solution exists, non_integral_solution / negative_multiplicity when
/// the unique solution is not a vector of nonnegative integers.
std::vector<long long> solve_multiplicities(const CharTable& table,
                                            const std::vector<long long>& chi);

/// The candidate stabilizer families: the generic ones keyed by the quotient
/// group, plus the two special orbits with reduced candidate sets.
const std::vector<StabilizerFamily>& builtin_families();

const StabilizerFamily& family_by_name(const std::string& name);

}  // namespace springer
