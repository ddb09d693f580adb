#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "springer/cluster.hpp"
#include "springer/f2.hpp"
#include "springer/partition.hpp"

namespace springer {

/// An irreducible component of the Springer fiber: an admissible tableau
/// together with one sign per cluster, the sign of the cluster b(0) pinned
/// to +.  Signs on open and closed clusters both matter for equality.
struct SignedClass {
  ClusterDecomposition dec;
  std::map<int, bool> sign;  // cluster id -> true for '+'

  friend bool operator==(const SignedClass& a, const SignedClass& b) {
    return a.dec.tableau == b.dec.tableau && a.sign == b.sign;
  }
};

/// All classes over all admissible tableaux of the orbit, tableau by tableau,
/// sign patterns in mask order with the all-plus class first.
std::vector<SignedClass> enumerate_components(const OrbitDatum& datum,
                                              long long budget = kDefaultBudget);

/// Generator t_i flips the sign of the open cluster b(2x_i); it acts
/// trivially when that cluster is b(0).  An involution.
SignedClass act(int generator_index, const SignedClass& c);

/// Action of an arbitrary group element given as a generator bitmask.
SignedClass act_element(std::uint64_t element, const SignedClass& c);

/// Stabilizer by the cluster formula: t_i t_j whenever b(2x_i) = b(2x_j),
/// and t_i whenever b(2x_i) = b(0).
F2Subgroup stabilizer(const SignedClass& c);

struct OrbitReport {
  struct Orbit {
    SignedClass representative;  // lexicographically least sign vector
    long long size = 0;
    F2Subgroup stab;
  };
  OrbitDatum datum;
  long long class_count = 0;
  std::vector<Orbit> orbits;
  std::set<F2Subgroup> stab_set;
};

/// Full orbit decomposition of the component set under (Z/2Z)^ell.  Each
/// stabilizer is computed both by the cluster formula and by brute-force
/// fixed-point search over the whole group; a disagreement throws.
OrbitReport orbit_report(const OrbitDatum& datum,
                         long long budget = kDefaultBudget);

/// Open clusters whose sign survives the quotient by the Lusztig kernel:
/// for every index m with odd prefix multiplicity sum r_1+...+r_m, the values
/// 2x_m and 2x_{m+1} lie on the same side of the preimage, where the virtual
/// value 2x_{ell+1} counts as belonging to b(0)'s preimage.
std::set<int> good_open_clusters(const ClusterDecomposition& d,
                                 const OrbitDatum& datum);

/// The classes whose open non-good clusters all carry '+'; in bijection with
/// the K_e-orbits of the full component set.
std::vector<SignedClass> enumerate_good_classes(const OrbitDatum& datum,
                                                long long budget = kDefaultBudget);

}  // namespace springer
