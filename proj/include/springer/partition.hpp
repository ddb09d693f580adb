#pragma once

#include <string>
#include <vector>

namespace springer {

enum class LieType { B, C, D };
enum class Isogeny { O, SO };

std::string to_string(LieType t);
LieType lie_type_from_string(const std::string& s);

/// Partition of a classical nilpotent orbit: weakly decreasing positive
/// parts with the multiplicity parity constraint of the given type.
struct Partition {
  std::vector<int> parts;
  LieType type = LieType::C;

  int total() const;
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Sorts and checks the classical constraints:
///   C: odd parts have even multiplicity, total even;
///   B: even parts have even multiplicity, total odd;
///   D: even parts have even multiplicity, total even.
Partition validate_partition(std::vector<int> parts, LieType type);

/// True iff `rows` (weakly decreasing, zeros allowed at the end) is the shape
/// of a nilpotent orbit of the given type.
bool is_classical_shape(const std::vector<int>& rows, LieType type);

/// The marked-part data of an orbit: the distinct even parts (type C) or the
/// distinct odd parts (types B, D), in decreasing order.  Generator t_i of
/// the component group corresponds to marked[i-1].
struct OrbitDatum {
  Partition partition;
  Isogeny isogeny = Isogeny::O;  // meaningful for B/D only
  std::vector<int> marked;       // part values, strictly decreasing
  std::vector<int> mult;         // multiplicities r_i
  std::vector<int> half;         // x_i with part = 2x_i (C) or 2x_i+1 (B/D)

  int ell() const { return static_cast<int>(marked.size()); }

  /// B_lambda = {0} u {marked parts}, ascending.
  std::vector<int> b_lambda() const;

  /// 1-based index i with marked[i-1] == value; 0 if absent.
  int marked_index(int value) const;
};

OrbitDatum orbit_datum(const Partition& p, Isogeny isogeny = Isogeny::O);

/// dim of the Springer fiber of a type-C orbit, (dim g^e - n)/2, with dim g^e
/// evaluated from the part multiplicities.
long long springer_fiber_dim(const Partition& p);

/// All partitions of `total`, weakly decreasing, largest first in the list.
std::vector<std::vector<int>> all_partitions(int total);

/// All valid type-X partitions of `total`.
std::vector<Partition> all_classical_partitions(int total, LieType type);

/// Accepts "4,4,2,2" and the exponent shorthand "100^3,38^3,16^2".
std::vector<int> parse_partition(const std::string& text);

std::string format_partition(const std::vector<int>& parts);

}  // namespace springer
