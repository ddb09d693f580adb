#pragma once

#include <cstdint>
#include <vector>

#include "springer/partition.hpp"

namespace springer {

inline constexpr long long kDefaultBudget = 10'000'000;

/// One domino, identified by its top-left box (1-based row/col).
struct Domino {
  int label = 0;
  int row = 0;
  int col = 0;
  bool horizontal = false;

  friend bool operator==(const Domino&, const Domino&) = default;
};

/// A standard domino tableau: the Young diagram of `shape` tiled by labeled
/// dominoes, labels weakly increasing along rows and columns.  When the total
/// is odd the box (1,1) stands alone and carries the label 0.
struct DominoTableau {
  std::vector<int> shape;
  std::vector<std::vector<int>> grid;  // grid[r][c] = label of the box
  std::vector<Domino> dominoes;        // dominoes[k-1] has label k

  bool zero_box() const;
  int domino_count() const { return static_cast<int>(dominoes.size()); }
  const Domino& domino(int label) const { return dominoes.at(label - 1); }

  /// Row lengths of the boxes with label <= i (plus the zero box), the shape
  /// of the prefix tableau T^i.  Trailing zero rows are trimmed.
  std::vector<int> prefix_shape(int i) const;

  /// The tableau T^i consisting of the dominoes labeled 1..i.
  DominoTableau prefix(int i) const;

  friend bool operator==(const DominoTableau& a, const DominoTableau& b) {
    return a.grid == b.grid;
  }
};

/// Validates shape/grid and derives the domino list.
DominoTableau make_tableau(std::vector<int> shape,
                           std::vector<std::vector<int>> grid);

enum class DominoKind { N, IPlus, IMinus };

/// All standard domino tableaux of the shape, sorted by the row-major label
/// grid.  Empty when the shape admits no tiling.
std::vector<DominoTableau> enumerate_sdt(const std::vector<int>& shape,
                                         long long budget = kDefaultBudget);

/// Domino classification.  Type C: a horizontal domino starting in an odd
/// column is (N), a vertical domino is (I+) in an even column and (I-) in an
/// odd one.  Types B and D use the opposite column parities.  Throws
/// unclassifiable_domino for a horizontal domino starting in the wrong
/// parity; such a tableau is never admissible.
DominoKind domino_kind(const DominoTableau& t, int label, LieType type);

/// True iff every prefix shape T^i is the partition of a type-X orbit.
bool is_admissible(const DominoTableau& t, LieType type);

std::vector<DominoTableau> enumerate_admissible(const Partition& p,
                                                long long budget = kDefaultBudget);

}  // namespace springer
