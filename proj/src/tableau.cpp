#include "springer/tableau.hpp"

#include <algorithm>
#include <map>

#include "springer/error.hpp"

namespace springer {

bool DominoTableau::zero_box() const {
  int total = 0;
  for (int r : shape) total += r;
  return total % 2 == 1;
}

std::vector<int> DominoTableau::prefix_shape(int i) const {
  std::vector<int> rows;
  for (const auto& row : grid) {
    int len = 0;
    while (len < static_cast<int>(row.size()) && row[len] <= i) ++len;
    if (len == 0) break;
    rows.push_back(len);
  }
  return rows;
}

DominoTableau DominoTableau::prefix(int i) const {
  std::vector<int> pshape = prefix_shape(i);
  std::vector<std::vector<int>> pgrid;
  for (std::size_t r = 0; r < pshape.size(); ++r)
    pgrid.emplace_back(grid[r].begin(), grid[r].begin() + pshape[r]);
  return make_tableau(std::move(pshape), std::move(pgrid));
}

DominoTableau make_tableau(std::vector<int> shape,
                           std::vector<std::vector<int>> grid) {
  if (shape.empty() && grid.empty()) return DominoTableau{};
  if (!std::is_sorted(shape.begin(), shape.end(), std::greater<int>()) ||
      (!shape.empty() && shape.back() <= 0))
    fail(Errc::invalid_argument, "shape is not a partition");
  if (grid.size() != shape.size())
    fail(Errc::invalid_argument, "grid does not match shape");
  int total = 0;
  for (std::size_t r = 0; r < shape.size(); ++r) {
    if (static_cast<int>(grid[r].size()) != shape[r])
      fail(Errc::invalid_argument, "grid does not match shape");
    total += shape[r];
  }
  const bool odd = total % 2 == 1;
  const int n = total / 2;

  std::map<int, std::vector<std::pair<int, int>>> boxes;
  for (std::size_t r = 0; r < grid.size(); ++r)
    for (std::size_t c = 0; c < grid[r].size(); ++c)
      boxes[grid[r][c]].push_back({static_cast<int>(r), static_cast<int>(c)});

  DominoTableau t;
  t.shape = std::move(shape);
  t.grid = std::move(grid);
  if (odd) {
    auto it = boxes.find(0);
    if (it == boxes.end() || it->second != std::vector<std::pair<int, int>>{{0, 0}})
      fail(Errc::invalid_argument, "odd total requires the single box (1,1) labeled 0");
    boxes.erase(it);
  } else if (boxes.count(0)) {
    fail(Errc::invalid_argument, "label 0 is reserved for odd totals");
  }
  for (int k = 1; k <= n; ++k) {
    auto it = boxes.find(k);
    if (it == boxes.end() || it->second.size() != 2)
      fail(Errc::invalid_argument,
           "label " + std::to_string(k) + " must cover exactly two boxes");
    auto [a, b] = std::pair{it->second[0], it->second[1]};
    Domino d;
    d.label = k;
    d.row = a.first + 1;
    d.col = a.second + 1;
    if (a.first == b.first && a.second + 1 == b.second) {
      d.horizontal = true;
    } else if (a.second == b.second && a.first + 1 == b.first) {
      d.horizontal = false;
    } else {
      fail(Errc::invalid_argument,
           "label " + std::to_string(k) + " is not edge-adjacent");
    }
    t.dominoes.push_back(d);
    boxes.erase(it);
  }
  if (!boxes.empty())
    fail(Errc::invalid_argument, "labels must be 0..n with n dominoes");
  for (std::size_t r = 0; r < t.grid.size(); ++r)
    for (std::size_t c = 0; c < t.grid[r].size(); ++c) {
      if (r + 1 < t.grid.size() && c < t.grid[r + 1].size() &&
          t.grid[r][c] > t.grid[r + 1][c])
        fail(Errc::invalid_argument, "labels must increase down columns");
      if (c + 1 < t.grid[r].size() && t.grid[r][c] > t.grid[r][c + 1])
        fail(Errc::invalid_argument, "labels must increase along rows");
    }
  return t;
}

namespace {

struct SdtEnumerator {
  std::vector<int> base_shape;
  bool odd = false;
  long long budget = kDefaultBudget;
  long long nodes = 0;
  std::vector<std::vector<int>> grid;
  std::vector<DominoTableau> out;

  void run() {
    std::vector<int> cur = base_shape;
    int total = 0;
    for (int r : cur) total += r;
    odd = total % 2 == 1;
    grid.clear();
    for (int r : base_shape) grid.emplace_back(r, 0);
    recurse(cur, total / 2);
  }

  void recurse(std::vector<int>& shape, int k) {
    if (++nodes > budget)
      fail(Errc::infeasible, "tableau enumeration exceeded the budget");
    if (k == 0) {
      out.push_back(make_tableau(base_shape, grid));
      return;
    }
    const int rows = static_cast<int>(shape.size());
    for (int i = 0; i < rows; ++i) {
      if (shape[i] == 0) break;
      // horizontal domino at the end of row i
      if (shape[i] >= 2 && (i + 1 >= rows || shape[i] - 2 >= shape[i + 1]) &&
          !(odd && i == 0 && shape[i] == 2)) {
        grid[i][shape[i] - 2] = grid[i][shape[i] - 1] = k;
        shape[i] -= 2;
        recurse(shape, k - 1);
        shape[i] += 2;
        grid[i][shape[i] - 2] = grid[i][shape[i] - 1] = 0;
      }
      // vertical domino at the end of rows i, i+1
      if (i + 1 < rows && shape[i] == shape[i + 1] && shape[i] >= 1 &&
          (i + 2 >= rows || shape[i] - 1 >= shape[i + 2]) &&
          !(odd && i == 0 && shape[i] == 1)) {
        grid[i][shape[i] - 1] = grid[i + 1][shape[i] - 1] = k;
        shape[i] -= 1;
        shape[i + 1] -= 1;
        recurse(shape, k - 1);
        shape[i] += 1;
        shape[i + 1] += 1;
        grid[i][shape[i] - 1] = grid[i + 1][shape[i] - 1] = 0;
      }
    }
  }
};

std::vector<int> flattened(const DominoTableau& t) {
  std::vector<int> flat;
  for (const auto& row : t.grid) flat.insert(flat.end(), row.begin(), row.end());
  return flat;
}

}  // namespace

std::vector<DominoTableau> enumerate_sdt(const std::vector<int>& shape,
                                         long long budget) {
  if (shape.empty()) return {};
  if (!std::is_sorted(shape.begin(), shape.end(), std::greater<int>()) ||
      shape.back() <= 0)
    fail(Errc::invalid_argument, "shape is not a partition");
  SdtEnumerator e;
  e.base_shape = shape;
  e.budget = budget;
  e.run();
  std::sort(e.out.begin(), e.out.end(),
            [](const DominoTableau& a, const DominoTableau& b) {
              return flattened(a) < flattened(b);
            });
  return e.out;
}

DominoKind domino_kind(const DominoTableau& t, int label, LieType type) {
  const Domino& d = t.domino(label);
  const bool odd_col = d.col % 2 == 1;
  if (d.horizontal) {
    const bool n_parity = (type == LieType::C) ? odd_col : !odd_col;
    if (!n_parity)
      fail(Errc::unclassifiable_domino,
           "horizontal domino " + std::to_string(label) +
               " starts in a wrong-parity column");
    return DominoKind::N;
  }
  const bool iplus_parity = (type == LieType::C) ? !odd_col : odd_col;
  return iplus_parity ? DominoKind::IPlus : DominoKind::IMinus;
}

bool is_admissible(const DominoTableau& t, LieType type) {
  for (int i = 1; i <= t.domino_count(); ++i)
    if (!is_classical_shape(t.prefix_shape(i), type)) return false;
  return true;
}

std::vector<DominoTableau> enumerate_admissible(const Partition& p,
                                                long long budget) {
  std::vector<DominoTableau> out;
  for (auto& t : enumerate_sdt(p.parts, budget))
    if (is_admissible(t, p.type)) out.push_back(std::move(t));
  return out;
}

}  // namespace springer
