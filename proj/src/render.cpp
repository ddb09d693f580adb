#include "springer/render.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace springer {

namespace {

// One text cell per box: a border row and a content row, plus the final
// border.  Walls between boxes of the same domino are omitted.
std::string draw(const DominoTableau& t, const std::map<int, std::string>& text) {
  if (t.shape.empty()) return "";
  std::size_t cw = 3;
  for (const auto& [label, s] : text) cw = std::max(cw, s.size() + 2);

  const int rows = static_cast<int>(t.shape.size());
  const int cols = t.shape.front();
  auto label_at = [&](int r, int c) -> int {
    if (r < 0 || r >= rows || c < 0 || c >= t.shape[r]) return -1;
    return t.grid[r][c];
  };
  auto inside = [&](int r, int c) { return label_at(r, c) >= 0; };

  std::vector<std::string> lines(2 * rows + 1,
                                 std::string((cw + 1) * cols + 1, ' '));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < t.shape[r]; ++c) {
      const int x = static_cast<int>((cw + 1) * c);
      // top wall
      if (label_at(r, c) != label_at(r - 1, c) || !inside(r - 1, c))
        for (std::size_t k = 1; k <= cw; ++k) lines[2 * r][x + k] = '-';
      // bottom wall
      if (label_at(r, c) != label_at(r + 1, c) || !inside(r + 1, c))
        for (std::size_t k = 1; k <= cw; ++k) lines[2 * r + 2][x + k] = '-';
      // left wall
      if (label_at(r, c) != label_at(r, c - 1) || !inside(r, c - 1))
        lines[2 * r + 1][x] = '|';
      // right wall
      if (label_at(r, c) != label_at(r, c + 1) || !inside(r, c + 1))
        lines[2 * r + 1][x + cw + 1] = '|';
    }
  }
  // corners where any wall meets
  for (int r = 0; r <= 2 * rows; r += 2)
    for (int c = 0; c <= cols; ++c) {
      const int x = static_cast<int>((cw + 1) * c);
      const bool wall_near =
          (x > 0 && lines[r][x - 1] == '-') ||
          (x + 1 < static_cast<int>(lines[r].size()) && lines[r][x + 1] == '-') ||
          (r > 0 && lines[r - 1][x] == '|') ||
          (r + 1 <= 2 * rows && r + 1 < static_cast<int>(lines.size()) &&
           lines[r + 1][x] == '|');
      if (wall_near) lines[r][x] = '+';
    }
  // content: text in the first box of each domino (and in the zero box)
  std::vector<std::vector<bool>> done(rows);
  for (int r = 0; r < rows; ++r) done[r].assign(t.shape[r], false);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < t.shape[r]; ++c) {
      if (done[r][c]) continue;
      const int label = t.grid[r][c];
      std::string s = std::to_string(label);
      if (auto it = text.find(label); it != text.end()) s = it->second;
      const int x = static_cast<int>((cw + 1) * c) + 1;
      for (std::size_t k = 0; k < s.size() && k < cw; ++k)
        lines[2 * r + 1][x + 1 + k] = s[k];
      done[r][c] = true;
      if (label > 0) {
        const Domino& d = t.domino(label);
        if (d.horizontal)
          done[d.row - 1][d.col] = true;
        else
          done[d.row][d.col - 1] = true;
      }
    }
  std::string out;
  for (auto& line : lines) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

}  // namespace

std::string render_tableau(const DominoTableau& t) { return draw(t, {}); }

std::string render_signed_class(const SignedClass& c) {
  std::map<int, std::string> text;
  for (const auto& [cluster, ip] : c.dec.iplus) {
    for (std::size_t k = 0; k < ip.size(); ++k) {
      const bool carries = k == 0;  // lowest (I+) label shows the cluster sign
      const char sign = (carries && !c.sign.at(cluster)) ? '-' : '+';
      text[ip[k]] = std::to_string(ip[k]) + sign;
    }
  }
  return draw(c.dec.tableau, text);
}

}  // namespace springer
