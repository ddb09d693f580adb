#include "springer/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "springer/error.hpp"

namespace springer {

std::string to_string(LieType t) {
  switch (t) {
    case LieType::B: return "B";
    case LieType::C: return "C";
    case LieType::D: return "D";
  }
  return "?";
}

LieType lie_type_from_string(const std::string& s) {
  if (s == "B" || s == "b") return LieType::B;
  if (s == "C" || s == "c") return LieType::C;
  if (s == "D" || s == "d") return LieType::D;
  fail(Errc::invalid_argument, "unknown Lie type '" + s + "'");
}

int Partition::total() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

namespace {

std::map<int, int> multiplicities(const std::vector<int>& parts) {
  std::map<int, int> m;
  for (int p : parts)
    if (p > 0) ++m[p];
  return m;
}

bool parity_constraints_hold(const std::vector<int>& parts, LieType type) {
  int total = 0;
  for (int p : parts) total += p;
  switch (type) {
    case LieType::C:
      if (total % 2 != 0) return false;
      break;
    case LieType::B:
      if (total % 2 != 1) return false;
      break;
    case LieType::D:
      if (total % 2 != 0) return false;
      break;
  }
  for (const auto& [part, mult] : multiplicities(parts)) {
    bool constrained = (type == LieType::C) ? (part % 2 == 1) : (part % 2 == 0);
    if (constrained && mult % 2 != 0) return false;
  }
  return true;
}

}  // namespace

Partition validate_partition(std::vector<int> parts, LieType type) {
  if (parts.empty()) fail(Errc::invalid_argument, "empty partition");
  for (int p : parts)
    if (p <= 0) fail(Errc::invalid_argument, "partition parts must be positive");
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  if (!parity_constraints_hold(parts, type))
    fail(Errc::not_classical_type,
         "(" + format_partition(parts) + ") is not a type-" + to_string(type) +
             " partition");
  return Partition{std::move(parts), type};
}

bool is_classical_shape(const std::vector<int>& rows, LieType type) {
  std::vector<int> parts;
  for (int r : rows)
    if (r > 0) parts.push_back(r);
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<int>()))
    return false;
  return parity_constraints_hold(parts, type);
}

OrbitDatum orbit_datum(const Partition& p, Isogeny isogeny) {
  OrbitDatum d;
  d.partition = p;
  d.isogeny = isogeny;
  const bool even_marked = (p.type == LieType::C);
  for (const auto& [part, mult] : multiplicities(p.parts)) {
    if ((part % 2 == 0) != even_marked) continue;
    d.marked.push_back(part);
    d.mult.push_back(mult);
    d.half.push_back(even_marked ? part / 2 : (part - 1) / 2);
  }
  // multiplicities() iterates ascending; the paper's ordering is descending
  std::reverse(d.marked.begin(), d.marked.end());
  std::reverse(d.mult.begin(), d.mult.end());
  std::reverse(d.half.begin(), d.half.end());
  return d;
}

std::vector<int> OrbitDatum::b_lambda() const {
  std::vector<int> b{0};
  b.insert(b.end(), marked.rbegin(), marked.rend());
  return b;
}

int OrbitDatum::marked_index(int value) const {
  for (int i = 0; i < ell(); ++i)
    if (marked[i] == value) return i + 1;
  return 0;
}

long long springer_fiber_dim(const Partition& p) {
  if (p.type != LieType::C)
    fail(Errc::invalid_argument, "fiber dimension implemented for type C");
  const auto mult = multiplicities(p.parts);
  // 2*dim g^e = sum_k k p_k^2 + 2 sum_{k<j} k p_k p_j + #(odd parts)
  long long twice = 0;
  for (const auto& [k, pk] : mult) {
    twice += static_cast<long long>(k) * pk * pk;
    if (k % 2 == 1) twice += pk;
    for (const auto& [j, pj] : mult)
      if (j > k) twice += 2LL * k * pk * pj;
  }
  if (twice % 2 != 0) fail(Errc::invalid_argument, "centralizer dimension is not integral");
  const long long dim_ge = twice / 2;
  const long long n = p.total() / 2;
  const long long num = dim_ge - n;
  if (num < 0 || num % 2 != 0)
    fail(Errc::invalid_argument, "fiber dimension is not a nonnegative integer");
  return num / 2;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> all_partitions(int total) {
  std::vector<std::vector<int>> out;
  if (total <= 0) return out;
  std::vector<int> cur;
  partitions_rec(total, total, cur, out);
  return out;
}

std::vector<Partition> all_classical_partitions(int total, LieType type) {
  std::vector<Partition> out;
  for (auto& parts : all_partitions(total))
    if (parity_constraints_hold(parts, type))
      out.push_back(Partition{std::move(parts), type});
  return out;
}

std::vector<int> parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) fail(Errc::invalid_argument, "empty partition entry");
    long long value = 0, count = 1;
    std::size_t caret = item.find('^');
    try {
      if (caret == std::string::npos) {
        value = std::stoll(item);
      } else {
        value = std::stoll(item.substr(0, caret));
        count = std::stoll(item.substr(caret + 1));
      }
    } catch (const std::exception&) {
      fail(Errc::invalid_argument, "cannot parse partition entry '" + item + "'");
    }
    if (value <= 0 || count <= 0 || value > 1'000'000 || count > 1'000'000)
      fail(Errc::invalid_argument, "partition entry out of range: '" + item + "'");
    for (long long i = 0; i < count; ++i) parts.push_back(static_cast<int>(value));
  }
  if (parts.empty()) fail(Errc::invalid_argument, "empty partition");
  return parts;
}

std::string format_partition(const std::vector<int>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts[i]);
  }
  return out;
}

}  // namespace springer
