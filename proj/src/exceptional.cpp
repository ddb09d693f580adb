#include "springer/exceptional.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include <boost/rational.hpp>

#include "springer/error.hpp"

namespace springer {

Perm Perm::identity(int n) {
  Perm p;
  p.img.resize(n);
  std::iota(p.img.begin(), p.img.end(), 0);
  return p;
}

Perm operator*(const Perm& a, const Perm& b) {
  Perm c;
  c.img.resize(a.img.size());
  for (std::size_t i = 0; i < a.img.size(); ++i) c.img[i] = a.img[b.img[i]];
  return c;
}

Perm Perm::inverse() const {
  Perm p;
  p.img.resize(img.size());
  for (std::size_t i = 0; i < img.size(); ++i) p.img[img[i]] = static_cast<int>(i);
  return p;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<bool> seen(img.size(), false);
  std::vector<int> type;
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = img[j]) {
      seen[j] = true;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.begin(), type.end(), std::greater<int>());
  return type;
}

Perm perm_from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Perm p = Perm::identity(n);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i] - 1;
      int to = cycle[(i + 1) % cycle.size()] - 1;
      if (from < 0 || from >= n || to < 0 || to >= n)
        fail(Errc::invalid_argument, "cycle entry out of range");
      p.img[from] = to;
    }
  }
  return p;
}

namespace {

const std::vector<std::pair<std::vector<int>, std::string>>& class_order() {
  static const std::vector<std::pair<std::vector<int>, std::string>> order = {
      {{1}, "()"},          {{2}, "(12)"},        {{3}, "(123)"},
      {{2, 2}, "(12)(34)"}, {{4}, "(1234)"},      {{3, 2}, "(12)(345)"},
      {{5}, "(12345)"},
  };
  return order;
}

std::vector<int> padded(std::vector<int> type, int degree) {
  int sum = 0;
  for (int t : type) sum += t;
  while (sum++ < degree) type.push_back(1);
  std::sort(type.begin(), type.end(), std::greater<int>());
  return type;
}

SymGroup build_sym_group(int degree) {
  SymGroup g;
  g.degree = degree;
  std::vector<int> seq(degree);
  std::iota(seq.begin(), seq.end(), 0);
  do {
    g.elements.push_back(Perm{seq});
  } while (std::next_permutation(seq.begin(), seq.end()));

  for (const auto& [type, name] : class_order()) {
    const std::vector<int> full = padded(type, degree);
    int sum = 0;
    for (int t : type) sum += t;
    if (sum > degree) continue;
    Perm rep;
    long long size = 0;
    for (const auto& p : g.elements)
      if (p.cycle_type() == full) {
        if (size == 0) rep = p;
        ++size;
      }
    g.class_reps.push_back(rep);
    g.class_names.push_back(name);
    g.class_sizes.push_back(size);
  }
  return g;
}

}  // namespace

const SymGroup& sym_group(int degree) {
  if (degree < 1 || degree > 7)
    fail(Errc::invalid_argument, "symmetric group degree out of range");
  static std::map<int, SymGroup> cache;
  auto it = cache.find(degree);
  if (it == cache.end()) it = cache.emplace(degree, build_sym_group(degree)).first;
  return it->second;
}

std::vector<Perm> subgroup_closure(int degree, const std::vector<Perm>& gens) {
  std::set<Perm> closure{Perm::identity(degree)};
  for (const auto& g : gens) {
    if (g.degree() != degree)
      fail(Errc::invalid_argument, "generator degree mismatch");
    closure.insert(g);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> current(closure.begin(), closure.end());
    for (const auto& a : current)
      for (const auto& b : current)
        if (closure.insert(a * b).second) grew = true;
  }
  return {closure.begin(), closure.end()};
}

std::vector<long long> perm_character(int degree,
                                      const std::vector<Perm>& gens) {
  const SymGroup& g = sym_group(degree);
  const std::vector<Perm> sub = subgroup_closure(degree, gens);
  const std::set<Perm> sub_set(sub.begin(), sub.end());

  // canonical representative of each left coset
  auto coset_rep = [&](const Perm& x) {
    Perm best = x * sub.front();
    for (const auto& a : sub) best = std::min(best, x * a);
    return best;
  };
  std::set<Perm> reps;
  for (const auto& x : g.elements) reps.insert(coset_rep(x));

  std::vector<long long> chi;
  for (const auto& rep : g.class_reps) {
    long long fixed = 0;
    for (const auto& r : reps)
      if (sub_set.count(r.inverse() * rep * r)) ++fixed;
    chi.push_back(fixed);
  }
  return chi;
}

std::vector<std::string> StabilizerFamily::orbit_labels() const {
  std::vector<std::string> out;
  out.reserve(candidates.size());
  for (const auto& c : candidates)
    out.push_back("S" + std::to_string(degree) + "/" + c.name);
  return out;
}

CharTable build_table(const StabilizerFamily& family) {
  CharTable table;
  table.family = family;
  for (const auto& cand : family.candidates)
    table.rows.push_back(perm_character(family.degree, cand.generators));
  return table;
}

namespace {

using Rat = boost::rational<long long>;

// Row-reduce the (classes x candidates) system transpose(table) * a = chi.
// Returns rank; `solution` is filled when the system has full column rank
// and is consistent.
struct Elimination {
  bool full_rank = false;
  bool consistent = false;
  std::vector<Rat> solution;
};

Elimination eliminate(const std::vector<std::vector<long long>>& rows,
                      const std::vector<long long>* chi) {
  const std::size_t unknowns = rows.size();
  const std::size_t equations = unknowns == 0 ? 0 : rows.front().size();
  std::vector<std::vector<Rat>> m(equations, std::vector<Rat>(unknowns + 1, 0));
  for (std::size_t e = 0; e < equations; ++e) {
    for (std::size_t u = 0; u < unknowns; ++u) m[e][u] = rows[u][e];
    m[e][unknowns] = chi ? (*chi)[e] : 0;
  }
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_of;
  for (std::size_t col = 0; col < unknowns && rank < equations; ++col) {
    std::size_t piv = rank;
    while (piv < equations && m[piv][col] == 0) ++piv;
    if (piv == equations) continue;
    std::swap(m[piv], m[rank]);
    const Rat inv = m[rank][col];
    for (auto& v : m[rank]) v /= inv;
    for (std::size_t e = 0; e < equations; ++e) {
      if (e == rank || m[e][col] == 0) continue;
      const Rat f = m[e][col];
      for (std::size_t u = 0; u <= unknowns; ++u) m[e][u] -= f * m[rank][u];
    }
    pivot_of.push_back(col);
    ++rank;
  }
  Elimination result;
  result.full_rank = (rank == unknowns);
  result.consistent = true;
  for (std::size_t e = rank; e < equations; ++e)
    if (m[e][unknowns] != 0) result.consistent = false;
  if (result.full_rank && result.consistent && chi) {
    result.solution.assign(unknowns, 0);
    for (std::size_t r = 0; r < rank; ++r)
      result.solution[pivot_of[r]] = m[r][unknowns];
  }
  return result;
}

}  // namespace

bool table_solvable(const CharTable& table) {
  return eliminate(table.rows, nullptr).full_rank;
}

std::vector<long long> solve_multiplicities(const CharTable& table,
                                            const std::vector<long long>& chi) {
  const std::size_t classes =
      table.rows.empty() ? 0 : table.rows.front().size();
  if (chi.size() != classes)
    fail(Errc::invalid_argument,
         "character vector length does not match the conjugacy classes");
  const Elimination r = eliminate(table.rows, &chi);
  if (!r.full_rank)
    fail(Errc::singular_table,
         "the candidate characters are linearly dependent");
  if (!r.consistent)
    fail(Errc::inconsistent_character,
         "no exact multiplicity vector matches the character values");
  std::vector<long long> out;
  for (const Rat& v : r.solution) {
    if (v.denominator() != 1)
      fail(Errc::non_integral_solution,
           "multiplicities are not integral for these character values");
    if (v.numerator() < 0)
      fail(Errc::negative_multiplicity,
           "a multiplicity comes out negative for these character values");
    out.push_back(v.numerator());
  }
  return out;
}

namespace {

CandidateSubgroup cand(std::string name, int degree,
                       const std::vector<std::vector<int>>& cycles_list) {
  CandidateSubgroup c;
  c.name = std::move(name);
  for (const auto& cycle : cycles_list)
    c.generators.push_back(perm_from_cycles(degree, {cycle}));
  return c;
}

std::vector<StabilizerFamily> make_families() {
  std::vector<StabilizerFamily> fams;

  StabilizerFamily s2{"S2", 2, {cand("1", 2, {}), cand("S2", 2, {{1, 2}})}};
  fams.push_back(s2);

  StabilizerFamily s3{"S3",
                      3,
                      {cand("1", 3, {}), cand("S2", 3, {{1, 2}}),
                       cand("S3", 3, {{1, 2}, {1, 2, 3}})}};
  fams.push_back(s3);

  StabilizerFamily g2a1{"G2(a1)",
                        3,
                        {cand("S2", 3, {{1, 2}}),
                         cand("S3", 3, {{1, 2}, {1, 2, 3}})}};
  fams.push_back(g2a1);

  StabilizerFamily e8b6{"E8(b6)",
                        3,
                        {cand("C3", 3, {{1, 2, 3}}), cand("S2", 3, {{1, 2}}),
                         cand("S3", 3, {{1, 2}, {1, 2, 3}})}};
  fams.push_back(e8b6);

  StabilizerFamily s4{"S4",
                      4,
                      {cand("S4", 4, {{1, 2}, {1, 2, 3, 4}}),
                       cand("S3", 4, {{1, 2}, {1, 2, 3}}),
                       cand("D4", 4, {{1, 2, 3, 4}, {1, 3}}),
                       cand("S2xS2", 4, {{1, 2}, {3, 4}}),
                       cand("S2", 4, {{1, 2}})}};
  fams.push_back(s4);

  StabilizerFamily s5{"S5",
                      5,
                      {cand("S5", 5, {{1, 2}, {1, 2, 3, 4, 5}}),
                       cand("S4", 5, {{1, 2}, {1, 2, 3, 4}}),
                       cand("S3xS2", 5, {{1, 2, 3}, {1, 2}, {4, 5}}),
                       cand("D4", 5, {{1, 2, 3, 4}, {1, 3}}),
                       cand("S3", 5, {{1, 2, 3}, {1, 2}}),
                       cand("S2xS2", 5, {{1, 2}, {3, 4}}),
                       cand("S2", 5, {{1, 2}})}};
  fams.push_back(s5);

  return fams;
}

}  // namespace

const std::vector<StabilizerFamily>& builtin_families() {
  static const std::vector<StabilizerFamily> fams = make_families();
  return fams;
}

const StabilizerFamily& family_by_name(const std::string& name) {
  std::string key = name;
  if (key == "G_2(a_1)" || key == "G2a1") key = "G2(a1)";
  if (key == "E_8(b_6)" || key == "E8b6") key = "E8(b6)";
  for (const auto& f : builtin_families())
    if (f.name == key) return f;
  fail(Errc::invalid_argument, "unknown stabilizer family '" + name + "'");
}

}  // namespace springer
