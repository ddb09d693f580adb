#include "springer/component.hpp"

#include <algorithm>

#include "springer/error.hpp"

namespace springer {

namespace {

OrbitDatum datum_of(const DominoTableau& t) {
  return orbit_datum(validate_partition(t.shape, LieType::C));
}

void require_type_c(const OrbitDatum& datum) {
  if (datum.partition.type != LieType::C)
    fail(Errc::scope_error, "components are enumerated for type C only");
}

std::vector<SignedClass> classes_of(const ClusterDecomposition& dec) {
  const std::vector<int> ids = dec.cluster_ids();
  const int b0 = dec.b_map.at(0);
  std::vector<int> free;
  for (int id : ids)
    if (id != b0) free.push_back(id);
  std::vector<SignedClass> out;
  out.reserve(std::size_t{1} << free.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size());
       ++mask) {
    SignedClass c;
    c.dec = dec;
    for (int id : ids) c.sign[id] = true;
    for (std::size_t j = 0; j < free.size(); ++j)
      if (mask & (std::uint64_t{1} << j)) c.sign[free[j]] = false;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::vector<SignedClass> enumerate_components(const OrbitDatum& datum,
                                              long long budget) {
  require_type_c(datum);
  std::vector<SignedClass> out;
  long long count = 0;
  for (const auto& t : enumerate_admissible(datum.partition, budget)) {
    auto dec = clusters(t);
    count += 1LL << (dec.members.size() - 1);
    if (count > budget)
      fail(Errc::infeasible, "component enumeration exceeded the budget");
    auto block = classes_of(dec);
    out.insert(out.end(), std::make_move_iterator(block.begin()),
               std::make_move_iterator(block.end()));
  }
  return out;
}

SignedClass act(int generator_index, const SignedClass& c) {
  const OrbitDatum datum = datum_of(c.dec.tableau);
  if (generator_index < 1 || generator_index > datum.ell())
    fail(Errc::invalid_argument, "generator index out of range");
  const int value = datum.marked[generator_index - 1];
  const int target = c.dec.b_map.at(value);
  if (target == c.dec.b_map.at(0)) return c;
  SignedClass out = c;
  out.sign[target] = !out.sign.at(target);
  return out;
}

SignedClass act_element(std::uint64_t element, const SignedClass& c) {
  SignedClass out = c;
  const OrbitDatum datum = datum_of(c.dec.tableau);
  const int b0 = c.dec.b_map.at(0);
  for (int i = 1; i <= datum.ell(); ++i) {
    if (!(element & (std::uint64_t{1} << (i - 1)))) continue;
    const int target = c.dec.b_map.at(datum.marked[i - 1]);
    if (target != b0) out.sign[target] = !out.sign.at(target);
  }
  return out;
}

F2Subgroup stabilizer(const SignedClass& c) {
  const OrbitDatum datum = datum_of(c.dec.tableau);
  const int b0 = c.dec.b_map.at(0);
  std::vector<std::uint64_t> gens;
  for (int i = 1; i <= datum.ell(); ++i) {
    const int ci = c.dec.b_map.at(datum.marked[i - 1]);
    if (ci == b0) gens.push_back(std::uint64_t{1} << (i - 1));
    for (int j = i + 1; j <= datum.ell(); ++j)
      if (c.dec.b_map.at(datum.marked[j - 1]) == ci)
        gens.push_back((std::uint64_t{1} << (i - 1)) |
                       (std::uint64_t{1} << (j - 1)));
  }
  return subgroup_span(datum.ell(), gens);
}

OrbitReport orbit_report(const OrbitDatum& datum, long long budget) {
  require_type_c(datum);
  const int ell = datum.ell();
  OrbitReport report;
  report.datum = datum;

  long long count = 0;
  for (const auto& t : enumerate_admissible(datum.partition, budget)) {
    const auto dec = clusters(t);
    const int b0 = dec.b_map.at(0);
    std::vector<int> free;
    for (int id : dec.cluster_ids())
      if (id != b0) free.push_back(id);
    const int f = static_cast<int>(free.size());
    count += 1LL << f;
    if (count > budget)
      fail(Errc::infeasible, "orbit enumeration exceeded the budget");

    // flip mask of each generator on the free clusters
    std::vector<std::uint64_t> gen_flip(ell, 0);
    for (int i = 1; i <= ell; ++i) {
      const int target = dec.b_map.at(datum.marked[i - 1]);
      for (int j = 0; j < f; ++j)
        if (free[j] == target) gen_flip[i - 1] = std::uint64_t{1} << j;
    }

    auto class_at = [&](std::uint64_t mask) {
      SignedClass c;
      c.dec = dec;
      c.sign[b0] = true;
      for (int j = 0; j < f; ++j)
        c.sign[free[j]] = !(mask & (std::uint64_t{1} << j));
      return c;
    };

    std::vector<bool> visited(std::size_t{1} << f, false);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f); ++mask) {
      if (visited[mask]) continue;
      std::set<std::uint64_t> orbit;
      std::vector<std::uint64_t> fixing;
      for (std::uint64_t g = 0; g < (std::uint64_t{1} << ell); ++g) {
        std::uint64_t flips = 0;
        for (int i = 0; i < ell; ++i)
          if (g & (std::uint64_t{1} << i)) flips ^= gen_flip[i];
        orbit.insert(mask ^ flips);
        if (flips == 0) fixing.push_back(g);
      }
      for (std::uint64_t m : orbit) visited[m] = true;

      const F2Subgroup brute = subgroup_span(ell, fixing);
      // lexicographically least sign vector: '+' beats '-', clusters in
      // ascending id order, i.e. the mask with the fewest low bits set first
      std::uint64_t best = *orbit.begin();
      for (std::uint64_t m : orbit) {
        for (int j = 0; j < f; ++j) {
          const bool bm = best & (std::uint64_t{1} << j);
          const bool mm = m & (std::uint64_t{1} << j);
          if (bm != mm) {
            if (bm && !mm) best = m;
            break;
          }
        }
      }
      OrbitReport::Orbit o;
      o.representative = class_at(best);
      o.size = static_cast<long long>(orbit.size());
      o.stab = stabilizer(o.representative);
      if (o.stab != brute)
        fail(Errc::invalid_argument,
             "internal: formula and fixed-point stabilizers disagree");
      if (o.size * static_cast<long long>(o.stab.order()) != (1LL << ell))
        fail(Errc::invalid_argument,
             "internal: orbit-stabilizer count mismatch");
      report.stab_set.insert(o.stab);
      report.orbits.push_back(std::move(o));
    }
  }
  report.class_count = count;
  return report;
}

std::set<int> good_open_clusters(const ClusterDecomposition& d,
                                 const OrbitDatum& datum) {
  require_type_c(datum);
  const int b0 = d.b_map.at(0);
  std::set<int> good;
  for (int c : d.open) {
    bool ok = true;
    int prefix = 0;
    for (int m = 1; m <= datum.ell() && ok; ++m) {
      prefix += datum.mult[m - 1];
      if (prefix % 2 == 0) continue;
      const bool at_m = d.b_map.at(datum.marked[m - 1]) == c;
      const bool at_next = (m < datum.ell())
                               ? d.b_map.at(datum.marked[m]) == c
                               : (c == b0);
      ok = (at_m == at_next);
    }
    if (ok) good.insert(c);
  }
  return good;
}

std::vector<SignedClass> enumerate_good_classes(const OrbitDatum& datum,
                                                long long budget) {
  std::vector<SignedClass> out;
  for (auto& c : enumerate_components(datum, budget)) {
    const auto good = good_open_clusters(c.dec, datum);
    bool keep = true;
    for (int id : c.dec.open)
      if (!good.count(id) && !c.sign.at(id)) {
        keep = false;
        break;
      }
    if (keep) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace springer
