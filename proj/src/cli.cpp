#include "springer/cli.hpp"

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "springer/component.hpp"
#include "springer/error.hpp"
#include "springer/exceptional.hpp"
#include "springer/json_io.hpp"
#include "springer/lusztig.hpp"
#include "springer/ncp.hpp"
#include "springer/render.hpp"

namespace springer {

namespace {

struct Options {
  std::string partition;
  std::string type = "C";
  std::string isogeny = "O";
  std::string format = "ascii";
  std::string family;
  std::string chi;
  int max = 0;
  long long budget = kDefaultBudget;
};

bool json_mode(const Options& o) { return o.format == "json"; }

OrbitDatum datum_from(const Options& o) {
  const LieType type = lie_type_from_string(o.type);
  const Isogeny iso = (o.isogeny == "SO") ? Isogeny::SO : Isogeny::O;
  return orbit_datum(validate_partition(parse_partition(o.partition), type), iso);
}

std::vector<long long> parse_chi(const std::string& text) {
  std::vector<long long> chi;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      chi.push_back(std::stoll(item));
    } catch (const std::exception&) {
      fail(Errc::invalid_argument, "cannot parse character entry '" + item + "'");
    }
  }
  return chi;
}

int cmd_sdt(const Options& o, std::ostream& out) {
  const auto shape = parse_partition(o.partition);
  const auto tabs = enumerate_sdt(shape, o.budget);
  if (json_mode(o)) {
    json arr = json::array();
    for (const auto& t : tabs) {
      json item = tableau_to_json(t);
      item["admissible"] = is_admissible(t, lie_type_from_string(o.type));
      arr.push_back(std::move(item));
    }
    json j;
    j["shape"] = shape;
    j["count"] = tabs.size();
    j["tableaux"] = std::move(arr);
    out << j.dump(2) << "\n";
  } else {
    out << tabs.size() << " standard domino tableaux of shape ("
        << format_partition(shape) << ")\n";
    for (const auto& t : tabs) {
      out << render_tableau(t);
      out << (is_admissible(t, lie_type_from_string(o.type)) ? "admissible"
                                                             : "not admissible")
          << " (type " << o.type << ")\n\n";
    }
  }
  return 0;
}

int cmd_clusters(const Options& o, std::ostream& out) {
  const auto datum = datum_from(o);
  const auto tabs = enumerate_admissible(datum.partition, o.budget);
  json arr = json::array();
  for (const auto& t : tabs) {
    const auto dec = clusters(t);
    if (json_mode(o)) {
      json item;
      item["tableau"] = tableau_to_json(t);
      item["decomposition"] = clusters_to_json(dec);
      arr.push_back(std::move(item));
    } else {
      out << render_tableau(t);
      out << "clusters:";
      for (const auto& [id, mem] : dec.members) {
        out << " {";
        for (std::size_t i = 0; i < mem.size(); ++i)
          out << (i ? "," : "") << mem[i];
        out << "}";
      }
      out << "\nb_map:";
      for (const auto& [v, id] : dec.b_map) out << " " << v << "->" << id;
      out << "\nopen:";
      for (int id : dec.open) out << " " << id;
      out << "\n\n";
    }
  }
  if (json_mode(o)) {
    json j;
    j["partition"] = datum.partition.parts;
    j["tableaux"] = std::move(arr);
    out << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_components(const Options& o, std::ostream& out) {
  const auto datum = datum_from(o);
  const auto classes = enumerate_components(datum, o.budget);
  if (json_mode(o)) {
    json arr = json::array();
    for (const auto& c : classes) arr.push_back(signed_class_to_json(c));
    json j;
    j["partition"] = datum.partition.parts;
    j["count"] = classes.size();
    j["classes"] = std::move(arr);
    out << j.dump(2) << "\n";
  } else {
    out << classes.size() << " irreducible components for ("
        << format_partition(datum.partition.parts) << ")\n\n";
    for (const auto& c : classes) out << render_signed_class(c) << "\n";
  }
  return 0;
}

int cmd_stab(const Options& o, std::ostream& out) {
  const auto datum = datum_from(o);
  const auto report = orbit_report(datum, o.budget);
  if (json_mode(o)) {
    json j = orbit_report_to_json(report);
    json stabs = json::array();
    for (const auto& s : report.stab_set) stabs.push_back(subgroup_to_json(s));
    j["stab_set"] = std::move(stabs);
    out << j.dump(2) << "\n";
  } else {
    out << report.class_count << " components in " << report.orbits.size()
        << " orbits\n";
    for (const auto& orb : report.orbits)
      out << "orbit of size " << orb.size << " with stabilizer "
          << format_subgroup(orb.stab) << "\n";
    out << "Stab(e):";
    for (const auto& s : report.stab_set) out << " " << format_subgroup(s);
    out << "\n";
  }
  return 0;
}

int cmd_ncp(const Options& o, std::ostream& out) {
  const auto datum = datum_from(o);
  const auto ncps = enumerate_even_ncp(datum);
  if (json_mode(o)) {
    json arr = json::array();
    for (const auto& ncp : ncps) {
      json item;
      item["ncp"] = ncp_to_json(ncp);
      item["group"] = subgroup_to_json(ncp_group(ncp, datum));
      arr.push_back(std::move(item));
    }
    json j;
    j["partition"] = datum.partition.parts;
    j["count"] = ncps.size();
    j["even_ncps"] = std::move(arr);
    out << j.dump(2) << "\n";
  } else {
    out << ncps.size() << " even noncrossing partitions of B = {";
    const auto b = datum.b_lambda();
    for (std::size_t i = 0; i < b.size(); ++i) out << (i ? "," : "") << b[i];
    out << "}\n\n";
    for (const auto& ncp : ncps) {
      out << render_ncp_diagram(ncp);
      out << "group: " << format_subgroup(ncp_group(ncp, datum)) << "\n\n";
    }
  }
  return 0;
}

int cmd_tl(const Options& o, std::ostream& out) {
  const auto datum = datum_from(o);
  const auto patterns = enumerate_tl(datum);
  if (json_mode(o)) {
    json arr = json::array();
    for (const auto& p : patterns) {
      json item;
      item["pattern"] = tl_to_json(p);
      item["subgroup"] = subgroup_to_json(h_sigma(p, datum));
      arr.push_back(std::move(item));
    }
    json j;
    j["partition"] = datum.partition.parts;
    j["count"] = patterns.size();
    j["patterns"] = std::move(arr);
    out << j.dump(2) << "\n";
  } else {
    out << patterns.size() << " Temperley-Lieb patterns\n";
    for (const auto& p : patterns) {
      out << "{" << p.singleton << "}";
      for (const auto& pr : p.pairs) out << " {" << pr[0] << "," << pr[1] << "}";
      out << "  ->  " << format_subgroup(h_sigma(p, datum)) << "\n";
    }
  }
  return 0;
}

int cmd_quotient(const Options& o, std::ostream& out) {
  const auto datum = datum_from(o);
  const auto q = canonical_quotient(datum);
  if (json_mode(o)) {
    json j;
    j["partition"] = datum.partition.parts;
    j["kernel"] = subgroup_to_json(q.kernel);
    j["basis_indexes"] = q.basis_indexes;
    json proj = json::array();
    for (int i = 0; i < q.ambient_rank; ++i) {
      std::string bits(q.rank(), '0');
      for (int k = 0; k < q.rank(); ++k)
        if (q.projection[i] & (std::uint64_t{1} << k)) bits[k] = '1';
      proj.push_back(bits);
    }
    j["projection"] = std::move(proj);
    out << j.dump(2) << "\n";
  } else {
    out << "K_e = " << format_subgroup(q.kernel) << "\n";
    out << "quotient rank " << q.rank() << ", basis classes of:";
    for (int m : q.basis_indexes) out << " t" << m;
    out << "\n";
  }
  return 0;
}

int cmd_verify_evidence(const Options& o, std::ostream& out) {
  bool all_pass = true;
  json arr = json::array();
  auto handle = [&](const OrbitDatum& datum) {
    const auto report = verify_evidence(datum);
    all_pass = all_pass && report.pass;
    if (json_mode(o)) {
      arr.push_back(evidence_to_json(report));
    } else {
      out << "(" << format_partition(datum.partition.parts) << "): "
          << report.image_set.size() << " images vs " << report.h_set.size()
          << " cell subgroups: " << (report.pass ? "pass" : "FAIL") << "\n";
    }
  };
  if (!o.partition.empty()) {
    handle(datum_from(o));
  } else {
    for (int total = 2; total <= o.max; total += 2)
      for (const auto& p : all_classical_partitions(total, LieType::C))
        handle(orbit_datum(p));
  }
  if (json_mode(o))
    out << arr.dump(2) << "\n";
  else
    out << (all_pass ? "all pass" : "counterexample found") << "\n";
  return all_pass ? 0 : 1;
}

int cmd_verify_mainthm(const Options& o, std::ostream& out) {
  bool all_pass = true;
  json arr = json::array();
  for (int total = 2; total <= o.max; total += 2) {
    for (const auto& p : all_classical_partitions(total, LieType::C)) {
      const auto datum = orbit_datum(p);
      const auto stab = orbit_report(datum, o.budget).stab_set;
      const auto s = s_set(datum);
      const bool pass = stab == s;
      all_pass = all_pass && pass;
      if (json_mode(o)) {
        json item;
        item["partition"] = p.parts;
        item["stab_count"] = stab.size();
        item["s_count"] = s.size();
        item["pass"] = pass;
        arr.push_back(std::move(item));
      } else {
        out << "(" << format_partition(p.parts) << "): |Stab(e)|=" << stab.size()
            << " |S(e)|=" << s.size() << ": " << (pass ? "pass" : "FAIL")
            << "\n";
      }
    }
  }
  if (json_mode(o))
    out << arr.dump(2) << "\n";
  else
    out << (all_pass ? "all pass" : "counterexample found") << "\n";
  return all_pass ? 0 : 1;
}

int cmd_exceptional_solve(const Options& o, std::ostream& out) {
  const StabilizerFamily& family = family_by_name(o.family);
  const CharTable table = build_table(family);
  const auto chi = parse_chi(o.chi);
  const auto mults = solve_multiplicities(table, chi);
  if (json_mode(o)) {
    out << solve_result_to_json(family, mults).dump(2) << "\n";
  } else {
    const auto labels = family.orbit_labels();
    for (std::size_t i = 0; i < labels.size(); ++i)
      out << labels[i] << ": " << mults[i] << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Irreducible components of Springer fibers for classical "
               "nilpotent orbits: signed domino tableaux, Van Leeuwen "
               "clusters, noncrossing partitions and cell subgroups"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd, bool needs_partition) {
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"ascii", "json"}));
    cmd->add_option("--budget", o.budget, "enumeration budget");
    if (needs_partition) {
      cmd->add_option("--partition", o.partition,
                      "comma separated parts, exponents allowed (2^3,1^2)")
          ->required();
      cmd->add_option("--type", o.type, "Lie type")
          ->check(CLI::IsMember({"B", "C", "D"}));
      cmd->add_option("--isogeny", o.isogeny, "isogeny class for B/D")
          ->check(CLI::IsMember({"O", "SO"}));
    }
  };

  auto* sdt = app.add_subcommand("sdt", "standard domino tableaux of a shape");
  add_common(sdt, true);
  auto* cl = app.add_subcommand("clusters", "cluster decompositions");
  add_common(cl, true);
  auto* comp = app.add_subcommand("components", "signed components");
  add_common(comp, true);
  auto* stab = app.add_subcommand("stab", "orbit and stabilizer report");
  add_common(stab, true);
  auto* ncp = app.add_subcommand("ncp", "even noncrossing partitions");
  add_common(ncp, true);
  auto* tl = app.add_subcommand("tl", "Temperley-Lieb patterns");
  add_common(tl, true);
  auto* quot = app.add_subcommand("quotient", "Lusztig's canonical quotient");
  add_common(quot, true);

  auto* vev = app.add_subcommand("verify-evidence",
                                 "images of S(e) against the cell subgroups");
  add_common(vev, false);
  vev->add_option("--partition", o.partition, "single partition to check");
  vev->add_option("--type", o.type, "Lie type")->check(CLI::IsMember({"C"}));
  vev->add_option("--max", o.max, "sweep all type-C partitions of 2n <= max");

  auto* vmt = app.add_subcommand("verify-mainthm",
                                 "tableau stabilizers against even NCPs");
  add_common(vmt, false);
  vmt->add_option("--max", o.max, "sweep all type-C partitions of 2n <= max")
      ->required();

  auto* exc = app.add_subcommand("exceptional-solve",
                                 "orbit multiplicities from character values");
  add_common(exc, false);
  exc->add_option("--family", o.family, "stabilizer family (S2, S3, G2(a1), E8(b6), S4, S5)")
      ->required();
  exc->add_option("--chi", o.chi, "character values, one per conjugacy class")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (sdt->parsed()) return cmd_sdt(o, out);
    if (cl->parsed()) return cmd_clusters(o, out);
    if (comp->parsed()) return cmd_components(o, out);
    if (stab->parsed()) return cmd_stab(o, out);
    if (ncp->parsed()) return cmd_ncp(o, out);
    if (tl->parsed()) return cmd_tl(o, out);
    if (quot->parsed()) return cmd_quotient(o, out);
    if (vev->parsed()) return cmd_verify_evidence(o, out);
    if (vmt->parsed()) return cmd_verify_mainthm(o, out);
    if (exc->parsed()) return cmd_exceptional_solve(o, out);
  } catch (const Error& e) {
    err << errc_name(e.code()) << ": " << e.what() << "\n";
    return e.code() == Errc::infeasible ? 3 : 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace springer
