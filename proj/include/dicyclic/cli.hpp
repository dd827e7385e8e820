#pragma once

// Command-line surface: elements, multable, autos, spaces, verify.
// All behavior is flag-driven and outputs are byte-deterministic for fixed
// inputs. Exit codes: 0 success, 1 verification/consistency failure,
// 2 usage error.

#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dicyclic/automorphism.hpp"
#include "dicyclic/group.hpp"
#include "dicyclic/report.hpp"
#include "dicyclic/symmetric_space.hpp"
#include "dicyclic/verify.hpp"

namespace dicyclic {

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace cli_detail {

inline std::string rs_label(int r, int s) {
  return "(" + std::to_string(r) + "," + std::to_string(s) + ")";
}

// One inventory row per automorphism of Dc_n: the (r,s) family for n >= 3,
// the full brute-force enumeration for n = 2.
struct InventoryRow {
  AnyAutomorphism phi;
  std::string label;      // "(r,s)" or the Dc_2 name
  std::string images;     // "x->..., y->..."
  int order = 0;
  bool inner = false;
  std::string class_rep;  // label of the isomorphy-class representative

  explicit InventoryRow(AnyAutomorphism phi_) : phi(std::move(phi_)) {}
};

inline std::vector<InventoryRow> build_inventory(GroupParams params) {
  std::vector<InventoryRow> rows;
  if (params.n == 2) {
    auto tables = enumerate_automorphisms_bruteforce(params);
    auto classes = aut_conjugacy_classes(tables);
    std::vector<int> rep_of(tables.size());
    for (const auto& cls : classes) {
      for (int member : cls) rep_of[member] = cls.front();
    }
    for (size_t i = 0; i < tables.size(); ++i) {
      InventoryRow row{AnyAutomorphism{tables[i]}};
      row.label = dc2_automorphism_name(tables[i]);
      row.order = exact_order(tables[i]);
      row.inner = find_conjugator(tables[i]).has_value();
      row.class_rep = dc2_automorphism_name(tables[rep_of[i]]);
      row.images = "x->" + element_name(tables[i].image_of_x()) + ", y->" +
                   element_name(tables[i].image_of_y());
      rows.push_back(std::move(row));
    }
    return rows;
  }
  auto classes = isomorphy_classes(params);
  for (const auto& cls : classes) {
    for (const auto& rs : cls) {
      InventoryRow row{AnyAutomorphism{rs}};
      row.label = rs_label(rs.r, rs.s);
      row.order = exact_order(rs);
      row.inner = is_inner(rs).inner;
      row.class_rep = rs_label(cls.front().r, cls.front().s);
      row.images = "x->" + element_name(apply(rs, x_power(1, params))) + ", y->" +
                   element_name(apply(rs, y_x_power(0, params)));
      rows.push_back(std::move(row));
    }
  }
  std::sort(rows.begin(), rows.end(), [](const InventoryRow& lhs, const InventoryRow& rhs) {
    const auto& a = std::get<RsAutomorphism>(lhs.phi);
    const auto& b = std::get<RsAutomorphism>(rhs.phi);
    return a.r != b.r ? a.r < b.r : a.s < b.s;
  });
  return rows;
}

// Canonical display order for the 24 automorphisms of Dc_2: identity, the
// inner maps, the involutions grouped by representative, then orders 3 and 4.
inline const std::vector<std::string>& dc2_display_order() {
  static const std::vector<std::string> order = {
      "id",           "Inn(x)",       "Inn(y)",       "Inn(yx)",      "phi1",
      "phi2",         "phi3",         "phi1*Inn(x)",  "phi2*Inn(yx)", "phi3*Inn(y)",
      "phi4",         "phi5",         "phi4*Inn(x)",  "phi4*Inn(y)",  "phi4*Inn(yx)",
      "phi5*Inn(x)",  "phi5*Inn(y)",  "phi5*Inn(yx)", "phi1*Inn(y)",  "phi1*Inn(yx)",
      "phi2*Inn(x)",  "phi2*Inn(y)",  "phi3*Inn(x)",  "phi3*Inn(yx)"};
  return order;
}

inline void write_elements(GroupParams params, const std::string& format, std::ostream& out) {
  auto all = enumerate_group(params);
  ElementSet center_set = center(params);
  if (format == "json") {
    nlohmann::json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["n"] = params.n;
    doc["elements"] = nlohmann::json::array();
    for (const auto& g : all) {
      doc["elements"].push_back({{"name", element_name(g)},
                                 {"a", g.a},
                                 {"b", g.b},
                                 {"order", element_order(g)},
                                 {"central", set_contains(center_set, g)}});
    }
    out << doc.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    out << "index,element,order,central\n";
    for (const auto& g : all) {
      out << element_index(g) << "," << element_name(g) << "," << element_order(g) << ","
          << (set_contains(center_set, g) ? 1 : 0) << "\n";
    }
    return;
  }
  out << "Dc_" << params.n << " (order " << params.order() << "), center " << set_name(center_set)
      << "\n";
  for (const auto& g : all) {
    out << "  " << element_index(g) << "\t" << element_name(g) << "\torder " << element_order(g)
        << (set_contains(center_set, g) ? "\tcentral" : "") << "\n";
  }
}

inline void write_multable(GroupParams params, const std::string& format, std::ostream& out) {
  GroupTable table = cayley_table(params);
  if (format == "json") {
    out << table_to_json(table, params.n).dump(2) << "\n";
  } else if (format == "csv") {
    out << render_table_csv(table);
  } else {
    out << render_table_text(table);
  }
}

struct AutosFilter {
  int order = 0;  // 0 = no filter
  bool inner_only = false;
  bool outer_only = false;
  bool involutions_only = false;

  bool admits(const InventoryRow& row) const {
    if (order != 0 && row.order != order) return false;
    if (inner_only && !row.inner) return false;
    if (outer_only && row.inner) return false;
    if (involutions_only && row.order != 2) return false;
    return true;
  }
};

inline void write_autos(GroupParams params, const AutosFilter& filter, const std::string& format,
                        std::ostream& out) {
  auto rows = build_inventory(params);
  std::vector<InventoryRow> kept;
  for (auto& row : rows) {
    if (filter.admits(row)) kept.push_back(std::move(row));
  }
  if (format == "json") {
    nlohmann::json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["n"] = params.n;
    doc["automorphisms"] = nlohmann::json::array();
    for (const auto& row : kept) {
      nlohmann::json item;
      if (std::holds_alternative<RsAutomorphism>(row.phi)) {
        const auto& rs = std::get<RsAutomorphism>(row.phi);
        item["kind"] = "rs";
        item["r"] = rs.r;
        item["s"] = rs.s;
      } else {
        item["kind"] = "table";
        item["name"] = row.label;
        const auto& table = std::get<TableAutomorphism>(row.phi);
        item["x_image"] = element_name(table.image_of_x());
        item["y_image"] = element_name(table.image_of_y());
      }
      item["order"] = row.order;
      item["inner"] = row.inner;
      item["class_representative"] = row.class_rep;
      doc["automorphisms"].push_back(item);
    }
    out << doc.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    out << "automorphism,x_image,y_image,order,inner,class_representative\n";
    for (const auto& row : kept) {
      const std::string& images = row.images;
      std::string x_img = images.substr(3, images.find(',') - 3);
      std::string y_img = images.substr(images.find("y->") + 3);
      out << row.label << "," << x_img << "," << y_img << "," << row.order << ","
          << (row.inner ? 1 : 0) << "," << row.class_rep << "\n";
    }
    return;
  }
  out << "Aut(Dc_" << params.n << "): " << kept.size() << " automorphisms";
  if (params.n == 2) out << " (complete brute-force enumeration)";
  out << "\n";
  for (const auto& row : kept) {
    out << "  " << row.label << "\t" << row.images << "\torder " << row.order << "\t"
        << (row.inner ? "inner" : "outer") << "\tclass " << row.class_rep << "\n";
  }
}

inline void write_space_text(const SpaceEntry& entry, std::ostream& out) {
  std::string label = !entry.automorphism.name.empty()
                          ? entry.automorphism.name
                          : rs_label(entry.automorphism.r, entry.automorphism.s);
  auto join_names = [](const std::vector<std::string>& names) {
    std::string s = "{";
    for (size_t i = 0; i < names.size(); ++i) {
      if (i > 0) s += ", ";
      s += names[i];
    }
    return s + "}";
  };
  auto join_orbits = [&](const std::vector<std::vector<std::string>>& orbits) {
    std::string s = "{";
    for (size_t i = 0; i < orbits.size(); ++i) {
      if (i > 0) s += ", ";
      s += join_names(orbits[i]);
    }
    return s + "}";
  };
  out << label << "  (order " << entry.order << ", " << (entry.inner ? "inner" : "outer")
      << ")\n";
  out << "  H   = " << join_names(entry.H) << "\n";
  out << "  Q   = " << join_names(entry.Q) << "\n";
  out << "  R   = " << join_names(entry.R)
      << (entry.r_beyond_paper ? "  [beyond-paper]" : "") << "\n";
  out << "  H\\Q = " << join_orbits(entry.h_orbits) << "\n";
  out << "  G\\Q = " << join_orbits(entry.g_orbits) << "\n";
  out << "  provenance: H=" << entry.prov_H << " Q=" << entry.prov_Q << " R=" << entry.prov_R
      << " orbits=" << entry.prov_orbits << "\n";
}

inline void write_spaces(GroupParams params, const std::vector<SpaceEntry>& entries,
                         const std::string& format, std::ostream& out) {
  if (format == "json") {
    ReportDocument doc;
    doc.n = params.n;
    doc.entries = entries;
    out << to_json(doc).dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    out << "automorphism,set,element\n";
    for (const auto& entry : entries) {
      std::string label = !entry.automorphism.name.empty()
                              ? entry.automorphism.name
                              : rs_label(entry.automorphism.r, entry.automorphism.s);
      auto emit_set = [&](const std::string& kind, const std::vector<std::string>& names) {
        for (const auto& name : names) out << label << "," << kind << "," << name << "\n";
      };
      emit_set("H", entry.H);
      emit_set("Q", entry.Q);
      emit_set("R", entry.R);
      for (size_t i = 0; i < entry.h_orbits.size(); ++i) {
        emit_set("h_orbit_" + std::to_string(i), entry.h_orbits[i]);
      }
      for (size_t i = 0; i < entry.g_orbits.size(); ++i) {
        emit_set("g_orbit_" + std::to_string(i), entry.g_orbits[i]);
      }
    }
    return;
  }
  for (const auto& entry : entries) write_space_text(entry, out);
}

// Space entries for every automorphism, in deterministic display order
// (appendix order for n = 2, ascending (r,s) otherwise).
inline std::vector<SpaceEntry> all_space_entries(GroupParams params) {
  std::vector<SpaceEntry> entries;
  if (params.n == 2) {
    auto tables = enumerate_automorphisms_bruteforce(params);
    std::vector<SpaceEntry> by_name;
    for (const auto& table : tables) {
      SpaceReport report = build_space_report(AnyAutomorphism{table});
      by_name.push_back(entry_from_report(report, dc2_automorphism_name(table)));
    }
    for (const auto& name : dc2_display_order()) {
      for (const auto& entry : by_name) {
        if (entry.automorphism.name == name) entries.push_back(entry);
      }
    }
    if (entries.size() != by_name.size()) {
      throw consistency_error("Dc_2 display order does not cover all automorphisms");
    }
    return entries;
  }
  for (const auto& rs : enumerate_rs_automorphisms(params)) {
    entries.push_back(entry_from_report(build_space_report(AnyAutomorphism{rs})));
  }
  return entries;
}

}  // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"dicyclic group arithmetic, automorphisms, and generalized symmetric spaces"};
  app.require_subcommand(1);

  int n = 2;
  std::string format = "text";
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--n", n, "dicyclic index n (group order 4n)")
        ->required()
        ->check(CLI::Range(2, 1000000));
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };

  auto* cmd_elements = app.add_subcommand("elements", "list the 4n elements with orders");
  add_common(cmd_elements);

  auto* cmd_multable = app.add_subcommand("multable", "print the Cayley table");
  add_common(cmd_multable);

  auto* cmd_autos = app.add_subcommand("autos", "list automorphisms with classification");
  add_common(cmd_autos);
  int filter_order = 0;
  bool filter_inner = false, filter_outer = false, filter_involutions = false;
  cmd_autos->add_option("--order", filter_order, "keep automorphisms of this exact order");
  cmd_autos->add_flag("--inner", filter_inner, "keep inner automorphisms only");
  cmd_autos->add_flag("--outer", filter_outer, "keep outer automorphisms only");
  cmd_autos->add_flag("--involutions", filter_involutions, "keep involutions only");

  auto* cmd_spaces = app.add_subcommand("spaces", "H, Q, R and orbit partitions");
  add_common(cmd_spaces);
  bool all_spaces = false;
  std::string rs_selector;
  int index_selector = -1;
  cmd_spaces->add_flag("--all", all_spaces, "report every automorphism");
  cmd_spaces->add_option("--rs", rs_selector, "select one automorphism as R,S");
  cmd_spaces->add_option("--index", index_selector, "select by inventory index");

  auto* cmd_verify = app.add_subcommand("verify", "run the self-verification suite");
  int n_min = 2, n_max = 8;
  std::string fault_name;
  cmd_verify->add_option("--n-min", n_min, "lowest n to verify")->check(CLI::Range(2, 1000000));
  cmd_verify->add_option("--n-max", n_max, "highest n to verify")->check(CLI::Range(2, 1000000));
  cmd_verify->add_option("--inject-fault", fault_name, "testing aid: force a named fault")
      ->check(CLI::IsMember({"compose"}));

  std::vector<const char*> argv;
  argv.push_back("dicyclic");
  for (const auto& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (cmd_elements->parsed()) {
      cli_detail::write_elements(GroupParams(n), format, out);
      return 0;
    }
    if (cmd_multable->parsed()) {
      cli_detail::write_multable(GroupParams(n), format, out);
      return 0;
    }
    if (cmd_autos->parsed()) {
      cli_detail::AutosFilter filter{filter_order, filter_inner, filter_outer,
                                     filter_involutions};
      cli_detail::write_autos(GroupParams(n), filter, format, out);
      return 0;
    }
    if (cmd_spaces->parsed()) {
      GroupParams params(n);
      int selectors = (all_spaces ? 1 : 0) + (!rs_selector.empty() ? 1 : 0) +
                      (index_selector >= 0 ? 1 : 0);
      if (selectors != 1) {
        throw usage_error("spaces requires exactly one of --all, --rs R,S, --index K");
      }
      std::vector<SpaceEntry> entries;
      if (all_spaces) {
        entries = cli_detail::all_space_entries(params);
      } else if (!rs_selector.empty()) {
        auto comma = rs_selector.find(',');
        if (comma == std::string::npos) throw usage_error("--rs expects R,S");
        long long r = 0, s = 0;
        try {
          r = std::stoll(rs_selector.substr(0, comma));
          s = std::stoll(rs_selector.substr(comma + 1));
        } catch (const std::exception&) {
          throw usage_error("--rs expects integers R,S");
        }
        RsAutomorphism phi = make_rs(r, s, params);  // throws if r is not a unit
        if (phi.family_incomplete()) {
          err << "note: for n = 2 the (r,s) family covers 8 of 24 automorphisms; "
                 "use --all for the full set\n";
        }
        std::string name;
        if (params.n == 2) name = dc2_automorphism_name(to_table(phi));
        entries.push_back(entry_from_report(build_space_report(AnyAutomorphism{phi}), name));
      } else {
        auto rows = cli_detail::build_inventory(params);
        if (index_selector >= static_cast<int>(rows.size())) {
          throw usage_error("--index out of range; inventory has " +
                            std::to_string(rows.size()) + " automorphisms");
        }
        const auto& row = rows[index_selector];
        std::string name = params.n == 2 ? row.label : "";
        entries.push_back(entry_from_report(build_space_report(row.phi), name));
      }
      cli_detail::write_spaces(params, entries, format, out);
      return 0;
    }
    if (cmd_verify->parsed()) {
      VerificationOptions options;
      options.n_min = n_min;
      options.n_max = n_max;
      options.fault = fault_name == "compose" ? Fault::mutate_compose : Fault::none;
      VerificationSummary summary = run_verification(options);
      print_verification(summary, out);
      return summary.all_passed() ? 0 : 1;
    }
  } catch (const usage_error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const consistency_error& e) {
    err << "consistency failure: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand selected\n";
  return 2;
}

}  // namespace dicyclic
