#pragma once

// Serialization for CLI output: element-name parsing, Cayley-table rendering
// (text/csv/json), and the versioned JSON report document for space reports.
// JSON readers are strict: unknown fields and schema-version mismatches are
// rejected.

#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dicyclic/group.hpp"
#include "dicyclic/symmetric_space.hpp"

namespace dicyclic {

inline constexpr const char* kSchemaVersion = "1";

// Inverse of element_name: "1", "x", "x^3", "y", "yx", "yx^4". Exponents are
// reduced, so "x^7" in Dc_3 parses to x.
inline Element parse_element(const std::string& name, GroupParams params) {
  if (name == "1") return identity(params);
  size_t pos = 0;
  int a = 0;
  if (pos < name.size() && name[pos] == 'y') {
    a = 1;
    ++pos;
  }
  if (pos == name.size()) {
    if (a == 1) return y_x_power(0, params);
    throw std::invalid_argument("cannot parse element name: " + name);
  }
  if (name[pos] != 'x') throw std::invalid_argument("cannot parse element name: " + name);
  ++pos;
  if (pos == name.size()) return make_element(a, 1, params);
  if (name[pos] != '^') throw std::invalid_argument("cannot parse element name: " + name);
  ++pos;
  size_t digits = 0;
  long long b = std::stoll(name.substr(pos), &digits);
  if (digits != name.size() - pos) {
    throw std::invalid_argument("cannot parse element name: " + name);
  }
  return make_element(a, b, params);
}

inline std::string set_name(const ElementSet& set) {
  std::string out = "{";
  for (size_t i = 0; i < set.size(); ++i) {
    if (i > 0) out += ", ";
    out += element_name(set[i]);
  }
  return out + "}";
}

inline std::string partition_name(const std::vector<ElementSet>& orbits) {
  std::string out = "{";
  for (size_t i = 0; i < orbits.size(); ++i) {
    if (i > 0) out += ", ";
    out += set_name(orbits[i]);
  }
  return out + "}";
}

// --- Cayley table rendering -------------------------------------------------

inline std::string render_table_text(const GroupTable& table) {
  size_t width = 1;
  for (const auto& label : table.elements) width = std::max(width, label.size());
  width += 2;
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(width)) << "*";
  for (const auto& label : table.elements) out << std::setw(static_cast<int>(width)) << label;
  out << "\n";
  for (int i = 0; i < table.order; ++i) {
    out << std::setw(static_cast<int>(width)) << table.elements[i];
    for (int j = 0; j < table.order; ++j) {
      out << std::setw(static_cast<int>(width)) << table.elements[table.at(i, j)];
    }
    out << "\n";
  }
  return out.str();
}

inline std::string render_table_csv(const GroupTable& table) {
  std::ostringstream out;
  out << "*";
  for (const auto& label : table.elements) out << "," << label;
  out << "\n";
  for (int i = 0; i < table.order; ++i) {
    out << table.elements[i];
    for (int j = 0; j < table.order; ++j) out << "," << table.elements[table.at(i, j)];
    out << "\n";
  }
  return out.str();
}

inline nlohmann::json table_to_json(const GroupTable& table, int n) {
  nlohmann::json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["n"] = n;
  doc["elements"] = table.elements;
  doc["identity_index"] = table.identity_index;
  std::vector<std::vector<int>> rows(table.order, std::vector<int>(table.order));
  for (int i = 0; i < table.order; ++i) {
    for (int j = 0; j < table.order; ++j) rows[i][j] = table.at(i, j);
  }
  doc["table"] = rows;
  return doc;
}

inline void require_keys(const nlohmann::json& obj, const std::vector<std::string>& required,
                         const std::vector<std::string>& optional, const std::string& where) {
  if (!obj.is_object()) throw std::invalid_argument(where + ": expected a JSON object");
  for (const auto& key : required) {
    if (!obj.contains(key)) throw std::invalid_argument(where + ": missing field '" + key + "'");
  }
  for (const auto& item : obj.items()) {
    const std::string& key = item.key();
    bool known = std::find(required.begin(), required.end(), key) != required.end() ||
                 std::find(optional.begin(), optional.end(), key) != optional.end();
    if (!known) throw std::invalid_argument(where + ": unknown field '" + key + "'");
  }
}

inline void require_schema_version(const nlohmann::json& doc, const std::string& where) {
  if (doc.at("schema_version").get<std::string>() != kSchemaVersion) {
    throw std::invalid_argument(where + ": unsupported schema_version");
  }
}

inline GroupTable parse_table_json(const nlohmann::json& doc) {
  require_keys(doc, {"schema_version", "n", "elements", "identity_index", "table"}, {},
               "cayley table document");
  require_schema_version(doc, "cayley table document");
  GroupTable table;
  table.elements = doc.at("elements").get<std::vector<std::string>>();
  table.order = static_cast<int>(table.elements.size());
  table.identity_index = doc.at("identity_index").get<int>();
  auto rows = doc.at("table").get<std::vector<std::vector<int>>>();
  if (static_cast<int>(rows.size()) != table.order) {
    throw std::invalid_argument("cayley table document: row count mismatch");
  }
  table.product.reserve(static_cast<size_t>(table.order) * table.order);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != table.order) {
      throw std::invalid_argument("cayley table document: column count mismatch");
    }
    table.product.insert(table.product.end(), row.begin(), row.end());
  }
  return table;
}

// --- Space report document ----------------------------------------------------

struct AutomorphismDescriptor {
  std::string kind;  // "rs" or "table"
  int r = 1;
  int s = 0;
  std::vector<std::string> images;  // table kind: image of each canonical element
  std::string name;                 // optional display label (Dc_2 rows)
};

struct SpaceEntry {
  AutomorphismDescriptor automorphism;
  int order = 0;
  bool inner = false;
  std::vector<std::string> H;
  std::vector<std::string> Q;
  std::vector<std::string> R;
  std::vector<std::vector<std::string>> h_orbits;
  std::vector<std::vector<std::string>> g_orbits;
  std::string prov_H, prov_Q, prov_R, prov_orbits;
  bool r_beyond_paper = false;
};

struct ReportDocument {
  std::string schema_version = kSchemaVersion;
  int n = 2;
  std::vector<SpaceEntry> entries;
};

inline std::vector<std::string> names_of(const ElementSet& set) {
  std::vector<std::string> out;
  out.reserve(set.size());
  for (const auto& g : set) out.push_back(element_name(g));
  return out;
}

inline std::vector<std::vector<std::string>> names_of(const std::vector<ElementSet>& orbits) {
  std::vector<std::vector<std::string>> out;
  out.reserve(orbits.size());
  for (const auto& orbit : orbits) out.push_back(names_of(orbit));
  return out;
}

inline SpaceEntry entry_from_report(const SpaceReport& report, const std::string& name = "") {
  SpaceEntry entry;
  if (std::holds_alternative<RsAutomorphism>(report.phi)) {
    const auto& rs = std::get<RsAutomorphism>(report.phi);
    entry.automorphism.kind = "rs";
    entry.automorphism.r = rs.r;
    entry.automorphism.s = rs.s;
  } else {
    const auto& table = std::get<TableAutomorphism>(report.phi);
    entry.automorphism.kind = "table";
    for (int image : table.images()) {
      entry.automorphism.images.push_back(
          element_name(element_from_index(image, table.params())));
    }
  }
  entry.automorphism.name = name;
  entry.order = report.order;
  entry.inner = report.inner;
  entry.H = names_of(report.H);
  entry.Q = names_of(report.Q);
  entry.R = names_of(report.R);
  entry.h_orbits = names_of(report.h_orbits);
  entry.g_orbits = names_of(report.g_orbits);
  entry.prov_H = report.provenance.H;
  entry.prov_Q = report.provenance.Q;
  entry.prov_R = report.provenance.R;
  entry.prov_orbits = report.provenance.orbits;
  entry.r_beyond_paper = report.provenance.r_beyond_paper;
  return entry;
}

inline nlohmann::json to_json(const SpaceEntry& entry) {
  nlohmann::json aut;
  aut["kind"] = entry.automorphism.kind;
  if (entry.automorphism.kind == "rs") {
    aut["r"] = entry.automorphism.r;
    aut["s"] = entry.automorphism.s;
  } else {
    aut["images"] = entry.automorphism.images;
  }
  if (!entry.automorphism.name.empty()) aut["name"] = entry.automorphism.name;
  nlohmann::json doc;
  doc["automorphism"] = aut;
  doc["order"] = entry.order;
  doc["inner"] = entry.inner;
  doc["H"] = entry.H;
  doc["Q"] = entry.Q;
  doc["R"] = entry.R;
  doc["h_orbits"] = entry.h_orbits;
  doc["g_orbits"] = entry.g_orbits;
  doc["provenance"] = {{"H", entry.prov_H},
                       {"Q", entry.prov_Q},
                       {"R", entry.prov_R},
                       {"orbits", entry.prov_orbits},
                       {"r_beyond_paper", entry.r_beyond_paper}};
  return doc;
}

inline nlohmann::json to_json(const ReportDocument& doc) {
  nlohmann::json out;
  out["schema_version"] = doc.schema_version;
  out["n"] = doc.n;
  out["entries"] = nlohmann::json::array();
  for (const auto& entry : doc.entries) out["entries"].push_back(to_json(entry));
  return out;
}

inline SpaceEntry parse_space_entry(const nlohmann::json& obj) {
  require_keys(obj, {"automorphism", "order", "inner", "H", "Q", "R", "h_orbits", "g_orbits",
                     "provenance"},
               {}, "space entry");
  SpaceEntry entry;
  const auto& aut = obj.at("automorphism");
  entry.automorphism.kind = aut.at("kind").get<std::string>();
  if (entry.automorphism.kind == "rs") {
    require_keys(aut, {"kind", "r", "s"}, {"name"}, "rs automorphism");
    entry.automorphism.r = aut.at("r").get<int>();
    entry.automorphism.s = aut.at("s").get<int>();
  } else if (entry.automorphism.kind == "table") {
    require_keys(aut, {"kind", "images"}, {"name"}, "table automorphism");
    entry.automorphism.images = aut.at("images").get<std::vector<std::string>>();
  } else {
    throw std::invalid_argument("space entry: unknown automorphism kind '" +
                                entry.automorphism.kind + "'");
  }
  if (aut.contains("name")) entry.automorphism.name = aut.at("name").get<std::string>();
  entry.order = obj.at("order").get<int>();
  entry.inner = obj.at("inner").get<bool>();
  entry.H = obj.at("H").get<std::vector<std::string>>();
  entry.Q = obj.at("Q").get<std::vector<std::string>>();
  entry.R = obj.at("R").get<std::vector<std::string>>();
  entry.h_orbits = obj.at("h_orbits").get<std::vector<std::vector<std::string>>>();
  entry.g_orbits = obj.at("g_orbits").get<std::vector<std::vector<std::string>>>();
  const auto& prov = obj.at("provenance");
  require_keys(prov, {"H", "Q", "R", "orbits", "r_beyond_paper"}, {}, "provenance");
  entry.prov_H = prov.at("H").get<std::string>();
  entry.prov_Q = prov.at("Q").get<std::string>();
  entry.prov_R = prov.at("R").get<std::string>();
  entry.prov_orbits = prov.at("orbits").get<std::string>();
  entry.r_beyond_paper = prov.at("r_beyond_paper").get<bool>();
  return entry;
}

inline ReportDocument parse_report_document(const nlohmann::json& doc) {
  require_keys(doc, {"schema_version", "n", "entries"}, {}, "report document");
  require_schema_version(doc, "report document");
  ReportDocument out;
  out.schema_version = doc.at("schema_version").get<std::string>();
  out.n = doc.at("n").get<int>();
  for (const auto& entry : doc.at("entries")) out.entries.push_back(parse_space_entry(entry));
  return out;
}

}  // namespace dicyclic
