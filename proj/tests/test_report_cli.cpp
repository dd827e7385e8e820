#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "dicyclic/cli.hpp"
#include "dicyclic/report.hpp"

using namespace dicyclic;

namespace {

struct CliRun {
  int exit_code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("element names parse back") {
  for (int n : {2, 3, 7}) {
    GroupParams params(n);
    for (const auto& g : enumerate_group(params)) {
      CHECK(parse_element(element_name(g), params) == g);
    }
  }
  GroupParams p3(3);
  CHECK(parse_element("x^7", p3) == x_power(1, p3));  // exponents reduce
  CHECK_THROWS_AS(parse_element("z", p3), std::invalid_argument);
  CHECK_THROWS_AS(parse_element("x^", p3), std::invalid_argument);
  CHECK_THROWS_AS(parse_element("yx^2q", p3), std::invalid_argument);
  CHECK_THROWS_AS(parse_element("", p3), std::invalid_argument);
}

TEST_CASE("cayley table json round trip") {
  GroupParams p3(3);
  GroupTable table = cayley_table(p3);
  nlohmann::json doc = table_to_json(table, p3.n);
  GroupTable back = parse_table_json(doc);
  CHECK(back.elements == table.elements);
  CHECK(back.product == table.product);
  CHECK(table_to_json(back, p3.n).dump() == doc.dump());

  SECTION("unknown fields are rejected") {
    nlohmann::json bad = doc;
    bad["extra"] = 1;
    CHECK_THROWS_AS(parse_table_json(bad), std::invalid_argument);
  }

  SECTION("wrong schema version is rejected") {
    nlohmann::json bad = doc;
    bad["schema_version"] = "0";
    CHECK_THROWS_AS(parse_table_json(bad), std::invalid_argument);
  }
}

TEST_CASE("report document round trip") {
  CliRun spaces = run({"spaces", "--n", "3", "--all", "--format", "json"});
  REQUIRE(spaces.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(spaces.out);
  ReportDocument parsed = parse_report_document(doc);
  CHECK(parsed.n == 3);
  CHECK(parsed.entries.size() == 12);
  CHECK(to_json(parsed).dump(2) + "\n" == spaces.out);

  SECTION("unknown entry fields are rejected") {
    nlohmann::json bad = doc;
    bad["entries"][0]["surprise"] = true;
    CHECK_THROWS_AS(parse_report_document(bad), std::invalid_argument);
  }

  SECTION("unknown provenance fields are rejected") {
    nlohmann::json bad = doc;
    bad["entries"][0]["provenance"]["why"] = "because";
    CHECK_THROWS_AS(parse_report_document(bad), std::invalid_argument);
  }

  SECTION("missing fields are rejected") {
    nlohmann::json bad = doc;
    bad["entries"][0].erase("H");
    CHECK_THROWS_AS(parse_report_document(bad), std::invalid_argument);
  }
}

TEST_CASE("cli exit codes") {
  CHECK(run({"elements", "--n", "1"}).exit_code == 2);
  CHECK(run({"elements", "--n", "3"}).exit_code == 0);
  CHECK(run({"multable", "--n", "3", "--format", "yaml"}).exit_code == 2);
  CHECK(run({"spaces", "--n", "3"}).exit_code == 2);  // no selector
  CHECK(run({"spaces", "--n", "3", "--all", "--rs", "5,2"}).exit_code == 2);
  CHECK(run({"spaces", "--n", "3", "--rs", "2,0"}).exit_code == 2);  // r not a unit
  CHECK(run({"spaces", "--n", "3", "--rs", "bogus"}).exit_code == 2);
  CHECK(run({"spaces", "--n", "3", "--index", "99"}).exit_code == 2);
  CHECK(run({"verify", "--n-min", "3", "--n-max", "2"}).exit_code == 2);
  CHECK(run({"verify", "--n-min", "2", "--n-max", "3"}).exit_code == 0);
  CHECK(run({}).exit_code == 2);
}

TEST_CASE("verify fault injection fails and names the check") {
  CliRun bad = run({"verify", "--n-min", "3", "--n-max", "3", "--inject-fault", "compose"});
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("composition coherence") != std::string::npos);
  CHECK(bad.out.find("first counterexample") != std::string::npos);
}

TEST_CASE("elements listing formats") {
  CliRun text = run({"elements", "--n", "3"});
  CHECK(text.out.find("x^3") != std::string::npos);
  CHECK(text.out.find("central") != std::string::npos);

  CliRun csv = run({"elements", "--n", "3", "--format", "csv"});
  int lines = 0;
  for (char c : csv.out) lines += c == '\n';
  CHECK(lines == 13);  // header + 12 elements

  CliRun json_run = run({"elements", "--n", "2", "--format", "json"});
  nlohmann::json doc = nlohmann::json::parse(json_run.out);
  CHECK(doc["elements"].size() == 8);
  CHECK(doc["elements"][0]["central"] == true);
  CHECK(doc["elements"][2]["name"] == "x^2");
  CHECK(doc["elements"][2]["central"] == true);
}

TEST_CASE("multable csv is a (4n+1) x (4n+1) grid") {
  CliRun csv = run({"multable", "--n", "3", "--format", "csv"});
  std::istringstream lines(csv.out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    int cells = 1;
    for (char c : line) cells += c == ',';
    CHECK(cells == 13);
  }
  CHECK(rows == 13);
}

TEST_CASE("autos filters") {
  SECTION("n = 4 inner automorphisms: 8 rows, 7 nontrivial") {
    CliRun inner = run({"autos", "--n", "4", "--inner", "--format", "json"});
    nlohmann::json doc = nlohmann::json::parse(inner.out);
    REQUIRE(doc["automorphisms"].size() == 8);
    int nontrivial = 0;
    for (const auto& row : doc["automorphisms"]) {
      CHECK(row["inner"] == true);
      if (row["order"] != 1) ++nontrivial;
    }
    CHECK(nontrivial == 7);
  }

  SECTION("n = 3 involutions satisfy the congruences") {
    CliRun inv = run({"autos", "--n", "3", "--involutions", "--format", "json"});
    nlohmann::json doc = nlohmann::json::parse(inv.out);
    CHECK(doc["automorphisms"].size() == 7);
    for (const auto& row : doc["automorphisms"]) {
      int r = row["r"], s = row["s"];
      CHECK(r * r % 6 == 1);
      CHECK(s * (1 + r) % 6 == 0);
      CHECK(row["order"] == 2);
    }
  }

  SECTION("n = 2 lists all 24 by name") {
    CliRun all = run({"autos", "--n", "2", "--format", "json"});
    nlohmann::json doc = nlohmann::json::parse(all.out);
    CHECK(doc["automorphisms"].size() == 24);
    CliRun outer = run({"autos", "--n", "2", "--outer", "--format", "json"});
    CHECK(nlohmann::json::parse(outer.out)["automorphisms"].size() == 20);
  }

  SECTION("order filter") {
    CliRun order3 = run({"autos", "--n", "2", "--order", "3", "--format", "json"});
    CHECK(nlohmann::json::parse(order3.out)["automorphisms"].size() == 8);
  }
}

TEST_CASE("spaces output") {
  CliRun one = run({"spaces", "--n", "3", "--rs", "5,2"});
  CHECK(one.exit_code == 0);
  CHECK(one.out.find("Q   = {1, x^2, x^4}") != std::string::npos);
  CHECK(one.out.find("H   = {1, x^3, yx, yx^4}") != std::string::npos);

  SECTION("rs selection at n = 2 warns about family incompleteness") {
    CliRun warned = run({"spaces", "--n", "2", "--rs", "1,2"});
    CHECK(warned.exit_code == 0);
    CHECK(warned.err.find("8 of 24") != std::string::npos);
  }

  SECTION("index selection matches rs selection") {
    CliRun by_index = run({"spaces", "--n", "3", "--index", "0", "--format", "json"});
    CliRun by_rs = run({"spaces", "--n", "3", "--rs", "1,0", "--format", "json"});
    CHECK(by_index.out == by_rs.out);
  }

  SECTION("csv rows are (automorphism, set, element) triples") {
    CliRun csv = run({"spaces", "--n", "3", "--rs", "5,2", "--format", "csv"});
    CHECK(csv.out.find("(5,2),H,yx\n") != std::string::npos);
    CHECK(csv.out.find("(5,2),Q,x^2\n") != std::string::npos);
    CHECK(csv.out.find("(5,2),h_orbit_1,x^4\n") != std::string::npos);
  }

  SECTION("beyond-paper marking for non-involutions") {
    CliRun id_row = run({"spaces", "--n", "3", "--rs", "1,0"});
    CHECK(id_row.out.find("[beyond-paper]") != std::string::npos);
    CliRun inv_row = run({"spaces", "--n", "3", "--rs", "5,2"});
    CHECK(inv_row.out.find("[beyond-paper]") == std::string::npos);
  }
}

TEST_CASE("output is byte-deterministic") {
  for (auto args : {std::vector<std::string>{"spaces", "--n", "2", "--all", "--format", "json"},
                    std::vector<std::string>{"autos", "--n", "3", "--format", "csv"},
                    std::vector<std::string>{"multable", "--n", "4", "--format", "text"}}) {
    CHECK(run(args).out == run(args).out);
  }
}
