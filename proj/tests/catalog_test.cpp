#include <doctest.h>

#include "zomo/catalog.hpp"
#include "zomo/data.hpp"
#include "zomo/report.hpp"

using namespace zomo;

TEST_CASE("every catalog group is a finite 3-group and every undisputed row passes") {
  auto catalog = load_catalog();
  REQUIRE(catalog.size() >= 50);
  std::vector<EntryReport> reports;
  for (const auto& e : catalog) {
    EntryReport r = verify_entry(e);
    CAPTURE(e.id);
    CHECK(r.error.empty());
    CHECK(prime_of_order(r.order) == 3);
    CHECK(r.pass);
    for (const auto& row : r.rows) {
      CAPTURE(row.expectation.property);
      CAPTURE(row.expectation.argument);
      if (row.expectation.source != "disputed") CHECK(row.actual == row.expectation.expected);
    }
    reports.push_back(std::move(r));
  }
  Report rep = catalog_report(reports);
  CHECK(rep.pass());
}

TEST_CASE("disputed rows are reported as conflicts") {
  auto catalog = load_catalog();
  int disputed = 0, conflicts = 0;
  for (const auto& e : catalog) {
    bool has = false;
    for (const auto& x : e.expected) has = has || x.source == "disputed";
    if (!has) continue;
    EntryReport r = verify_entry(e);
    for (const auto& row : r.rows) {
      if (row.expectation.source != "disputed") continue;
      ++disputed;
      conflicts += row.status() == "conflict";
    }
  }
  CHECK(disputed >= 3);
  CHECK(conflicts == disputed);
}

TEST_CASE("manifest parsing") {
  std::string text =
      "# comment\n"
      "id: x\n"
      "file: c9.pres\n"
      "expect: order | - | 9 | quoted | a quote | with a bar\n";
  auto entries = parse_manifest(text, data_path("catalog"));
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].expected[0].quote == "a quote | with a bar");
  CHECK(verify_entry(entries[0]).pass);
  CHECK_THROWS_AS(parse_manifest("id: y\nfile: c9.pres\nexpect: order | 9\n", data_path("catalog")), Error);
  CHECK_THROWS_AS(find_entry(load_catalog(), "nosuch"), Error);
}

TEST_CASE("family records flag coincident fingerprints without failing") {
  auto catalog = load_catalog();
  std::vector<EntryReport> reports;
  for (const auto& id : {"C9_rtimes_C3", "U33"}) reports.push_back(verify_entry(find_entry(catalog, id)));
  Report rep = catalog_report(reports);
  bool found = false;
  for (const auto& r : rep.records)
    if (r.id == "family.order27_nonabelian.distinct") {
      found = true;
      CHECK(r.actual == "2 fingerprint classes for 2 groups");
    }
  CHECK(found);
}
