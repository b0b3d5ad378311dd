#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zomo/analysis.hpp"
#include "zomo/group.hpp"
#include "zomo/report.hpp"

namespace zomo {

// One expected property of a catalog group.
struct Expectation {
  std::string property;
  std::string argument;  // subgroup name, word, or "lhs ~ rhs" pair; may be empty
  std::string expected;
  // "quoted": value stated in the source text; "derived": computed by an independent route;
  // "disputed": stated in the source but contradicted by computation under every reading tried.
  std::string source;
  std::string quote;   // verbatim citation text
};

struct NamedSubgroup {
  std::string name;
  std::vector<std::string> words;
};

struct CatalogEntry {
  std::string id;
  std::string file;
  std::string family;  // entries sharing a family are expected to be pairwise non-isomorphic
  std::string note;
  std::string text;  // presentation source
  Presentation presentation;
  std::vector<NamedSubgroup> subgroups;
  std::vector<Expectation> expected;
};

struct CheckRow {
  Expectation expectation;
  std::string actual;
  bool pass = false;
  // "pass", "fail", or "conflict" (a disputed row that disagrees; does not fail the entry)
  std::string status() const;
};

struct EntryReport {
  std::string id;
  std::string family;
  int order = 0;
  std::vector<CheckRow> rows;
  bool pass = false;  // every row passes except disputed ones
  int conflicts = 0;
  std::string error;  // non-empty if the group could not be built
  Fingerprint fingerprint;
};

// Parse a manifest; presentation files are resolved relative to dir.
std::vector<CatalogEntry> parse_manifest(const std::string& text, const std::string& dir);
// The shipped corpus under data/catalog.
std::vector<CatalogEntry> load_catalog();
std::vector<CatalogEntry> load_catalog(const std::string& dir);
const CatalogEntry& find_entry(const std::vector<CatalogEntry>& entries, const std::string& id);

// Subgroup of G generated by the named words of the entry.
Subgroup resolve_subgroup(const FiniteGroup& G, const CatalogEntry& e, const std::string& name);
// Value of one property on G as a canonical string ("true", "27", "9,3,3,3", ...).
std::string evaluate_property(const FiniteGroup& G, const CatalogEntry& e, const Expectation& x);

EntryReport verify_entry(const CatalogEntry& e, long long max_cosets = default_coset_budget());
// Same, on an already materialized group.
EntryReport verify_entry(const CatalogEntry& e, const FiniteGroup& G);

struct FamilyCheck {
  std::string family;
  std::vector<std::string> ids;
  bool fingerprints_distinct = false;
};
// Groups reports by family and records whether their fingerprints are pairwise distinct.
std::vector<FamilyCheck> family_checks(const std::vector<EntryReport>& reports);

// One record per expectation row, plus build errors and family distinctness.
Report catalog_report(const std::vector<EntryReport>& reports);

}  // namespace zomo
