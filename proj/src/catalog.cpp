#include "zomo/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "zomo/data.hpp"

namespace zomo {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

std::pair<std::string, std::string> split_pair(const std::string& arg) {
  size_t k = arg.find('~');
  if (k == std::string::npos) throw Error("expected 'lhs ~ rhs' argument: " + arg);
  return {trim(arg.substr(0, k)), trim(arg.substr(k + 1))};
}

std::string str_bool(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string normalize_value(const std::string& v) {
  std::string s;
  for (char c : v)
    if (c != ' ') s += c;
  return s;
}

void finish_entry(CatalogEntry& e, const std::string& dir, std::vector<CatalogEntry>& out) {
  if (e.id.empty()) return;
  if (e.file.empty()) throw Error("catalog entry " + e.id + " has no file");
  e.text = read_text_file(dir + "/" + e.file);
  e.presentation = parse_presentation(e.text);
  for (const auto& x : e.expected)
    if (x.quote.empty()) throw Error("catalog entry " + e.id + ": expectation '" + x.property + "' lacks a citation");
  out.push_back(std::move(e));
  e = CatalogEntry{};
}

int word_element(const FiniteGroup& G, const CatalogEntry& e, const std::string& text) {
  return G.eval(parse_word(text, e.presentation.generators));
}

std::vector<int> members_outside(const FiniteGroup& G, const Subgroup& H) {
  std::vector<int> out;
  for (int g = 0; g < G.order(); ++g)
    if (!H.contains(g)) out.push_back(g);
  return out;
}

// Subgroups of the given order generated by at most two elements.
int two_generated_subgroups_of_order(const FiniteGroup& G, int order) {
  std::set<Subgroup> found;
  std::vector<int> cand;
  for (int g = 0; g < G.order(); ++g)
    if (order % element_order(G, g) == 0) cand.push_back(g);
  for (size_t i = 0; i < cand.size(); ++i) {
    Subgroup A = generated_subgroup(G, {cand[i]});
    if (A.order() == order) found.insert(A);
    if (A.order() >= order) continue;
    for (size_t j = i + 1; j < cand.size(); ++j) {
      if (A.contains(cand[j])) continue;
      Subgroup B = generated_subgroup(G, {cand[i], cand[j]});
      if (B.order() == order) found.insert(B);
    }
  }
  return static_cast<int>(found.size());
}

}  // namespace

std::string CheckRow::status() const {
  if (pass) return "pass";
  return expectation.source == "disputed" ? "conflict" : "fail";
}

std::vector<CatalogEntry> parse_manifest(const std::string& text, const std::string& dir) {
  std::vector<CatalogEntry> out;
  CatalogEntry cur;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty()) {
      finish_entry(cur, dir, out);
      continue;
    }
    if (t[0] == '#') continue;
    size_t colon = t.find(':');
    if (colon == std::string::npos) throw Error("manifest line " + std::to_string(lineno) + ": expected 'key: value'");
    std::string key = trim(t.substr(0, colon)), val = trim(t.substr(colon + 1));
    if (key == "id") {
      if (!cur.id.empty()) throw Error("manifest line " + std::to_string(lineno) + ": records must be separated by a blank line");
      cur.id = val;
    } else if (key == "file") {
      cur.file = val;
    } else if (key == "family") {
      cur.family = val;
    } else if (key == "note") {
      cur.note = cur.note.empty() ? val : cur.note + " " + val;
    } else if (key == "subgroup") {
      size_t eq = val.find('=');
      if (eq == std::string::npos) throw Error("manifest line " + std::to_string(lineno) + ": subgroup needs 'NAME = words'");
      cur.subgroups.push_back({trim(val.substr(0, eq)), split(val.substr(eq + 1), ',')});
    } else if (key == "expect") {
      // property | argument | expected | source | quote (the quote may itself contain '|')
      std::vector<std::string> f;
      size_t pos = 0;
      for (int i = 0; i < 4; ++i) {
        size_t bar = val.find('|', pos);
        if (bar == std::string::npos) throw Error("manifest line " + std::to_string(lineno) + ": expect needs five '|'-separated fields");
        f.push_back(trim(val.substr(pos, bar - pos)));
        pos = bar + 1;
      }
      f.push_back(trim(val.substr(pos)));
      if (f[3] != "quoted" && f[3] != "derived" && f[3] != "disputed")
        throw Error("manifest line " + std::to_string(lineno) + ": source must be quoted, derived or disputed");
      cur.expected.push_back({f[0], f[1] == "-" ? "" : f[1], f[2], f[3], f[4]});
    } else {
      throw Error("manifest line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  finish_entry(cur, dir, out);
  std::set<std::string> ids;
  for (const auto& e : out)
    if (!ids.insert(e.id).second) throw Error("duplicate catalog id: " + e.id);
  return out;
}

std::vector<CatalogEntry> load_catalog(const std::string& dir) {
  return parse_manifest(read_text_file(dir + "/manifest.txt"), dir);
}

std::vector<CatalogEntry> load_catalog() { return load_catalog(data_path("catalog")); }

const CatalogEntry& find_entry(const std::vector<CatalogEntry>& entries, const std::string& id) {
  for (const auto& e : entries)
    if (e.id == id) return e;
  throw Error("no catalog entry with id " + id);
}

Subgroup resolve_subgroup(const FiniteGroup& G, const CatalogEntry& e, const std::string& name) {
  for (const auto& s : e.subgroups) {
    if (s.name != name) continue;
    std::vector<int> gens;
    for (const auto& w : s.words) gens.push_back(word_element(G, e, w));
    return generated_subgroup(G, gens);
  }
  throw Error("entry " + e.id + " defines no subgroup named " + name);
}

std::string evaluate_property(const FiniteGroup& G, const CatalogEntry& e, const Expectation& x) {
  const std::string& p = x.property;
  const std::string& a = x.argument;
  auto sub = [&](const std::string& n) { return resolve_subgroup(G, e, n); };

  if (p == "order") return std::to_string(G.order());
  if (p == "center_order") return std::to_string(center(G).order());
  if (p == "center_elementary") return str_bool(is_elementary_abelian(G, center(G)));
  if (p == "center_quotient_type") {
    Quotient Q = quotient(G, center(G));
    if (!Q.group.is_abelian()) return "nonabelian";
    return join(abelian_type(Q.group));
  }
  if (p == "nilpotency_class") return std::to_string(nilpotency_class(G));
  if (p == "maximal_class") return str_bool(is_maximal_class(G));
  if (p == "derived_index") return std::to_string(G.order() / derived_subgroup(G).order());
  if (p == "derived_length") return std::to_string(derived_length(G));
  if (p == "frattini_equals_derived") return str_bool(frattini(G) == derived_subgroup(G));
  if (p == "maximal_subgroup_count") return std::to_string(maximal_subgroups(G).size());
  if (p == "abelian_maximal_count") {
    int n = 0;
    for (const auto& M : maximal_subgroups(G)) n += is_abelian(G, M);
    return std::to_string(n);
  }
  if (p == "min_generators") return std::to_string(frattini_rank(G));
  if (p == "exponent") return std::to_string(exponent(G));
  if (p == "order3_count") {
    auto c = order_census(G);
    return std::to_string(c.count(3) ? c.at(3) : 0);
  }
  if (p == "index") return std::to_string(G.order() / sub(a).order());
  if (p == "abelian") return str_bool(is_abelian(G, sub(a)));
  if (p == "minimal_nonabelian") return str_bool(is_minimal_nonabelian(G, sub(a)));
  if (p == "metacyclic") {
    if (a.empty()) return str_bool(is_metacyclic(G));
    return str_bool(is_metacyclic(as_group(G, sub(a)).group));
  }
  if (p == "exponent_outside") {
    int l = 1;
    for (int g : members_outside(G, sub(a))) l = std::lcm(l, element_order(G, g));
    return std::to_string(l);
  }
  if (p == "order3_outside") {
    auto c = order_census(G, sub(a));
    return std::to_string(c.count(3) ? c.at(3) : 0);
  }
  if (p == "many_order3_outside") {
    auto c = order_census(G, sub(a));
    long long n = c.count(3) ? c.at(3) : 0;
    return str_bool(9 * n >= 4LL * G.order());
  }
  if (p == "has_order9_outside") {
    for (int g : members_outside(G, sub(a)))
      if (element_order(G, g) == 9) return "true";
    return "false";
  }
  if (p == "cubes_outside") {
    // <g^3> equals <w> for every g outside the subgroup
    auto [h, w] = split_pair(a);
    Subgroup target = generated_subgroup(G, {word_element(G, e, w)});
    for (int g : members_outside(G, sub(h)))
      if (!(generated_subgroup(G, {G.pow(g, 3)}) == target)) return "false";
    return "true";
  }
  if (p == "mna_count") return std::to_string(minimal_nonabelian_subgroups(G).size());
  if (p == "mna_maximal_count") {
    int n = 0;
    for (const auto& M : maximal_subgroups(G)) n += is_minimal_nonabelian(G, M);
    return std::to_string(n);
  }
  if (p == "central_quotient_pattern") return join(central_quotient_center_pattern(G));
  if (p == "word_identity") {
    auto [l, r] = split_pair(a);
    const auto& names = e.presentation.generators;
    std::vector<int> assign(G.generators());
    return str_bool(verify_word_identity(G, parse_word(l, names), parse_word(r, names), assign));
  }
  if (p == "central") return str_bool(center(G).contains(word_element(G, e, a)));
  if (p == "element_order") return std::to_string(element_order(G, word_element(G, e, a)));
  if (p == "same_subgroup") {
    auto [l, r] = split_pair(a);
    return str_bool(sub(l) == sub(r));
  }
  if (p == "derived_of") {
    // the derived subgroup of the first subgroup equals the second
    auto [l, r] = split_pair(a);
    Embedded E = as_group(G, sub(l));
    Subgroup D = derived_subgroup(E.group), R = sub(r);
    if (D.order() != R.order()) return "false";
    for (int g : D.members())
      if (!R.contains(E.to_parent[g])) return "false";
    return "true";
  }
  if (p == "fundamental_is") return str_bool(fundamental_subgroup(G) == sub(a));
  if (p == "fundamental_abelian") return str_bool(is_abelian(G, fundamental_subgroup(G)));
  if (p == "fundamental_metacyclic") return str_bool(is_metacyclic(as_group(G, fundamental_subgroup(G)).group));
  if (p == "fundamental_class") {
    FiniteGroup F = as_group(G, fundamental_subgroup(G)).group;
    return std::to_string(nilpotency_class(F));
  }
  if (p == "other_maximals_maximal_class") {
    Subgroup F = fundamental_subgroup(G);
    for (const auto& M : maximal_subgroups(G))
      if (!(M == F) && !is_maximal_class(as_group(G, M).group)) return "false";
    return "true";
  }
  if (p == "unique_special_maximal") {
    try {
      return str_bool(unique_special_maximal(G) == sub(a));
    } catch (const Error&) {
      return "error";
    }
  }
  if (p == "unique_special_maximal_exists") {
    try {
      unique_special_maximal(G);
      return "true";
    } catch (const Error&) {
      return "false";
    }
  }
  if (p == "cyclic_subgroups_of_order") {
    int k = std::stoi(a);
    return std::to_string(cyclic_subgroups(G, whole_group(G), k).size());
  }
  if (p == "subgroups_of_order") return std::to_string(two_generated_subgroups_of_order(G, std::stoi(a)));
  if (p == "order3_elements_subgroup") {
    std::vector<int> m;
    for (int g = 0; g < G.order(); ++g)
      if (G.pow(g, 3) == 0) m.push_back(g);
    Subgroup H(G.order(), m);
    if (!is_subgroup(G, H)) return "not-a-subgroup";
    return std::to_string(H.order()) + (is_elementary_abelian(G, H) ? " elementary" : "");
  }
  throw Error("unknown catalog property: " + p);
}

EntryReport verify_entry(const CatalogEntry& e, const FiniteGroup& G) {
  EntryReport r;
  r.id = e.id;
  r.family = e.family;
  r.order = G.order();
  r.fingerprint = fingerprint(G);
  r.pass = true;
  for (const auto& x : e.expected) {
    CheckRow row;
    row.expectation = x;
    try {
      row.actual = evaluate_property(G, e, x);
    } catch (const Error& err) {
      row.actual = std::string("error: ") + err.what();
    }
    row.pass = normalize_value(row.actual) == normalize_value(x.expected);
    if (x.source == "disputed") {
      r.conflicts += !row.pass;
    } else {
      r.pass = r.pass && row.pass;
    }
    r.rows.push_back(std::move(row));
  }
  return r;
}

EntryReport verify_entry(const CatalogEntry& e, long long max_cosets) {
  FiniteGroup G;
  try {
    G = coset_enumerate(e.presentation, max_cosets);
  } catch (const Error& err) {
    EntryReport r;
    r.id = e.id;
    r.family = e.family;
    r.error = err.what();
    for (const auto& x : e.expected) r.rows.push_back({x, "not evaluated", false});
    return r;
  }
  return verify_entry(e, G);
}

std::vector<FamilyCheck> family_checks(const std::vector<EntryReport>& reports) {
  std::map<std::string, std::vector<const EntryReport*>> by;
  std::vector<std::string> order;
  for (const auto& r : reports) {
    if (r.family.empty()) continue;
    if (!by.count(r.family)) order.push_back(r.family);
    by[r.family].push_back(&r);
  }
  std::vector<FamilyCheck> out;
  for (const auto& f : order) {
    FamilyCheck c;
    c.family = f;
    c.fingerprints_distinct = true;
    const auto& v = by[f];
    for (size_t i = 0; i < v.size(); ++i) {
      c.ids.push_back(v[i]->id);
      if (!v[i]->error.empty()) c.fingerprints_distinct = false;
      for (size_t j = 0; j < i; ++j)
        if (v[i]->fingerprint == v[j]->fingerprint) c.fingerprints_distinct = false;
    }
    out.push_back(std::move(c));
  }
  return out;
}

Report catalog_report(const std::vector<EntryReport>& reports) {
  Report rep;
  rep.suite = "groups verify-catalog";
  for (const auto& e : reports) {
    if (!e.error.empty()) rep.add(make_record(e.id + ".build", "", "finite 3-group", "error: " + e.error, false));
    for (const auto& row : e.rows) {
      const Expectation& x = row.expectation;
      std::string id = e.id + "." + x.property + (x.argument.empty() ? "" : "(" + x.argument + ")");
      CheckRecord r = make_record(id, x.quote, x.expected, row.actual, row.pass);
      r.status = row.status();
      rep.add(std::move(r));
    }
  }
  // Equal fingerprints do not prove isomorphism, so coincidences are flagged rather than failed.
  std::map<std::string, std::vector<const EntryReport*>> by;
  for (const auto& e : reports)
    if (!e.family.empty()) by[e.family].push_back(&e);
  for (const auto& [family, members] : by) {
    if (members.size() < 2) continue;
    bool built = true;
    std::vector<std::vector<std::string>> classes;
    std::vector<const Fingerprint*> reps;
    for (const EntryReport* e : members) {
      built = built && e->error.empty();
      size_t k = 0;
      while (k < reps.size() && !(*reps[k] == e->fingerprint)) ++k;
      if (k == reps.size()) {
        reps.push_back(&e->fingerprint);
        classes.emplace_back();
      }
      classes[k].push_back(e->id);
    }
    std::string flagged;
    for (const auto& c : classes) {
      if (c.size() < 2) continue;
      flagged += flagged.empty() ? "" : "; ";
      for (size_t i = 0; i < c.size(); ++i) flagged += (i ? " " : "") + c[i];
    }
    std::string actual = std::to_string(classes.size()) + " fingerprint classes for " + std::to_string(members.size()) +
                         " groups" + (flagged.empty() ? "" : ", fingerprint-identical: " + flagged);
    rep.add(make_record("family." + family + ".distinct", "", "non-isomorphic members", actual, built));
  }
  return rep;
}

}  // namespace zomo
