#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "zomo/catalog.hpp"
#include "zomo/curve_suites.hpp"
#include "zomo/data.hpp"
#include "zomo/genus.hpp"
#include "zomo/kummer.hpp"
#include "zomo/report.hpp"

using namespace zomo;

namespace {

constexpr int kPass = 0;
constexpr int kCheckFailure = 1;
constexpr int kUsage = 2;

struct Output {
  std::string path;
  std::ostringstream buf;

  void flush() {
    if (path.empty()) {
      std::cout << buf.str();
      return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << buf.str();
  }
};

int emit_report(Output& out, const Report& r, const std::string& format) {
  if (format == "markdown")
    out.buf << to_markdown(r);
  else
    out.buf << to_json(r).dump(2) << "\n";
  return r.pass() ? kPass : kCheckFailure;
}

Report verify_catalog(const std::string& id) {
  auto catalog = load_catalog();
  std::vector<const CatalogEntry*> chosen;
  for (const auto& e : catalog)
    if (id.empty() || e.id == id) chosen.push_back(&e);
  if (chosen.empty()) throw Error("no catalog entry with id " + id);
  std::vector<std::future<EntryReport>> jobs;
  for (const CatalogEntry* e : chosen) jobs.push_back(std::async(std::launch::async, [e] { return verify_entry(*e); }));
  std::vector<EntryReport> reports;
  for (auto& j : jobs) reports.push_back(j.get());
  return catalog_report(reports);
}

Report analyze_file(const std::string& path) {
  std::string text = read_text_file(path);
  Presentation p = parse_presentation(text);
  Report rep;
  rep.suite = "groups analyze " + path;
  FiniteGroup G;
  try {
    G = coset_enumerate(p);
  } catch (const Error& e) {
    rep.add(make_record("analyze.enumerate", "", "finite group", std::string("error: ") + e.what(), false));
    return rep;
  }
  Fingerprint fp = fingerprint(G);
  int p3 = prime_of_order(G.order());
  rep.add(make_record("analyze.order", "", "power of a prime", std::to_string(G.order()), p3 != 0));
  rep.add(make_record("analyze.fingerprint", "", "", fp.str(), true));
  if (p3 > 1) {
    CentralSeries cs = central_series(G);
    rep.add(make_record("analyze.maximal_class", "", "", cs.maximal_class ? "true" : "false", true));
    rep.add(make_record("analyze.frattini_rank", "", "", std::to_string(frattini_rank(G)), true));
  }
  return rep;
}

Report named_suite(const std::string& name) {
  for (const auto& n : kummer_suite_names())
    if (n == name) return kummer_check(name);
  for (const auto& n : curve_suite_names())
    if ("curve-" + n == name) return curve_check(n, 19);
  if (name == "catalog") return verify_catalog("");
  throw Error("unknown suite " + name);
}

std::vector<std::string> all_suites() {
  std::vector<std::string> v = {"catalog"};
  for (const auto& n : curve_suite_names()) v.push_back("curve-" + n);
  for (const auto& n : kummer_suite_names()) v.push_back(n);
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification toolkit for 3-groups acting on extremal curves"};
  app.require_subcommand(1);
  Output out;
  unsigned long long seed = 0;
  app.add_option("--out", out.path, "Write output to this file instead of stdout");
  app.add_option("--seed", seed, "Seed for randomized sampling")->capture_default_str();
  app.set_version_flag("--version", kToolVersion);

  auto* groups = app.add_subcommand("groups", "Catalog and presentation checks");
  groups->require_subcommand(1);
  std::string format = "json";
  auto* verify = groups->add_subcommand("verify-catalog", "Verify every expected property of the catalog");
  std::string entry_id;
  verify->add_option("--id", entry_id, "Restrict to one catalog entry");
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "markdown"}));
  auto* analyze = groups->add_subcommand("analyze", "Enumerate a presentation file and print invariants");
  std::string pres_file;
  analyze->add_option("file", pres_file)->required();
  analyze->add_option("--format", format)->check(CLI::IsMember({"json", "markdown"}));

  auto* genus = app.add_subcommand("genus", "Genus bounds and ramification profiles");
  genus->require_subcommand(1);
  BoundQuery bq;
  std::string g_text;
  auto* bound = genus->add_subcommand("bound", "Upper bound on |G| for a d-group of automorphisms");
  bound->add_option("--d", bq.d)->required();
  bound->add_option("--g", g_text)->required();
  bound->add_option("--p", bq.p, "Characteristic (0 or a prime other than d)");
  bound->add_flag("--elliptic-quotient", bq.elliptic_quotient);
  auto* profiles = genus->add_subcommand("profiles", "Riemann-Hurwitz profiles for a given order and genus");
  unsigned pd = 3;
  std::string order_text;
  profiles->add_option("--d", pd)->required();
  profiles->add_option("--order", order_text)->required();
  profiles->add_option("--g", g_text)->required();

  auto* kummer = app.add_subcommand("kummer", "Cyclic cubic covers of the Hesse curve");
  kummer->require_subcommand(1);
  auto* build = kummer->add_subcommand("build", "Build z^3 = w and compare with the stored equation");
  u32 kq = 0;
  int kh = 0;
  std::string golden_file;
  build->set_help_flag("--help", "Print this help message and exit");
  build->add_option("--q", kq)->required();
  build->add_option("--h", kh)->required();
  build->add_option("--golden", golden_file, "Equation file to compare against")->check(CLI::ExistingFile);

  auto* curve = app.add_subcommand("curve", "Automorphism groups of plane curves");
  curve->require_subcommand(1);
  auto* check = curve->add_subcommand("check", "Run a curve suite");
  std::string curve_name;
  u32 cq = 19;
  int ck = 4;
  check->add_option("--name", curve_name)->required()->check(CLI::IsMember(curve_suite_names()));
  check->add_option("--q", cq)->capture_default_str();
  check->add_option("--k", ck, "Largest extension degree for point sets")->capture_default_str();
  check->add_option("--format", format)->check(CLI::IsMember({"json", "markdown"}));

  auto* report = app.add_subcommand("report", "Run verification suites and print one combined report");
  std::vector<std::string> suites;
  report->add_option("--format", format)->check(CLI::IsMember({"json", "markdown"}))->capture_default_str();
  report->add_option("--suite", suites, "Suites to run (default: all)")->check(CLI::IsMember(all_suites()));
  report->add_flag("--list", [](std::int64_t) {
    for (const auto& s : all_suites()) std::cout << s << "\n";
    std::exit(kPass);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  int rc = kPass;
  try {
    if (verify->parsed()) {
      rc = emit_report(out, verify_catalog(entry_id), format);
    } else if (analyze->parsed()) {
      rc = emit_report(out, analyze_file(pres_file), format);
    } else if (bound->parsed()) {
      bq.g = BigInt(g_text);
      BoundResult r = zomorrodian_bound(bq);
      out.buf << r.bound << "\n";
    } else if (profiles->parsed()) {
      BigInt order(order_text), g(g_text);
      for (const auto& p : enumerate_profiles(pd, order, g)) out.buf << p.str() << "\n";
    } else if (build->parsed()) {
      KummerOptions opt;
      if (!golden_file.empty()) opt.golden_text = read_text_file(golden_file);
      KummerOutput k = kummer_build(kq, kh, opt);
      out.buf << to_json_text(k) << "\n";
      rc = k.report.pass() ? kPass : kCheckFailure;
    } else if (check->parsed()) {
      rc = emit_report(out, curve_check(curve_name, cq, ck), format);
    } else if (report->parsed()) {
      if (suites.empty()) suites = all_suites();
      std::vector<std::future<Report>> jobs;
      for (const auto& s : suites) jobs.push_back(std::async(std::launch::async, [s] { return named_suite(s); }));
      Report all;
      all.suite = "report";
      for (auto& j : jobs) all.append(j.get());
      rc = emit_report(out, all, format);
    }
    out.flush();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return rc;
}
