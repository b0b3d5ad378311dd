#include "zomo/report.hpp"

#include <sstream>

#include "zomo/field.hpp"

namespace zomo {

bool CheckRecord::same_outcome(const CheckRecord& o) const {
  return id == o.id && citation == o.citation && expected == o.expected && actual == o.actual &&
         status == o.status;
}

bool Report::pass() const {
  for (const auto& r : records)
    if (!r.passes()) return false;
  return true;
}

void Report::append(const Report& o) { records.insert(records.end(), o.records.begin(), o.records.end()); }

CheckRecord make_record(std::string id, std::string citation, std::string expected, std::string actual) {
  bool ok = expected == actual;
  return make_record(std::move(id), std::move(citation), std::move(expected), std::move(actual), ok);
}

CheckRecord make_record(std::string id, std::string citation, std::string expected, std::string actual, bool ok) {
  return CheckRecord{std::move(id), std::move(citation), std::move(expected), std::move(actual), ok ? "pass" : "fail",
                     0};
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json recs = nlohmann::json::array();
  for (const auto& c : r.records) {
    recs.push_back({{"id", c.id},
                    {"citation", c.citation},
                    {"expected", c.expected},
                    {"actual", c.actual},
                    {"status", c.status},
                    {"elapsed_ms", c.elapsed_ms}});
  }
  return {{"schema", 1},
          {"suite", r.suite},
          {"version", r.version},
          {"status", r.pass() ? "pass" : "fail"},
          {"records", recs}};
}

Report report_from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.value("schema", 0) != 1) throw Error("report: unsupported or missing schema");
  Report r;
  r.suite = j.at("suite").get<std::string>();
  r.version = j.at("version").get<std::string>();
  for (const auto& c : j.at("records")) {
    CheckRecord x;
    x.id = c.at("id").get<std::string>();
    x.citation = c.at("citation").get<std::string>();
    x.expected = c.at("expected").get<std::string>();
    x.actual = c.at("actual").get<std::string>();
    x.status = c.at("status").get<std::string>();
    if (x.status != "pass" && x.status != "fail" && x.status != "conflict")
      throw Error("report: unknown status " + x.status);
    x.elapsed_ms = c.at("elapsed_ms").get<double>();
    r.records.push_back(std::move(x));
  }
  return r;
}

namespace {
std::string cell(std::string s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|')
      out += "\\|";
    else if (ch == '\n')
      out += ' ';
    else
      out += ch;
  }
  return out;
}
}  // namespace

std::string to_markdown(const Report& r) {
  std::ostringstream os;
  int fails = 0, conflicts = 0;
  for (const auto& c : r.records) {
    fails += c.status == "fail";
    conflicts += c.status == "conflict";
  }
  os << "# " << r.suite << "\n\n";
  os << "Status: **" << (r.pass() ? "pass" : "fail") << "** (" << r.records.size() << " checks, " << fails
     << " failed, " << conflicts << " conflicts), version " << r.version << "\n\n";
  os << "| id | status | expected | actual | citation |\n|---|---|---|---|---|\n";
  for (const auto& c : r.records)
    os << "| " << cell(c.id) << " | " << c.status << " | " << cell(c.expected) << " | " << cell(c.actual) << " | "
       << cell(c.citation) << " |\n";
  return os.str();
}

}  // namespace zomo
