#include <doctest.h>

#include "zomo/field.hpp"
#include "zomo/report.hpp"

using namespace zomo;

namespace {
Report sample() {
  Report r;
  r.suite = "sample";
  r.add(make_record("a", "quote with | bar", "1", "1"));
  r.add(make_record("b", "", "2", "3"));
  CheckRecord c = make_record("c", "", "x", "y");
  c.status = "conflict";
  c.elapsed_ms = 1.25;
  r.add(c);
  return r;
}
}  // namespace

TEST_CASE("status semantics") {
  Report r = sample();
  CHECK(r.records[0].status == "pass");
  CHECK(r.records[1].status == "fail");
  CHECK_FALSE(r.pass());
  r.records.erase(r.records.begin() + 1);
  CHECK(r.pass());
  CHECK(make_record("d", "", "a", "b", true).status == "pass");
}

TEST_CASE("json round trip") {
  Report r = sample();
  nlohmann::json j = to_json(r);
  CHECK(j["schema"] == 1);
  CHECK(j["status"] == "fail");
  CHECK(report_from_json(j) == r);
  CHECK(report_from_json(nlohmann::json::parse(j.dump())) == r);
  j["schema"] = 2;
  CHECK_THROWS_AS(report_from_json(j), Error);
}

TEST_CASE("outcome comparison ignores timing") {
  Report a = sample(), b = sample();
  b.records[2].elapsed_ms = 99;
  CHECK_FALSE(a == b);
  for (size_t i = 0; i < a.records.size(); ++i) CHECK(a.records[i].same_outcome(b.records[i]));
}

TEST_CASE("markdown escapes table cells") {
  std::string md = to_markdown(sample());
  CHECK(md.find("quote with \\| bar") != std::string::npos);
  CHECK(md.find("| b | fail |") != std::string::npos);
}
