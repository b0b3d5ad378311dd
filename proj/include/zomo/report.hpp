#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

namespace zomo {

inline constexpr const char* kToolVersion = "0.1.0";

// One verified claim. status is "pass", "fail", or "conflict" (a documented disagreement with a
// quoted value that does not fail the report).
struct CheckRecord {
  std::string id;
  std::string citation;
  std::string expected;
  std::string actual;
  std::string status;
  double elapsed_ms = 0;

  bool passes() const { return status != "fail"; }
  // Equality ignoring elapsed time.
  bool same_outcome(const CheckRecord& o) const;
  bool operator==(const CheckRecord& o) const = default;
};

struct Report {
  std::string suite;
  std::vector<CheckRecord> records;
  std::string version = kToolVersion;

  bool pass() const;
  void add(CheckRecord r) { records.push_back(std::move(r)); }
  void append(const Report& o);
  bool operator==(const Report& o) const = default;
};

// Record with status from a comparison of strings.
CheckRecord make_record(std::string id, std::string citation, std::string expected, std::string actual);
CheckRecord make_record(std::string id, std::string citation, std::string expected, std::string actual, bool ok);

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
std::string to_markdown(const Report& r);

// Wall-clock stopwatch in milliseconds.
class Stopwatch {
 public:
  Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

}  // namespace zomo
