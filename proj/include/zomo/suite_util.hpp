#pragma once

#include <string>
#include <vector>

#include "zomo/analysis.hpp"
#include "zomo/report.hpp"

namespace zomo {

std::string join(const std::vector<std::string>& v, const std::string& sep = " ");
std::string join(const std::vector<int>& v, const std::string& sep = ",");

// Times a check and stamps the record.
template <class Fn>
CheckRecord timed(Fn&& fn) {
  Stopwatch sw;
  CheckRecord r = fn();
  r.elapsed_ms = sw.ms();
  return r;
}

// A failed record for a quoted claim becomes a conflict.
CheckRecord conflict_if_failed(CheckRecord r);

// Sizes of the multiset of fingerprints, descending ("2,2" for two isomorphism pairs).
std::string multiplicities(const std::vector<Fingerprint>& fps);

bool has_elementary_abelian_27(const FiniteGroup& G);
std::vector<Subgroup> central_order3_subgroups(const FiniteGroup& G);

// Counts of abelian and of minimal non-abelian maximal subgroups.
std::pair<int, int> maximal_subgroup_kinds(const FiniteGroup& G);

}  // namespace zomo
