#include "zomo/suite_util.hpp"

#include <algorithm>

namespace zomo {

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

std::string join(const std::vector<int>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

CheckRecord conflict_if_failed(CheckRecord r) {
  if (r.status == "fail") r.status = "conflict";
  return r;
}

std::string multiplicities(const std::vector<Fingerprint>& fps) {
  std::vector<int> counts;
  std::vector<bool> used(fps.size(), false);
  for (std::size_t i = 0; i < fps.size(); ++i) {
    if (used[i]) continue;
    int c = 0;
    for (std::size_t j = i; j < fps.size(); ++j)
      if (!used[j] && fps[j] == fps[i]) {
        used[j] = true;
        ++c;
      }
    counts.push_back(c);
  }
  std::sort(counts.rbegin(), counts.rend());
  std::vector<std::string> s;
  for (int c : counts) s.push_back(std::to_string(c));
  return join(s, ",");
}

bool has_elementary_abelian_27(const FiniteGroup& G) {
  std::vector<int> o3;
  for (int g = 1; g < G.order(); ++g)
    if (element_order(G, g) == 3) o3.push_back(g);
  for (std::size_t i = 0; i < o3.size(); ++i)
    for (std::size_t j = i + 1; j < o3.size(); ++j) {
      int a = o3[i], b = o3[j];
      if (G.mul(a, b) != G.mul(b, a)) continue;
      Subgroup ab = generated_subgroup(G, {a, b});
      if (ab.order() != 9) continue;
      for (int c : o3)
        if (!ab.contains(c) && G.mul(a, c) == G.mul(c, a) && G.mul(b, c) == G.mul(c, b)) return true;
    }
  return false;
}

std::vector<Subgroup> central_order3_subgroups(const FiniteGroup& G) {
  std::vector<Subgroup> out;
  Subgroup Z = center(G);
  for (int z : Z.members()) {
    if (z == 0 || element_order(G, z) != 3) continue;
    Subgroup U = generated_subgroup(G, {z});
    if (std::find(out.begin(), out.end(), U) == out.end()) out.push_back(U);
  }
  return out;
}

std::pair<int, int> maximal_subgroup_kinds(const FiniteGroup& G) {
  int ab = 0, mna = 0;
  for (const auto& M : maximal_subgroups(G)) {
    ab += is_abelian(G, M);
    mna += is_minimal_nonabelian(G, M);
  }
  return {ab, mna};
}

}  // namespace zomo
