#include "zomo/analysis.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace zomo {

Subgroup::Subgroup(int parent_order, std::vector<int> members) : members_(std::move(members)), mask_(parent_order, 0) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (int g : members_) {
    if (g < 0 || g >= parent_order) throw Error("subgroup member out of range");
    mask_[g] = 1;
  }
}

bool Subgroup::subset_of(const Subgroup& o) const {
  for (int g : members_)
    if (!o.contains(g)) return false;
  return true;
}

int prime_of_order(int n) {
  if (n == 1) return 1;
  if (n < 1) return 0;
  int p = 2;
  while (n % p) ++p;
  while (n % p == 0) n /= p;
  return n == 1 ? p : 0;
}

namespace {

int require_p_group(const FiniteGroup& G) {
  int p = prime_of_order(G.order());
  if (p == 0) throw Error("operation requires a group of prime-power order");
  return p;
}

int ilog(int n, int p) {
  int k = 0;
  while (n > 1) {
    n /= p;
    ++k;
  }
  return k;
}

// Elements of <gens> by breadth-first right multiplication from the identity.
std::vector<int> closure(const FiniteGroup& G, const std::vector<int>& gens) {
  std::vector<char> in(G.order(), 0);
  std::vector<int> elems{0};
  in[0] = 1;
  for (size_t qi = 0; qi < elems.size(); ++qi) {
    for (int s : gens) {
      int f = G.mul(elems[qi], s);
      if (!in[f]) {
        in[f] = 1;
        elems.push_back(f);
      }
    }
  }
  return elems;
}

// Conjugacy class representatives (least element of each class).
std::vector<int> class_representatives(const FiniteGroup& G) {
  std::vector<char> seen(G.order(), 0);
  std::vector<int> reps;
  for (int g = 0; g < G.order(); ++g) {
    if (seen[g]) continue;
    reps.push_back(g);
    std::vector<int> orbit{g};
    seen[g] = 1;
    for (size_t qi = 0; qi < orbit.size(); ++qi)
      for (int x : G.generators()) {
        int c = G.conjugate(orbit[qi], x);
        if (!seen[c]) {
          seen[c] = 1;
          orbit.push_back(c);
        }
      }
  }
  return reps;
}

}  // namespace

Subgroup whole_group(const FiniteGroup& G) {
  std::vector<int> all(G.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(G.order(), std::move(all));
}

Subgroup trivial_subgroup(const FiniteGroup& G) { return Subgroup(G.order(), {0}); }

Subgroup generated_subgroup(const FiniteGroup& G, const std::vector<int>& gens) {
  std::vector<int> useful;
  std::vector<int> cur{0};
  std::vector<char> in(G.order(), 0);
  in[0] = 1;
  for (int g : gens) {
    if (g < 0 || g >= G.order()) throw Error("generator index out of range");
    if (in[g]) continue;
    useful.push_back(g);
    cur = closure(G, useful);
    for (int x : cur) in[x] = 1;
  }
  return Subgroup(G.order(), std::move(cur));
}

std::vector<int> subgroup_generators(const FiniteGroup& G, const Subgroup& H) {
  std::vector<int> gens;
  std::vector<char> in(G.order(), 0);
  in[0] = 1;
  for (int g : H.members()) {
    if (in[g]) continue;
    gens.push_back(g);
    for (int x : closure(G, gens)) in[x] = 1;
  }
  return gens;
}

Subgroup normal_closure(const FiniteGroup& G, const std::vector<int>& gens) {
  std::vector<int> ng = gens;
  Subgroup H = generated_subgroup(G, ng);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> hg = subgroup_generators(G, H);
    for (int h : hg) {
      for (int x : G.generators()) {
        int c = G.conjugate(h, x);
        if (!H.contains(c)) {
          hg.push_back(c);
          H = generated_subgroup(G, hg);
          changed = true;
          break;
        }
      }
      if (changed) break;
    }
  }
  return H;
}

bool is_subgroup(const FiniteGroup& G, const Subgroup& H) {
  if (!H.contains(0)) return false;
  for (int a : H.members()) {
    if (!H.contains(G.inv(a))) return false;
    for (int b : H.members())
      if (!H.contains(G.mul(a, b))) return false;
  }
  return true;
}

bool is_normal(const FiniteGroup& G, const Subgroup& H) {
  for (int h : subgroup_generators(G, H))
    for (int x : G.generators())
      if (!H.contains(G.conjugate(h, x))) return false;
  return true;
}

bool is_abelian(const FiniteGroup& G, const Subgroup& H) {
  auto gens = subgroup_generators(G, H);
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (G.mul(gens[i], gens[j]) != G.mul(gens[j], gens[i])) return false;
  return true;
}

Embedded as_group(const FiniteGroup& G, const Subgroup& H) {
  const auto& mem = H.members();
  int n = H.order();
  std::vector<int> local(G.order(), -1);
  for (int i = 0; i < n; ++i) local[mem[i]] = i;
  std::vector<std::uint16_t> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int v = local[G.mul(mem[i], mem[j])];
      if (v < 0) throw Error("member set is not closed under multiplication");
      table[static_cast<size_t>(i) * n + j] = static_cast<std::uint16_t>(v);
    }
  std::vector<int> gens;
  std::vector<std::string> names;
  for (int g : subgroup_generators(G, H)) {
    gens.push_back(local[g]);
    names.push_back(G.label(g));
  }
  return Embedded{FiniteGroup(n, std::move(table), gens, names), mem};
}

Subgroup center(const FiniteGroup& G) {
  std::vector<int> z;
  for (int g = 0; g < G.order(); ++g) {
    bool c = true;
    for (int x : G.generators())
      if (G.mul(g, x) != G.mul(x, g)) {
        c = false;
        break;
      }
    if (c) z.push_back(g);
  }
  return Subgroup(G.order(), std::move(z));
}

Subgroup centralizer(const FiniteGroup& G, const Subgroup& H) {
  auto hg = subgroup_generators(G, H);
  std::vector<int> c;
  for (int g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (int h : hg)
      if (G.mul(g, h) != G.mul(h, g)) {
        ok = false;
        break;
      }
    if (ok) c.push_back(g);
  }
  return Subgroup(G.order(), std::move(c));
}

Subgroup derived_subgroup(const FiniteGroup& G) {
  std::vector<int> comms;
  const auto& gens = G.generators();
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j) comms.push_back(G.commutator(gens[i], gens[j]));
  return normal_closure(G, comms);
}

std::vector<Subgroup> maximal_subgroups(const FiniteGroup& G) {
  if (G.order() == 1) return {};
  int p = require_p_group(G);
  // Maximal subgroups of a p-group are the kernels of the surjections onto C_p. A candidate
  // assignment of generator images is a homomorphism iff phi(e*x) = phi(e) + phi(x) along every edge.
  const auto& gens = G.generators();
  int ng = static_cast<int>(gens.size());
  int total = 1;
  for (int i = 0; i < ng; ++i) total *= p;
  std::vector<int> phi(G.order());
  std::vector<int> order_bfs{0};
  {
    std::vector<char> seen(G.order(), 0);
    seen[0] = 1;
    for (size_t qi = 0; qi < order_bfs.size(); ++qi)
      for (int x : gens) {
        int f = G.mul(order_bfs[qi], x);
        if (!seen[f]) {
          seen[f] = 1;
          order_bfs.push_back(f);
        }
      }
  }
  std::set<Subgroup> found;
  for (int code = 1; code < total; ++code) {
    std::vector<int> img(ng);
    int c = code, first = -1;
    for (int i = 0; i < ng; ++i) {
      img[i] = c % p;
      c /= p;
      if (first < 0 && img[i] != 0) first = img[i];
    }
    if (first != 1) continue;  // one representative per scalar class
    std::fill(phi.begin(), phi.end(), -1);
    phi[0] = 0;
    bool ok = true;
    for (size_t qi = 0; qi < order_bfs.size() && ok; ++qi) {
      int e = order_bfs[qi];
      for (int i = 0; i < ng; ++i) {
        int f = G.mul(e, gens[i]);
        int v = (phi[e] + img[i]) % p;
        if (phi[f] < 0) {
          phi[f] = v;
        } else if (phi[f] != v) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    std::vector<int> ker;
    for (int g = 0; g < G.order(); ++g)
      if (phi[g] == 0) ker.push_back(g);
    found.insert(Subgroup(G.order(), std::move(ker)));
  }
  return {found.begin(), found.end()};
}

Subgroup frattini(const FiniteGroup& G) {
  auto maxes = maximal_subgroups(G);
  if (maxes.empty()) return trivial_subgroup(G);
  std::vector<int> in;
  for (int g : maxes[0].members()) {
    bool all = true;
    for (size_t i = 1; i < maxes.size(); ++i)
      if (!maxes[i].contains(g)) {
        all = false;
        break;
      }
    if (all) in.push_back(g);
  }
  return Subgroup(G.order(), std::move(in));
}

Subgroup frattini_by_powers(const FiniteGroup& G) {
  int p = require_p_group(G);
  if (G.order() == 1) return trivial_subgroup(G);
  Subgroup D = derived_subgroup(G);
  std::vector<int> gens = subgroup_generators(G, D);
  for (int g = 0; g < G.order(); ++g) gens.push_back(G.pow(g, p));
  return generated_subgroup(G, gens);
}

CentralSeries central_series(const FiniteGroup& G) {
  CentralSeries cs;
  cs.terms.push_back(trivial_subgroup(G));
  while (cs.terms.back().order() < G.order()) {
    const Subgroup& Z = cs.terms.back();
    std::vector<int> next;
    for (int g = 0; g < G.order(); ++g) {
      bool ok = true;
      for (int x : G.generators())
        if (!Z.contains(G.commutator(g, x))) {
          ok = false;
          break;
        }
      if (ok) next.push_back(g);
    }
    if (static_cast<int>(next.size()) == Z.order()) throw Error("upper central series stabilizes below G: group is not nilpotent");
    cs.terms.emplace_back(G.order(), std::move(next));
  }
  cs.nilpotency_class = static_cast<int>(cs.terms.size()) - 1;
  int p = prime_of_order(G.order());
  cs.maximal_class = p > 1 && ilog(G.order(), p) >= 2 && cs.nilpotency_class == ilog(G.order(), p) - 1;
  return cs;
}

std::vector<Subgroup> lower_central_series(const FiniteGroup& G) {
  std::vector<Subgroup> ks{whole_group(G)};
  while (ks.back().order() > 1) {
    std::vector<int> comms;
    for (int a : subgroup_generators(G, ks.back()))
      for (int x : G.generators()) comms.push_back(G.commutator(a, x));
    Subgroup next = normal_closure(G, comms);
    if (next.order() == ks.back().order()) throw Error("lower central series stabilizes above 1: group is not nilpotent");
    ks.push_back(std::move(next));
  }
  return ks;
}

int nilpotency_class(const FiniteGroup& G) { return central_series(G).nilpotency_class; }

bool is_maximal_class(const FiniteGroup& G) { return central_series(G).maximal_class; }

int derived_length(const FiniteGroup& G) {
  int len = 0;
  FiniteGroup H = G;
  while (H.order() > 1) {
    Subgroup D = derived_subgroup(H);
    if (D.order() == H.order()) throw Error("group is not solvable");
    H = as_group(H, D).group;
    ++len;
  }
  return len;
}

Quotient quotient(const FiniteGroup& G, const Subgroup& N) {
  if (!N.contains(0) || !is_normal(G, N)) throw Error("quotient by a subgroup that is not normal");
  std::vector<int> image(G.order(), -1), reps;
  for (int g = 0; g < G.order(); ++g) {
    if (image[g] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(g);
    for (int n : N.members()) image[G.mul(g, n)] = id;
  }
  int m = static_cast<int>(reps.size());
  std::vector<std::uint16_t> table(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) table[static_cast<size_t>(i) * m + j] = static_cast<std::uint16_t>(image[G.mul(reps[i], reps[j])]);
  std::vector<int> gens;
  for (int x : G.generators()) gens.push_back(image[x]);
  return Quotient{FiniteGroup(m, std::move(table), gens, G.generator_names()), std::move(image)};
}

int exponent(const FiniteGroup& G) {
  long long e = 1;
  for (int g = 0; g < G.order(); ++g) e = std::lcm(e, static_cast<long long>(element_order(G, g)));
  return static_cast<int>(e);
}

bool is_cyclic(const FiniteGroup& G) {
  for (int g = 0; g < G.order(); ++g)
    if (element_order(G, g) == G.order()) return true;
  return false;
}

bool is_elementary_abelian(const FiniteGroup& G, const Subgroup& H) {
  if (H.order() == 1) return true;
  int p = prime_of_order(H.order());
  if (p == 0 || !is_abelian(G, H)) return false;
  for (int h : H.members())
    if (G.pow(h, p) != 0) return false;
  return true;
}

std::vector<int> abelian_type(const FiniteGroup& A) {
  if (!A.is_abelian()) throw Error("abelian_type requires an abelian group");
  std::vector<int> out;
  int n = A.order();
  for (int p = 2; p <= n; ++p) {
    if (n % p) continue;
    bool prime = true;
    for (int d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (!prime) continue;
    // r[k] = number of cyclic factors of exponent >= p^k
    std::vector<int> logs{0};
    long long pk = 1;
    while (true) {
      pk *= p;
      int cnt = 0;
      for (int a = 0; a < n; ++a)
        if (A.pow(a, pk) == 0) ++cnt;
      logs.push_back(ilog(cnt, p));
      if (logs.back() == logs[logs.size() - 2]) break;
    }
    for (size_t k = 1; k + 1 < logs.size(); ++k) {
      int at_least_k = logs[k] - logs[k - 1];
      int at_least_k1 = logs[k + 1] - logs[k];
      int ppow = 1;
      for (size_t i = 0; i < k; ++i) ppow *= p;
      for (int i = 0; i < at_least_k - at_least_k1; ++i) out.push_back(ppow);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> abelianization_invariants(const FiniteGroup& G) {
  return abelian_type(quotient(G, derived_subgroup(G)).group);
}

int frattini_rank(const FiniteGroup& G) {
  int p = require_p_group(G);
  if (G.order() == 1) return 0;
  return ilog(G.order() / frattini(G).order(), p);
}

int min_generators_exhaustive(const FiniteGroup& G) {
  int n = G.order();
  if (n == 1) return 0;
  std::vector<int> reps = class_representatives(G);
  // The first generator may be taken up to conjugacy: conjugating a generating set gives another one.
  for (int k = 1; k <= 16; ++k) {
    std::vector<int> pick(k);
    bool found = false;
    std::function<void(int, int, std::vector<int>&)> rec = [&](int depth, int start, std::vector<int>& cur) {
      if (found) return;
      if (depth == k) {
        if (static_cast<int>(closure(G, cur).size()) == n) found = true;
        return;
      }
      for (int e = start; e < n && !found; ++e) {
        if (e == 0) continue;
        cur.push_back(e);
        rec(depth + 1, e + 1, cur);
        cur.pop_back();
      }
    };
    for (int r : reps) {
      if (r == 0) continue;
      std::vector<int> cur{r};
      if (k == 1) {
        if (static_cast<int>(closure(G, cur).size()) == n) return 1;
        continue;
      }
      rec(1, 1, cur);
      if (found) return k;
    }
  }
  throw Error("generator search exceeded limit");
}

std::map<int, int> order_census(const FiniteGroup& G) {
  std::map<int, int> c;
  for (int g = 0; g < G.order(); ++g) ++c[element_order(G, g)];
  return c;
}

std::map<int, int> order_census(const FiniteGroup& G, const Subgroup& excluded) {
  std::map<int, int> c;
  for (int g = 0; g < G.order(); ++g)
    if (!excluded.contains(g)) ++c[element_order(G, g)];
  return c;
}

bool is_minimal_nonabelian(const FiniteGroup& G, const Subgroup& H) {
  if (is_abelian(G, H)) return false;
  Embedded E = as_group(G, H);
  int p = prime_of_order(H.order());
  if (p <= 1) return false;
  if (derived_subgroup(E.group).order() != p) return false;
  return frattini_rank(E.group) == 2;
}

std::vector<Subgroup> minimal_nonabelian_subgroups(const FiniteGroup& G) {
  int p = require_p_group(G);
  int n = G.order();
  std::vector<Subgroup> out;
  if (n == 1) return out;
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> owner(n);  // indices of found subgroups containing each element
  std::vector<int> stamp(n, -1);
  int epoch = 0;
  std::vector<int> elems;
  for (int a = 1; a < n; ++a) {
    int ap = G.pow(a, p);
    for (int b = a + 1; b < n; ++b) {
      int ab = G.mul(a, b), ba = G.mul(b, a);
      if (ab == ba) continue;
      int c = G.commutator(a, b);
      if (G.pow(c, p) != 0) continue;
      if (G.mul(c, a) != G.mul(a, c) || G.mul(c, b) != G.mul(b, c)) continue;
      if (G.mul(ap, b) != G.mul(b, ap)) continue;
      int bp = G.pow(b, p);
      if (G.mul(bp, a) != G.mul(a, bp)) continue;
      bool inside = false;
      for (int i : owner[a]) {
        if (out[i].contains(b)) {
          inside = true;
          break;
        }
      }
      if (inside) continue;
      ++epoch;
      elems.assign(1, 0);
      stamp[0] = epoch;
      for (size_t qi = 0; qi < elems.size(); ++qi)
        for (int s : {a, b}) {
          int f = G.mul(elems[qi], s);
          if (stamp[f] != epoch) {
            stamp[f] = epoch;
            elems.push_back(f);
          }
        }
      std::vector<int> mem = elems;
      std::sort(mem.begin(), mem.end());
      if (!seen.insert(mem).second) continue;
      Subgroup H(n, mem);
      // Confirm minimality directly: every maximal subgroup of H is abelian.
      Embedded E = as_group(G, H);
      bool all_abelian = true;
      for (const auto& M : maximal_subgroups(E.group))
        if (!is_abelian(E.group, M)) {
          all_abelian = false;
          break;
        }
      if (!all_abelian) continue;
      int idx = static_cast<int>(out.size());
      for (int g : mem) owner[g].push_back(idx);
      out.push_back(std::move(H));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup unique_special_maximal(const FiniteGroup& G) {
  if (G.is_abelian()) throw Error("unique_special_maximal requires a non-abelian group");
  std::vector<Subgroup> hits;
  for (const auto& M : maximal_subgroups(G))
    if (is_abelian(G, M) || is_minimal_nonabelian(G, M)) hits.push_back(M);
  if (hits.size() != 1)
    throw Error("expected exactly one abelian or minimal non-abelian maximal subgroup, found " + std::to_string(hits.size()));
  return hits[0];
}

std::vector<Subgroup> cyclic_subgroups(const FiniteGroup& G, const Subgroup& within, int order) {
  std::set<Subgroup> out;
  for (int g : within.members())
    if (element_order(G, g) == order) out.insert(generated_subgroup(G, {g}));
  return {out.begin(), out.end()};
}

std::vector<int> central_quotient_center_pattern(const FiniteGroup& G) {
  int p = require_p_group(G);
  Subgroup Z = center(G);
  if (Z.order() != p * p || !is_elementary_abelian(G, Z)) throw Error("center is not elementary abelian of order p^2");
  std::vector<int> pat;
  for (const auto& U : cyclic_subgroups(G, Z, p)) pat.push_back(center(quotient(G, U).group).order());
  std::sort(pat.rbegin(), pat.rend());
  return pat;
}

Subgroup fundamental_subgroup(const FiniteGroup& G) {
  auto ks = lower_central_series(G);
  if (ks.size() < 3) throw Error("fundamental subgroup needs a group of class at least 2");
  const Subgroup& K2 = ks[1];
  Subgroup K4 = ks.size() > 3 ? ks[3] : trivial_subgroup(G);
  auto kg = subgroup_generators(G, K2);
  std::vector<int> c;
  for (int g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (int k : kg)
      if (!K4.contains(G.commutator(g, k))) {
        ok = false;
        break;
      }
    if (ok) c.push_back(g);
  }
  return Subgroup(G.order(), std::move(c));
}

bool is_metacyclic(const FiniteGroup& G) {
  int n = G.order();
  std::set<std::vector<int>> tried;
  for (int g = 0; g < n; ++g) {
    Subgroup N = generated_subgroup(G, {g});
    if (!tried.insert(N.members()).second) continue;
    if (!is_normal(G, N)) continue;
    int idx = n / N.order();
    for (int h = 0; h < n; ++h) {
      int k = 1, x = h;
      while (!N.contains(x)) {
        x = G.mul(x, h);
        ++k;
      }
      if (k == idx) return true;
    }
  }
  return false;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& G) {
  std::set<Subgroup> atoms;
  for (int r : class_representatives(G)) atoms.insert(normal_closure(G, {r}));
  std::vector<Subgroup> atom_list(atoms.begin(), atoms.end());
  std::set<Subgroup> all{trivial_subgroup(G)};
  std::vector<Subgroup> queue{trivial_subgroup(G)};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    auto gens = subgroup_generators(G, queue[qi]);
    for (const auto& A : atom_list) {
      if (A.subset_of(queue[qi])) continue;
      auto g2 = gens;
      for (int a : subgroup_generators(G, A)) g2.push_back(a);
      Subgroup J = generated_subgroup(G, g2);
      if (all.insert(J).second) queue.push_back(J);
    }
  }
  return {all.begin(), all.end()};
}

bool verify_word_identity(const FiniteGroup& G, const Word& lhs, const Word& rhs, const std::vector<int>& assignment) {
  return G.eval(lhs, assignment) == G.eval(rhs, assignment);
}

Fingerprint fingerprint(const FiniteGroup& G) {
  Fingerprint f;
  f.order = G.order();
  f.center_order = center(G).order();
  f.nilpotency_class = nilpotency_class(G);
  f.abelian_invariants = abelianization_invariants(G);
  f.order_census = order_census(G);
  f.maximal_subgroups = static_cast<int>(maximal_subgroups(G).size());
  f.minimal_nonabelian = static_cast<int>(minimal_nonabelian_subgroups(G).size());
  f.derived_length = derived_length(G);
  return f;
}

std::string Fingerprint::str() const {
  std::ostringstream os;
  os << "order=" << order << " center=" << center_order << " class=" << nilpotency_class << " ab=[";
  for (size_t i = 0; i < abelian_invariants.size(); ++i) os << (i ? "," : "") << abelian_invariants[i];
  os << "] census={";
  bool first = true;
  for (auto [k, v] : order_census) {
    os << (first ? "" : ",") << k << ":" << v;
    first = false;
  }
  os << "} maximal=" << maximal_subgroups << " mna=" << minimal_nonabelian << " dl=" << derived_length;
  return os.str();
}

}  // namespace zomo
