#include "zomo/curve.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "zomo/data.hpp"

namespace zomo {

namespace {

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

long long point_budget() { return 20 * default_coset_budget(); }

std::string coords_str(const GF& F, const std::vector<u32>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + F.format(v[i]);
  return s + ")";
}

// Rank of a small matrix over F by elimination.
int rank(const GF& F, std::vector<std::vector<u32>> m) {
  int r = 0;
  int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  for (int c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(m.size()); ++i)
      if (m[i][c]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    u32 iv = F.inv(m[r][c]);
    for (int i = 0; i < static_cast<int>(m.size()); ++i) {
      if (i == r || !m[i][c]) continue;
      u32 f = F.mul(m[i][c], iv);
      for (int j = c; j < cols; ++j) m[i][j] = F.sub(m[i][j], F.mul(f, m[r][j]));
    }
    ++r;
  }
  return r;
}

// Solutions of an affine system in nv variables, solved variable by variable: at each level the
// first equation whose last variable is that one supplies candidate roots.
void solve_affine(const std::vector<MPoly>& eqs, int nv, const GF& F, long long& budget,
                  const std::function<void(const std::vector<u32>&)>& emit) {
  std::vector<std::vector<MPoly>> level_eqs(nv);
  std::vector<std::vector<std::vector<MPoly>>> level_coeffs(nv);
  for (const MPoly& e : eqs) {
    if (e.is_zero()) continue;
    int top = -1;
    for (int i = 0; i < nv; ++i)
      if (e.degree_in(i) > 0) top = i;
    if (top < 0) return;  // nonzero constant: no solutions
    level_eqs[top].push_back(e);
    level_coeffs[top].push_back(e.coefficients_in(top));
  }
  std::vector<u32> pt(nv, 0);
  std::function<void(int)> rec = [&](int d) {
    if (d == nv) {
      emit(pt);
      return;
    }
    std::vector<u32> cand;
    bool all = true;
    std::size_t used = 0;
    for (std::size_t e = 0; e < level_coeffs[d].size() && all; ++e) {
      std::vector<u32> uni;
      bool nz = false;
      for (const MPoly& c : level_coeffs[d][e]) {
        uni.push_back(c.eval(F, pt));
        nz |= uni.back() != 0;
      }
      if (nz) {
        cand = F.roots(uni);
        all = false;
        used = e;
      }
    }
    if (all) {
      budget -= F.size();
      if (budget < 0) throw Error("point enumeration exceeded budget");
      cand.resize(F.size());
      for (u32 v = 0; v < F.size(); ++v) cand[v] = v;
    } else if (--budget < 0) {
      throw Error("point enumeration exceeded budget");
    }
    for (u32 v : cand) {
      pt[d] = v;
      bool ok = true;
      for (std::size_t e = 0; e < level_eqs[d].size() && ok; ++e)
        if (all || e != used) ok = level_eqs[d][e].eval(F, pt) == 0;
      if (ok) rec(d + 1);
    }
    pt[d] = 0;
  };
  rec(0);
}

MPoly parse_component(const std::string& text, const std::vector<std::string>& vars, u32 p, MPoly* den) {
  // Split "(num)/(den)" at a top-level slash.
  int depth = 0;
  std::size_t slash = std::string::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == '/' && depth == 0) {
      if (slash != std::string::npos) throw Error("map component has two top-level '/': " + text);
      slash = i;
    }
  }
  auto unwrap = [](std::string s) {
    s = trim(s);
    while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
      int d = 0;
      bool outer = true;
      for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (s[i] == '(') ++d;
        if (s[i] == ')') --d;
        if (d == 0) {
          outer = false;
          break;
        }
      }
      if (!outer) break;
      s = trim(s.substr(1, s.size() - 2));
    }
    return s;
  };
  if (slash == std::string::npos) {
    if (den) *den = MPoly::constant(p, static_cast<int>(vars.size()), 1);
    return parse_mpoly(unwrap(text), vars, p);
  }
  if (!den) throw Error("projective map component cannot be a fraction: " + text);
  *den = parse_mpoly(unwrap(text.substr(slash + 1)), vars, p);
  return parse_mpoly(unwrap(text.substr(0, slash)), vars, p);
}

}  // namespace

std::vector<MPoly> Curve::parsed(u32 p) const {
  std::vector<MPoly> out;
  for (const auto& e : equations) {
    MPoly f = parse_mpoly(e, vars, p);
    if (f.is_zero()) throw Error("curve " + name + ": equation vanishes mod " + std::to_string(p));
    if (projective && !f.is_homogeneous()) throw Error("curve " + name + ": projective equation is not homogeneous");
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<MPoly> Curve::parsed_exclude(u32 p) const {
  std::vector<MPoly> out;
  for (const auto& e : exclude) out.push_back(parse_mpoly(e, vars, p));
  return out;
}

Curve parse_curve(const std::string& text) {
  Curve c;
  std::istringstream in(text);
  std::string line;
  bool space_set = false;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw Error("curve file: expected 'key: value' in: " + line);
    std::string key = trim(line.substr(0, colon)), val = trim(line.substr(colon + 1));
    if (key == "name") {
      c.name = val;
    } else if (key == "space") {
      if (val != "projective" && val != "affine") throw Error("curve file: space must be projective or affine");
      c.projective = val == "projective";
      space_set = true;
    } else if (key == "vars") {
      std::istringstream vs(val);
      std::string v;
      while (vs >> v) c.vars.push_back(v);
    } else if (key == "equation") {
      c.equations.push_back(val);
    } else if (key == "exclude") {
      c.exclude.push_back(val);
    } else {
      throw Error("curve file: unknown key " + key);
    }
  }
  if (c.name.empty() || !space_set || c.vars.empty() || c.equations.empty())
    throw Error("curve file: name, space, vars and equation are required");
  if (c.projective && !c.exclude.empty()) throw Error("curve file: exclude is only allowed for affine curves");
  return c;
}

Curve load_curve(const std::string& name) {
  Curve c = parse_curve(read_text_file(data_path("curves/" + name + ".curve")));
  if (c.name != name) throw Error("curve file " + name + " declares name " + c.name);
  return c;
}

int PointSet::find(const std::vector<u32>& c) const {
  auto it = index.find(c);
  return it == index.end() ? -1 : it->second;
}

int PointSet::nonsingular_count() const {
  return static_cast<int>(std::count_if(points.begin(), points.end(), [](const CurvePoint& q) { return !q.singular; }));
}

std::vector<u32> normalize_projective(const GF& F, std::vector<u32> v) {
  int last = -1;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (v[i]) last = i;
  if (last < 0) throw Error("projective point with all coordinates zero");
  u32 iv = F.inv(v[last]);
  for (u32& x : v) x = F.mul(x, iv);
  return v;
}

bool is_singular_point(const std::vector<MPoly>& eqs, bool projective, const GF& F, const std::vector<u32>& pt) {
  int n = static_cast<int>(pt.size());
  std::vector<std::vector<u32>> J;
  for (const MPoly& e : eqs) {
    std::vector<u32> row(n);
    for (int i = 0; i < n; ++i) row[i] = e.derivative(i).eval(F, pt);
    J.push_back(std::move(row));
  }
  int need = projective ? n - 2 : n - 1;
  return rank(F, J) < need;
}

int multiplicity(const MPoly& f, const std::vector<u32>& pt) {
  u32 p = f.prime();
  int n = f.nvars();
  int j = -1;
  for (int i = 0; i < n; ++i)
    if (pt.at(i)) j = i;
  if (j < 0 || pt[j] != 1) throw Error("multiplicity: point must be normalized");
  std::vector<MPoly> images;
  for (int i = 0; i < n; ++i) {
    if (pt[i] >= p) throw Error("multiplicity: coordinates must lie in the prime field");
    images.push_back(i == j ? MPoly::constant(p, n, 1) : MPoly::variable(p, n, i) + MPoly::constant(p, n, pt[i]));
  }
  MPoly g = f.compose(images);
  if (g.is_zero()) throw Error("multiplicity: the form vanishes identically on the chart");
  int m = -1;
  for (const auto& [e, c] : g.terms()) {
    int d = 0;
    for (int x : e) d += x;
    if (m < 0 || d < m) m = d;
  }
  return m;
}

PointSet enumerate_points(const Curve& c, const GF& F) {
  u32 p = F.p();
  std::vector<MPoly> eqs = c.parsed(p), excl = c.parsed_exclude(p);
  int n = static_cast<int>(c.vars.size());
  for (const auto& e : eqs)
    if (e.nvars() != n) throw Error("curve arity mismatch");
  PointSet S;
  S.p = p;
  S.k = F.degree();
  S.projective = c.projective;
  long long budget = point_budget();
  auto add = [&](std::vector<u32> pt) {
    for (const MPoly& x : excl)
      if (x.eval(F, pt) == 0) return;
    CurvePoint cp{pt, is_singular_point(eqs, c.projective, F, pt)};
    S.index.emplace(pt, static_cast<int>(S.points.size()));
    S.points.push_back(std::move(cp));
  };
  if (!c.projective) {
    solve_affine(eqs, n, F, budget, add);
    return S;
  }
  // Chart j: coordinate j is 1, later coordinates 0, earlier ones free.
  for (int j = n - 1; j >= 0; --j) {
    std::vector<MPoly> images;
    for (int i = 0; i < n; ++i) {
      if (i < j)
        images.push_back(MPoly::variable(p, j, i));
      else
        images.push_back(MPoly::constant(p, j, i == j ? 1 : 0));
    }
    std::vector<MPoly> sub;
    for (const MPoly& e : eqs) sub.push_back(e.compose(images));
    solve_affine(sub, j, F, budget, [&](const std::vector<u32>& part) {
      std::vector<u32> pt(n, 0);
      for (int i = 0; i < j; ++i) pt[i] = part[i];
      pt[j] = 1;
      add(pt);
    });
  }
  return S;
}

RationalMap RationalMap::forms(std::string name, std::vector<MPoly> f) {
  int d = -2;
  for (const MPoly& g : f) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw Error("map " + name + ": component is not homogeneous");
    if (d != -2 && g.total_degree() != d) throw Error("map " + name + ": components have different degrees");
    d = g.total_degree();
  }
  RationalMap m;
  m.name = std::move(name);
  m.projective = true;
  m.num = std::move(f);
  return m;
}

RationalMap RationalMap::fractions(std::string name, std::vector<MPoly> num, std::vector<MPoly> den) {
  if (num.size() != den.size()) throw Error("map " + name + ": numerator and denominator counts differ");
  for (const MPoly& d : den)
    if (d.is_zero()) throw Error("map " + name + ": zero denominator");
  RationalMap m;
  m.name = std::move(name);
  m.projective = false;
  m.num = std::move(num);
  m.den = std::move(den);
  return m;
}

RationalMap RationalMap::parse(std::string name, const std::vector<std::string>& comps,
                               const std::vector<std::string>& vars, u32 p, bool projective) {
  if (comps.size() != vars.size()) throw Error("map " + name + ": wrong number of components");
  std::vector<MPoly> num, den;
  for (const auto& t : comps) {
    MPoly d;
    num.push_back(parse_component(t, vars, p, projective ? nullptr : &d));
    if (!projective) den.push_back(d);
  }
  if (projective) return forms(std::move(name), std::move(num));
  return fractions(std::move(name), std::move(num), std::move(den));
}

std::optional<std::vector<u32>> apply_map(const RationalMap& m, const GF& F, const std::vector<u32>& pt) {
  std::vector<u32> out(m.num.size());
  if (m.projective) {
    for (std::size_t i = 0; i < m.num.size(); ++i) out[i] = m.num[i].eval(F, pt);
    if (std::all_of(out.begin(), out.end(), [](u32 v) { return v == 0; }))
      throw Error("map " + m.name + " has a base point at " + coords_str(F, pt));
    return normalize_projective(F, out);
  }
  for (std::size_t i = 0; i < m.num.size(); ++i) {
    u32 d = m.den[i].eval(F, pt);
    if (d == 0) return std::nullopt;
    out[i] = F.div(m.num[i].eval(F, pt), d);
  }
  return out;
}

RationalMap compose_maps(const RationalMap& a, const RationalMap& b) {
  if (!a.projective || !b.projective) throw Error("composition is implemented for projective maps");
  std::vector<MPoly> f;
  for (const MPoly& g : b.num) f.push_back(g.compose(a.num));
  return RationalMap::forms(a.name + ";" + b.name, std::move(f));
}

CurveAction act(const Curve& c, const std::vector<RationalMap>& maps, const GF& F) {
  CurveAction A;
  A.points = enumerate_points(c, F);
  const auto& pts = A.points.points;
  std::vector<MPoly> eqs = c.parsed(F.p());
  int N = static_cast<int>(pts.size());
  std::vector<char> alive(N);
  for (int i = 0; i < N; ++i) alive[i] = !pts[i].singular;
  std::vector<std::vector<int>> img(maps.size(), std::vector<int>(N, -1));
  for (std::size_t m = 0; m < maps.size(); ++m) {
    if (maps[m].num.size() != c.vars.size()) throw Error("map " + maps[m].name + " has the wrong arity");
    for (int i = 0; i < N; ++i) {
      if (!alive[i]) continue;
      auto r = apply_map(maps[m], F, pts[i].coords);
      if (!r) continue;
      int j = A.points.find(*r);
      if (j < 0) {
        for (const MPoly& e : eqs)
          if (e.eval(F, *r) != 0)
            throw Error("map " + maps[m].name + " sends " + coords_str(F, pts[i].coords) + " off the curve");
        continue;  // lands in the excluded locus
      }
      img[m][i] = j;
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < N; ++i) {
      if (!alive[i]) continue;
      for (std::size_t m = 0; m < maps.size(); ++m) {
        int j = img[m][i];
        if (j < 0 || !alive[j]) {
          alive[i] = 0;
          changed = true;
          break;
        }
      }
    }
  }
  std::vector<int> pos(N, -1);
  for (int i = 0; i < N; ++i) {
    if (!alive[i]) {
      A.dropped += !pts[i].singular;
      continue;
    }
    pos[i] = static_cast<int>(A.domain.size());
    A.domain.push_back(i);
  }
  for (std::size_t m = 0; m < maps.size(); ++m) {
    std::vector<u32> perm(A.domain.size());
    std::vector<char> hit(A.domain.size(), 0);
    for (std::size_t a = 0; a < A.domain.size(); ++a) {
      int b = pos[img[m][A.domain[a]]];
      if (hit[b]) throw Error("map " + maps[m].name + " is not injective on the curve points");
      hit[b] = 1;
      perm[a] = static_cast<u32>(b);
    }
    A.perms.push_back(std::move(perm));
  }
  return A;
}

RealizedGroup automorphism_group(const Curve& c, const std::vector<RationalMap>& maps, u32 p, int max_k, int min_k) {
  std::vector<std::string> names;
  for (const auto& m : maps) names.push_back(m.name);
  RealizedGroup out;
  int prev = -1;
  for (int k = min_k; k <= max_k; ++k) {
    GF F(p, k);
    CurveAction A = act(c, maps, F);
    std::set<std::vector<u32>> distinct(A.perms.begin(), A.perms.end());
    bool ok = distinct.size() == A.perms.size() && !A.domain.empty();
    FiniteGroup G = group_from_permutations(A.perms, names);
    int order = G.order();
    out.orders_by_k.push_back(order);
    if (ok && order == prev) {
      out.group = std::move(G);
      out.k = k;
      out.action = std::move(A);
      return out;
    }
    prev = ok ? order : -1;
  }
  std::string seen;
  for (int o : out.orders_by_k) seen += (seen.empty() ? "" : ",") + std::to_string(o);
  throw Error("curve " + c.name + ": group order not stable up to k=" + std::to_string(max_k) + " (orders " + seen + ")");
}

std::map<int, int> orbit_structure(const FiniteGroup& G) {
  const auto& act = G.action();
  std::map<int, int> out;
  std::vector<char> seen(act.degree, 0);
  for (u32 s = 0; s < act.degree; ++s) {
    if (seen[s]) continue;
    std::vector<u32> stack{s};
    seen[s] = 1;
    int size = 0;
    while (!stack.empty()) {
      u32 x = stack.back();
      stack.pop_back();
      ++size;
      for (const auto& g : act.generators) {
        u32 y = g[x];
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    ++out[size];
  }
  return out;
}

std::vector<std::vector<u32>> fixed_points(const Curve& c, const RationalMap& m, const GF& F) {
  PointSet S = enumerate_points(c, F);
  std::vector<std::vector<u32>> out;
  for (const auto& q : S.points) {
    if (q.singular) continue;
    auto r = apply_map(m, F, q.coords);
    if (r && *r == q.coords) out.push_back(q.coords);
  }
  return out;
}

bool verify_invariant_function(const FFElem& f, const std::vector<Endo>& maps) {
  for (const Endo& e : maps)
    if (apply_endo(e, f) != f) return false;
  return true;
}

}  // namespace zomo
