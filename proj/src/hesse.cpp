#include "zomo/hesse.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "zomo/analysis.hpp"

namespace zomo {

namespace {

u32 dot(const GF& F, const std::array<u32, 3>& a, const std::array<u32, 3>& b) {
  return F.add(F.add(F.mul(a[0], b[0]), F.mul(a[1], b[1])), F.mul(a[2], b[2]));
}

std::array<u32, 3> squares(const GF& F, const std::array<u32, 3>& a) {
  return {F.mul(a[0], a[0]), F.mul(a[1], a[1]), F.mul(a[2], a[2])};
}

u32 cubic(const GF& F, const std::array<u32, 3>& a) { return dot(F, a, squares(F, a)); }

// s*a + t*b
std::array<u32, 3> combine(const GF& F, u32 s, const std::array<u32, 3>& a, u32 t, const std::array<u32, 3>& b) {
  std::array<u32, 3> r{};
  for (int i = 0; i < 3; ++i) r[i] = F.add(F.mul(s, a[i]), F.mul(t, b[i]));
  return r;
}

}  // namespace

HesseCurve::HesseCurve(std::shared_ptr<const GF> F) : F_(std::move(F)) {
  O_ = normalize({F_->neg(1), 0, 1});
}

HessePoint HesseCurve::normalize(std::array<u32, 3> v) const {
  for (int i = 2; i >= 0; --i) {
    if (v[i] == 0) continue;
    u32 s = F_->inv(v[i]);
    for (u32& c : v) c = F_->mul(c, s);
    return v;
  }
  throw Error("zero vector is not a projective point");
}

bool HesseCurve::on_curve(const HessePoint& a) const { return cubic(*F_, a) == 0; }

HessePoint HesseCurve::third(const HessePoint& a, const HessePoint& b) const {
  const GF& F = *F_;
  if (a != b) {
    // F(s a + t b) = 3st(s <a^2,b> + t <a,b^2>) on the chord.
    return normalize(combine(F, dot(F, a, squares(F, b)), a, F.neg(dot(F, squares(F, a), b)), b));
  }
  // Tangent g.X = 0 with g = (a_i^2); pick a direction D on it independent of a.
  std::array<u32, 3> g = squares(F, a);
  std::array<std::array<u32, 3>, 3> cand = {{{g[1], F.neg(g[0]), 0}, {g[2], 0, F.neg(g[0])}, {0, g[2], F.neg(g[1])}}};
  for (const auto& D : cand) {
    if (D == std::array<u32, 3>{0, 0, 0}) continue;
    bool parallel = F.mul(D[0], a[1]) == F.mul(D[1], a[0]) && F.mul(D[0], a[2]) == F.mul(D[2], a[0]) &&
                    F.mul(D[1], a[2]) == F.mul(D[2], a[1]);
    if (parallel) continue;
    // F(a + sD) = 3 s^2 <a,D^2> + s^3 F(D).
    u32 ad2 = dot(F, a, squares(F, D)), fd = cubic(F, D);
    if (fd == 0) return normalize(D);
    u32 s = F.neg(F.div(F.mul(3 % F.p(), ad2), fd));
    return normalize(combine(F, 1, a, s, D));
  }
  throw Error("no tangent direction at " + str(a));
}

HessePoint HesseCurve::add(const HessePoint& a, const HessePoint& b) const { return third(O_, third(a, b)); }

HessePoint HesseCurve::mul(long long n, const HessePoint& a) const {
  HessePoint base = n < 0 ? neg(a) : a, r = O_;
  unsigned long long e = n < 0 ? -static_cast<unsigned long long>(n) : n;
  while (e) {
    if (e & 1) r = add(r, base);
    e >>= 1;
    if (e) base = add(base, base);
  }
  return r;
}

HessePoint HesseCurve::alpha(const HessePoint& a, u32 eps) const { return normalize({a[0], F_->mul(eps, a[1]), a[2]}); }

HessePoint HesseCurve::beta(const HessePoint& a, u32 eps) const {
  return normalize({F_->mul(eps, a[0]), F_->mul(F_->mul(eps, eps), a[1]), a[2]});
}

std::vector<HessePoint> HesseCurve::points() const {
  const GF& F = *F_;
  std::vector<HessePoint> out;
  u32 n = F.size();
  for (u32 x = 0; x < n; ++x)
    for (u32 y = 0; y < n; ++y)
      if (cubic(F, {x, y, 1}) == 0) out.push_back({x, y, 1});
  for (u32 x = 0; x < n; ++x)
    if (cubic(F, {x, 1, 0}) == 0) out.push_back({x, 1, 0});
  return out;
}

std::string HesseCurve::str(const HessePoint& a) const {
  return "(" + F_->format(a[0]) + ":" + F_->format(a[1]) + ":" + F_->format(a[2]) + ")";
}

EllipticGroup::EllipticGroup(u32 q, u32 eps) : q_(q), eps_(eps), curve_(std::make_shared<GF>(q)) {
  if (!is_prime(q) || q % 3 != 1) throw Error("elliptic group: q must be a prime congruent to 1 mod 3");
  const GF& F = curve_.field();
  if (eps == 1 || F.pow(eps, 3) != 1) throw Error("elliptic group: eps must be a primitive cube root of unity");
  pts_ = curve_.points();
  for (int i = 0; i < size(); ++i) index_.emplace(pts_[i], i);
  origin_ = index(curve_.origin());
  std::size_t n = pts_.size();
  table_.assign(n * n, -1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      int c = index(curve_.add(pts_[a], pts_[b]));
      table_[a * n + b] = table_[b * n + a] = c;
    }
  neg_.resize(n);
  alpha_.resize(n);
  beta_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    neg_[a] = index(curve_.neg(pts_[a]));
    alpha_[a] = index(curve_.alpha(pts_[a], eps));
    beta_[a] = index(curve_.beta(pts_[a], eps));
  }
}

int EllipticGroup::index(const HessePoint& a) const {
  auto it = index_.find(a);
  if (it == index_.end()) throw Error("point " + curve_.str(a) + " is not on the curve over F_" + std::to_string(q_));
  return it->second;
}

int EllipticGroup::mul(long long n, int a) const {
  int base = n < 0 ? neg(a) : a, r = origin_;
  unsigned long long e = n < 0 ? -static_cast<unsigned long long>(n) : n;
  while (e) {
    if (e & 1) r = add(r, base);
    e >>= 1;
    if (e) base = add(base, base);
  }
  return r;
}

int EllipticGroup::order_of(int a) const {
  int n = 1;
  for (int x = a; x != origin_; x = add(x, a)) ++n;
  return n;
}

u32 default_eps(u32 q) { return GF(q).primitive_cube_root(); }

Sylow3 translation_sylow3(const EllipticGroup& E) {
  Sylow3 s;
  // n_i = #{P : 3^i P = O}; log_3 n_i - log_3 n_{i-1} is the number of cyclic factors of order >= 3^i.
  std::vector<int> counts{1};
  std::vector<int> cur(E.size());
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    for (int& x : cur) x = E.mul(3, x);
    int killed = static_cast<int>(std::count(cur.begin(), cur.end(), E.origin()));
    if (killed == counts.back()) break;
    counts.push_back(killed);
  }
  int a = 0, b = 0;
  for (std::size_t i = 1; i < counts.size(); ++i) {
    int step = counts[i] / counts[i - 1];
    if (step >= 3) ++a;
    if (step >= 9) ++b;
  }
  int pa = 1, pb = 1;
  for (int i = 0; i < a; ++i) pa *= 3;
  for (int i = 0; i < b; ++i) pb *= 3;
  s.invariants.push_back(pa);
  if (pb > 1) s.invariants.push_back(pb);
  if (a == 0) s.invariants = {1};
  s.h = a + b;
  for (int i = 0; i < E.size(); ++i)
    if (cur[i] == E.origin()) s.members.push_back(i);
  return s;
}

std::vector<int> lambda_kernel(const EllipticGroup& E, int j) {
  std::vector<int> out;
  for (int i = 0; i < E.size(); ++i) {
    int x = i;
    for (int k = 0; k < j; ++k) x = E.lambda(x);
    if (x == E.origin()) out.push_back(i);
  }
  return out;
}

namespace {

std::vector<int> span(const EllipticGroup& E, const std::vector<int>& gens) {
  std::set<int> seen{E.origin()};
  std::vector<int> queue{E.origin()};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (int g : gens) {
      int y = E.add(queue[i], g);
      if (seen.insert(y).second) queue.push_back(y);
    }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<u32> translation_perm(const EllipticGroup& E, int t) {
  std::vector<u32> p(E.size());
  for (int i = 0; i < E.size(); ++i) p[i] = static_cast<u32>(E.add(i, t));
  return p;
}

int find_element(const FiniteGroup& G, const std::vector<u32>& perm) {
  const PermutationAction& A = G.action();
  if (A.degree != perm.size()) return -1;
  for (int e = 0; e < G.order(); ++e) {
    bool same = true;
    for (u32 x = 0; x < A.degree && same; ++x) same = G.act(e, x) == perm[x];
    if (same) return e;
  }
  return -1;
}

GBar build_gbar(const EllipticGroup& E, int h) {
  if (h < 1) throw Error("h must be at least 1");
  GBar g;
  g.h = h;
  g.H = lambda_kernel(E, h);
  int target = 1;
  for (int i = 0; i < h; ++i) target *= 3;
  if (static_cast<int>(g.H.size()) != target)
    throw Error("no alpha-invariant subgroup of order 3^" + std::to_string(h) + " over F_" + std::to_string(E.q()) +
                " (kernel has " + std::to_string(g.H.size()) + " points)");
  // Element of maximal order first, then the point that completes the span with the fewest extra points.
  int best = g.H.front();
  for (int x : g.H)
    if (E.order_of(x) > E.order_of(best)) best = x;
  g.H_gens = {best};
  if (static_cast<int>(span(E, g.H_gens).size()) != target) {
    for (int x : g.H) {
      if (static_cast<int>(span(E, {best, x}).size()) == target) {
        g.H_gens.push_back(x);
        break;
      }
    }
  }
  std::vector<std::vector<u32>> perms;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < g.H_gens.size(); ++i) {
    perms.push_back(translation_perm(E, g.H_gens[i]));
    names.push_back("t" + std::to_string(i + 1));
  }
  std::vector<u32> a(E.size());
  for (int i = 0; i < E.size(); ++i) a[i] = static_cast<u32>(E.alpha(i));
  perms.push_back(a);
  names.push_back("alpha");
  g.group = group_from_permutations(perms, names);
  if (g.group.order() != 3 * target) throw Error("translation and alpha generate the wrong order");
  g.alpha = g.group.generators().back();
  return g;
}

Thetas theta_orbits(const EllipticGroup& E, const GBar& G) {
  Subgroup phi = frattini(G.group);
  Thetas t;
  std::set<int> Hs(G.H.begin(), G.H.end());
  for (int e : phi.members()) {
    int img = static_cast<int>(G.group.act(e, static_cast<u32>(E.origin())));
    t.frattini_points.push_back(img);
    if (!Hs.count(img)) throw Error("Frattini subgroup contains a non-translation");
  }
  std::sort(t.frattini_points.begin(), t.frattini_points.end());
  std::vector<std::vector<int>> orbits;
  std::set<int> seen;
  for (int x : G.H) {
    if (seen.count(x)) continue;
    std::set<int> orb;
    for (int e : phi.members()) orb.insert(static_cast<int>(G.group.act(e, static_cast<u32>(x))));
    seen.insert(orb.begin(), orb.end());
    orbits.emplace_back(orb.begin(), orb.end());
  }
  int want = static_cast<int>(G.H.size()) / 3;
  if (orbits.size() != 3) throw Error("Frattini subgroup has " + std::to_string(orbits.size()) + " orbits on H");
  for (const auto& o : orbits)
    if (static_cast<int>(o.size()) != want) throw Error("Frattini orbit of unexpected size");
  auto key = [&](int i) {
    const HessePoint& p = E.point(i);
    return std::array<u32, 3>{p[2], p[1], p[0]};
  };
  auto least = [&](const std::vector<int>& o) {
    return *std::min_element(o.begin(), o.end(), [&](int a, int b) { return key(a) < key(b); });
  };
  int first = -1;
  for (int i = 0; i < 3; ++i)
    if (std::find(orbits[i].begin(), orbits[i].end(), E.origin()) != orbits[i].end()) first = i;
  t.theta[0] = orbits[first];
  std::vector<std::vector<int>> rest;
  for (int i = 0; i < 3; ++i)
    if (i != first) rest.push_back(orbits[i]);
  if (key(least(rest[1])) < key(least(rest[0]))) std::swap(rest[0], rest[1]);
  t.theta[1] = rest[0];
  t.theta[2] = rest[1];
  return t;
}

}  // namespace zomo
