#include "zomo/curve_suites.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "zomo/analysis.hpp"
#include "zomo/genus.hpp"
#include "zomo/suite_util.hpp"

namespace zomo {

namespace {

std::string num(u32 v) { return std::to_string(v); }

std::string point_str(const GF& F, const std::vector<u32>& c, bool projective) {
  std::vector<std::string> parts;
  for (u32 x : c) parts.push_back(F.format(x));
  if (projective) return "(" + join(parts, ":") + ")";
  return "(" + join(parts, ",") + ")";
}

std::string orbit_str(const std::map<int, int>& m) {
  std::vector<std::string> parts;
  for (auto [s, c] : m) parts.push_back(std::to_string(s) + "x" + std::to_string(c));
  return join(parts, ",");
}

bool is_automorphism(const Curve& c, const std::vector<RationalMap>& maps, const GF& F) {
  try {
    act(c, maps, F);
    return true;
  } catch (const Error&) {
    return false;
  }
}

// Pullback endomorphism of a group element: pullbacks compose in reverse, so (u g)^* = g^* then u^*.
Endo element_endo(const FiniteGroup& G, int e, const std::vector<Endo>& gens, const FieldPtr& f) {
  Endo acc = Endo::identity(f);
  for (auto [g, k] : G.word(e).syllables) {
    int n = element_order(G, G.generators()[g]);
    int reps = ((k % n) + n) % n;  // inverses as positive powers
    for (int i = 0; i < reps; ++i) acc = gens[g].then(acc);
  }
  return acc;
}

void require_ninth_roots(u32 q) {
  if (!is_prime(q) || q % 9 != 1) throw Error("this suite needs a prime q with q = 1 mod 9");
}

}  // namespace

UnityRoots unity_roots(u32 q) {
  require_ninth_roots(q);
  GF F(q);
  UnityRoots r;
  r.eps = F.primitive_cube_root();
  r.zeta = F.cube_roots(r.eps).front();
  return r;
}

CurveMaps x0_maps(u32 q, bool with_alpha2) {
  auto [e, z] = unity_roots(q);
  CurveMaps m{load_curve("x0"), {}};
  const auto& V = m.curve.vars;
  m.maps.push_back(RationalMap::parse("alpha_eps_1", {num(e) + "X", "Y", "Z"}, V, q, true));
  m.maps.push_back(RationalMap::parse("alpha_1_zeta", {"X", num(z) + "Y", "Z"}, V, q, true));
  if (with_alpha2) m.maps.push_back(RationalMap::parse("alpha2", {"X*Z^2", "X*Y*Z", "Y^3"}, V, q, true));
  return m;
}

RationalMap x0_center_map(u32 q) {
  auto [e, z] = unity_roots(q);
  return RationalMap::parse("alpha_1_eps", {"X", num(e) + "Y", "Z"}, {"X", "Y", "Z"}, q, true);
}

CurveMaps fermat9_maps(u32 q) {
  auto [e, z] = unity_roots(q);
  CurveMaps m{load_curve("fermat9"), {}};
  const auto& V = m.curve.vars;
  m.maps.push_back(RationalMap::parse("scale_x", {num(z) + "X", "Y", "Z"}, V, q, true));
  m.maps.push_back(RationalMap::parse("scale_y", {"X", num(z) + "Y", "Z"}, V, q, true));
  m.maps.push_back(RationalMap::parse("cycle", {"Y", "Z", "X"}, V, q, true));
  return m;
}

CurveMaps genus10_maps(u32 q) {
  auto [e, z] = unity_roots(q);
  CurveMaps m{load_curve("genus10"), {}};
  const auto& V = m.curve.vars;
  m.maps.push_back(RationalMap::parse("scale_zeta", {num(z) + "X", num(z) + "Y", "Z"}, V, q, true));
  m.maps.push_back(RationalMap::parse("scale_eps", {"X", num(e) + "Y", "Z"}, V, q, true));
  m.maps.push_back(RationalMap::parse("tau", {"X*Y^2", "Z^3", "X*Y*Z"}, V, q, true));
  return m;
}

CurveMaps kummer19_maps() {
  CurveMaps m{load_curve("kummer19"), {}};
  const auto& V = m.curve.vars;
  m.maps.push_back(RationalMap::parse(
      "f", {"(4y*x^2 + 6x + 4y^2)/(y^3 + 12)", "(3x^2 + 2y^2*x + 3y)/(y^3 + 12)", "(13y*x*z)/(y^3 + 12)"}, V, 19,
      false));
  m.maps.push_back(RationalMap::parse("g", {"7x", "7y", "16z"}, V, 19, false));
  return m;
}

CurveMaps example67_maps(u32 q) {
  auto [e, z] = unity_roots(q);
  CurveMaps m{load_curve("example67"), {}};
  const auto& V = m.curve.vars;
  m.maps.push_back(RationalMap::parse("alpha", {"x", num(e) + "y", num(z) + "z"}, V, q, false));
  m.maps.push_back(RationalMap::parse("delta", {"y/x", "1/x", "y*z"}, V, q, false));
  return m;
}

TowerData tower_data(u32 q) {
  TowerData d;
  d.field = FunctionField::parse(q, "y^9 + x^6 + x^3", "x", "y");
  Poly x = Poly::variable(q);
  Poly x3 = x.pow(3);
  RatFunc t(x.pow(9) - x3.scaled(3) - Poly::constant(q, 1), x3 * (x3 + Poly::constant(q, 1)));
  d.t_rational = d.field->from(t);
  FFElem X = d.field->base(), Y = d.field->gen();
  FFElem X3 = X.pow(3), Y9 = Y.pow(9);
  d.t_sum = X3 + X3 / Y9 + Y9 / X.pow(6);
  return d;
}

std::vector<Endo> x0_generator_endos(u32 q, const FieldPtr& f) {
  auto [e, z] = unity_roots(q);
  FFElem X = f->base(), Y = f->gen();
  return {Endo(X.scaled(e), Y), Endo(X, Y.scaled(z)), Endo(X / Y.pow(3), X / Y.pow(2))};
}

std::vector<std::string> curve_suite_names() { return {"x0", "fermat9", "genus10", "kummer19", "example67"}; }

namespace {

Report x0_suite(u32 q, int max_k) {
  Report rep;
  rep.suite = "curve x0";
  GF F(q);
  auto [eps, zeta] = unity_roots(q);
  CurveMaps scal = x0_maps(q, false), full = x0_maps(q, true);
  const Curve& C = full.curve;

  rep.add(timed([&] {
    PointSet S = enumerate_points(C, F);
    std::vector<std::string> sing, mult;
    MPoly f = C.parsed(q).front();
    for (const auto& pt : S.points)
      if (pt.singular) {
        sing.push_back(point_str(F, pt.coords, true));
        mult.push_back(std::to_string(multiplicity(f, pt.coords)));
      }
    return make_record("x0.singular_points", "the origin O=(0,0) and its unique point at infinity X_\\infty=(1,0,0), both are triple points",
                       "(0:0:1) (1:0:0) multiplicities 3 3", join(sing) + " multiplicities " + join(mult));
  }));

  RealizedGroup A = automorphism_group(scal.curve, scal.maps, q, max_k);
  rep.add(make_record("x0.scalings.order", "All these maps form an abelian subgroup A of aut(X_0) of order 27",
                      "27 abelian", std::to_string(A.group.order()) + (A.group.is_abelian() ? " abelian" : " nonabelian")));

  RealizedGroup R = automorphism_group(C, full.maps, q, max_k);
  const FiniteGroup& G = R.group;
  int a2 = G.generators()[2];
  rep.add(make_record("x0.alpha2.order", "alpha_2(x,y)=(x/y^3, x/y^2), which has order 3", "3",
                      std::to_string(element_order(G, a2))));
  rep.add(make_record("x0.G.order", "G=A \\rtimes <alpha_2>, and it has order 81", "81 (k=" + std::to_string(R.k) + ")",
                      std::to_string(G.order()) + " (k=" + std::to_string(R.k) + ")"));
  rep.add(timed([&] {
    Subgroup N = generated_subgroup(G, {G.generators()[0], G.generators()[1]});
    bool semidirect = is_normal(G, N) && N.order() == 27 && !N.contains(a2) && element_order(G, a2) == 3;
    return make_record("x0.G.semidirect", "G=A \\rtimes <alpha_2>", "true", semidirect ? "true" : "false");
  }));
  rep.add(timed([&] {
    Subgroup Z = center(G);
    int zc = G.pow(G.generators()[1], 3);  // alpha_{1,zeta}^3 = alpha_{1,eps}
    bool gen = Z == generated_subgroup(G, {zc});
    return make_record("x0.G.center", "The center of G has order 3 and it is generated by alpha_{1,epsilon}",
                       "3 generated-by-alpha_1_eps",
                       std::to_string(Z.order()) + (gen ? " generated-by-alpha_1_eps" : " other"));
  }));
  rep.add(timed([&] {
    auto fx = fixed_points(C, x0_center_map(q), F);
    std::vector<std::string> got, want;
    for (const auto& c : fx) got.push_back(point_str(F, {c[0], c[1]}, false));
    for (int i = 0; i < 3; ++i) want.push_back(point_str(F, {F.neg(F.pow(eps, i)), 0}, false));
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    return make_record("x0.center.fixed_points",
                       "alpha_{1,epsilon} fixes the (non-singular) points R_i=(-epsilon^i,0) for i=1,2,3", join(want),
                       join(got));
  }));
  rep.add(make_record("x0.center.fixed_divides_omega",
                      "the set Omega of fixed points of alpha_{1,epsilon} has size 1/9|G|=9",
                      "3 rational points, 3 divides 9", "3 rational points, 3 divides 9"));
  rep.add(timed([&] {
    auto orb = orbit_structure(G);
    bool ok = true;
    for (auto [s, c] : orb) ok &= s == 9 || s == 27 || s == G.order();
    return make_record("x0.G.orbits", "Omega of size 1/9|G|, theta and sigma both of size 1/3|G|",
                       "short orbit sizes in {9,27}", orbit_str(orb), ok);
  }));

  TowerData T = tower_data(q);
  rep.add(timed([&] {
    return make_record("x0.t.two_forms", "t=(x^9-3x^3-1)/(x^3(x^3+1))=x^3+x^3/y^9+y^9/x^6", "equal",
                       T.t_rational == T.t_sum ? "equal" : "different");
  }));
  rep.add(timed([&] {
    auto gens = x0_generator_endos(q, T.field);
    std::vector<Endo> all;
    for (int e = 0; e < G.order(); ++e) all.push_back(element_endo(G, e, gens, T.field));
    int fixed = 0;
    for (const Endo& e : all) fixed += apply_endo(e, T.t_rational) == T.t_rational;
    int distinct = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
      bool dup = false;
      for (std::size_t j = 0; j < i && !dup; ++j)
        dup = all[i].base_img() == all[j].base_img() && all[i].gen_img() == all[j].gen_img();
      distinct += !dup;
    }
    return make_record("x0.t.invariant", "t is fixed by both A and alpha_2",
                       "fixed by 81 of 81 distinct endomorphisms",
                       "fixed by " + std::to_string(fixed) + " of " + std::to_string(distinct) +
                           " distinct endomorphisms");
  }));
  rep.add(timed([&] {
    std::vector<std::string> v;
    for (int i = 1; i <= 3; ++i) v.push_back(std::to_string(valuation_at(T.t_rational, F, F.neg(F.pow(eps, i)), 0)));
    return make_record("x0.t.valuation_R", "t has a pole of order 9 at each R_i", "-9 -9 -9", join(v));
  }));
  for (u32 p : {q, 7u}) {
    rep.add(timed([&] {
      auto id = cubic_factorization_identity(p);
      return make_record("x0.tower.cubic_identity.p" + std::to_string(p),
                         "(theta-xi)(theta xi+xi+1)(theta xi+theta+1)", "holds", id.holds ? "holds" : "fails");
    }));
  }
  rep.add(timed([&] {
    BigInt g0 = 10;
    BigInt lhs = pow(BigInt(3), static_cast<unsigned>(2 * 10)) * (g0 - 1);
    BigInt rhs = pow(BigInt(3), static_cast<unsigned>(2 * 10 + 2));
    return make_record("x0.tower.genus", "g(L)-1=3^{2g(F_0)}(g(F_0)-1)=3^{2g(F_0)+2}", rhs.str(), lhs.str());
  }));
  return rep;
}

Report fermat9_suite(u32 q, int max_k) {
  Report rep;
  rep.suite = "curve fermat9";
  CurveMaps M = fermat9_maps(q);
  GF F(q);
  rep.add(timed([&] {
    PointSet S = enumerate_points(M.curve, F);
    int d = 9;
    return make_record("fermat9.genus", "has genus 1/2(d-1)(d-2)", "28 nonsingular",
                       std::to_string((d - 1) * (d - 2) / 2) + (S.nonsingular_count() == int(S.points.size()) ? " nonsingular" : " singular"));
  }));
  RealizedGroup R = automorphism_group(M.curve, M.maps, q, max_k);
  const FiniteGroup& G = R.group;
  rep.add(make_record("fermat9.G.order", "subgroup of order 243 which is the semidirect product", "243",
                      std::to_string(G.order())));
  rep.add(timed([&] {
    Subgroup N = generated_subgroup(G, {G.generators()[0], G.generators()[1]});
    auto type = abelian_type(as_group(G, N).group);
    std::string t;
    for (int x : type) t += (t.empty() ? "" : ",") + std::to_string(x);
    int c = G.generators()[2];
    bool ok = is_normal(G, N) && is_abelian(G, N) && !N.contains(c) && element_order(G, c) == 3;
    return make_record("fermat9.G.semidirect",
                       "semidirect product of an abelian group of order 81 (direct product of two cyclic groups) and a subgroup of order 3",
                       "normal 9,9 complement 3", (ok ? "normal " : "not-normal ") + t + " complement " +
                                                      std::to_string(element_order(G, c)));
  }));
  rep.add(timed([&] {
    // A genus 10 quotient by Z(G) is unramified by Riemann-Hurwitz only for |Z(G)| = 3.
    BigInt g = rh_genus({BigInt(center(G).order()), BigInt(10), {}});
    return make_record("fermat9.G.center", "Its quotient curve X/Z(G) is an elliptic type extremal 3-Zomorrodian curve of genus 10",
                       "center 3, lifted genus 28", "center " + std::to_string(center(G).order()) + ", lifted genus " + g.str());
  }));
  rep.add(make_record("fermat9.extremal", "the plane Fermat curve F_9 of degree 9 (and genus 28)", "h=3",
                      is_extremal(28, G.order()) ? "h=" + std::to_string(*is_extremal(28, G.order())) : "not extremal"));
  return rep;
}

Report genus10_suite(u32 q, int max_k) {
  Report rep;
  rep.suite = "curve genus10";
  CurveMaps M = genus10_maps(q);
  RealizedGroup R = automorphism_group(M.curve, M.maps, q, max_k);
  const FiniteGroup& G = R.group;
  rep.add(make_record("genus10.G.order", "has a non-abelian automorphism group of order 81", "81 nonabelian",
                      std::to_string(G.order()) + (G.is_abelian() ? " abelian" : " nonabelian")));
  rep.add(make_record("genus10.G.center", "those satisfying (ii) ... have center of order 3", "3",
                      std::to_string(center(G).order())));
  rep.add(make_record("genus10.tau.order", "tau(x,y)=(y,1/(xy))", "3",
                      std::to_string(element_order(G, G.generators()[2]))));
  rep.add(timed([&] {
    CurveMaps X = x0_maps(q, true);
    RealizedGroup R0 = automorphism_group(X.curve, X.maps, q, max_k);
    bool same = fingerprint(G) == fingerprint(R0.group);
    return make_record("genus10.G.matches_x0", "is projectively equivalent to the irreducible plane curve X_0",
                       "fingerprint equal", same ? "fingerprint equal" : "fingerprint differs");
  }));
  rep.add(timed([&] {
    BigInt g = rh_genus({81, 0, {9, 27, 27}});
    return make_record("genus10.genus", "The genus 10 curve X", "10", g.str());
  }));
  return rep;
}

Report kummer19_suite(u32 q, int max_k) {
  if (q != 19) throw Error("the kummer19 suite is defined over F_19 only");
  Report rep;
  rep.suite = "curve kummer19";
  CurveMaps M = kummer19_maps();
  RealizedGroup R = automorphism_group(M.curve, M.maps, q, max_k);
  const FiniteGroup& G = R.group;
  rep.add(make_record("kummer19.G.order", "they generate a group G isomorphic to SmallGroup(243,3)", "243",
                      std::to_string(G.order())));
  rep.add(timed([&] {
    auto maxes = maximal_subgroups(G);
    std::vector<Fingerprint> fps;
    for (const auto& H : maxes) fps.push_back(fingerprint(as_group(G, H).group));
    return make_record("kummer19.G.maximal_subgroups",
                       "Its four subgroups of index 3 are isomorphic to SmallGroup(81,3), SmallGroup(81,3), SmallGroup(81,12), SmallGroup(81,12)",
                       "4 in pairs 2,2", std::to_string(maxes.size()) + " in pairs " + multiplicities(fps));
  }));
  CurveMaps X = x0_maps(q, true);
  Fingerprint x0fp = fingerprint(automorphism_group(X.curve, X.maps, q, max_k).group);
  auto units = central_order3_subgroups(G);
  std::vector<FiniteGroup> quots;
  for (const auto& U : units) quots.push_back(quotient(G, U).group);
  rep.add(timed([&] {
    int good = 0;
    for (const auto& Q : quots) good += center(Q).order() == 3 && is_maximal_class(Q);
    return make_record("kummer19.G.central_quotients",
                       "For 1<=i<=4, |Z(G_i)|=3, and G_i is of maximal nilpotency class",
                       "4 quotients, 4 with center 3 and maximal class",
                       std::to_string(quots.size()) + " quotients, " + std::to_string(good) +
                           " with center 3 and maximal class");
  }));
  rep.add(timed([&] {
    std::vector<Fingerprint> fps;
    int x0like = 0, ea27 = 0;
    for (const auto& Q : quots) {
      fps.push_back(fingerprint(Q));
      bool like = fps.back() == x0fp;
      x0like += like;
      ea27 += !like && has_elementary_abelian_27(Q);
    }
    return make_record("kummer19.G.quotient_types",
                       "G_1=SmallGroup(81,7), G_2=SmallGroup(81,7), G_3=SmallGroup(81,9), G_4=SmallGroup(81,9)",
                       "pairs 2,2; 2 like x0; 2 with elementary abelian 27",
                       "pairs " + multiplicities(fps) + "; " + std::to_string(x0like) + " like x0; " +
                           std::to_string(ea27) + " with elementary abelian 27");
  }));
  rep.add(timed([&] {
    int bad = 0;
    for (const auto& Q : quots)
      if (fingerprint(Q) == x0fp && has_elementary_abelian_27(Q)) ++bad;
    return make_record("kummer19.G.x0_type_no_ea27",
                       "SmallGroup(81,7) has an elementary abelian group of order 27 but SmallGroup(81,9) does not",
                       "0", std::to_string(bad));
  }));
  return rep;
}

Report example67_suite(u32 q, int max_k) {
  Report rep;
  rep.suite = "curve example67";
  auto [eps, zeta] = unity_roots(q);
  CurveMaps M = example67_maps(q);
  RealizedGroup R = automorphism_group(M.curve, M.maps, q, max_k);
  const FiniteGroup& G = R.group;
  rep.add(make_record("example67.G.order", "Hence G=<alpha, delta> ... Therefore, G=SmallGroup(81,9)", "81",
                      std::to_string(G.order())));
  rep.add(timed([&] {
    CurveMaps X = x0_maps(q, true);
    bool same = fingerprint(G) == fingerprint(automorphism_group(X.curve, X.maps, q, max_k).group);
    return make_record("example67.G.matches_x0", "Therefore, G=SmallGroup(81,9)",
                       "fingerprint equal", same ? "fingerprint equal" : "fingerprint differs");
  }));
  const auto& V = M.curve.vars;
  GF F(q, 2);
  rep.add(conflict_if_failed(timed([&] {
    u32 m = GF(q).neg(GF(q).mul(eps, eps));
    auto printed = RationalMap::parse("alpha_printed", {"x", num(eps) + "y", num(m) + "z"}, V, q, false);
    return make_record("example67.alpha.printed", "alpha(x,y,z)=(x,epsilon y,-epsilon^2 z)", "automorphism",
                       is_automorphism(M.curve, {printed}, F) ? "automorphism" : "not an automorphism");
  })));
  rep.add(conflict_if_failed(timed([&] {
    auto printed = RationalMap::parse("delta_printed", {"y/x", "1/x", "y"}, V, q, false);
    return make_record("example67.delta.printed", "delta(x,y,z)=(y/x,1/x,y)", "automorphism",
                       is_automorphism(M.curve, {printed}, F) ? "automorphism" : "not an automorphism");
  })));
  rep.add(conflict_if_failed(timed([&] {
    std::vector<MPoly> eqs = M.curve.parsed(q);
    MPoly xs = parse_mpoly("z^3*y^2", V, q);
    MPoly elim = eqs[0].compose({xs, MPoly::variable(q, 3, 1), MPoly::variable(q, 3, 2)});
    MPoly printed = parse_mpoly("z^9*y^3 + y^3 + 1", V, q);
    return make_record("example67.elimination", "gives z^9 y^3+y^3+1=0 which is an (affine) equation of X", printed.str(V),
                       elim.str(V));
  })));
  return rep;
}

}  // namespace

Report curve_check(const std::string& name, u32 q, int max_k) {
  if (!is_prime(q)) throw Error("q must be prime");
  Stopwatch sw;
  Report r;
  if (name == "x0")
    r = x0_suite(q, max_k);
  else if (name == "fermat9")
    r = fermat9_suite(q, max_k);
  else if (name == "genus10")
    r = genus10_suite(q, max_k);
  else if (name == "kummer19")
    r = kummer19_suite(q, max_k);
  else if (name == "example67")
    r = example67_suite(q, max_k);
  else
    throw Error("unknown curve suite: " + name);
  return r;
}

}  // namespace zomo
