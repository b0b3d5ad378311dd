#include <doctest.h>

#include "zomo/curve.hpp"
#include "zomo/curve_suites.hpp"

using namespace zomo;

namespace {

// Projective points of X^3 + Y^3 + Z^3 over F by scanning normalized triples.
int brute_hesse_count(const GF& F) {
  int n = 0;
  auto on = [&](u32 x, u32 y, u32 z) {
    return F.add(F.add(F.pow(x, 3), F.pow(y, 3)), F.pow(z, 3)) == 0;
  };
  for (u32 x = 0; x < F.size(); ++x)
    for (u32 y = 0; y < F.size(); ++y) n += on(x, y, 1);
  for (u32 x = 0; x < F.size(); ++x) n += on(x, 1, 0);
  n += on(1, 0, 0);
  return n;
}

}  // namespace

TEST_CASE("curve files parse") {
  Curve c = parse_curve("name: t\nspace: affine\nvars: x y\nequation: y^2 - x^3 - 1\nexclude: x\n");
  CHECK_FALSE(c.projective);
  CHECK(c.vars == std::vector<std::string>{"x", "y"});
  CHECK(c.exclude.size() == 1);
  CHECK_THROWS_AS(parse_curve("name: t\nspace: weird\nvars: x\nequation: x\n"), Error);
  for (const auto& n : {"x0", "fermat9", "genus10", "kummer19", "example67", "hesse"}) CHECK(load_curve(n).name == n);
  CHECK_THROWS_AS(load_curve("nosuch"), Error);
}

TEST_CASE("point enumeration agrees with brute force") {
  Curve h = load_curve("hesse");
  for (auto [p, k] : {std::pair<u32, int>{7, 1}, {19, 1}, {19, 2}, {5, 2}}) {
    GF F(p, k);
    PointSet s = enumerate_points(h, F);
    CHECK(static_cast<int>(s.points.size()) == brute_hesse_count(F));
    CHECK(s.nonsingular_count() == static_cast<int>(s.points.size()));
  }
  CHECK(enumerate_points(h, GF(19)).points.size() == 27);
}

TEST_CASE("singularities of the genus 10 model") {
  Curve c = load_curve("x0");
  GF F(19);
  PointSet s = enumerate_points(c, F);
  int singular = 0;
  for (const auto& pt : s.points) singular += pt.singular;
  // (0:0:1) and (1:0:0) are the only singular points of Y^9 + X^6 Z^3 + X^3 Z^6.
  CHECK(singular == 2);
  CHECK(multiplicity(c.parsed(19)[0], {0, 0, 1}) == 3);
}

TEST_CASE("actions are functorial under composition") {
  u32 q = 19;
  CurveMaps m = fermat9_maps(q);
  GF F(q, 2);
  std::vector<RationalMap> maps = m.maps;
  maps.push_back(compose_maps(m.maps[0], m.maps[2]));
  maps.push_back(compose_maps(m.maps[2], m.maps[1]));
  CurveAction a = act(m.curve, maps, F);
  REQUIRE(a.perms.size() == 5);
  for (size_t i = 0; i < a.domain.size(); ++i) {
    CHECK(a.perms[3][i] == a.perms[2][a.perms[0][i]]);
    CHECK(a.perms[4][i] == a.perms[1][a.perms[2][i]]);
  }
}

TEST_CASE("maps are checked against the curve") {
  GF F(19);
  Curve h = load_curve("hesse");
  auto bad = RationalMap::parse("bad", {"X + Y", "Y", "Z"}, {"X", "Y", "Z"}, 19, true);
  CHECK_THROWS_AS(act(h, {bad}, F), Error);
  auto zero = RationalMap::parse("zero", {"X*Y", "X*Z", "X*X"}, {"X", "Y", "Z"}, 19, true);
  CHECK_THROWS_AS(apply_map(zero, F, {0, 1, 1}), Error);
  auto swap = RationalMap::parse("swap", {"Y", "X", "Z"}, {"X", "Y", "Z"}, 19, true);
  CHECK(apply_map(swap, F, {1, 2, 1}) == std::vector<u32>{2, 1, 1});
}

TEST_CASE("scaling automorphisms of the genus 10 curve") {
  CurveMaps m = x0_maps(19, false);
  RealizedGroup r = automorphism_group(m.curve, m.maps, 19);
  CHECK(r.group.order() == 27);
  CHECK(r.group.is_abelian());
  CHECK(fixed_points(m.curve, x0_center_map(19), GF(19)).size() == 3);
}

TEST_CASE("unity roots") {
  UnityRoots r = unity_roots(19);
  GF F(19);
  CHECK(F.pow(r.zeta, 3) == r.eps);
  CHECK(F.pow(r.eps, 3) == 1);
  CHECK(r.eps != 1);
  CHECK_THROWS_AS(unity_roots(13), Error);
}
