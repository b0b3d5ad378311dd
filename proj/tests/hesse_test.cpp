#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "zomo/analysis.hpp"
#include "zomo/hesse.hpp"
#include "zomo/kummer.hpp"

using namespace zomo;

TEST_CASE("group law axioms hold exhaustively") {
  for (u32 q : {7u, 13u, 19u, 73u}) {
    EllipticGroup E(q, default_eps(q));
    int n = E.size();
    int O = E.origin();
    CHECK(E.point(O) == HessePoint{q - 1, 0, 1});
    for (int a = 0; a < n; ++a) {
      REQUIRE(E.add(a, O) == a);
      REQUIRE(E.add(a, E.neg(a)) == O);
      for (int b = 0; b < n; ++b) {
        REQUIRE(E.add(a, b) == E.add(b, a));
        if (q < 73 || b % 7 == 0)
          for (int c = 0; c < n; c += (q < 73 ? 1 : 11)) REQUIRE(E.add(E.add(a, b), c) == E.add(a, E.add(b, c)));
      }
    }
  }
}

TEST_CASE("point counts and Sylow 3-subgroups") {
  EllipticGroup E19(19, default_eps(19)), E73(73, default_eps(73)), E271(271, default_eps(271));
  CHECK(E19.size() == 27);
  CHECK(translation_sylow3(E19).invariants == std::vector<int>{9, 3});
  CHECK(translation_sylow3(E73).h == 4);
  CHECK(translation_sylow3(E271).h == 5);
  CHECK_THROWS_AS(EllipticGroup(17, 1), Error);
}

TEST_CASE("inflection points are the 3-torsion and alpha fixes three of them") {
  EllipticGroup E(19, default_eps(19));
  const GF& F = E.curve().field();
  std::set<int> torsion, fixed;
  for (int a = 0; a < E.size(); ++a) {
    if (E.mul(3, a) == E.origin()) torsion.insert(a);
    if (E.alpha(a) == a) fixed.insert(a);
    // a point is a flex iff its tangent meets it three times
    const HessePoint& P = E.point(a);
    bool flex = E.curve().third(P, P) == P;
    CHECK(flex == (E.mul(3, a) == E.origin()));
  }
  CHECK(torsion.size() == 9);
  CHECK(fixed.size() == 3);
  for (int a : fixed) CHECK(E.point(a)[1] == 0);
  u32 eps = E.eps();
  CHECK(fixed.count(E.index({F.neg(eps), 0, 1})));
}

TEST_CASE("beta is a translation and alpha is an automorphism") {
  for (u32 q : {19u, 73u}) {
    EllipticGroup E(q, default_eps(q));
    int Tb = E.beta(E.origin());
    for (int a = 0; a < E.size(); ++a) {
      CHECK(E.beta(a) == E.add(a, Tb));
      for (int b = 0; b < E.size(); b += 3) CHECK(E.alpha(E.add(a, b)) == E.add(E.alpha(a), E.alpha(b)));
    }
  }
}

TEST_CASE("the lifted base group has the expected structure") {
  for (auto [q, h] : {std::pair<u32, int>{19, 3}, {73, 4}, {271, 5}}) {
    EllipticGroup E(q, default_eps(q));
    GBar G = build_gbar(E, h);
    CHECK(G.group.order() == static_cast<int>(std::pow(3, h + 1)));
    CHECK(center(G.group).order() == 3);
    CHECK(is_maximal_class(G.group));
    Thetas th = theta_orbits(E, G);
    for (const auto& t : th.theta) CHECK(t.size() == static_cast<size_t>(std::pow(3, h - 1)));
    CHECK(std::count(th.theta[0].begin(), th.theta[0].end(), E.origin()) == 1);
  }
}

TEST_CASE("principal divisors of lines have degree zero") {
  EllipticGroup E(19, default_eps(19));
  HesseFunctions fun(E);
  const auto& pts = E.points();
  for (int a = 0; a < E.size(); a += 4) {
    for (int b = 1; b < E.size(); b += 5) {
      FFElem f = fun.line(pts[a], pts[b]) / fun.line(pts[E.origin()], pts[E.origin()]);
      // div f = a + b + c - 3 O with c the third intersection.
      int c = E.index(E.curve().third(pts[a], pts[b]));
      int total = 0;
      for (int P = 0; P < E.size(); ++P) {
        int v = fun.valuation(f, pts[P]);
        total += v;
        CHECK(v == (P == a) + (P == b) + (P == c) - 3 * (P == E.origin()));
      }
      CHECK(total == 0);
    }
  }
}

TEST_CASE("functions with a prescribed divisor") {
  EllipticGroup E(19, default_eps(19));
  HesseFunctions fun(E);
  std::vector<int> plus{1, 2, 3}, minus{E.origin(), E.origin(), E.add(E.add(1, 2), 3)};
  FFElem f = fun.with_divisor(plus, minus);
  for (int P = 0; P < E.size(); ++P) {
    int expect = 0;
    for (int x : plus) expect += x == P;
    for (int x : minus) expect -= x == P;
    CHECK(fun.valuation(f, E.point(P)) == expect);
  }
  CHECK_THROWS_AS(fun.with_divisor({1}, {2}), Error);
}
