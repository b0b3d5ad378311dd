#include <doctest.h>

#include "zomo/field.hpp"
#include "zomo/genus.hpp"

using namespace zomo;

namespace {
BigInt pow3(int k) {
  BigInt r = 1;
  for (int i = 0; i < k; ++i) r *= 3;
  return r;
}
}  // namespace

TEST_CASE("Riemann-Hurwitz genus") {
  CHECK(rh_genus({81, 0, {9, 27, 27}}) == 10);
  CHECK(rh_genus({27, 0, {9, 9, 9}}) == 1);
  CHECK(rh_genus_exact({9, 0, {3}}) == -5);
  CHECK(rh_genus_exact({2, 0, {1}}) == BigRational(-1, 2));
  CHECK_THROWS_AS(rh_genus({9, 0, {3}}), Error);
  CHECK_THROWS_AS(rh_genus({2, 0, {1}}), Error);
  CHECK_THROWS_AS(rh_genus({9, 0, {2}}), Error);
  CHECK_THROWS_AS(rh_genus({9, -1, {}}), Error);
}

TEST_CASE("bound values") {
  CHECK(zomorrodian_bound({3, 0, 10, false}).bound == 81);
  CHECK(zomorrodian_bound({3, 0, 10, false}).attainable);
  CHECK(zomorrodian_bound({5, 0, 11, false}).bound == 50);
  CHECK(zomorrodian_bound({5, 0, 11, false}).largest_power == 25);
  CHECK_FALSE(zomorrodian_bound({3, 0, 2, false}).attainable);
  CHECK(zomorrodian_bound({3, 0, 10, true}).bound == 27);
  CHECK_THROWS_AS(zomorrodian_bound({4, 0, 10, false}), Error);
  CHECK_THROWS_AS(zomorrodian_bound({3, 3, 10, false}), Error);
  CHECK_THROWS_AS(zomorrodian_bound({3, 0, 1, false}), Error);
}

TEST_CASE("bound is attained exactly on extremal genera") {
  for (int h = 1; h <= 6; ++h) {
    BigInt g = pow3(h) + 1;
    BoundResult r = zomorrodian_bound({3, 0, g, false});
    CHECK(r.bound == pow3(h + 2));
    CHECK(r.attainable);
    CHECK(is_extremal(g, r.bound) == h);
  }
  CHECK_FALSE(is_extremal(11, 81));
}

TEST_CASE("every enumerated profile satisfies Riemann-Hurwitz") {
  for (int k = 2; k <= 5; ++k) {
    for (int g : {2, 10, 28, 82}) {
      for (const auto& p : enumerate_profiles(3, pow3(k), g)) CHECK(rh_genus(p) == g);
    }
  }
}

TEST_CASE("extremal profiles are unique") {
  for (int h = 2; h <= 4; ++h) {
    BigInt n = pow3(h + 2);
    auto ps = enumerate_profiles(3, n, pow3(h) + 1);
    std::vector<RamificationProfile> zero;
    for (const auto& p : ps)
      if (p.quotient_genus == 0) zero.push_back(p);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].orbits == std::vector<BigInt>{n / 9, n / 3, n / 3});
  }
  CHECK_THROWS_AS(enumerate_profiles(3, 10, 4), Error);
}

TEST_CASE("abelian bound and exact logarithms") {
  CHECK(abelian_bound_check(10, 44));
  CHECK_FALSE(abelian_bound_check(10, 45));
  CHECK(log_exact(243, 3) == 5);
  CHECK_FALSE(log_exact(244, 3));
}
