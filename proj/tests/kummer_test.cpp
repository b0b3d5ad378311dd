#include <doctest.h>

#include <tuple>

#include "zomo/analysis.hpp"
#include "zomo/kummer.hpp"

using namespace zomo;

TEST_CASE("equation text round trips") {
  auto K = hesse_field(19);
  auto golden = load_golden(19);
  REQUIRE(golden);
  FFElem w = parse_kummer_equation(K, *golden);
  CHECK(kummer_equation(w) == "z^3=(y^6 + y^3 + 1)/(y^5 + y^2)x");
  CHECK(parse_kummer_equation(K, kummer_equation(w)) == w);
  FFElem small = K->gen() / K->base().pow(2);
  CHECK(parse_kummer_equation(K, kummer_equation(small)) == small);
  CHECK(parse_kummer_equation(K, "z^{3} = x") == K->gen());
  CHECK_THROWS_AS(parse_kummer_equation(K, "w = x"), Error);
  for (u32 q : {73u, 271u}) {
    auto K2 = hesse_field(q);
    FFElem g = parse_kummer_equation(K2, *load_golden(q));
    CHECK(parse_kummer_equation(K2, kummer_equation(g)) == g);
  }
  CHECK_FALSE(load_golden(7));
}

TEST_CASE("line coefficients") {
  EllipticGroup E(19, default_eps(19));
  u32 eps = E.eps();
  const GF& F = E.curve().field();
  // m X - Y + m Z = 0 through the origin and (1 : -c : 0) has m = -c.
  for (u32 c : {1u, eps, F.mul(eps, eps)}) {
    int Q = E.index(E.curve().normalize({1, F.neg(c), 0}));
    REQUIRE(Q >= 0);
    CHECK(line_coefficient(E, Q) == F.neg(c));
  }
  CHECK_THROWS_AS(line_coefficient(E, E.origin()), Error);
}

TEST_CASE("built equations match the stored ones") {
  KummerOutput k = kummer_build(19, 3);
  CHECK(k.matched_golden);
  CHECK(k.equation == "z^3=(y^6 + y^3 + 1)/(y^5 + y^2)x");
  CHECK(k.genus == 28);
  CHECK(k.report.pass());
  KummerOutput k73 = kummer_build(73, 4);
  CHECK(k73.matched_golden);
  CHECK(k73.genus == 82);
  // Every choice differs from the stored equation by a cube constant.
  GF F(73);
  for (const auto& c : k73.choices) {
    REQUIRE(c.factor);
    CHECK(F.is_cube(*c.factor));
  }
}

TEST_CASE("stored equation can be overridden") {
  KummerOptions opt;
  opt.golden_text = "z^3=x";
  KummerOutput k = kummer_build(19, 3, opt);
  CHECK_FALSE(k.matched_golden);
  CHECK(k.match == "none");
  CHECK_FALSE(k.report.pass());
}

TEST_CASE("JSON output") {
  KummerOutput k = kummer_build(19, 3);
  auto j = nlohmann::json::parse(to_json_text(k));
  CHECK(j["schema"] == 1);
  CHECK(j["equation"] == k.equation);
  CHECK(j["matched_golden"] == true);
  CHECK(report_from_json(j["report"]) == k.report);
}

TEST_CASE("lifted groups have order 3^(h+2)") {
  for (auto [q, h, n] : {std::tuple<u32, int, int>{19, 3, 243}, {73, 4, 729}}) {
    LiftedGroup L = lift_kummer(q, h);
    CHECK(L.group.order() == n);
    CHECK(L.report.pass());
    CHECK(nilpotency_class(L.group) >= 2);
    CHECK(center(L.group).order() % 3 == 0);
  }
}
