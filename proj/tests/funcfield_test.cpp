#include <doctest.h>

#include <random>

#include "zomo/funcfield.hpp"
#include "zomo/mpoly.hpp"

using namespace zomo;

namespace {

FFElem random_elem(const FieldPtr& K, std::mt19937& rng) {
  std::uniform_int_distribution<u32> d(0, K->prime() - 1);
  std::vector<RatFunc> c;
  for (int i = 0; i < K->degree(); ++i) {
    Poly n(K->prime(), {d(rng), d(rng), d(rng)}), m(K->prime(), {d(rng), 1});
    c.emplace_back(n, m);
  }
  return K->from_coeffs(c);
}

}  // namespace

TEST_CASE("field axioms on random elements of the Fermat cubic function field") {
  auto K = FunctionField::parse(19, "y^3 + x^3 + 1");
  CHECK(K->degree() == 3);
  std::mt19937 rng(0);
  for (int t = 0; t < 30; ++t) {
    FFElem a = random_elem(K, rng), b = random_elem(K, rng), c = random_elem(K, rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    if (!a.is_zero()) CHECK((a * a.inv()).is_one());
    CHECK(a - a == K->zero());
  }
  FFElem y = K->gen(), x = K->base();
  CHECK(y.pow(3) == -(x.pow(3) + K->one()));
  CHECK(y.pow(-2) * y.pow(2) == K->one());
}

TEST_CASE("printing matches the equation serialization") {
  auto K = FunctionField::parse(19, "x^3 + y^3 + 1", "y", "x");
  FFElem y = K->base(), x = K->gen();
  FFElem w = (y.pow(6) + y.pow(3) + K->one()) / (y.pow(5) + y.pow(2)) * x;
  CHECK(w.str() == "(y^6 + y^3 + 1)/(y^5 + y^2)x");
}

TEST_CASE("evaluation agrees with the polynomial") {
  auto K = FunctionField::parse(19, "y^3 + x^3 + 1");
  GF F(19);
  FFElem f = K->base() * K->gen() + K->constant(2);
  int hits = 0;
  for (u32 u = 0; u < 19; ++u)
    for (u32 v = 0; v < 19; ++v)
      if (on_curve(K, F, u, v)) {
        ++hits;
        CHECK(evaluate(f, F, u, v) == (u * v + 2) % 19);
      }
  CHECK(hits > 0);
}

TEST_CASE("valuations at affine points") {
  auto K = FunctionField::parse(19, "y^3 + x^3 + 1");
  GF F(19);
  FFElem x = K->base(), y = K->gen(), one = K->one();
  // x + 1 is the tangent at the flex (-1, 0).
  CHECK(valuation_at(x + one, F, 18, 0) == 3);
  CHECK(valuation_at(y, F, 18, 0) == 1);
  CHECK(valuation_at((x + one) / y.pow(2), F, 18, 0) == 1);
  // Nonvanishing functions have order zero; vanishing ones positive.
  for (u32 u = 0; u < 19; ++u)
    for (u32 v = 0; v < 19; ++v) {
      if (!on_curve(K, F, u, v)) continue;
      CHECK(valuation_at(x - K->constant(u), F, u, v) >= 1);
      FFElem g = x + y + K->constant(2);
      CHECK((valuation_at(g, F, u, v) == 0) == (evaluate(g, F, u, v) != 0));
    }
  CHECK_THROWS_AS(valuation_at(K->zero(), F, 18, 0), Error);
  CHECK_THROWS_AS(valuation_at(x, F, 1, 1), Error);
}

TEST_CASE("endomorphisms compose as substitutions") {
  auto K = FunctionField::parse(19, "y^3 + x^3 + 1");
  FFElem x = K->base(), y = K->gen();
  Endo a(x, y * K->constant(7));   // y -> eps y
  Endo b(y, x);                    // swap
  FFElem f = x * x + y;
  CHECK(apply_endo(a.then(b), f) == apply_endo(b, apply_endo(a, f)));
  CHECK(apply_endo(a.then(a).then(a), f) == f);
  CHECK_THROWS_AS(Endo(x, y * K->constant(2)), Error);
}

TEST_CASE("cubic factorization identity") {
  for (u32 p : {19u, 7u, 73u}) {
    IdentityCheck c = cubic_factorization_identity(p);
    CHECK(c.holds);
    CHECK(c.lhs == c.rhs);
  }
  // Pointwise oracle over F_19.
  auto f = [](long long a, long long b) {
    return ((a * a * a - 3 * a - 1) * (b * b + b) - (a * a + a) * (b * b * b - 3 * b - 1)) % 19;
  };
  auto g = [](long long a, long long b) { return ((a - b) * (a * b + b + 1) % 19) * (a * b + a + 1) % 19; };
  for (long long a = 0; a < 19; ++a)
    for (long long b = 0; b < 19; ++b) CHECK((f(a, b) - g(a, b)) % 19 == 0);
}

TEST_CASE("multivariate polynomials") {
  MPoly f = parse_mpoly("Y^9 + X^6*Z^3 + X^3 Z^6", {"X", "Y", "Z"}, 19);
  CHECK(f.is_homogeneous());
  CHECK(f.total_degree() == 9);
  CHECK(parse_mpoly(f.str({"X", "Y", "Z"}), {"X", "Y", "Z"}, 19) == f);
  MPoly d = f.derivative(1);
  CHECK(d.str({"X", "Y", "Z"}) == "9Y^8");
  GF F(19);
  CHECK(f.eval(F, {1, 0, 1}) == 2);
  CHECK_THROWS_AS(parse_mpoly("X +", {"X"}, 19), Error);
}
