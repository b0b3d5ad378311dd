#include <doctest.h>

#include <random>

#include "zomo/field.hpp"
#include "zomo/poly.hpp"

using namespace zomo;

namespace {

// Multiplication of digit vectors modulo the stored modulus, written out directly.
u32 schoolbook_mul(const GF& F, u32 a, u32 b) {
  u32 p = F.p();
  int k = F.degree();
  std::vector<u32> x(k), y(k), z(2 * k, 0);
  for (int i = 0; i < k; ++i) {
    x[i] = a % p, a /= p;
    y[i] = b % p, b /= p;
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) z[i + j] = (z[i + j] + x[i] * y[j]) % p;
  const auto& m = F.modulus();
  for (int d = 2 * k - 1; d >= k; --d) {
    u32 c = z[d];
    for (int i = 0; i <= k; ++i) z[d - k + i] = (z[d - k + i] + (p - c) * m[i]) % p;
  }
  u32 v = 0;
  for (int i = k - 1; i >= 0; --i) v = v * p + z[i];
  return v;
}

bool has_root(const std::vector<u32>& f, u32 p) {
  for (u32 x = 0; x < p; ++x) {
    u32 s = 0;
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) s = (s * x + f[i]) % p;
    if (s == 0) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("modular helpers") {
  CHECK(pow_mod(3, 18, 19) == 1);
  CHECK(mul_mod(inv_mod(7, 19), 7, 19) == 1);
  CHECK(reduce_signed(-1, 19) == 18);
  CHECK(is_prime(271));
  CHECK_FALSE(is_prime(91));
  CHECK(prime_factors(18) == std::vector<u64>{2, 3});
  CHECK_THROWS_AS(inv_mod(0, 19), Error);
}

TEST_CASE("prime field axioms hold exhaustively over F_19") {
  GF F(19);
  for (u32 a = 0; a < 19; ++a) {
    CHECK(F.add(a, F.neg(a)) == 0);
    if (a) CHECK(F.mul(a, F.inv(a)) == 1);
    for (u32 b = 0; b < 19; ++b) {
      CHECK(F.mul(a, b) == a * b % 19);
      CHECK(F.sub(F.add(a, b), b) == a);
    }
  }
}

TEST_CASE("extension field multiplication agrees with schoolbook reduction") {
  for (auto [p, k] : {std::pair<u32, int>{19, 2}, {19, 3}, {7, 4}, {3, 5}}) {
    GF F(p, k);
    std::mt19937 rng(0);
    std::uniform_int_distribution<u32> d(0, F.size() - 1);
    for (int t = 0; t < 2000; ++t) {
      u32 a = d(rng), b = d(rng), c = d(rng);
      REQUIRE(F.mul(a, b) == schoolbook_mul(F, a, b));
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      if (a) CHECK(F.mul(a, F.inv(a)) == 1);
    }
  }
}

TEST_CASE("primitive element has full order and logs invert exp") {
  GF F(19, 2);
  u32 g = F.primitive();
  u32 n = F.size() - 1;
  for (u64 q : prime_factors(n)) CHECK(F.pow(g, n / q) != 1);
  for (u32 a = 1; a < F.size(); ++a) CHECK(F.exp(F.log(a)) == a);
}

TEST_CASE("least irreducible polynomials have no roots and are minimal") {
  // Degree 2 and 3 are irreducible iff rootless.
  for (u32 p : {3u, 7u, 19u}) {
    for (int k : {2, 3}) {
      auto m = least_irreducible(p, k);
      CHECK(m.size() == static_cast<size_t>(k) + 1);
      CHECK(m.back() == 1);
      CHECK_FALSE(has_root(m, p));
    }
  }
  CHECK(least_irreducible(19, 2) == std::vector<u32>{1, 0, 1});
}

TEST_CASE("cube roots of unity and cubes") {
  GF F(19);
  u32 e = F.primitive_cube_root();
  CHECK(e == 7);
  CHECK(F.pow(e, 3) == 1);
  int cubes = 0;
  for (u32 a = 1; a < 19; ++a) {
    cubes += F.is_cube(a);
    for (u32 r : F.cube_roots(a)) CHECK(F.pow(r, 3) == a);
  }
  CHECK(cubes == 6);
  CHECK_THROWS_AS(GF(5).primitive_cube_root(), Error);
}

TEST_CASE("polynomial division and extended gcd") {
  std::mt19937 rng(0);
  std::uniform_int_distribution<u32> d(0, 18);
  for (int t = 0; t < 200; ++t) {
    std::vector<u32> ca(6), cb(4);
    for (auto& c : ca) c = d(rng);
    for (auto& c : cb) c = d(rng);
    Poly a(19, ca), b(19, cb);
    if (b.is_zero()) continue;
    Poly q, r;
    Poly::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    Poly s, u;
    Poly g = ext_gcd(a, b, s, u);
    CHECK(s * a + u * b == g);
    CHECK((a % g).is_zero());
    CHECK((b % g).is_zero());
  }
}

TEST_CASE("polynomial printing round trips through the parser") {
  Poly f = parse_poly("y^6 + y^3 + 1", "y", 19);
  CHECK(f.degree() == 6);
  CHECK(f.str("y") == "y^6 + y^3 + 1");
  CHECK(parse_poly(f.str("y"), "y", 19) == f);
  CHECK(parse_poly("y^5 - 18y^2", "y", 19).str("y") == "y^5 + y^2");
}

TEST_CASE("rational functions are kept reduced with a monic denominator") {
  Poly y = Poly::variable(19);
  Poly one = Poly::constant(19, 1);
  RatFunc r(y * y - one, (y - one).scaled(2));
  CHECK(r.den().is_one());
  CHECK(r.num() == (y + one).scaled(inv_mod(2, 19)));
  RatFunc s(one, y);
  CHECK((s * s.inv()) == RatFunc(one));
  CHECK(RatFunc(one, y.pow(2) + y).str("y") == "1/(y^2 + y)");
}
