#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace zomo {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Data of a tame G-cover X -> X/G: |G|, the genus of X/G, and the short-orbit sizes.
struct RamificationProfile {
  BigInt order;
  BigInt quotient_genus;
  std::vector<BigInt> orbits;  // ascending; each a proper divisor of order

  bool operator==(const RamificationProfile& o) const = default;
  std::string str() const;
};

// Throws Error unless order > 0, quotient_genus >= 0 and every orbit size properly divides order.
// The orbit list is sorted in place.
void validate(RamificationProfile& r);

// Exact solution g of 2g - 2 = |G|(2g' - 2) + sum(|G| - l_i); may be fractional or negative.
BigRational rh_genus_exact(RamificationProfile r);
// Same, but throws Error for an inconsistent profile (non-integral or negative genus).
BigInt rh_genus(RamificationProfile r);

struct BoundQuery {
  unsigned d = 3;  // odd prime, the order of G is a power of d
  unsigned p = 0;  // characteristic: 0 or a prime different from d
  BigInt g;        // genus, at least 2
  // Use the sharper bound 2d/(d-1)(g-1) valid for non-abelian G with an elliptic quotient by a
  // central subgroup of order d (d = 3 with |G| = 9(g-1) excepted).
  bool elliptic_quotient = false;
};

struct BoundResult {
  BigInt bound;          // floor of the bound value
  BigInt largest_power;  // largest power of d not exceeding the bound
  // False when the theorem itself rules out equality (d = 3, g = 2) or when the bound is not a
  // power of d, so that no d-group attains it.
  bool attainable = false;
};

BoundResult zomorrodian_bound(const BoundQuery& q);

// All profiles with orbit sizes among the proper d-power divisors of order that satisfy the
// Riemann-Hurwitz equation for genus g, ordered by quotient genus then orbit list.
std::vector<RamificationProfile> enumerate_profiles(unsigned d, const BigInt& order, const BigInt& g);

// h >= 1 with g - 1 = 3^h and order = 3^(h+2), if any.
std::optional<int> is_extremal(const BigInt& g, const BigInt& order);

// order <= 4g + 4, the bound for abelian automorphism groups; g must be at least 2.
bool abelian_bound_check(const BigInt& g, const BigInt& order);

// log_d(n) if n is a power of d (n >= 1), otherwise nullopt.
std::optional<int> log_exact(const BigInt& n, unsigned d);

}  // namespace zomo
