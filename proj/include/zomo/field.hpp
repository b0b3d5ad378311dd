#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace zomo {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Residue arithmetic modulo a prime p < 2^31.
inline u32 add_mod(u32 a, u32 b, u32 p) {
  u32 s = a + b;
  return s >= p ? s - p : s;
}
inline u32 sub_mod(u32 a, u32 b, u32 p) { return a >= b ? a - b : a + p - b; }
inline u32 neg_mod(u32 a, u32 p) { return a == 0 ? 0 : p - a; }
inline u32 mul_mod(u32 a, u32 b, u32 p) { return static_cast<u32>(static_cast<u64>(a) * b % p); }
u32 pow_mod(u32 a, u64 e, u32 p);
u32 inv_mod(u32 a, u32 p);
u32 reduce_signed(long long v, u32 p);
bool is_prime(u64 n);

// Distinct prime factors of n.
std::vector<u64> prime_factors(u64 n);

// The finite field F_{p^k}. Elements are integers in [0, p^k) whose base-p digits are the
// coefficients (constant term first) of a residue modulo the stored irreducible polynomial.
// The prime field embeds as 0..p-1.
class GF {
 public:
  GF(u32 p, int k = 1);

  u32 p() const { return p_; }
  int degree() const { return k_; }
  u32 size() const { return q_; }
  // Monic irreducible modulus, coefficients constant term first (length k+1).
  const std::vector<u32>& modulus() const { return modulus_; }

  u32 add(u32 a, u32 b) const;
  u32 sub(u32 a, u32 b) const;
  u32 neg(u32 a) const;
  u32 mul(u32 a, u32 b) const;
  u32 inv(u32 a) const;
  u32 div(u32 a, u32 b) const { return mul(a, inv(b)); }
  u32 pow(u32 a, u64 e) const;
  u32 from_int(long long v) const { return reduce_signed(v, p_); }
  bool in_prime_field(u32 a) const { return a < p_; }
  // A fixed primitive element (generator of the multiplicative group).
  u32 primitive() const { return exp_[1]; }
  // Discrete log base primitive(); a must be nonzero.
  u32 log(u32 a) const { return log_[a]; }
  u32 exp(u64 e) const { return exp_[e % (q_ - 1)]; }
  // Primitive cube root of unity with the smallest encoding, or throws if none exists.
  u32 primitive_cube_root() const;
  bool is_cube(u32 a) const;
  // All cube roots of a in the field (empty if a is not a cube).
  std::vector<u32> cube_roots(u32 a) const;
  std::string format(u32 a) const;

  // Distinct roots in this field of the polynomial with the given coefficients (constant first).
  std::vector<u32> roots(std::vector<u32> f) const;

  bool operator==(const GF& o) const { return p_ == o.p_ && k_ == o.k_; }

 private:
  u32 slow_mul(u32 a, u32 b) const;

  u32 p_;
  int k_;
  u32 q_;
  std::vector<u32> modulus_;
  std::vector<u32> exp_;
  std::vector<u32> log_;
};

// Least lexicographic monic irreducible polynomial of degree k over F_p. Coefficients are compared
// from x^{k-1} down to the constant term.
std::vector<u32> least_irreducible(u32 p, int k);

}  // namespace zomo
