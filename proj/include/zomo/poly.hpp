#pragma once

#include <string>
#include <vector>

#include "zomo/field.hpp"

namespace zomo {

// Dense univariate polynomial over F_p, coefficients constant term first, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(u32 p) : p_(p) {}
  Poly(u32 p, std::vector<u32> coeffs);

  static Poly constant(u32 p, u32 c);
  static Poly monomial(u32 p, u32 c, int deg);
  static Poly variable(u32 p) { return monomial(p, 1, 1); }

  u32 prime() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  u32 lead() const { return c_.empty() ? 0 : c_.back(); }
  u32 operator[](int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
  const std::vector<u32>& coeffs() const { return c_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(u32 c) const;
  Poly monic() const;
  Poly derivative() const;
  Poly pow(unsigned e) const;
  // Substitute x -> c*x.
  Poly rescale_var(u32 c) const;

  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
  Poly operator/(const Poly& b) const;
  Poly operator%(const Poly& b) const;

  u32 eval(u32 x) const;
  u32 eval(const GF& F, u32 x) const;

  bool operator==(const Poly& o) const { return p_ == o.p_ && c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Descending powers, coefficients as least nonnegative residues, e.g. "y^18 + 3y^15 + 1".
  std::string str(const std::string& var) const;

 private:
  void trim();
  u32 p_ = 0;
  std::vector<u32> c_;
};

Poly gcd(Poly a, Poly b);
// Returns g = gcd(a,b) monic with s*a + t*b = g.
Poly ext_gcd(const Poly& a, const Poly& b, Poly& s, Poly& t);

// Element of F_p(x): num/den with den monic and gcd(num, den) = 1.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(u32 p) : num_(p), den_(Poly::constant(p, 1)) {}
  RatFunc(Poly num);
  RatFunc(Poly num, Poly den);

  u32 prime() const { return num_.prime(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc inv() const;

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  // "(num)/(den)" with parentheses dropped when a side is a single term; "num" when den = 1.
  std::string str(const std::string& var) const;

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

// Parse a univariate polynomial in the serialization produced by Poly::str (also accepts '*', '-').
Poly parse_poly(const std::string& text, const std::string& var, u32 p);

}  // namespace zomo
