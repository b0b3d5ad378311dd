#pragma once

#include <memory>
#include <string>
#include <vector>

#include "zomo/field.hpp"
#include "zomo/poly.hpp"

namespace zomo {

class FFElem;

// F_p(u)[v]/(m) with m = v^n + c_{n-1} v^{n-1} + ... + c_0 monic in v, c_i in F_p(u).
// u is the base (transcendental) variable and v the generator; both carry print names.
class FunctionField : public std::enable_shared_from_this<FunctionField> {
 public:
  // lower = c_0..c_{n-1}
  static std::shared_ptr<const FunctionField> make(u32 p, std::vector<RatFunc> lower, std::string base = "x",
                                                   std::string gen = "y");
  // Parse "y^9 + x^6 + x^3" (polynomial in base and gen, monic in gen).
  static std::shared_ptr<const FunctionField> parse(u32 p, const std::string& modulus, std::string base = "x",
                                                    std::string gen = "y");

  u32 prime() const { return p_; }
  int degree() const { return static_cast<int>(lower_.size()); }
  const std::vector<RatFunc>& lower() const { return lower_; }
  const std::string& base_name() const { return base_; }
  const std::string& gen_name() const { return gen_; }
  // m(u, v) with denominators cleared: rows indexed by the power of v, entries polynomials in u.
  const std::vector<Poly>& cleared() const { return cleared_; }
  std::string modulus_str() const;

  FFElem zero() const;
  FFElem one() const;
  FFElem constant(long long c) const;
  FFElem base() const;
  FFElem gen() const;
  FFElem from(const RatFunc& r) const;
  // Element from coefficients of v^0..v^{k}; k may exceed n-1 (reduced on construction).
  FFElem from_coeffs(std::vector<RatFunc> c) const;

 private:
  FunctionField() = default;
  u32 p_ = 0;
  std::vector<RatFunc> lower_;
  std::vector<Poly> cleared_;
  std::string base_, gen_;
};

using FieldPtr = std::shared_ptr<const FunctionField>;

class FFElem {
 public:
  FFElem() = default;
  FFElem(FieldPtr f, std::vector<RatFunc> c);

  const FieldPtr& field() const { return f_; }
  // Coefficient of v^i (i < n).
  const RatFunc& coeff(int i) const { return c_[i]; }
  const std::vector<RatFunc>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_one() const;

  FFElem operator+(const FFElem& o) const;
  FFElem operator-(const FFElem& o) const;
  FFElem operator-() const;
  FFElem operator*(const FFElem& o) const;
  FFElem operator/(const FFElem& o) const { return *this * o.inv(); }
  FFElem scaled(u32 c) const;
  FFElem inv() const;
  FFElem pow(long long e) const;

  bool operator==(const FFElem& o) const;
  bool operator!=(const FFElem& o) const { return !(*this == o); }

  // "c_0 + c_1 v + ..." with nonzero terms in ascending v-power; coefficients printed by
  // RatFunc::str, e.g. "(y^6 + y^3 + 1)/(y^5 + y^2)x".
  std::string str() const;

 private:
  void check(const FFElem& o) const;
  FieldPtr f_;
  std::vector<RatFunc> c_;
};

FFElem ff_add(const FFElem& a, const FFElem& b);
FFElem ff_mul(const FFElem& a, const FFElem& b);
FFElem ff_inv(const FFElem& a);

// Value of a at the point (u, v) of the curve over F; throws Error if a denominator vanishes.
u32 evaluate(const FFElem& a, const GF& F, u32 u, u32 v);

// u -> base_img, v -> gen_img; validated by m(base_img, gen_img) = 0.
class Endo {
 public:
  Endo(FFElem base_img, FFElem gen_img);
  static Endo identity(const FieldPtr& f);
  const FFElem& base_img() const { return bu_; }
  const FFElem& gen_img() const { return gv_; }
  // e.then(o): apply e first, then o, as substitutions (f -> o(e(f))).
  Endo then(const Endo& o) const;

 private:
  FFElem bu_, gv_;
};

FFElem apply_endo(const Endo& e, const FFElem& f);
// r(u) evaluated at an element of the field.
FFElem substitute(const RatFunc& r, const FFElem& at);

// Order of f at the nonsingular affine point (u, v) over F, by power series in a local parameter.
// Precision starts at prec and doubles up to 512; throws Error on a singular point, a zero
// function, or exhausted precision.
int valuation_at(const FFElem& f, const GF& F, u32 u, u32 v, int prec = 64);
bool is_nonsingular(const FieldPtr& f, const GF& F, u32 u, u32 v);
bool on_curve(const FieldPtr& f, const GF& F, u32 u, u32 v);

// Dense bivariate polynomial over F_p: c[i][j] is the coefficient of a^i b^j.
struct BiPoly {
  u32 p = 0;
  std::vector<std::vector<u32>> c;
  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  bool operator==(const BiPoly& o) const;
  bool is_zero() const;
  static BiPoly from(u32 p, std::vector<std::vector<long long>> c);
};

// Both sides of the two-variable cubic identity
// (a^3 - 3a - 1)(b^2 + b) - (a^2 + a)(b^3 - 3b - 1) = (a - b)(ab + b + 1)(ab + a + 1), expanded over F_p.
struct IdentityCheck {
  BiPoly lhs, rhs;
  bool holds = false;
};
IdentityCheck cubic_factorization_identity(u32 p);

}  // namespace zomo
