#pragma once

#include <map>
#include <string>
#include <vector>

#include "zomo/field.hpp"
#include "zomo/poly.hpp"

namespace zomo {

using Exponents = std::vector<int>;

// Sparse polynomial over F_p in a fixed number of variables.
class MPoly {
 public:
  MPoly() = default;
  MPoly(u32 p, int nvars) : p_(p), n_(nvars) {}

  static MPoly constant(u32 p, int nvars, u32 c);
  static MPoly variable(u32 p, int nvars, int i);
  // Embed a univariate polynomial as a polynomial in variable i.
  static MPoly from_poly(const Poly& f, int nvars, int i);

  u32 prime() const { return p_; }
  int nvars() const { return n_; }
  const std::map<Exponents, u32>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int total_degree() const;
  int degree_in(int i) const;
  bool is_homogeneous() const;

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator-() const;
  MPoly operator*(const MPoly& o) const;
  MPoly scaled(u32 c) const;
  MPoly pow(unsigned e) const;
  MPoly derivative(int i) const;
  void add_term(const Exponents& e, u32 c);

  bool operator==(const MPoly& o) const { return p_ == o.p_ && n_ == o.n_ && t_ == o.t_; }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  // Value at a point over F (coefficients embed through the prime field).
  u32 eval(const GF& F, const std::vector<u32>& pt) const;
  // Substitute polynomials for the variables (all in a common ring).
  MPoly compose(const std::vector<MPoly>& images) const;
  // Coefficients of powers of variable i, each a polynomial in the remaining variables
  // (variable i is left with exponent 0).
  std::vector<MPoly> coefficients_in(int i) const;
  // Homogenize with a new last variable.
  MPoly homogenize() const;

  // Terms in descending graded-lex order, "3x^2*y + y^9 - ..." style without minus signs:
  // coefficients are least nonnegative residues, e.g. "y^9 + x^6 + x^3".
  std::string str(const std::vector<std::string>& names) const;

 private:
  u32 p_ = 0;
  int n_ = 0;
  std::map<Exponents, u32> t_;
};

// Parse a polynomial such as "Y^9 + X^6*Z^3 - 2x y^2 + 3y^15" over the given variable names. Terms are
// separated by '+' or '-'; factors by '*' or juxtaposition; exponents by '^'. Longest names match first.
MPoly parse_mpoly(const std::string& text, const std::vector<std::string>& names, u32 p);

}  // namespace zomo
