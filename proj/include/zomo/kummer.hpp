#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zomo/funcfield.hpp"
#include "zomo/hesse.hpp"
#include "zomo/report.hpp"

namespace zomo {

// Function field of X^3 + Y^3 + Z^3 = 0 in the chart Z = 1: base y, generator x with x^3 = -y^3 - 1.
FieldPtr hesse_field(u32 q);

// Pullbacks of the curve maps used by the construction.
class HesseFunctions {
 public:
  explicit HesseFunctions(const EllipticGroup& E);

  const FieldPtr& field() const { return f_; }
  const EllipticGroup& group() const { return E_; }

  // Coordinates (D0, D1, D2) of (x:y:1) + T as polynomials in x, y.
  const std::array<FFElem, 3>& translated(int T);
  // P -> P + T as a substitution y -> D1/D2, x -> D0/D2.
  Endo translation(int T);
  // (X : eps Y : Z) as y -> eps y, x -> x.
  Endo alpha() const;
  // (X:Y:Z) -> (X:Z:Y), used to reach points at infinity.
  Endo swap() const;

  // Line through two points (tangent when equal), as aX + bY + cZ evaluated at (x, y, 1).
  FFElem line(const HessePoint& a, const HessePoint& b) const;
  // Numerator and denominator of t o tau_T for the line coefficient m, t = (m x - y + m)/(x + 1).
  std::pair<FFElem, FFElem> t_parts(u32 m, int T);
  // Product of t o tau_T over the given translation points.
  FFElem w(u32 m, const std::vector<int>& Ts);
  // Function with divisor sum(plus) - sum(minus) on E(F_q); the two sums must agree in the group.
  FFElem with_divisor(const std::vector<int>& plus, const std::vector<int>& minus) const;

  // Order of f at a point of E(F_q), including the points at infinity.
  int valuation(const FFElem& f, const HessePoint& P) const;

 private:
  const EllipticGroup& E_;
  FieldPtr f_;
  std::map<int, std::array<FFElem, 3>> trans_;
  std::map<std::vector<int>, FFElem> den_inv_;
};

// Coefficient m of the line m X - Y + m Z = 0 through the origin and Q.
u32 line_coefficient(const EllipticGroup& E, int Q);
// Value c when f is the constant c.
std::optional<u32> constant_value(const FFElem& f);

// Parse an equation "z^3=(N)/(D)x" (exponents may be braced, "\\" line breaks are ignored) into w.
FFElem parse_kummer_equation(const FieldPtr& f, const std::string& text);
std::string kummer_equation(const FFElem& w);
// Golden equation text for q from the data directory, if present.
std::optional<std::string> load_golden(u32 q);

struct KummerChoice {
  int Q = -1;
  u32 eps = 0;
  u32 m = 0;
  std::string equation;
  std::string match;          // "exact", "cube-constant", "constant", "none" or "no-golden"
  std::optional<u32> factor;  // w = factor * golden
};

struct KummerOutput {
  u32 q = 0;
  int h = 0;
  u32 eps = 0;
  HessePoint Q{};
  u32 m = 0;
  FFElem t, w;
  std::string equation;
  long long genus = 0;
  bool matched_golden = false;
  std::string match = "no-golden";
  std::optional<u32> factor;
  std::vector<KummerChoice> choices;
  std::vector<std::string> distinct_equations;
  Report report;
};

struct KummerOptions {
  bool golden = true;       // compare against the stored equation
  bool all_choices = true;  // enumerate every (Q, eps)
  std::optional<std::string> golden_text;  // overrides the stored equation
};

KummerOutput kummer_build(u32 q, int h, const KummerOptions& opt = {});
std::string to_json_text(const KummerOutput& k);

// The three-fold cyclic cover z^3 = w realized as a permutation group on points (P, z) over F_{q^k}.
struct LiftedGroup {
  FiniteGroup group;
  int k = 0;
  int orbit_size = 0;
  std::vector<std::string> constants;  // cube-check constants per generator
  std::shared_ptr<const GF> field;     // F_{q^k}
  u32 eps = 0;
  std::vector<HessePoint> base;        // base point of each domain point (P, z)
  Report report;
};
// Lift translations by the H generators, alpha and z -> eps z; verify the cube property exactly.
LiftedGroup lift_kummer(u32 q, int h, int max_k = 3);

// Elements of the lifted group whose action on base points is the given map.
std::vector<int> elements_inducing(const LiftedGroup& L, const std::function<HessePoint(const HessePoint&)>& f);

// Names and runners of the Hesse and Kummer suites.
std::vector<std::string> kummer_suite_names();
Report kummer_check(const std::string& name);

}  // namespace zomo
