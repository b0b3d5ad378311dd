#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "zomo/field.hpp"
#include "zomo/group.hpp"

namespace zomo {

// Projective point (X:Y:Z), normalized so the last nonzero coordinate is 1.
using HessePoint = std::array<u32, 3>;

// The cubic X^3 + Y^3 + Z^3 = 0 over F with the inflection point (-1:0:1) as origin.
class HesseCurve {
 public:
  explicit HesseCurve(std::shared_ptr<const GF> F);

  const GF& field() const { return *F_; }
  const std::shared_ptr<const GF>& field_ptr() const { return F_; }
  const HessePoint& origin() const { return O_; }

  HessePoint normalize(std::array<u32, 3> v) const;
  bool on_curve(const HessePoint& a) const;
  // Third intersection of the line through a and b with the curve (tangent line when a == b).
  HessePoint third(const HessePoint& a, const HessePoint& b) const;
  HessePoint add(const HessePoint& a, const HessePoint& b) const;
  HessePoint neg(const HessePoint& a) const { return third(O_, a); }
  HessePoint sub(const HessePoint& a, const HessePoint& b) const { return add(a, neg(b)); }
  HessePoint mul(long long n, const HessePoint& a) const;
  // (X : eps Y : Z) and (eps X : eps^2 Y : Z).
  HessePoint alpha(const HessePoint& a, u32 eps) const;
  HessePoint beta(const HessePoint& a, u32 eps) const;

  std::vector<HessePoint> points() const;
  std::string str(const HessePoint& a) const;

 private:
  std::shared_ptr<const GF> F_;
  HessePoint O_;
};

// E(F_q) for a prime q = 1 mod 3 with an addition table; points are referred to by index.
class EllipticGroup {
 public:
  EllipticGroup(u32 q, u32 eps);

  u32 q() const { return q_; }
  u32 eps() const { return eps_; }
  const HesseCurve& curve() const { return curve_; }
  int size() const { return static_cast<int>(pts_.size()); }
  const HessePoint& point(int i) const { return pts_[i]; }
  const std::vector<HessePoint>& points() const { return pts_; }
  int index(const HessePoint& a) const;
  int origin() const { return origin_; }

  int add(int a, int b) const { return table_[static_cast<std::size_t>(a) * pts_.size() + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(long long n, int a) const;
  int alpha(int a) const { return alpha_[a]; }
  int beta(int a) const { return beta_[a]; }
  // a - alpha(a), whose iterated kernels are the alpha-invariant subgroups.
  int lambda(int a) const { return sub(a, alpha_[a]); }
  int order_of(int a) const;

 private:
  u32 q_, eps_;
  HesseCurve curve_;
  std::vector<HessePoint> pts_;
  std::map<HessePoint, int> index_;
  int origin_ = 0;
  std::vector<int> table_, neg_, alpha_, beta_;
};

// Primitive cube root of unity of F_q used by default (smallest residue).
u32 default_eps(u32 q);

struct Sylow3 {
  std::vector<int> members;
  std::vector<int> invariants;  // invariant factors, descending ("9,3")
  int h = 0;                    // log_3 of the order
};
Sylow3 translation_sylow3(const EllipticGroup& E);

// Points P with lambda^j(P) = O.
std::vector<int> lambda_kernel(const EllipticGroup& E, int j);

struct GBar {
  FiniteGroup group;  // permutation group on E(F_q)
  int h = 0;
  std::vector<int> H;        // points of the translation subgroup
  std::vector<int> H_gens;   // generating points; group generators are their translations, then alpha
  int alpha = -1;            // element of group for alpha
};
// Translations by the alpha-invariant subgroup of order 3^h together with alpha.
GBar build_gbar(const EllipticGroup& E, int h);

// Permutation of E(F_q) for translation by point t.
std::vector<u32> translation_perm(const EllipticGroup& E, int t);
// Group element with the given permutation, or -1.
int find_element(const FiniteGroup& G, const std::vector<u32>& perm);

struct Thetas {
  std::array<std::vector<int>, 3> theta;
  std::vector<int> frattini_points;  // points T with translation by T in the Frattini subgroup
};
// Frattini-subgroup orbits on H; theta[0] contains the origin and theta[1] is the coset holding the
// least point in (Z, Y, X) coordinate order. Throws Error if the orbit sizes are not 3^(h-1).
Thetas theta_orbits(const EllipticGroup& E, const GBar& G);

}  // namespace zomo
