#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zomo/field.hpp"
#include "zomo/funcfield.hpp"
#include "zomo/group.hpp"
#include "zomo/mpoly.hpp"

namespace zomo {

// A curve given by polynomial equations, either projective (homogeneous, points normalized so the
// last nonzero coordinate is 1) or affine. Equations are kept as text and parsed per prime.
struct Curve {
  std::string name;
  bool projective = true;
  std::vector<std::string> vars;
  std::vector<std::string> equations;
  // Affine only: points where one of these vanishes are dropped (degenerate components of a
  // triangular model).
  std::vector<std::string> exclude;

  std::vector<MPoly> parsed(u32 p) const;
  std::vector<MPoly> parsed_exclude(u32 p) const;
};

// Key/value text: name, space (projective|affine), vars, equation (repeatable), exclude (repeatable).
Curve parse_curve(const std::string& text);
// data/curves/<name>.curve
Curve load_curve(const std::string& name);

struct CurvePoint {
  std::vector<u32> coords;
  bool singular = false;
};

struct PointSet {
  u32 p = 0;
  int k = 1;
  bool projective = true;
  std::vector<CurvePoint> points;
  std::map<std::vector<u32>, int> index;

  int find(const std::vector<u32>& c) const;
  int nonsingular_count() const;
};

// All points over F_{p^k}; throws Error if the search exceeds the budget (ZOMO_BUDGET scaled).
PointSet enumerate_points(const Curve& c, const GF& F);
// Jacobian-rank test at a point of the curve.
bool is_singular_point(const std::vector<MPoly>& eqs, bool projective, const GF& F, const std::vector<u32>& pt);
// Multiplicity of a plane projective curve at a point with prime-field coordinates.
int multiplicity(const MPoly& f, const std::vector<u32>& pt);
// Scale so the last nonzero coordinate is 1; throws on the zero vector.
std::vector<u32> normalize_projective(const GF& F, std::vector<u32> v);

// Coordinate map with coefficients in F_p. Projective: one form per coordinate, equal degrees.
// Affine: coordinate i is num[i]/den[i].
struct RationalMap {
  std::string name;
  bool projective = true;
  std::vector<MPoly> num;
  std::vector<MPoly> den;

  static RationalMap forms(std::string name, std::vector<MPoly> f);
  static RationalMap fractions(std::string name, std::vector<MPoly> num, std::vector<MPoly> den);
  // Components as text: projective forms, or affine "num" / "(num)/(den)".
  static RationalMap parse(std::string name, const std::vector<std::string>& comps, const std::vector<std::string>& vars,
                           u32 p, bool projective);
};

// Image of a point: nullopt when an affine denominator vanishes. A projective base point (all forms
// zero) throws Error.
std::optional<std::vector<u32>> apply_map(const RationalMap& m, const GF& F, const std::vector<u32>& pt);
// a then b, for projective maps.
RationalMap compose_maps(const RationalMap& a, const RationalMap& b);

// Permutation action of maps on a closed set of nonsingular points: points are dropped while some
// map sends them outside the set (to a singular point or out of the affine chart).
struct CurveAction {
  PointSet points;
  std::vector<int> domain;  // indices into points.points
  std::vector<std::vector<u32>> perms;  // one per map, on domain positions
  int dropped = 0;
};

// Throws Error when a map sends a point off the curve, hits a base point, or is not injective.
CurveAction act(const Curve& c, const std::vector<RationalMap>& maps, const GF& F);

struct RealizedGroup {
  FiniteGroup group;
  int k = 0;
  std::vector<int> orders_by_k;
  CurveAction action;
};

// Realize over F_{p^k} for k = 1, 2, ... until the order is stable for two consecutive k with
// pairwise distinct generator permutations; throws Error if not reached by max_k.
RealizedGroup automorphism_group(const Curve& c, const std::vector<RationalMap>& maps, u32 p, int max_k = 4,
                                 int min_k = 1);

// Orbit size -> number of orbits on the action's domain.
std::map<int, int> orbit_structure(const FiniteGroup& G);
// Nonsingular points (outside the excluded locus) fixed by the map.
std::vector<std::vector<u32>> fixed_points(const Curve& c, const RationalMap& m, const GF& F);

// True iff every endomorphism fixes f.
bool verify_invariant_function(const FFElem& f, const std::vector<Endo>& maps);

}  // namespace zomo
