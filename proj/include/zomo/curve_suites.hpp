#pragma once

#include <string>
#include <vector>

#include "zomo/curve.hpp"
#include "zomo/funcfield.hpp"
#include "zomo/report.hpp"

namespace zomo {

// Cube root of unity eps and a ninth root zeta with zeta^3 = eps, both in F_q (needs q = 1 mod 9).
struct UnityRoots {
  u32 eps = 0;
  u32 zeta = 0;
};
UnityRoots unity_roots(u32 q);

struct CurveMaps {
  Curve curve;
  std::vector<RationalMap> maps;
};

// alpha_{eps,1}, alpha_{1,zeta} and optionally alpha_2 on x0.
CurveMaps x0_maps(u32 q, bool with_alpha2);
// alpha_{1,eps} on x0.
RationalMap x0_center_map(u32 q);
// (zeta X:Y:Z), (X:zeta Y:Z), (Y:Z:X) on the Fermat curve of degree 9.
CurveMaps fermat9_maps(u32 q);
// diag(zeta,zeta), diag(1,eps) and (XY^2:Z^3:XYZ) on the genus 10 curve.
CurveMaps genus10_maps(u32 q);
// The maps f and g of the genus 28 Kummer cover over F_19.
CurveMaps kummer19_maps();
// (x, eps y, zeta z) and (y/x, 1/x, yz) on z^3 = x/y^2.
CurveMaps example67_maps(u32 q);

// Function field of y^9 + x^6 + x^3 and the invariant t in its two printed forms.
struct TowerData {
  FieldPtr field;
  FFElem t_rational;  // (x^9 - 3x^3 - 1)/(x^3(x^3 + 1))
  FFElem t_sum;       // x^3 + x^3/y^9 + y^9/x^6
};
TowerData tower_data(u32 q);
// Endomorphisms of the x0 function field for alpha_{eps,1}, alpha_{1,zeta}, alpha_2.
std::vector<Endo> x0_generator_endos(u32 q, const FieldPtr& f);

std::vector<std::string> curve_suite_names();
// Runs the named suite; throws Error on unknown names or unsuitable q.
Report curve_check(const std::string& name, u32 q, int max_k = 4);

}  // namespace zomo
