#pragma once

// Johnson's formulas for the Birman-Craggs-Johnson map on separating twists
// and bounding pair maps, computed from curve data.

#include <string>

#include "bcj/boolring.hpp"
#include "bcj/surface.hpp"

namespace bcj {

/// Twist about a separating curve, given by a symplectic basis of the
/// subsurface it cuts off (the side away from the boundary).
struct SeparatingTwist {
  SubsurfaceBasis basis;
  std::string label;
};

/// Bounding pair map T_gamma T_delta^{-1}; C is the class of gamma.
struct BPMap {
  SubsurfaceBasis basis;
  HClass C;
  std::string label;
};

SeparatingTwist make_separating_twist(SubsurfaceBasis basis, std::string label = {});
/// Also checks C . A_i = C . B_i = 0 (GeometryError otherwise).
BPMap make_bp_map(SubsurfaceBasis basis, HClass C, std::string label = {});

/// sum_i bar(A_i) bar(B_i). Throws BasisError on a non-symplectic basis.
BoolPoly sigma(const SeparatingTwist& t);
/// (sum_i bar(A_i) bar(B_i)) (bar(C) + 1).
BoolPoly sigma(const BPMap& m);

inline BoolPoly sigma_separating(const SeparatingTwist& t) { return sigma(t); }
inline BoolPoly sigma_bp(const BPMap& m) { return sigma(m); }

/// sigma of the genus-1 separating curve with spine (x, y): bar(x) bar(y).
BoolPoly sigma_spine(const Spine& s);

/// True iff some handle i has a_i dividing one monomial and b_i dividing the
/// other. Throws ArgumentError when m1 == m2.
bool is_index_matched(int genus, VarMask m1, VarMask m2);

}  // namespace bcj
