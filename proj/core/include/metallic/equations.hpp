#pragma once

#include "metallic/averages.hpp"
#include "metallic/coding.hpp"
#include "metallic/quadfield.hpp"
#include "metallic/tiles.hpp"

namespace metallic {

Rat rat_frac(const Rat& q);  // q - floor(q), in [0, 1)

// Residuals of the additive tile equation system; a label quadruple
// satisfies it iff all three vanish.  Chip tiles always do, but the
// converse fails (there are quadruples over V_n with zero residuals that
// are not chip tiles).
struct EquationResidual {
  Rat main;           // [<d,top+left>/n - left0] - [<d,bottom+right>/n - bottom0]
  int leftright = 0;  // left0 - right0
  int bottomtop = 0;  // bottom0 - top0
  bool zero() const { return main == 0 && leftright == 0 && bottomtop == 0; }
};

// V_n membership is not required: the op also measures outsiders.
EquationResidual tile_residual(int n, const WangTile& t);

// Exact LHS - RHS of the boundary equation of a valid h x k window:
//   (1/k)<d/n, T - B> - <e, L>  =  (1/h)<d/n, R - L> - <e, B>
// where R, T, L, B average the right/top/left/bottom boundary labels.
// Throws std::invalid_argument when the window is not valid.
Rat rectangle_residual(int n, const Window& w);

// For a valid window whose left boundary column equals its right boundary
// column position-wise: checks <d/n, T> == <d/n, B> - k*<e, B> (mod 1) and
// reports the per-row shift -<e, B> mod 1.
struct CylinderStep {
  bool holds = false;
  Rat shift;
};
CylinderStep cylinder_step(int n, const Window& w);

}  // namespace metallic
