#pragma once

#include <utility>

#include "metallic/coding.hpp"

namespace metallic {

inline int inner_d(const Label& v) { return v.v2 - v.v1; }  // d = (0, -1, 1)
inline int inner_e(const Label& v) { return v.v0; }         // e = (1, 0, 0)

enum class Axis { row, column };

// Exact Birkhoff average (1/(2k+1)) * sum_{i=-k..k} <d/n, label_i> where
// label_i is the TOP color of cell (i, 0) (row axis) or the RIGHT color of
// cell (0, i) (column axis) of the configuration over p.
struct AverageEstimate {
  Rat value;
  long k = 0;
  Axis axis = Axis::row;
};

AverageEstimate phi_estimate(int n, const TorusPoint& p, long k, Axis axis);

// (column estimate, row estimate); converges to (x, y) as k grows.
std::pair<AverageEstimate, AverageEstimate> factor_estimate(int n,
                                                            const TorusPoint& p,
                                                            long k);

// Both sides of the closed form for the d-product of the coding label:
//   lhs = <d, lambda_floor(x, y)>
//   rhs = floor(n*x) + [ {delta_x + y} in [1 - {n*x}, 1) ]
// with delta_x = 1 - (1 - x)/beta; the two agree everywhere.
struct ClosedForm {
  long lhs = 0, rhs = 0;
};
ClosedForm dot_d_closed_form(int n, const QuadNum& x, const QuadNum& y);

}  // namespace metallic
