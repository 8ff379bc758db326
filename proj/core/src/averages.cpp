#include "metallic/averages.hpp"

#include <stdexcept>

namespace metallic {

AverageEstimate phi_estimate(int n, const TorusPoint& p, long k, Axis axis) {
  if (k < 1) throw std::invalid_argument("phi_estimate: horizon k must be >= 1");
  // Along the scanned axis only the second argument of lambda varies:
  //   row:    TOP(cell i)   = lambda({y}, {x + i/beta})
  //   column: RIGHT(cell i) = lambda({x}, {y + i/beta})
  // For fixed first argument x' the three forms are A_j + u with
  // A_0 = beta*+1, A_1 = x'/beta + A_0, A_2 = beta*x' + A_0 and u in [0, 1),
  // so each floor is floor(A_j) plus [u >= 1 - {A_j}], and u itself advances
  // by +1/beta (mod 1) per cell.  Everything stays exact.
  const QuadNum& fixed = axis == Axis::row ? p.y : p.x;
  const QuadNum& moving = axis == Axis::row ? p.x : p.y;
  QuadNum one = QuadNum::rational(1, n);
  QuadNum binv = QuadNum::beta_inv(n);
  QuadNum a0 = QuadNum::beta_star(n) + one;
  QuadNum a1 = binv * fixed + a0;
  QuadNum a2 = QuadNum::beta(n) * fixed + a0;
  long m = floor_long(a2) - floor_long(a1);  // constant part of v2 - v1
  QuadNum t1 = one - a1.frac();              // u >= t1 bumps v1
  QuadNum t2 = one - a2.frac();              // u >= t2 bumps v2

  QuadNum u = (moving + QuadNum(Rat(k) * n, Rat(-k), n)).frac();  // cell i = -k
  long sum = 0;
  for (long i = -k; i <= k; ++i) {
    sum += m + (u >= t2 ? 1 : 0) - (u >= t1 ? 1 : 0);
    u += binv;
    if (u >= one) u -= one;
  }
  return {Rat(sum) / (Rat(2 * k + 1) * n), k, axis};
}

std::pair<AverageEstimate, AverageEstimate> factor_estimate(int n,
                                                            const TorusPoint& p,
                                                            long k) {
  return {phi_estimate(n, p, k, Axis::column), phi_estimate(n, p, k, Axis::row)};
}

ClosedForm dot_d_closed_form(int n, const QuadNum& x, const QuadNum& y) {
  ClosedForm r;
  r.lhs = inner_d(lambda_floor(n, x, y));
  QuadNum nx = QuadNum::rational(n, n) * x;
  QuadNum delta = QuadNum::beta_inv(n) * x + QuadNum::beta_star(n) +
                  QuadNum::rational(1, n);  // 1 - (1-x)/beta
  QuadNum s = (delta + y).frac();
  QuadNum lo = QuadNum::rational(1, n) - nx.frac();
  r.rhs = floor_long(nx) + (s >= lo ? 1 : 0);
  return r;
}

}  // namespace metallic
