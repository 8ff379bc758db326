#include "metallic/equations.hpp"

#include <stdexcept>

namespace metallic {

Rat rat_frac(const Rat& q) { return q - Rat(rat_floor(q)); }

namespace {

Rat frac_of(long num, long den) {  // canonical num/den
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

EquationResidual tile_residual(int n, const WangTile& t) {
  Rat lhs = frac_of(inner_d(t.top) + inner_d(t.left), n) - inner_e(t.left);
  Rat rhs = frac_of(inner_d(t.bottom) + inner_d(t.right), n) - inner_e(t.bottom);
  return {lhs - rhs, inner_e(t.left) - inner_e(t.right),
          inner_e(t.bottom) - inner_e(t.top)};
}

namespace {

void require_valid(const Window& w, const char* who) {
  if (!check_valid(w).empty())
    throw std::invalid_argument(std::string(who) + ": window is not a valid pattern");
  if (w.width < 1 || w.height < 1)
    throw std::invalid_argument(std::string(who) + ": empty window");
}

}  // namespace

Rat rectangle_residual(int n, const Window& w) {
  if (n != w.n) throw std::invalid_argument("rectangle_residual: mismatched n");
  require_valid(w, "rectangle_residual");
  long h = w.width, k = w.height;
  long st = 0, sb = 0, sl = 0, sr = 0, sl0 = 0, sb0 = 0;
  for (long i = w.i0; i < w.i0 + h; ++i) {
    st += inner_d(w.tile(i, w.j0 + k - 1).top);
    sb += inner_d(w.tile(i, w.j0).bottom);
    sb0 += inner_e(w.tile(i, w.j0).bottom);
  }
  for (long j = w.j0; j < w.j0 + k; ++j) {
    sl += inner_d(w.tile(w.i0, j).left);
    sr += inner_d(w.tile(w.i0 + h - 1, j).right);
    sl0 += inner_e(w.tile(w.i0, j).left);
  }
  // (1/k)<d/n, T-B> - <e,L> - (1/h)<d/n, R-L> + <e,B> with averages expanded
  return frac_of(st - sb, k * h * n) - frac_of(sl0, k) -
         frac_of(sr - sl, h * k * n) + frac_of(sb0, h);
}

CylinderStep cylinder_step(int n, const Window& w) {
  if (n != w.n) throw std::invalid_argument("cylinder_step: mismatched n");
  require_valid(w, "cylinder_step");
  for (long j = w.j0; j < w.j0 + w.height; ++j)
    if (w.tile(w.i0, j).left != w.tile(w.i0 + w.width - 1, j).right)
      throw std::invalid_argument("cylinder_step: window is not cylindrical");
  long h = w.width, k = w.height;
  long st = 0, sb = 0, sb0 = 0;
  for (long i = w.i0; i < w.i0 + h; ++i) {
    st += inner_d(w.tile(i, w.j0 + k - 1).top);
    sb += inner_d(w.tile(i, w.j0).bottom);
    sb0 += inner_e(w.tile(i, w.j0).bottom);
  }
  Rat top_avg = frac_of(st, h * n), bottom_avg = frac_of(sb, h * n),
      e_bottom = frac_of(sb0, h);
  CylinderStep out;
  out.holds = rat_frac(top_avg) == rat_frac(bottom_avg - k * e_bottom);
  out.shift = rat_frac(-e_bottom);
  return out;
}

}  // namespace metallic
