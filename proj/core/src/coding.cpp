#include "metallic/coding.hpp"

#include <stdexcept>

namespace metallic {

namespace {

void require_unit(const QuadNum& u, const char* who) {
  if (u.sign() < 0 || (u - QuadNum::rational(1, u.field())).sign() >= 0)
    throw std::domain_error(std::string(who) + ": coordinate outside [0, 1)");
}

Label lambda_raw(int n, const QuadNum& x, const QuadNum& y) {
  QuadNum c = QuadNum::beta_star(n) + QuadNum::rational(1, n);
  long v0 = floor_long(y + c);
  long v1 = floor_long(QuadNum::beta_inv(n) * x + y + c);
  long v2 = floor_long(QuadNum::beta(n) * x + y + c);
  return {static_cast<int>(v0), static_cast<int>(v1), static_cast<int>(v2)};
}

// Lift u + beta* into [0, 1] by +1 when negative (beta* is in (-1, 0)).
QuadNum star_shift(const QuadNum& u) {
  int n = u.field();
  QuadNum s = u + QuadNum::beta_star(n);
  if (s.sign() < 0) s += QuadNum::rational(1, n);
  return s;
}

}  // namespace

Label lambda_floor(int n, const QuadNum& x, const QuadNum& y) {
  require_unit(x, "lambda_floor");
  require_unit(y, "lambda_floor");
  Label v = lambda_raw(n, x, y);
  if (!in_Vn(n, v)) throw std::logic_error("lambda_floor: label escaped V_n");
  return v;
}

WangTile tile_at(int n, const QuadNum& x, const QuadNum& y) {
  QuadNum fx = x.frac(), fy = y.frac();
  return {lambda_floor(n, fx, fy), lambda_floor(n, fy, fx),
          lambda_floor(n, (fx + QuadNum::beta_star(n)).frac(), fy),
          lambda_floor(n, (fy + QuadNum::beta_star(n)).frac(), fx)};
}

WangTile tile_at_closed(int n, const QuadNum& x, const QuadNum& y) {
  QuadNum one = QuadNum::rational(1, n);
  if (x.sign() < 0 || x > one || y.sign() < 0 || y > one)
    throw std::domain_error("tile_at_closed: coordinate outside [0, 1]");
  return {lambda_raw(n, x, y), lambda_raw(n, y, x),
          lambda_raw(n, star_shift(x), y), lambda_raw(n, star_shift(y), x)};
}

const WangTile& Window::tile(long i, long j) const {
  return tiles.tiles[index(i, j)];
}

Window make_window(int n, const TorusPoint& p, long i0, long j0, int width,
                   int height) {
  if (width < 1 || height < 1)
    throw std::invalid_argument("make_window: empty range");
  Window w;
  w.n = n;
  w.tiles = metallic_tiles(n);
  w.i0 = i0;
  w.j0 = j0;
  w.width = width;
  w.height = height;
  w.cells.assign(height, std::vector<int>(width, -1));
  for (int r = 0; r < height; ++r)
    for (int c = 0; c < width; ++c) {
      QuadNum x = p.x + QuadNum(Rat(-(i0 + c)) * n, Rat(i0 + c), n);  // + (i0+c)/beta
      QuadNum y = p.y + QuadNum(Rat(-(j0 + r)) * n, Rat(j0 + r), n);
      int idx = w.tiles.index_of(tile_at(n, x, y));
      if (idx < 0) throw std::logic_error("make_window: tile outside the base set");
      w.cells[r][c] = idx;
    }
  return w;
}

std::vector<AdjacencyViolation> check_valid(const Window& w) {
  std::vector<AdjacencyViolation> out;
  for (long j = w.j0; j < w.j0 + w.height; ++j)
    for (long i = w.i0; i < w.i0 + w.width; ++i) {
      if (i + 1 < w.i0 + w.width && w.tile(i, j).right != w.tile(i + 1, j).left)
        out.push_back({i, j, true});
      if (j + 1 < w.j0 + w.height && w.tile(i, j).top != w.tile(i, j + 1).bottom)
        out.push_back({i, j, false});
    }
  return out;
}

std::vector<WitnessPoint> witness_points(int n) {
  using Q = QuadNum;
  Q zero = Q::rational(0, n), one = Q::rational(1, n);
  Q beta = Q::beta(n), binv = Q::beta_inv(n);
  Q binv2 = binv * binv;
  Q bp1inv = (beta + one).inverse();       // 1/(beta+1)
  Q jdiag = (beta * (beta + one)).inverse();  // 1/(beta(beta+1))
  Q half = Q::rational(Rat(1, 2), n);
  Q eps = Q::rational(Rat(1, 1000 * n), n);

  std::vector<WitnessPoint> w;
  auto add = [&](FamilyTag tag, Q x, Q y) { w.push_back({tag, x, y}); };
  // hatted variant: TILE(y, x) is the reflected tile
  auto add_pair = [&](Family f, int i, Q x, Q y) {
    add({f, false, i}, x, y);
    add({f, true, i}, y, x);
  };
  auto junction = [&](int k, int l, int r, int s, Q x, Q y) {
    add({Family::junction, false, 0, 0, {k, l, r, s}}, x, y);
  };

  junction(0, 0, 0, 0, zero, zero);
  junction(0, 1, 0, 0, binv2, zero);
  junction(0, 0, 0, 1, zero, binv2);
  junction(0, 1, 0, 1, jdiag, jdiag);
  // midpoints of the two boundary segments carrying these junctions
  junction(1, 1, 0, 1, bp1inv * half, (binv + bp1inv) * half);
  junction(0, 1, 1, 1, (binv + bp1inv) * half, bp1inv * half);
  junction(1, 1, 1, 1, bp1inv, bp1inv);

  add_pair(Family::blue, 0, binv, zero);
  for (int i = 1; i <= n - 1; ++i)
    add_pair(Family::blue, i, binv2 + Q::rational(i, n) * binv, zero);

  add_pair(Family::green, 0, binv, binv2 * (beta - one));
  for (int i = 1; i <= n; ++i) {
    Q frac_i = Q::rational(Rat(i, n), n);
    add_pair(Family::green, i, frac_i, binv * (one - frac_i));
  }

  add_pair(Family::yellow, 1, binv + eps, binv - eps * binv);
  // Interior point of the y[i] cell: start from the g[i] point and move up
  // by the midpoint of the admissible band (beta^-2, i/(n*beta)).
  for (int i = 2; i <= n; ++i) {
    Q frac_i = Q::rational(Rat(i, n), n);
    Q x = frac_i;
    Q y = binv * (one - frac_i) + (binv2 + frac_i * binv) * half;
    add_pair(Family::yellow, i, x, y);
  }

  // w[1,j] sits at (1/beta, j/beta); j = 1 gives the symmetric corner tile.
  for (int j = 1; j <= n; ++j) {
    add({Family::white, false, 1, j}, binv, Q::rational(j, n) * binv);
    if (j > 1)
      add({Family::white, false, j, 1}, Q::rational(j, n) * binv, binv);
  }
  Q ninv = Q::rational(Rat(1, n), n);
  for (int i = 2; i <= n; ++i)
    for (int j = 2; j <= n; ++j) {
      Q x = binv + ninv * (Q::rational(i - 1, n) - Q::rational(j - 1, n) * binv);
      Q y = binv + ninv * (Q::rational(j - 1, n) - Q::rational(i - 1, n) * binv);
      add({Family::white, false, i, j}, x, y);
    }
  return w;
}

}  // namespace metallic
