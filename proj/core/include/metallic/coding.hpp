#pragma once

#include <utility>
#include <vector>

#include "metallic/quadfield.hpp"
#include "metallic/tiles.hpp"

namespace metallic {

// Point of the unit-square torus; both coordinates are reduced to [0, 1).
struct TorusPoint {
  QuadNum x, y;
  TorusPoint(QuadNum px, QuadNum py) : x(px.frac()), y(py.frac()) {}
};

// Coordinate-wise floor of the three linear forms (with beta* = n - beta):
//   ( floor(y + beta* + 1),
//     floor(x/beta + y + beta* + 1),
//     floor(beta*x + y + beta* + 1) ).
// Defined for 0 <= x, y < 1; the result always lies in V_n.
Label lambda_floor(int n, const QuadNum& x, const QuadNum& y);

// The tile of the configuration over (x, y) (coordinates reduced mod 1):
//   right  = lambda({x}, {y})        top    = lambda({y}, {x})
//   left   = lambda({x+beta*}, {y})  bottom = lambda({y+beta*}, {x})
// Always an instance of a chip tile, in fact of a base tile.
WangTile tile_at(int n, const QuadNum& x, const QuadNum& y);

// Same map read on the closed square [0, 1]^2 without reducing a coordinate
// that is exactly 1 (the beta*-shifted arguments are lifted into [0, 1] by
// +1 when negative).  Agrees with tile_at away from the square's far edges;
// the named-point identities below need this reading at x = 1.
WangTile tile_at_closed(int n, const QuadNum& x, const QuadNum& y);

// Rectangular patch of the configuration c_(x,y): cell (i, j) holds
// tile_at(x + i/beta, y + j/beta).  cells[r][c] is cell (i0 + c, j0 + r),
// so row r = 0 is the bottom row; indices point into `tiles`.
struct Window {
  int n = 0;
  TileSet tiles;
  long i0 = 0, j0 = 0;
  int width = 0, height = 0;
  std::vector<std::vector<int>> cells;

  const WangTile& tile(long i, long j) const;
  int index(long i, long j) const { return cells[j - j0][i - i0]; }
};

Window make_window(int n, const TorusPoint& p, long i0, long j0, int width,
                   int height);

// Edge mismatch between cell (i, j) and its right neighbor (horizontal) or
// upper neighbor (vertical).
struct AdjacencyViolation {
  long i = 0, j = 0;
  bool horizontal = true;
};

// Checks every adjacent pair: right color = left color of the right
// neighbor, top color = bottom color of the upper neighbor.
std::vector<AdjacencyViolation> check_valid(const Window& w);

// Named preimages covering the whole base set, as closed-square coordinates
// (the green tile of top index sits at (1, 0), which reduces to a different
// tile mod 1).  Junctions j[1,1,0,1] and j[0,1,1,1] use midpoints of the
// known boundary segments; y[1] uses a small rational offset.
struct WitnessPoint {
  FamilyTag tag;
  QuadNum x, y;
};
std::vector<WitnessPoint> witness_points(int n);

// True iff (a) the tiles realized as positive-area refinement atoms equal
// metallic_tiles(n) (delegated to the geometry module), and (b) every
// witness point maps to its named family tile under the closed-square
// reading.
bool range_check(int n);

}  // namespace metallic
