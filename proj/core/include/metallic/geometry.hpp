#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "metallic/coding.hpp"
#include "metallic/quadfield.hpp"
#include "metallic/tiles.hpp"

namespace metallic {

struct Point {
  QuadNum x, y;
  bool operator==(const Point&) const = default;
};

// true iff a precedes b in (x, y)-lexicographic order
bool lex_less(const Point& a, const Point& b);

// Closed half-plane c0 + cx*x + cy*y >= 0 with coefficients in Q(beta).
struct HalfPlane {
  QuadNum c0, cx, cy;

  QuadNum eval(const Point& p) const { return c0 + cx * p.x + cy * p.y; }
  HalfPlane complement() const;  // the closure of the other side
};

// Convex polygon with exact vertices, counterclockwise, no repeated or
// collinear vertices, rotated so the lexicographically smallest vertex comes
// first.  A polygon with fewer than three vertices is the empty polygon;
// zero-area inputs collapse to empty.
class ConvexPolygon {
 public:
  ConvexPolygon() = default;
  // pts must list a convex polygon's vertices in order (either orientation);
  // the constructor canonicalizes.
  explicit ConvexPolygon(std::vector<Point> pts);

  static ConvexPolygon unit_square(int n);
  // axis-aligned rectangle [x0,x1] x [y0,y1]
  static ConvexPolygon rectangle(const QuadNum& x0, const QuadNum& y0,
                                 const QuadNum& x1, const QuadNum& y1);

  bool empty() const { return v_.empty(); }
  const std::vector<Point>& vertices() const { return v_; }
  int field() const;  // n of the coordinates; 0 when empty

  QuadNum area() const;  // exact; null-field placeholder when empty

  ConvexPolygon clip(const HalfPlane& h) const;
  ConvexPolygon intersect(const ConvexPolygon& other) const;
  ConvexPolygon translate(const QuadNum& dx, const QuadNum& dy) const;
  // x -> f*x + dx, y -> f*y + dy; f may be negative (point reflection)
  ConvexPolygon scale_about_origin(const QuadNum& f, const QuadNum& dx,
                                   const QuadNum& dy) const;
  ConvexPolygon swap_xy() const;

  bool contains(const Point& p) const;            // closed containment
  bool contains(const ConvexPolygon& other) const;  // all of other inside

  bool operator==(const ConvexPolygon&) const = default;

 private:
  std::vector<Point> v_;
};

// Translation by (dx, dy) on the unit-square torus: the image is cut along
// the wrap lines and reassembled, giving up to four pieces.
std::vector<ConvexPolygon> translate_mod1(const ConvexPolygon& p,
                                          const QuadNum& dx, const QuadNum& dy);

// Partition of a rectangular domain into labeled atoms; an atom may consist
// of several pieces (torus translations split them).  Labels are indices
// into a legend kept by the owner.  Empty atoms are allowed.
struct LabeledPartition {
  ConvexPolygon domain;
  std::vector<std::vector<ConvexPolygon>> atoms;

  QuadNum total_area() const;
  int size() const { return static_cast<int>(atoms.size()); }
  int nonempty_count() const;
  // index of the atom whose closure contains p, preferring one that
  // contains it strictly inside; -1 if none
  int atom_at(const Point& p) const;
};

// Closure of the set of points whose coding label is v: the unit square cut
// by the three floor bands.  At most one polygon; empty for v = (0,0,n+1).
std::vector<ConvexPolygon> atom(int n, const Label& v);

// The four edge-color partitions of the unit square, atoms indexed by
// enumerate_Vn(n) order.  north is east reflected along the diagonal; west
// and south are east and north translated by 1/beta along x resp. y on the
// torus.
struct SidePartitions {
  LabeledPartition east, north, west, south;
};
SidePartitions build_partitions(int n);

// Common refinement: atoms are the positive-area pairwise intersections.
// certificate[k] gives the (label in P, label in Q) pair of new label k.
struct Refinement {
  LabeledPartition partition;
  std::vector<std::pair<int, int>> certificate;
};
Refinement refine(const LabeledPartition& P, const LabeledPartition& Q);

// Refinement of all four side partitions, atoms keyed by the canonical index
// of their (right, top, left, bottom) tile in metallic_tiles(n).  Throws if
// the realized tiles differ from the base set.
LabeledPartition refined_partition(int n);

// The tiles realized as positive-area atoms of the full refinement.
TileSet tiles_of_partition(int n);

// A bijection b with Q.atoms[b[i]] == P.atoms[i] as exact piece sets, if one
// exists.  Empty atoms are matched among themselves.
std::optional<std::vector<int>> equal_up_to_relabeling(
    const LabeledPartition& P, const LabeledPartition& Q);

// Exact region of base points whose window over w's range reproduces w: the
// intersection of the inverse-translated tile atoms.  Pieces are closures of
// the appearance set; a pattern occurring at most on a measure-zero set of
// base points comes back as the empty region.
std::vector<ConvexPolygon> pattern_region(int n, const Window& w);

}  // namespace metallic
